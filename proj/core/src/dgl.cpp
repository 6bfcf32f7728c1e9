#include "lsk/dgl.hpp"

#include <utility>

namespace lsk {

CheckResult CheckResult::fail(std::string detail, Element witness) {
    CheckResult r;
    r.pass = false;
    r.detail = std::move(detail);
    r.witness = std::move(witness);
    return r;
}

namespace {

std::string first_term_text(const Element& e) {
    if (e.is_zero()) return "0";
    const auto& [word, coefficient] = *e.terms().begin();
    return to_string(coefficient) + " " + (word.empty() ? std::string("1") : e.word_text(word));
}

}  // namespace

DglContext::DglContext(GenSetPtr generators, int truncation, std::vector<Element> differential)
    : generators_(std::move(generators)), truncation_(truncation),
      differential_(std::move(differential)) {
    if (!generators_) throw Error("null generator set");
    if (truncation_ < 1) throw Error("truncation order must be >= 1");
    if (differential_.size() != generators_->size())
        throw Error("differential must provide one image per generator");
    for (std::size_t i = 0; i < differential_.size(); ++i) {
        const Element& image = differential_[i];
        if (image.truncation() != truncation_ || !(*image.generators() == *generators_))
            throw TruncationMismatch("differential image of '" + generators_->at(i).name +
                                     "' lives in a different algebra");
        if (!image.is_homogeneous(generators_->at(i).degree - 1))
            throw DegreeError("differential image of '" + generators_->at(i).name +
                              "' is not homogeneous of degree " +
                              std::to_string(generators_->at(i).degree - 1));
        if (image.has_unit_term())
            throw DegreeError("differential image of '" + generators_->at(i).name +
                              "' carries a unit term");
    }
}

Element DglContext::generator_element(std::string_view name) const {
    auto index = generators_->index_of(name);
    if (!index) throw UnknownSymbol("unknown generator '" + std::string(name) + "'");
    return Element::generator(generators_, truncation_, *index);
}

bool operator==(const DglContext& lhs, const DglContext& rhs) {
    return lhs.truncation_ == rhs.truncation_ && *lhs.generators_ == *rhs.generators_ &&
           lhs.differential_ == rhs.differential_;
}

Element apply_diff(const DglContext& ctx, const Element& e) {
    if (e.truncation() != ctx.truncation() || !(*e.generators() == *ctx.generators()))
        throw TruncationMismatch("element does not live in this context");
    ElementBuilder builder(ctx.generators(), ctx.truncation());
    for (const auto& [word, coefficient] : e.terms()) {
        int prefix_degree = 0;
        for (std::size_t i = 0; i < word.size(); ++i) {
            const Word prefix(word.begin(), word.begin() + i);
            const Word suffix(word.begin() + i + 1, word.end());
            const Rational signed_coeff =
                (prefix_degree & 1) ? Rational(-coefficient) : coefficient;
            for (const auto& [dw, dc] : ctx.differential_of(word[i]).terms())
                builder.add_spliced(prefix, dw, suffix, signed_coeff * dc);
            prefix_degree += ctx.generators()->at(word[i]).degree;
        }
    }
    return builder.take();
}

CheckResult check_d_squared(const DglContext& ctx) {
    for (std::size_t i = 0; i < ctx.generators()->size(); ++i) {
        Element residual = apply_diff(ctx, ctx.differential_of(i));
        if (!residual.is_zero())
            return CheckResult::fail("d^2(" + ctx.generators()->at(i).name +
                                         ") != 0, first term " + first_term_text(residual),
                                     residual);
    }
    return CheckResult::ok();
}

Element mc_residual(const DglContext& ctx, const Element& z) {
    if (!z.is_homogeneous(-1))
        throw DegreeError("Maurer-Cartan candidate must be homogeneous of degree -1");
    return apply_diff(ctx, z) + rat(1, 2) * bracket(z, z);
}

bool is_mc(const DglContext& ctx, const Element& z) {
    return mc_residual(ctx, z).is_zero();
}

DglContext perturb(const DglContext& ctx, const Element& z) {
    if (!is_mc(ctx, z))
        throw NotMaurerCartan("cannot perturb by a non-Maurer-Cartan element");
    std::vector<Element> images;
    images.reserve(ctx.generators()->size());
    for (std::size_t i = 0; i < ctx.generators()->size(); ++i) {
        Element g = Element::generator(ctx.generators(), ctx.truncation(), i);
        images.push_back(ctx.differential_of(i) + bracket(z, g));
    }
    return DglContext(ctx.generators(), ctx.truncation(), std::move(images));
}

GeneratorMap::GeneratorMap(DglContext source, DglContext target, std::vector<Element> images)
    : source_(std::move(source)), target_(std::move(target)), images_(std::move(images)) {
    if (source_.truncation() != target_.truncation())
        throw TruncationMismatch("source and target truncation orders differ");
    if (images_.size() != source_.generators()->size())
        throw Error("morphism must provide one image per source generator");
    for (std::size_t i = 0; i < images_.size(); ++i) {
        const Element& image = images_[i];
        if (image.truncation() != target_.truncation() ||
            !(*image.generators() == *target_.generators()))
            throw TruncationMismatch("image of '" + source_.generators()->at(i).name +
                                     "' does not live in the target");
        if (!image.is_homogeneous(source_.generators()->at(i).degree))
            throw DegreeError("image of '" + source_.generators()->at(i).name +
                              "' is not homogeneous of degree " +
                              std::to_string(source_.generators()->at(i).degree));
    }
}

Element GeneratorMap::apply(const Element& e) const {
    if (e.truncation() != source_.truncation() || !(*e.generators() == *source_.generators()))
        throw TruncationMismatch("element does not live in the source context");
    Element result = target_.zero();
    for (const auto& [word, coefficient] : e.terms()) {
        Element product = Element::unit(target_.generators(), target_.truncation());
        for (std::uint8_t letter : word) {
            product = concat(product, images_[letter]);
            if (product.is_zero()) break;
        }
        result += coefficient * product;
    }
    return result;
}

GeneratorMap identity_map(const DglContext& ctx) {
    std::vector<Element> images;
    for (std::size_t i = 0; i < ctx.generators()->size(); ++i)
        images.push_back(Element::generator(ctx.generators(), ctx.truncation(), i));
    return GeneratorMap(ctx, ctx, std::move(images));
}

GeneratorMap compose(const GeneratorMap& outer, const GeneratorMap& inner) {
    if (!(*inner.target().generators() == *outer.source().generators()))
        throw TruncationMismatch("composition mismatch: inner target is not outer source");
    std::vector<Element> images;
    for (std::size_t i = 0; i < inner.source().generators()->size(); ++i)
        images.push_back(outer.apply(inner.image_of(i)));
    return GeneratorMap(inner.source(), outer.target(), std::move(images));
}

CheckResult check_morphism(const GeneratorMap& f) {
    for (std::size_t i = 0; i < f.source().generators()->size(); ++i) {
        Element lhs = f.apply(f.source().differential_of(i));
        Element rhs = apply_diff(f.target(), f.image_of(i));
        Element residual = lhs - rhs;
        if (!residual.is_zero())
            return CheckResult::fail(
                "f(d " + f.source().generators()->at(i).name + ") != d f(" +
                    f.source().generators()->at(i).name + "), first term " +
                    first_term_text(residual) + ", linear part " +
                    first_term_text(residual.linear_part()),
                residual);
    }
    return CheckResult::ok();
}

CheckResult check_mc_preserved(const GeneratorMap& f, const Element& z) {
    if (!is_mc(f.source(), z))
        throw NotMaurerCartan("input is not Maurer-Cartan in the source");
    Element residual = mc_residual(f.target(), f.apply(z));
    if (!residual.is_zero())
        return CheckResult::fail("image violates the Maurer-Cartan equation, first term " +
                                     first_term_text(residual),
                                 residual);
    return CheckResult::ok();
}

bool linear_part_invertible(const GeneratorMap& f) {
    const std::size_t n = f.source().generators()->size();
    if (f.target().generators()->size() != n) return false;
    // rows: images, columns: target generators
    std::vector<std::vector<Rational>> m(n, std::vector<Rational>(n, Rational(0)));
    for (std::size_t i = 0; i < n; ++i) {
        for (const auto& [word, coefficient] : f.image_of(i).terms())
            if (word.size() == 1) m[i][word[0]] = coefficient;
    }
    // Gaussian elimination over the rationals
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        while (pivot < n && m[pivot][col] == 0) ++pivot;
        if (pivot == n) return false;
        std::swap(m[pivot], m[col]);
        for (std::size_t row = col + 1; row < n; ++row) {
            if (m[row][col] == 0) continue;
            Rational factor = m[row][col] / m[col][col];
            for (std::size_t k = col; k < n; ++k) m[row][k] -= factor * m[col][k];
        }
    }
    return true;
}

}  // namespace lsk
