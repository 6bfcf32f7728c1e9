#ifndef LSK_DGL_HPP
#define LSK_DGL_HPP

#include <optional>
#include <string>
#include <vector>

#include "lsk/element.hpp"

namespace lsk {

// Outcome of a finite certification check. Failure is a report, not an
// exception; `witness` holds the first nonzero residual found.
struct CheckResult {
    bool pass = true;
    std::string detail;
    std::optional<Element> witness;

    explicit operator bool() const { return pass; }

    static CheckResult ok() { return {}; }
    static CheckResult fail(std::string detail, Element witness);
};

// A free complete DGL presented by generators, a truncation order and the
// differential images of the generators. The differential extends to words
// by the graded Leibniz rule. Immutable after construction; construction
// validates degrees only - square-zero is certified separately by
// check_d_squared, always "up to the truncation order".
class DglContext {
public:
    DglContext(GenSetPtr generators, int truncation, std::vector<Element> differential);

    const GenSetPtr& generators() const { return generators_; }
    int truncation() const { return truncation_; }
    const Element& differential_of(std::size_t index) const { return differential_.at(index); }

    Element generator_element(std::string_view name) const;
    Element zero() const { return Element::zero(generators_, truncation_); }

    friend bool operator==(const DglContext& lhs, const DglContext& rhs);

private:
    GenSetPtr generators_;
    int truncation_;
    std::vector<Element> differential_;
};

// Derivation extension of the differential: d(uv) = (du)v + (-1)^{|u|} u(dv).
Element apply_diff(const DglContext& ctx, const Element& e);

// d(d(g)) = 0 for every generator, up to the truncation order.
CheckResult check_d_squared(const DglContext& ctx);

// dz + (1/2)[z, z] for homogeneous z of degree -1.
Element mc_residual(const DglContext& ctx, const Element& z);
bool is_mc(const DglContext& ctx, const Element& z);

// Context with the perturbed differential g -> dg + [z, g]; requires z to be
// Maurer-Cartan up to the truncation order.
DglContext perturb(const DglContext& ctx, const Element& z);

// A candidate DGL morphism, stored by its generator images in the target.
// Extends multiplicatively to words and linearly to elements. Construction
// validates degree homogeneity of the images; commuting with the
// differentials is certified separately by check_morphism.
class GeneratorMap {
public:
    GeneratorMap(DglContext source, DglContext target, std::vector<Element> images);

    const DglContext& source() const { return source_; }
    const DglContext& target() const { return target_; }
    const Element& image_of(std::size_t index) const { return images_.at(index); }

    Element apply(const Element& e) const;

private:
    DglContext source_;
    DglContext target_;
    std::vector<Element> images_;
};

GeneratorMap identity_map(const DglContext& ctx);
// outer . inner
GeneratorMap compose(const GeneratorMap& outer, const GeneratorMap& inner);

// f(d g) = d f(g) on every generator, up to the truncation order (sufficient
// for the multiplicative extension).
CheckResult check_morphism(const GeneratorMap& f);

// Pass iff f(z) satisfies the Maurer-Cartan equation in the target; z itself
// must satisfy it in the source.
CheckResult check_mc_preserved(const GeneratorMap& f, const Element& z);

// Isomorphism witness: the generator-to-generator coefficient matrix of the
// linear parts is invertible over the rationals.
bool linear_part_invertible(const GeneratorMap& f);

}  // namespace lsk

#endif  // LSK_DGL_HPP
