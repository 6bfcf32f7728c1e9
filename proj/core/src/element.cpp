#include "lsk/element.hpp"

#include <algorithm>
#include <utility>

namespace lsk {

GeneratorSet::GeneratorSet(std::vector<Generator> generators)
    : generators_(std::move(generators)) {}

std::shared_ptr<const GeneratorSet> GeneratorSet::make(std::vector<Generator> generators) {
    for (std::size_t i = 0; i < generators.size(); ++i)
        for (std::size_t j = i + 1; j < generators.size(); ++j)
            if (generators[i].name == generators[j].name)
                throw Error("duplicate generator name '" + generators[i].name + "'");
    if (generators.size() > 255)
        throw Error("generator set too large");
    return std::shared_ptr<const GeneratorSet>(new GeneratorSet(std::move(generators)));
}

std::optional<std::size_t> GeneratorSet::index_of(std::string_view name) const {
    for (std::size_t i = 0; i < generators_.size(); ++i)
        if (generators_[i].name == name) return i;
    return std::nullopt;
}

bool operator==(const GeneratorSet& lhs, const GeneratorSet& rhs) {
    if (lhs.generators_.size() != rhs.generators_.size()) return false;
    for (std::size_t i = 0; i < lhs.generators_.size(); ++i)
        if (lhs.generators_[i].name != rhs.generators_[i].name ||
            lhs.generators_[i].degree != rhs.generators_[i].degree)
            return false;
    return true;
}

Element::Element(GenSetPtr generators, int truncation)
    : generators_(std::move(generators)), truncation_(truncation) {
    if (!generators_) throw Error("null generator set");
    if (truncation_ < 1) throw Error("truncation order must be >= 1");
}

Element Element::zero(GenSetPtr generators, int truncation) {
    return Element(std::move(generators), truncation);
}

Element Element::unit(GenSetPtr generators, int truncation) {
    Element e(std::move(generators), truncation);
    e.terms_.emplace(Word{}, Rational(1));
    return e;
}

Element Element::generator(GenSetPtr generators, int truncation, std::size_t index) {
    Element e(std::move(generators), truncation);
    if (index >= e.generators_->size()) throw Error("generator index out of range");
    e.terms_.emplace(Word{static_cast<std::uint8_t>(index)}, Rational(1));
    return e;
}

Element Element::from_terms(GenSetPtr generators, int truncation, TermMap terms) {
    Element e(std::move(generators), truncation);
    for (auto& [word, coefficient] : terms) {
        if (static_cast<int>(word.size()) > truncation) continue;
        if (coefficient == 0) continue;
        for (std::uint8_t letter : word)
            if (letter >= e.generators_->size())
                throw Error("generator index out of range in word");
        e.terms_.emplace(word, coefficient);
    }
    return e;
}

Rational Element::coeff(const Word& word) const {
    auto it = terms_.find(word);
    return it == terms_.end() ? Rational(0) : it->second;
}

int Element::word_degree(const Word& word) const {
    int degree = 0;
    for (std::uint8_t letter : word) degree += generators_->at(letter).degree;
    return degree;
}

bool Element::has_unit_term() const {
    return !terms_.empty() && terms_.begin()->first.empty();
}

std::optional<int> Element::homogeneous_degree() const {
    std::optional<int> degree;
    for (const auto& [word, coefficient] : terms_) {
        int d = word_degree(word);
        if (!degree)
            degree = d;
        else if (*degree != d)
            return std::nullopt;
    }
    return degree;
}

bool Element::is_homogeneous(int degree) const {
    for (const auto& [word, coefficient] : terms_)
        if (word_degree(word) != degree) return false;
    return true;
}

Element Element::operator-() const {
    Element result(*this);
    for (auto& [word, coefficient] : result.terms_) coefficient = -coefficient;
    return result;
}

Element& Element::operator+=(const Element& other) {
    require_compatible(*this, other);
    for (const auto& [word, coefficient] : other.terms_) {
        auto [it, inserted] = terms_.emplace(word, coefficient);
        if (!inserted) {
            it->second += coefficient;
            if (it->second == 0) terms_.erase(it);
        }
    }
    return *this;
}

Element& Element::operator-=(const Element& other) {
    require_compatible(*this, other);
    for (const auto& [word, coefficient] : other.terms_) {
        auto [it, inserted] = terms_.emplace(word, -coefficient);
        if (!inserted) {
            it->second -= coefficient;
            if (it->second == 0) terms_.erase(it);
        }
    }
    return *this;
}

Element operator+(Element lhs, const Element& rhs) {
    lhs += rhs;
    return lhs;
}

Element operator-(Element lhs, const Element& rhs) {
    lhs -= rhs;
    return lhs;
}

Element operator*(const Rational& scalar, Element e) {
    if (scalar == 0) {
        e.terms_.clear();
        return e;
    }
    for (auto& [word, coefficient] : e.terms_) coefficient *= scalar;
    return e;
}

bool operator==(const Element& lhs, const Element& rhs) {
    return lhs.truncation_ == rhs.truncation_ &&
           (lhs.generators_ == rhs.generators_ || *lhs.generators_ == *rhs.generators_) &&
           lhs.terms_ == rhs.terms_;
}

Element Element::length_part(std::size_t k) const {
    Element result(generators_, truncation_);
    for (const auto& [word, coefficient] : terms_)
        if (word.size() == k) result.terms_.emplace(word, coefficient);
    return result;
}

Element Element::truncated_to(int m) const {
    if (m < 1) throw Error("truncation order must be >= 1");
    Element result(generators_, m);
    for (const auto& [word, coefficient] : terms_)
        if (static_cast<int>(word.size()) <= m) result.terms_.emplace(word, coefficient);
    return result;
}

std::string Element::word_text(const Word& word) const {
    std::string text;
    for (std::uint8_t letter : word) text += generators_->at(letter).name;
    return text;
}

ElementBuilder::ElementBuilder(GenSetPtr generators, int truncation)
    : generators_(std::move(generators)), truncation_(truncation) {}

void ElementBuilder::add(Word word, const Rational& coefficient) {
    if (static_cast<int>(word.size()) > truncation_ || coefficient == 0) return;
    auto [it, inserted] = terms_.emplace(std::move(word), coefficient);
    if (!inserted) {
        it->second += coefficient;
        if (it->second == 0) terms_.erase(it);
    }
}

void ElementBuilder::add_spliced(const Word& prefix, const Word& middle, const Word& suffix,
                                 const Rational& coefficient) {
    std::size_t length = prefix.size() + middle.size() + suffix.size();
    if (static_cast<int>(length) > truncation_) return;
    Word word;
    word.reserve(length);
    word.insert(word.end(), prefix.begin(), prefix.end());
    word.insert(word.end(), middle.begin(), middle.end());
    word.insert(word.end(), suffix.begin(), suffix.end());
    add(std::move(word), coefficient);
}

Element ElementBuilder::take() {
    return Element::from_terms(std::move(generators_), truncation_, std::move(terms_));
}

void require_compatible(const Element& lhs, const Element& rhs) {
    if (lhs.truncation() != rhs.truncation())
        throw TruncationMismatch("truncation orders differ: " +
                                 std::to_string(lhs.truncation()) + " vs " +
                                 std::to_string(rhs.truncation()));
    if (lhs.generators() != rhs.generators() && !(*lhs.generators() == *rhs.generators()))
        throw TruncationMismatch("operands live over different generator sets");
}

Element concat(const Element& lhs, const Element& rhs) {
    require_compatible(lhs, rhs);
    ElementBuilder builder(lhs.generators(), lhs.truncation());
    for (const auto& [lw, lc] : lhs.terms()) {
        if (static_cast<int>(lw.size()) > lhs.truncation()) continue;
        for (const auto& [rw, rc] : rhs.terms()) {
            if (static_cast<int>(lw.size() + rw.size()) > lhs.truncation()) break;
            builder.add_spliced(lw, rw, {}, lc * rc);
        }
    }
    return builder.take();
}

Element bracket(const Element& lhs, const Element& rhs) {
    require_compatible(lhs, rhs);
    ElementBuilder builder(lhs.generators(), lhs.truncation());
    for (const auto& [lw, lc] : lhs.terms()) {
        const bool left_odd = lhs.word_degree(lw) & 1;
        for (const auto& [rw, rc] : rhs.terms()) {
            if (static_cast<int>(lw.size() + rw.size()) > lhs.truncation()) break;
            const bool right_odd = rhs.word_degree(rw) & 1;
            Rational product = lc * rc;
            builder.add_spliced(lw, rw, {}, product);
            // -(-1)^{|u||v|} vu
            builder.add_spliced(rw, lw, {}, (left_odd && right_odd) ? product : -product);
        }
    }
    return builder.take();
}

Element ad_power(const Element& g, int n, const Element& e) {
    if (n < 0) throw NegativePower("ad power must be >= 0");
    Element result = e;
    for (int i = 0; i < n; ++i) {
        if (result.is_zero()) break;
        result = bracket(g, result);
    }
    return result;
}

}  // namespace lsk
