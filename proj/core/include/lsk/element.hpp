#ifndef LSK_ELEMENT_HPP
#define LSK_ELEMENT_HPP

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "lsk/errors.hpp"
#include "lsk/rational.hpp"

namespace lsk {

struct Generator {
    std::string name;
    int degree = 0;  // homological degree
};

// Immutable, shared alphabet. The construction order of the generators fixes
// the canonical word order used for printing and serialization.
class GeneratorSet {
public:
    static std::shared_ptr<const GeneratorSet> make(std::vector<Generator> generators);

    std::size_t size() const { return generators_.size(); }
    const Generator& at(std::size_t index) const { return generators_.at(index); }
    std::optional<std::size_t> index_of(std::string_view name) const;

    friend bool operator==(const GeneratorSet& lhs, const GeneratorSet& rhs);

private:
    explicit GeneratorSet(std::vector<Generator> generators);
    std::vector<Generator> generators_;
};

using GenSetPtr = std::shared_ptr<const GeneratorSet>;

// A word of the tensor algebra: a sequence of generator indices.
// The empty word is the algebra unit.
using Word = std::vector<std::uint8_t>;

// Canonical term order: by length, then lexicographically on indices.
struct WordOrder {
    bool operator()(const Word& lhs, const Word& rhs) const {
        if (lhs.size() != rhs.size()) return lhs.size() < rhs.size();
        return lhs < rhs;
    }
};

// Sparse exact-rational linear combination of words at a fixed truncation
// order: words of length > truncation are identically zero and are dropped
// on construction and after every product. Zero coefficients are never
// stored. Immutable value type; all operations are pure.
class Element {
public:
    using TermMap = std::map<Word, Rational, WordOrder>;

    static Element zero(GenSetPtr generators, int truncation);
    static Element unit(GenSetPtr generators, int truncation);
    static Element generator(GenSetPtr generators, int truncation, std::size_t index);
    // Normalizes: drops zero coefficients and over-long words.
    static Element from_terms(GenSetPtr generators, int truncation, TermMap terms);

    const GenSetPtr& generators() const { return generators_; }
    int truncation() const { return truncation_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }
    Rational coeff(const Word& word) const;

    int word_degree(const Word& word) const;
    bool has_unit_term() const;
    // Every stored word has this degree. The zero element is homogeneous of
    // every degree and reports nullopt.
    std::optional<int> homogeneous_degree() const;
    bool is_homogeneous(int degree) const;

    Element operator-() const;
    Element& operator+=(const Element& other);
    Element& operator-=(const Element& other);
    friend Element operator+(Element lhs, const Element& rhs);
    friend Element operator-(Element lhs, const Element& rhs);
    friend Element operator*(const Rational& scalar, Element e);

    friend bool operator==(const Element& lhs, const Element& rhs);

    // Restriction to words of length exactly k (same truncation).
    Element length_part(std::size_t k) const;
    Element linear_part() const { return length_part(1); }
    // Discards words of length > m; the result carries truncation m.
    Element truncated_to(int m) const;

    std::string word_text(const Word& word) const;

private:
    Element(GenSetPtr generators, int truncation);

    GenSetPtr generators_;
    int truncation_;
    TermMap terms_;

    friend class ElementBuilder;
};

// Accumulator for bilinear products; collapses to an Element at the end.
class ElementBuilder {
public:
    ElementBuilder(GenSetPtr generators, int truncation);
    void add(Word word, const Rational& coefficient);
    // prefix ++ middle ++ suffix, skipped when the result is too long
    void add_spliced(const Word& prefix, const Word& middle, const Word& suffix,
                     const Rational& coefficient);
    Element take();

private:
    GenSetPtr generators_;
    int truncation_;
    Element::TermMap terms_;
};

// Throws TruncationMismatch unless both operands share one alphabet and one
// truncation order.
void require_compatible(const Element& lhs, const Element& rhs);

// Tensor-algebra product (bilinear extension of word concatenation).
Element concat(const Element& lhs, const Element& rhs);

// Graded commutator [u, v] = uv - (-1)^{|u||v|} vu, with the Koszul sign
// taken per homogeneous word pair. Graded antisymmetry and graded Jacobi
// hold identically for it.
Element bracket(const Element& lhs, const Element& rhs);

// n-fold left bracket ad_g^n(e); ad_g^0 is the identity.
Element ad_power(const Element& g, int n, const Element& e);

}  // namespace lsk

#endif  // LSK_ELEMENT_HPP
