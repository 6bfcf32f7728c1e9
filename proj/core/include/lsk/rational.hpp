#ifndef LSK_RATIONAL_HPP
#define LSK_RATIONAL_HPP

#include <gmpxx.h>

#include <optional>
#include <string>

namespace lsk {

// All coefficients are arbitrary-precision exact rationals, kept reduced
// with positive denominator (GMP canonical form). No floating point exists
// anywhere in the kernel.
using Rational = mpq_class;
using Integer = mpz_class;

inline Rational rat(long num, long den = 1) {
    Rational q(num, den);
    q.canonicalize();
    return q;
}

/// Canonical rendering: "p" or "p/q", reduced, q > 1.
std::string to_string(const Rational& q);

// Strict parse of "p" or "p/q" (q > 0, no whitespace, no leading zeros
// beyond a lone "0"). Returns the reduced value; nullopt on malformed input.
std::optional<Rational> rational_from_string(const std::string& text);

// True iff text is exactly what to_string() produces for some rational,
// i.e. the coefficient is stored in reduced canonical form.
bool is_canonical_rational_string(const std::string& text);

Integer binomial(unsigned long n, unsigned long k);
Integer factorial(unsigned long n);

}  // namespace lsk

#endif  // LSK_RATIONAL_HPP
