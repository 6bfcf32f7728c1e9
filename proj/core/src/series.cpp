#include "lsk/series.hpp"

#include <deque>
#include <mutex>

namespace lsk {

const Rational& bernoulli(int n) {
    if (n < 0) throw NegativeIndex("bernoulli: index must be nonnegative");
    // deque: growth never invalidates references already handed out
    static std::deque<Rational> cache{Rational(1)};
    static std::mutex mutex;
    std::lock_guard<std::mutex> lock(mutex);
    while (static_cast<int>(cache.size()) <= n) {
        int m = static_cast<int>(cache.size());
        // sum_{k=0}^{m} C(m+1, k) B_k = 0 and C(m+1, m) = m+1
        Rational sum(0);
        for (int k = 0; k < m; ++k) sum += Rational(binomial(m + 1, k)) * cache[k];
        cache.push_back(Rational(-sum / (m + 1)));
    }
    return cache[n];
}

// Every lambda declares "-> Rational" so the gmpxx expression template is
// evaluated while its operands are still alive.
RationalSeries RationalSeries::zero() {
    return {[](int) -> Rational { return Rational(0); }};
}

RationalSeries RationalSeries::exponential() {
    return {[](int n) -> Rational {
        if (n < 0) throw NegativeIndex("series: index must be nonnegative");
        return Rational(1) / Rational(factorial(static_cast<unsigned long>(n)));
    }};
}

RationalSeries RationalSeries::expm1_over_t() {
    return {[](int n) -> Rational {
        if (n < 0) throw NegativeIndex("series: index must be nonnegative");
        return Rational(1) / Rational(factorial(static_cast<unsigned long>(n) + 1));
    }};
}

RationalSeries RationalSeries::t_over_expm1() {
    return {[](int n) -> Rational {
        return bernoulli(n) / Rational(factorial(static_cast<unsigned long>(n)));
    }};
}

RationalSeries RationalSeries::t_over_one_minus_expneg() {
    return {[](int n) -> Rational {
        Rational c(bernoulli(n) / Rational(factorial(static_cast<unsigned long>(n))));
        return (n & 1) ? -c : c;
    }};
}

Element apply_ad_series(const RationalSeries& series, const Element& g, const Element& e) {
    require_compatible(g, e);
    if (!g.is_homogeneous(0))
        throw DegreeError("apply_ad_series: operator argument must be homogeneous of degree 0");
    if (g.has_unit_term())
        throw UnitTermError("apply_ad_series: operator argument must have no length-0 term");

    Element result = series.coefficient(0) * e;
    Element current = e;
    // ad_g^n(e) has no word shorter than n, so the sum stops at the
    // truncation order
    for (int n = 1; n <= e.truncation(); ++n) {
        current = bracket(g, current);
        if (current.is_zero()) break;
        result += series.coefficient(n) * current;
    }
    return result;
}

Element tensor_exp(const Element& e) {
    if (e.has_unit_term())
        throw UnitTermError("tensor_exp: argument must have no length-0 term");
    Element result = Element::unit(e.generators(), e.truncation());
    Element power = result;
    for (int k = 1; k <= e.truncation(); ++k) {
        power = concat(power, e);
        if (power.is_zero()) break;
        result += (Rational(1) / Rational(factorial(static_cast<unsigned long>(k)))) * power;
    }
    return result;
}

Element tensor_log(const Element& e) {
    if (e.coeff(Word{}) != 1)
        throw NotUnipotent("tensor_log: argument must have constant term exactly 1");
    Element v = e - Element::unit(e.generators(), e.truncation());
    Element result = Element::zero(e.generators(), e.truncation());
    Element power = Element::unit(e.generators(), e.truncation());
    for (int k = 1; k <= e.truncation(); ++k) {
        power = concat(power, v);
        if (power.is_zero()) break;
        Rational c = Rational(1) / Rational(k);
        if ((k & 1) == 0) c = -c;
        result += c * power;
    }
    return result;
}

Element bch(const Element& u, const Element& v) {
    require_compatible(u, v);
    if (!u.is_homogeneous(0) || !v.is_homogeneous(0))
        throw DegreeError("bch: arguments must be homogeneous of degree 0");
    return tensor_log(concat(tensor_exp(u), tensor_exp(v)));
}

Element gauge(const DglContext& ctx, const Element& y, const Element& z) {
    require_compatible(ctx.zero(), y);
    require_compatible(y, z);
    if (!y.is_homogeneous(0))
        throw DegreeError("gauge: acting element must be homogeneous of degree 0");
    if (!is_mc(ctx, z))
        throw NotMaurerCartan("gauge: argument is not Maurer-Cartan up to the truncation order");
    Element dy = apply_diff(ctx, y);
    return apply_ad_series(RationalSeries::exponential(), y, z) -
           apply_ad_series(RationalSeries::expm1_over_t(), y, dy);
}

}  // namespace lsk
