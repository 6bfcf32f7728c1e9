#ifndef LSK_SERIES_HPP
#define LSK_SERIES_HPP

#include <functional>

#include "lsk/dgl.hpp"
#include "lsk/element.hpp"

namespace lsk {

// Bernoulli number B_n under the B_1 = -1/2 convention, i.e. the exponential
// generating function is t/(e^t - 1). The other sign convention silently
// breaks the interval differential, so it is fixed here once and documented.
// Computed by the defining recurrence sum_{k=0}^{n} C(n+1, k) B_k = 0 with
// B_0 = 1, memoized.
const Rational& bernoulli(int n);

// A formal power series sum c_n t^n with exact rational coefficients,
// evaluated lazily by index.
struct RationalSeries {
    std::function<Rational(int)> coefficient;

    static RationalSeries zero();
    static RationalSeries exponential();            // e^t:              1/n!
    static RationalSeries expm1_over_t();           // (e^t - 1)/t:      1/(n+1)!
    static RationalSeries t_over_expm1();           // t/(e^t - 1):      B_n/n!
    static RationalSeries t_over_one_minus_expneg();// -t/(e^{-t} - 1):  (-1)^n B_n/n!
};

// sum_{n >= 0} c_n ad_g^n(e). Terminates because each application of ad_g
// raises word length by at least one. g must be homogeneous of degree 0 and
// free of unit terms.
Element apply_ad_series(const RationalSeries& series, const Element& g, const Element& e);

// Exponential and logarithm of the truncated tensor algebra. exp takes
// elements without unit term; log takes 1 + (terms of length >= 1). They are
// mutually inverse up to the truncation order.
Element tensor_exp(const Element& e);
Element tensor_log(const Element& e);

// Baker-Campbell-Hausdorff product log(exp(u) exp(v)) for degree-0 u, v
// without unit terms. The result is a Lie element; the assertable form of
// that statement is exp(bch(u, v)) == exp(u) exp(v).
Element bch(const Element& u, const Element& v);

// Gauge action of a degree-0 element y on a Maurer-Cartan element z:
//   y G z = sum_i ad_y^i(z)/i!  -  sum_i ad_y^i(dy)/(i+1)!
// The result is again Maurer-Cartan up to the truncation order.
Element gauge(const DglContext& ctx, const Element& y, const Element& z);

}  // namespace lsk

#endif  // LSK_SERIES_HPP
