#ifndef LSK_GROUPOID_HPP
#define LSK_GROUPOID_HPP

#include <string>

#include "lsk/dgl.hpp"
#include "lsk/element.hpp"
#include "lsk/interval.hpp"

namespace lsk {

// The Maurer-Cartan set of the interval splits into two families indexed by
// an exact rational parameter: linear part lambda*a + (1-lambda)*b (family I,
// coefficients summing to 1) or mu*(a-b) (family II, coefficients summing
// to 0).
enum class McFamily { I, II };

std::string family_name(McFamily family);

// A classified Maurer-Cartan element: element == linear part determined by
// (family, param) plus a decomposable remainder (words of length >= 2 only).
// param is the coefficient of a.
struct McDescriptor {
    McFamily family;
    Rational param;
    Element element;
    Element decomposable_part;
};

// An arrow of the Deligne groupoid with gauge element nu*x, pointing from
// source to target: gauge(nu*x, target.element) == source.element. Arrows
// exist only within one family.
struct GroupoidArrow {
    Rational nu;
    McDescriptor source;
    McDescriptor target;
};

// The unique Maurer-Cartan element with linear part lambda*a + mu*b, built
// length by length: the unknown length-(r+1) component is written as
// lambda_r*ad_x^r(a) + mu_r*ad_x^r(b), and the length-(r+1) component of the
// Maurer-Cartan residual (where the unknowns enter only through the linear
// part of the differential) is solved exactly. Throws NoSolution when
// lambda + mu is neither 0 nor 1; the inconsistency surfaces in the
// quadratic stage as a violation of (lambda + mu)^2 = lambda + mu. The
// returned element is guarded by a full residual check.
McDescriptor solve_mc(const LsInterval& interval, const Rational& lambda,
                      const Rational& mu);

// Convenience overload building the interval at the given truncation order.
McDescriptor solve_mc(const Rational& lambda, const Rational& mu, int truncation);

// Reads (family, param) off the linear part of a Maurer-Cartan element and
// cross-checks the whole element against solve_mc (uniqueness makes the
// check total). Throws NotMaurerCartan for non-MC input and FamilyViolation
// when the linear coefficients sum to neither 0 nor 1, which cannot happen
// for genuine Maurer-Cartan input at truncation >= 2.
McDescriptor classify_mc(const LsInterval& interval, const Element& z);

// The unique arrow with gauge element in Q*x between two Maurer-Cartan
// elements of one family: nu = from.param - to.param, verified by evaluating
// the gauge action. Throws DisconnectedComponents when the families differ.
GroupoidArrow connect(const LsInterval& interval, const McDescriptor& from,
                      const McDescriptor& to);

// The map from the interval into target sending a -> zp, b -> z, x -> y.
// It is a morphism precisely when gauge(y, z) == zp; callers decide which
// direction of that equivalence they are exercising via check_morphism.
// z and zp must be Maurer-Cartan in target.
GeneratorMap morphism_from_gauge(const DglContext& target, const Element& y,
                                 const Element& z, const Element& zp);

// An isomorphism onto the z-perturbed interval, by family of z:
//   family II:            (L, d)   -> (L, d_z)  a -> a-z, b -> b-z, x -> x
//   family I, param != 0: (L, d_a) -> (L, d_z)  a -> z,   b -> b,   x -> param*x
//   family I, param == 0: (L, d_a) -> (L, d_b)  orientation reversal (z == b)
// Certified: morphism check passes and the linear part is invertible.
GeneratorMap build_perturbed_iso(const LsInterval& interval, const McDescriptor& z);

// The two-step chain identifying the a-perturbed interval with the interval
// itself. detached is the algebra on c, w (Maurer-Cartan) and x with
//   dx = [x,w] + sum_{n>=0} B_n/n! ad_x^n(w),
// the substitution realizes c = -a, w = b-a inside (L, d_a), and phi sends
// c -> a, w -> gauge(x, 0), x -> -x into the interval. composite is
// phi after the substitution inverse: an isomorphism (L, d_a) -> (L, d).
struct BaseIsoChain {
    DglContext detached;
    GeneratorMap substitution;
    GeneratorMap substitution_inverse;
    GeneratorMap phi;
    GeneratorMap composite;
};

BaseIsoChain build_base_iso(int truncation);

// The interval presented with the non-perturbed differential
//   d'x = [x,b] + sum_{n>=0} B_n/n! ad_x^n(b)
//       = sum_{n>=0} (-1)^n B_n/n! ad_x^n(b)     (second closed form)
// together with the isomorphism phi: a -> a, b -> gauge(x, 0), x -> -x onto
// the interval. Both closed forms of d'x are exposed for equality checks.
struct QuotientModel {
    DglContext ctx;
    GeneratorMap phi;
    Element dx_defining_form;
    Element dx_alternate_form;
};

QuotientModel build_quotient_model(int truncation);

// The candidate map a -> a, b -> 0, x -> lambda*x from the interval to
// itself. It fails the morphism check for every lambda: the linear part of
// the defect on x is (lambda-1)*a - lambda*b, which never vanishes. This is
// the finitely checkable form of the statement that the two Maurer-Cartan
// families cannot be connected.
GeneratorMap cross_family_candidate(const LsInterval& interval, const Rational& lambda);

}  // namespace lsk

#endif  // LSK_GROUPOID_HPP
