#ifndef LSK_INTERVAL_HPP
#define LSK_INTERVAL_HPP

#include "lsk/dgl.hpp"
#include "lsk/element.hpp"

namespace lsk {

// The completed free graded Lie algebra on a, b (degree -1) and x (degree 0)
// with da = -1/2[a,a], db = -1/2[b,b] and
//   dx = [x,b] + sum_{n>=0} B_n/n! ad_x^n(b-a),
// truncated at a fixed word length. a and b are Maurer-Cartan and x is the
// arrow taking a to b under the gauge action.
struct LsInterval {
    DglContext ctx;
    Element a;
    Element b;
    Element x;

    int truncation() const { return ctx.truncation(); }
};

// Builds the interval and certifies it: d^2 = 0 on every generator, a and b
// are Maurer-Cartan, gauge(x, b) = a, and dx has linear part b - a, all up
// to the truncation order. A failure throws CertificationError and always
// indicates an implementation bug.
LsInterval build_interval(int truncation);

// The second closed form of dx,
//   dx = [x,a] + sum_{n>=0} (-1)^n B_n/n! ad_x^n(b-a),
// equal to the defining form at every truncation order.
Element alternate_interval_dx(int truncation);

// The orientation reversal a <-> b, x -> -x: an involutive automorphism of
// the interval.
GeneratorMap orientation_reversal(const LsInterval& interval);

// Two glued copies of the interval on a0, a1, a2 (Maurer-Cartan) and x1, x2:
// x1 takes a0 to a1 and x2 takes a1 to a2. subdivide maps the interval into
// it by a -> a0, b -> a2, x -> bch(x1, x2); the morphism property encodes
// that the gauge action is a group action.
struct Subdivision {
    DglContext ctx;
    Element a0;
    Element a1;
    Element a2;
    Element x1;
    Element x2;
    GeneratorMap map;
};

Subdivision build_subdivision(int truncation);

}  // namespace lsk

#endif  // LSK_INTERVAL_HPP
