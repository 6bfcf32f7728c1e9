#include "doctest.h"
#include "lsk/interval.hpp"
#include "lsk/series.hpp"

using namespace lsk;

namespace {
GenSetPtr pair_alphabet() { return GeneratorSet::make({{"u", 0}, {"v", 0}}); }
}  // namespace

TEST_CASE("bernoulli numbers, convention B_1 = -1/2") {
    CHECK(bernoulli(0) == 1);
    CHECK(bernoulli(1) == rat(-1, 2));
    CHECK(bernoulli(2) == rat(1, 6));
    CHECK(bernoulli(4) == rat(-1, 30));
    CHECK(bernoulli(6) == rat(1, 42));
    CHECK(bernoulli(8) == rat(-1, 30));
    CHECK(bernoulli(10) == rat(5, 66));
    CHECK(bernoulli(12) == rat(-691, 2730));
    CHECK(bernoulli(20) == rat(-174611, 330));
    for (int n = 3; n <= 19; n += 2) CHECK(bernoulli(n) == 0);
    CHECK_THROWS_AS(bernoulli(-1), NegativeIndex);
}

TEST_CASE("series coefficient streams") {
    auto exp = RationalSeries::exponential();
    CHECK(exp.coefficient(0) == 1);
    CHECK(exp.coefficient(4) == rat(1, 24));

    auto shifted = RationalSeries::expm1_over_t();
    CHECK(shifted.coefficient(0) == 1);
    CHECK(shifted.coefficient(3) == rat(1, 24));

    // t/(e^t - 1) has coefficients B_n/n!; the sign-flipped stream is the
    // expansion of t/(1 - e^{-t}), which differs only at n = 1.
    auto todd = RationalSeries::t_over_expm1();
    auto todd_flipped = RationalSeries::t_over_one_minus_expneg();
    CHECK(todd.coefficient(1) == rat(-1, 2));
    CHECK(todd_flipped.coefficient(1) == rat(1, 2));
    for (int n = 0; n <= 8; ++n) {
        if (n == 1) continue;
        CHECK(todd.coefficient(n) == todd_flipped.coefficient(n));
    }
    CHECK(todd.coefficient(2) == rat(1, 12));
    CHECK_THROWS_AS(exp.coefficient(-2), NegativeIndex);
}

TEST_CASE("apply_ad_series sums coefficient(n) ad_g^n") {
    auto iv = build_interval(3);
    auto series = RationalSeries::exponential();
    auto expect = iv.b + bracket(iv.x, iv.b) + rat(1, 2) * ad_power(iv.x, 2, iv.b);
    CHECK(apply_ad_series(series, iv.x, iv.b) == expect);

    CHECK_THROWS_AS(apply_ad_series(series, iv.a, iv.b), DegreeError);
    auto with_unit = iv.x + Element::unit(iv.x.generators(), iv.x.truncation());
    CHECK_THROWS_AS(apply_ad_series(series, with_unit, iv.b), UnitTermError);
}

TEST_CASE("tensor exponential at truncation 3") {
    auto gens = pair_alphabet();
    auto u = Element::generator(gens, 3, 0);
    auto e = tensor_exp(u);
    CHECK(e.coeff(Word{}) == 1);
    CHECK(e.coeff(Word{0}) == 1);
    CHECK(e.coeff(Word{0, 0}) == rat(1, 2));
    CHECK(e.coeff(Word{0, 0, 0}) == rat(1, 6));
    CHECK(e.term_count() == 4);

    CHECK_THROWS_AS(tensor_exp(e), UnitTermError);
    CHECK_THROWS_AS(tensor_log(u), NotUnipotent);
}

TEST_CASE("exp and log are mutually inverse") {
    auto gens = pair_alphabet();
    int N = 5;
    auto u = Element::generator(gens, N, 0);
    auto v = Element::generator(gens, N, 1);
    auto e = rat(2, 3) * u - v + rat(1, 7) * concat(u, v) + Rational(3) * concat(v, concat(v, u));
    CHECK(tensor_log(tensor_exp(e)) == e);

    auto unipotent = Element::unit(gens, N) + e;
    CHECK(tensor_exp(tensor_log(unipotent)) == unipotent);
}

TEST_CASE("bch matches the closed commutator formula through length 4") {
    auto gens = pair_alphabet();
    int N = 4;
    auto u = Element::generator(gens, N, 0);
    auto v = Element::generator(gens, N, 1);
    auto closed = u + v + rat(1, 2) * bracket(u, v) + rat(1, 12) * bracket(u, bracket(u, v)) +
                  rat(1, 12) * bracket(v, bracket(v, u)) -
                  rat(1, 24) * bracket(v, bracket(u, bracket(u, v)));
    CHECK(bch(u, v) == closed);
}

TEST_CASE("bch basic algebra") {
    auto gens = pair_alphabet();
    int N = 4;
    auto u = Element::generator(gens, N, 0);
    auto v = Element::generator(gens, N, 1);
    auto zero = Element::zero(gens, N);
    CHECK(bch(u, -u) == zero);
    CHECK(bch(u, zero) == u);
    CHECK(bch(zero, v) == v);
    // 2u and 3u commute, so bch degenerates to the sum.
    CHECK(bch(Rational(2) * u, Rational(3) * u) == Rational(5) * u);

    auto odd = GeneratorSet::make({{"c", -1}});
    auto c = Element::generator(odd, 3, 0);
    CHECK_THROWS_AS(bch(c, c), DegreeError);
}

TEST_CASE("gauge validates its arguments") {
    auto iv = build_interval(4);
    CHECK_THROWS_AS(gauge(iv.ctx, iv.x, Rational(2) * iv.b), NotMaurerCartan);
    CHECK_THROWS_AS(gauge(iv.ctx, iv.a, iv.b), DegreeError);
}

TEST_CASE("gauge by x carries b to a, exactly, at every order up to 8") {
    for (int n : {1, 2, 5, 8}) {
        auto iv = build_interval(n);
        CHECK(gauge(iv.ctx, iv.x, iv.b) == iv.a);
    }
}

TEST_CASE("gauge by zero is the identity and gauge preserves Maurer-Cartan") {
    auto iv = build_interval(5);
    CHECK(gauge(iv.ctx, iv.ctx.zero(), iv.b) == iv.b);

    auto moved = gauge(iv.ctx, rat(-3, 2) * iv.x, iv.a);
    CHECK(is_mc(iv.ctx, moved));
    CHECK(!(moved == iv.a));
}
