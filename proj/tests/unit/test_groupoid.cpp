#include "doctest.h"
#include "lsk/groupoid.hpp"
#include "lsk/series.hpp"

using namespace lsk;

TEST_CASE("solve_mc reproduces the endpoints and the zero element") {
    auto iv = build_interval(5);
    CHECK(solve_mc(iv, Rational(1), Rational(0)).element == iv.a);
    CHECK(solve_mc(iv, Rational(0), Rational(1)).element == iv.b);
    CHECK(solve_mc(iv, Rational(0), Rational(0)).element.is_zero());
    CHECK(solve_mc(iv, Rational(1), Rational(0)).family == McFamily::I);
    CHECK(solve_mc(iv, Rational(0), Rational(0)).family == McFamily::II);
}

TEST_CASE("solve_mc quadratic stage, frozen coefficients") {
    auto iv = build_interval(4);

    // lambda_1 = (lambda^2 - lambda)/2 on ad_x(a), mu_1 = (mu - mu^2)/2 on
    // ad_x(b); for (1/3, 2/3) that is -1/9 and 1/9.
    auto d = solve_mc(iv, rat(1, 3), rat(2, 3));
    CHECK(d.element.length_part(2) ==
          rat(-1, 9) * bracket(iv.x, iv.a) + rat(1, 9) * bracket(iv.x, iv.b));

    // (1, -1) starts the family II line through a: length-2 part -[x, b].
    auto e = solve_mc(iv, Rational(1), Rational(-1));
    CHECK(e.element.length_part(2) == -bracket(iv.x, iv.b));
    CHECK(e.family == McFamily::II);
    CHECK(e.param == 1);
}

TEST_CASE("solve_mc solutions satisfy Maurer-Cartan and split by coefficient sum") {
    auto iv = build_interval(6);
    for (auto [lambda, mu] : {std::pair{rat(5, 2), rat(-3, 2)}, {rat(-1, 3), rat(1, 3)},
                              {rat(0, 1), rat(1, 1)}, {rat(7, 1), rat(-7, 1)}}) {
        auto d = solve_mc(iv, lambda, mu);
        CHECK(is_mc(iv.ctx, d.element));
        CHECK(d.element.linear_part() == lambda * iv.a + mu * iv.b);
        CHECK(d.param == lambda);
        CHECK(d.family == (lambda + mu == 1 ? McFamily::I : McFamily::II));
        CHECK(d.decomposable_part == d.element - d.element.linear_part());
        CHECK(d.decomposable_part.linear_part().is_zero());
    }
}

TEST_CASE("solve_mc rejects linear parts off the two lines") {
    auto iv = build_interval(4);
    CHECK_THROWS_AS(solve_mc(iv, Rational(1), Rational(1)), NoSolution);
    CHECK_THROWS_AS(solve_mc(iv, Rational(-1), Rational(-1)), NoSolution);
    CHECK_THROWS_WITH_AS(solve_mc(iv, Rational(2), Rational(3)),
                         doctest::Contains("(lambda + mu)^2 = lambda + mu"), NoSolution);
}

TEST_CASE("solve_mc agrees with the gauge orbit description") {
    auto iv = build_interval(6);
    for (const Rational& t : {rat(-2, 1), rat(1, 3), rat(5, 2)}) {
        CHECK(solve_mc(iv, t, Rational(1) - t).element == gauge(iv.ctx, t * iv.x, iv.b));
        CHECK(solve_mc(iv, t, -t).element == gauge(iv.ctx, t * iv.x, iv.ctx.zero()));
    }
}

TEST_CASE("classify_mc inverts solve_mc and validates input") {
    auto iv = build_interval(5);
    auto moved = gauge(iv.ctx, rat(5, 2) * iv.x, iv.b);
    auto d = classify_mc(iv, moved);
    CHECK(d.family == McFamily::I);
    CHECK(d.param == rat(5, 2));
    CHECK(d.element == moved);

    auto zero_orbit = gauge(iv.ctx, rat(-1, 3) * iv.x, iv.ctx.zero());
    auto e = classify_mc(iv, zero_orbit);
    CHECK(e.family == McFamily::II);
    CHECK(e.param == rat(-1, 3));

    CHECK_THROWS_AS(classify_mc(iv, Rational(2) * iv.b), NotMaurerCartan);
    CHECK_THROWS_AS(classify_mc(iv, iv.x), DegreeError);
}

TEST_CASE("family violation is only reachable at truncation 1") {
    // At truncation 1 the quadratic constraint is invisible, so a linear part
    // with coefficient sum 3 passes the Maurer-Cartan test and must be
    // reported as a family violation instead.
    auto iv = build_interval(1);
    CHECK_THROWS_WITH_AS(classify_mc(iv, Rational(3) * iv.a),
                         doctest::Contains("lower truncation order"), FamilyViolation);
}

TEST_CASE("connect yields nu = parameter difference inside each family") {
    auto iv = build_interval(5);
    auto from = solve_mc(iv, Rational(3), Rational(-2));
    auto to = solve_mc(iv, Rational(1), Rational(0));
    auto arrow = connect(iv, from, to);
    CHECK(arrow.nu == 2);
    CHECK(arrow.source.element == from.element);
    CHECK(arrow.target.element == to.element);
    CHECK(gauge(iv.ctx, arrow.nu * iv.x, to.element) == from.element);

    auto self = connect(iv, to, to);
    CHECK(self.nu == 0);

    auto second = connect(iv, solve_mc(iv, rat(1, 2), rat(-1, 2)),
                          solve_mc(iv, rat(-1, 3), rat(1, 3)));
    CHECK(second.nu == rat(5, 6));
}

TEST_CASE("connect refuses to cross families") {
    auto iv = build_interval(4);
    auto in_one = solve_mc(iv, Rational(1), Rational(0));
    auto in_two = solve_mc(iv, Rational(0), Rational(0));
    CHECK_THROWS_AS(connect(iv, in_one, in_two), DisconnectedComponents);
    CHECK_THROWS_AS(connect(iv, in_two, in_one), DisconnectedComponents);
}

TEST_CASE("morphism_from_gauge is a morphism exactly when the gauge identity holds") {
    auto iv = build_interval(5);
    auto y = Rational(2) * iv.x;
    auto zp = gauge(iv.ctx, y, iv.b);
    CHECK(check_morphism(morphism_from_gauge(iv.ctx, y, iv.b, zp)).pass);

    // a is not gauge(2x, b), so the same template fails.
    CHECK(!check_morphism(morphism_from_gauge(iv.ctx, y, iv.b, iv.a)).pass);

    // The three canonical instances: the identity-on-generators map, the
    // trivial gauge, and the x, b, b triple that x G b = a rules out.
    CHECK(check_morphism(morphism_from_gauge(iv.ctx, iv.x, iv.b, iv.a)).pass);
    CHECK(check_morphism(morphism_from_gauge(iv.ctx, iv.ctx.zero(), iv.a, iv.a)).pass);
    CHECK(!check_morphism(morphism_from_gauge(iv.ctx, iv.x, iv.b, iv.b)).pass);
}

TEST_CASE("orientation reversal acts on descriptors by lambda -> 1-lambda and mu -> -mu") {
    auto iv = build_interval(5);
    auto gamma = orientation_reversal(iv);
    for (const Rational& t : {rat(-2, 1), rat(0, 1), rat(1, 3), rat(5, 2)}) {
        auto one = classify_mc(iv, gamma.apply(solve_mc(iv, t, Rational(1) - t).element));
        CHECK(one.family == McFamily::I);
        CHECK(one.param == Rational(1) - t);

        auto two = classify_mc(iv, gamma.apply(solve_mc(iv, t, -t).element));
        CHECK(two.family == McFamily::II);
        CHECK(two.param == -t);
    }
}

TEST_CASE("distinct gauge parameters move a Maurer-Cartan element to distinct images") {
    // Degree 0 of the interval algebra is spanned by x alone, so arrows are
    // pinned down by one rational; different nu must give different images.
    auto iv = build_interval(3);
    const Rational nus[] = {rat(-2, 1), rat(-1, 2), rat(0, 1), rat(1, 3), rat(1, 1)};
    for (const Rational& nu : nus)
        for (const Rational& nu_prime : nus) {
            if (nu == nu_prime) continue;
            CHECK(!(gauge(iv.ctx, nu * iv.x, iv.b) == gauge(iv.ctx, nu_prime * iv.x, iv.b)));
            CHECK(!(gauge(iv.ctx, nu * iv.x, iv.ctx.zero()) ==
                    gauge(iv.ctx, nu_prime * iv.x, iv.ctx.zero())));
        }
}

TEST_CASE("morphism_from_gauge targets any DGL, not only the interval") {
    auto sub = build_subdivision(4);
    auto y = bch(sub.x1, sub.x2);
    auto f = morphism_from_gauge(sub.ctx, y, sub.a2, sub.a0);
    CHECK(check_morphism(f).pass);

    CHECK_THROWS_AS(morphism_from_gauge(sub.ctx, y, sub.a2, Rational(2) * sub.a0),
                    NotMaurerCartan);
    CHECK_THROWS_AS(morphism_from_gauge(sub.ctx, sub.a0, sub.a2, sub.a0), DegreeError);
}

TEST_CASE("perturbed interval isomorphisms, one per family case") {
    auto iv = build_interval(4);

    SUBCASE("family II representative") {
        auto z = solve_mc(iv, Rational(1), Rational(-1));
        auto f = build_perturbed_iso(iv, z);
        CHECK(check_morphism(f).pass);
        CHECK(linear_part_invertible(f));
        CHECK(f.source() == iv.ctx);
        CHECK(f.target() == perturb(iv.ctx, z.element));
        CHECK(f.image_of(0) == iv.a - z.element);
    }
    SUBCASE("family I representative with nonzero parameter") {
        auto z = classify_mc(iv, gauge(iv.ctx, Rational(2) * iv.x, iv.b));
        auto f = build_perturbed_iso(iv, z);
        CHECK(check_morphism(f).pass);
        CHECK(linear_part_invertible(f));
        CHECK(f.source() == perturb(iv.ctx, iv.a));
        CHECK(f.image_of(2) == Rational(2) * iv.x);
    }
    SUBCASE("family I with parameter zero is the orientation reversal") {
        auto z = solve_mc(iv, Rational(0), Rational(1));
        auto f = build_perturbed_iso(iv, z);
        CHECK(check_morphism(f).pass);
        CHECK(f.image_of(0) == iv.b);
        CHECK(f.image_of(2) == -iv.x);
    }
}

TEST_CASE("the substitution chain identifies the a-perturbed interval with the interval") {
    auto chain = build_base_iso(4);
    CHECK(check_d_squared(chain.detached).pass);
    CHECK(check_morphism(chain.substitution).pass);
    CHECK(check_morphism(chain.phi).pass);
    CHECK(check_morphism(chain.composite).pass);
    CHECK(linear_part_invertible(chain.composite));

    // The inverse really inverts: going detached -> perturbed -> detached
    // fixes every generator.
    auto round = compose(chain.substitution_inverse, chain.substitution);
    for (std::size_t i = 0; i < 3; ++i)
        CHECK(round.image_of(i) == Element::generator(chain.detached.generators(), 4, i));

    // The composite sends b to -exp(ad_x)(b); its linear part is -b.
    auto iv = build_interval(4);
    CHECK(chain.composite.image_of(1) ==
          -apply_ad_series(RationalSeries::exponential(), iv.x, iv.b));
    CHECK(chain.composite.image_of(1).linear_part() == -iv.b);
}

TEST_CASE("the alternative presentation is isomorphic to the interval") {
    auto qm = build_quotient_model(4);
    CHECK(check_d_squared(qm.ctx).pass);
    CHECK(qm.dx_defining_form == qm.dx_alternate_form);
    CHECK(qm.dx_defining_form.linear_part() ==
          qm.ctx.generator_element("b").linear_part());
    CHECK(check_morphism(qm.phi).pass);
    CHECK(linear_part_invertible(qm.phi));

    auto iv = build_interval(4);
    CHECK(qm.phi.image_of(1) == gauge(iv.ctx, iv.x, iv.ctx.zero()));
    CHECK(qm.phi.image_of(2) == -iv.x);
}

TEST_CASE("no linear substitution connects the families") {
    auto iv = build_interval(3);
    for (int k = -3; k <= 3; ++k) {
        auto candidate = cross_family_candidate(iv, Rational(k));
        auto result = check_morphism(candidate);
        CHECK(!result.pass);
        REQUIRE(result.witness.has_value());
        CHECK(result.witness->linear_part() ==
              Rational(k - 1) * iv.a - Rational(k) * iv.b);
    }
}
