#include "doctest.h"
#include "lsk/interval.hpp"
#include "lsk/printer.hpp"
#include "lsk/series.hpp"

using namespace lsk;

TEST_CASE("the interval differential, frozen low orders") {
    SUBCASE("order 1: dx = b - a") {
        auto iv = build_interval(1);
        CHECK(apply_diff(iv.ctx, iv.x) == iv.b - iv.a);
        CHECK(print_canonical(apply_diff(iv.ctx, iv.x)) == "-1 a + 1 b");
    }
    SUBCASE("order 2: dx = b - a + [x, (a+b)/2]") {
        auto iv = build_interval(2);
        auto expect = iv.b - iv.a + rat(1, 2) * bracket(iv.x, iv.a + iv.b);
        CHECK(apply_diff(iv.ctx, iv.x) == expect);
    }
    SUBCASE("order 3 adds (1/12) ad_x^2(b - a)") {
        auto iv = build_interval(3);
        auto iv2 = build_interval(2);
        auto tail = apply_diff(iv.ctx, iv.x) - apply_diff(iv2.ctx, iv2.x).truncated_to(3);
        CHECK(tail == rat(1, 12) * ad_power(iv.x, 2, iv.b - iv.a));
    }
}

TEST_CASE("endpoint differentials are quadratic") {
    auto iv = build_interval(5);
    CHECK(apply_diff(iv.ctx, iv.a) == rat(-1, 2) * bracket(iv.a, iv.a));
    CHECK(print_canonical(apply_diff(iv.ctx, iv.a)) == "-1 aa");
    CHECK(is_mc(iv.ctx, iv.a));
    CHECK(is_mc(iv.ctx, iv.b));
}

TEST_CASE("the two closed forms of dx agree identically") {
    for (int n : {1, 2, 3, 6, 8})
        CHECK(apply_diff(build_interval(n).ctx, build_interval(n).x) == alternate_interval_dx(n));
}

TEST_CASE("orientation reversal swaps the endpoints and negates x") {
    auto iv = build_interval(5);
    auto gamma = orientation_reversal(iv);
    CHECK(gamma.apply(iv.a) == iv.b);
    CHECK(gamma.apply(iv.b) == iv.a);
    CHECK(gamma.apply(iv.x) == -iv.x);
    CHECK(check_morphism(gamma).pass);
}

TEST_CASE("truncation must be positive") {
    CHECK_THROWS_AS(build_interval(0), Error);
    CHECK_THROWS_AS(build_interval(-3), Error);
}

TEST_CASE("subdivision glues two intervals") {
    auto sub = build_subdivision(4);
    CHECK(sub.ctx.generators()->size() == 5);
    CHECK(check_d_squared(sub.ctx).pass);

    // Each half is an interval on its own endpoints.
    CHECK(apply_diff(sub.ctx, sub.x1).linear_part() == sub.a1 - sub.a0);
    CHECK(apply_diff(sub.ctx, sub.x2).linear_part() == sub.a2 - sub.a1);

    // The defining map folds the interval onto the composite arrow.
    CHECK(sub.map.image_of(0) == sub.a0);
    CHECK(sub.map.image_of(1) == sub.a2);
    CHECK(sub.map.image_of(2) == bch(sub.x1, sub.x2));
    CHECK(check_morphism(sub.map).pass);
}

TEST_CASE("composite gauge across the subdivision joins the outer endpoints") {
    auto sub = build_subdivision(5);
    CHECK(gauge(sub.ctx, bch(sub.x1, sub.x2), sub.a2) == sub.a0);
    CHECK(gauge(sub.ctx, sub.x2, sub.a2) == sub.a1);
    CHECK(gauge(sub.ctx, sub.x1, gauge(sub.ctx, sub.x2, sub.a2)) == sub.a0);
}
