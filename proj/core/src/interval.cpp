#include "lsk/interval.hpp"

#include <utility>

#include "lsk/series.hpp"

namespace lsk {

namespace {

// -1/2 [g, g] for a degree -1 generator, i.e. the differential that makes it
// Maurer-Cartan.
Element mc_differential(const Element& g) {
    return Rational(-1, 2) * bracket(g, g);
}

Element interval_dx(const Element& x, const Element& a, const Element& b) {
    return bracket(x, b) + apply_ad_series(RationalSeries::t_over_expm1(), x, b - a);
}

void certify(const char* what, const CheckResult& result) {
    if (!result)
        throw CertificationError(std::string(what) + ": " + result.detail);
}

void certify_equal(const char* what, const Element& lhs, const Element& rhs) {
    if (!(lhs == rhs)) throw CertificationError(std::string(what) + ": elements differ");
}

}  // namespace

LsInterval build_interval(int truncation) {
    auto gens = GeneratorSet::make({{"a", -1}, {"b", -1}, {"x", 0}});
    Element a = Element::generator(gens, truncation, 0);
    Element b = Element::generator(gens, truncation, 1);
    Element x = Element::generator(gens, truncation, 2);

    DglContext ctx(gens, truncation,
                   {mc_differential(a), mc_differential(b), interval_dx(x, a, b)});

    certify("interval differential not square-zero", check_d_squared(ctx));
    if (!is_mc(ctx, a)) throw CertificationError("interval endpoint a is not Maurer-Cartan");
    if (!is_mc(ctx, b)) throw CertificationError("interval endpoint b is not Maurer-Cartan");
    certify_equal("gauge(x, b) != a", gauge(ctx, x, b), a);
    certify_equal("dx has wrong linear part", apply_diff(ctx, x).linear_part(), b - a);

    return LsInterval{std::move(ctx), std::move(a), std::move(b), std::move(x)};
}

Element alternate_interval_dx(int truncation) {
    auto gens = GeneratorSet::make({{"a", -1}, {"b", -1}, {"x", 0}});
    Element a = Element::generator(gens, truncation, 0);
    Element b = Element::generator(gens, truncation, 1);
    Element x = Element::generator(gens, truncation, 2);
    return bracket(x, a) +
           apply_ad_series(RationalSeries::t_over_one_minus_expneg(), x, b - a);
}

GeneratorMap orientation_reversal(const LsInterval& interval) {
    GeneratorMap reversal(interval.ctx, interval.ctx,
                          {interval.b, interval.a, -interval.x});
    certify("orientation reversal is not a morphism", check_morphism(reversal));
    return reversal;
}

Subdivision build_subdivision(int truncation) {
    auto gens = GeneratorSet::make(
        {{"a0", -1}, {"a1", -1}, {"a2", -1}, {"x1", 0}, {"x2", 0}});
    Element a0 = Element::generator(gens, truncation, 0);
    Element a1 = Element::generator(gens, truncation, 1);
    Element a2 = Element::generator(gens, truncation, 2);
    Element x1 = Element::generator(gens, truncation, 3);
    Element x2 = Element::generator(gens, truncation, 4);

    DglContext ctx(gens, truncation,
                   {mc_differential(a0), mc_differential(a1), mc_differential(a2),
                    interval_dx(x1, a0, a1), interval_dx(x2, a1, a2)});
    certify("subdivision differential not square-zero", check_d_squared(ctx));

    LsInterval interval = build_interval(truncation);
    GeneratorMap map(interval.ctx, ctx, {a0, a2, bch(x1, x2)});
    certify("subdivision map is not a morphism", check_morphism(map));

    return Subdivision{std::move(ctx), std::move(a0), std::move(a1), std::move(a2),
                       std::move(x1),  std::move(x2),  std::move(map)};
}

}  // namespace lsk
