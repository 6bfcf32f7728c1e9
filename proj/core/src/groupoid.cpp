#include "lsk/groupoid.hpp"

#include <array>
#include <utility>
#include <vector>

#include "lsk/series.hpp"

namespace lsk {

namespace {

void certify(const char* what, const CheckResult& result) {
    if (!result)
        throw CertificationError(std::string(what) + ": " + result.detail);
}

void certify(const char* what, bool pass) {
    if (!pass) throw CertificationError(what);
}

Element mc_differential(const Element& g) {
    return Rational(-1, 2) * bracket(g, g);
}

std::string no_solution_message(const Rational& lambda, const Rational& mu) {
    Rational s = lambda + mu;
    return "no Maurer-Cartan element has linear part (" + to_string(lambda) +
           ")a + (" + to_string(mu) +
           ")b: the quadratic stage requires (lambda + mu)^2 = lambda + mu, and " +
           to_string(s * s) + " != " + to_string(s);
}

// Exact solution of rows lhs_a*u + lhs_b*v = rhs. The theory behind the
// staged ansatz guarantees rank 2 at every stage, so anything short of a
// unique verified solution is reported through `state`.
enum class StageOutcome { solved, inconsistent, degenerate };

StageOutcome solve_stage(std::vector<std::array<Rational, 3>> rows, Rational& u,
                         Rational& v) {
    std::size_t pivot_a = rows.size();
    for (std::size_t i = 0; i < rows.size(); ++i)
        if (rows[i][0] != 0) {
            pivot_a = i;
            break;
        }
    if (pivot_a == rows.size()) return StageOutcome::degenerate;
    std::swap(rows[0], rows[pivot_a]);
    for (std::size_t i = 1; i < rows.size(); ++i) {
        if (rows[i][0] == 0) continue;
        Rational factor = rows[i][0] / rows[0][0];
        for (int k = 0; k < 3; ++k) rows[i][k] -= factor * rows[0][k];
    }
    std::size_t pivot_b = rows.size();
    for (std::size_t i = 1; i < rows.size(); ++i)
        if (rows[i][1] != 0) {
            pivot_b = i;
            break;
        }
    if (pivot_b == rows.size()) return StageOutcome::degenerate;
    v = rows[pivot_b][2] / rows[pivot_b][1];
    u = (rows[0][2] - rows[0][1] * v) / rows[0][0];
    for (const auto& row : rows)
        if (row[0] * u + row[1] * v != row[2]) return StageOutcome::inconsistent;
    return StageOutcome::solved;
}

}  // namespace

std::string family_name(McFamily family) {
    return family == McFamily::I ? "I" : "II";
}

McDescriptor solve_mc(const LsInterval& interval, const Rational& lambda,
                      const Rational& mu) {
    const DglContext& ctx = interval.ctx;
    const int order = ctx.truncation();
    Element omega = lambda * interval.a + mu * interval.b;

    for (int r = 1; r < order; ++r) {
        Element basis_a = ad_power(interval.x, r, interval.a);
        Element basis_b = ad_power(interval.x, r, interval.b);
        // The unknowns enter the length-(r+1) residual only through the
        // linear part of the differential.
        Element lhs_a = apply_diff(ctx, basis_a).length_part(r + 1);
        Element lhs_b = apply_diff(ctx, basis_b).length_part(r + 1);
        Element rhs = -(apply_diff(ctx, omega) + Rational(1, 2) * bracket(omega, omega))
                           .length_part(r + 1);

        Element::TermMap words = rhs.terms();
        for (const auto& [word, coefficient] : lhs_a.terms()) words.try_emplace(word, 0);
        for (const auto& [word, coefficient] : lhs_b.terms()) words.try_emplace(word, 0);
        std::vector<std::array<Rational, 3>> rows;
        rows.reserve(words.size());
        for (const auto& [word, coefficient] : words)
            rows.push_back({lhs_a.coeff(word), lhs_b.coeff(word), coefficient});

        Rational coeff_a, coeff_b;
        switch (solve_stage(std::move(rows), coeff_a, coeff_b)) {
            case StageOutcome::solved:
                break;
            case StageOutcome::inconsistent:
                if (r == 1) throw NoSolution(no_solution_message(lambda, mu));
                throw CertificationError(
                    "solve_mc: inconsistent stage beyond the quadratic one");
            case StageOutcome::degenerate:
                throw CertificationError("solve_mc: stage system lost full rank");
        }
        omega += coeff_a * basis_a + coeff_b * basis_b;
    }

    if (!mc_residual(ctx, omega).is_zero())
        throw CertificationError("solve_mc: staged solution fails the full residual");

    Rational sum = lambda + mu;
    McFamily family;
    if (sum == 1)
        family = McFamily::I;
    else if (sum == 0)
        family = McFamily::II;
    else
        // Reachable only at truncation 1, where no quadratic stage exists to
        // reject the linear part.
        throw NoSolution(no_solution_message(lambda, mu));

    Element linear = omega.linear_part();
    return McDescriptor{family, lambda, omega, omega - linear};
}

McDescriptor solve_mc(const Rational& lambda, const Rational& mu, int truncation) {
    return solve_mc(build_interval(truncation), lambda, mu);
}

McDescriptor classify_mc(const LsInterval& interval, const Element& z) {
    require_compatible(interval.ctx.zero(), z);
    if (!is_mc(interval.ctx, z))
        throw NotMaurerCartan("classify_mc: input is not Maurer-Cartan up to the truncation order");
    Rational lambda = z.coeff(Word{0});
    Rational mu = z.coeff(Word{1});
    Rational sum = lambda + mu;
    McFamily family;
    if (sum == 1)
        family = McFamily::I;
    else if (sum == 0)
        family = McFamily::II;
    else
        throw FamilyViolation(
            "classify_mc: linear coefficients sum to " + to_string(sum) +
            ", not 0 or 1; the input was computed at a lower truncation order");

    if (!(solve_mc(interval, lambda, mu).element == z))
        throw CertificationError(
            "classify_mc: two Maurer-Cartan elements share the linear part (" +
            to_string(lambda) + ")a + (" + to_string(mu) + ")b");

    return McDescriptor{family, lambda, z, z - z.linear_part()};
}

GroupoidArrow connect(const LsInterval& interval, const McDescriptor& from,
                      const McDescriptor& to) {
    if (from.family != to.family)
        throw DisconnectedComponents(
            "no arrow connects family " + family_name(from.family) + " to family " +
            family_name(to.family) + ": the families are distinct gauge orbits");
    Rational nu = from.param - to.param;
    if (!(gauge(interval.ctx, nu * interval.x, to.element) == from.element))
        throw CertificationError("connect: gauge transport along nu*x misses the source");
    return GroupoidArrow{std::move(nu), from, to};
}

GeneratorMap morphism_from_gauge(const DglContext& target, const Element& y,
                                 const Element& z, const Element& zp) {
    require_compatible(target.zero(), y);
    require_compatible(y, z);
    require_compatible(y, zp);
    if (!y.is_homogeneous(0))
        throw DegreeError("morphism_from_gauge: gauge element must be homogeneous of degree 0");
    if (!is_mc(target, z))
        throw NotMaurerCartan("morphism_from_gauge: z is not Maurer-Cartan");
    if (!is_mc(target, zp))
        throw NotMaurerCartan("morphism_from_gauge: z' is not Maurer-Cartan");
    LsInterval interval = build_interval(target.truncation());
    return GeneratorMap(interval.ctx, target, {zp, z, y});
}

GeneratorMap build_perturbed_iso(const LsInterval& interval, const McDescriptor& z) {
    DglContext target = perturb(interval.ctx, z.element);
    auto make = [&]() -> GeneratorMap {
        if (z.family == McFamily::II)
            return GeneratorMap(interval.ctx, target,
                                {interval.a - z.element, interval.b - z.element,
                                 interval.x});
        DglContext source = perturb(interval.ctx, interval.a);
        if (z.param == 0)
            // z == b exactly, and the orientation reversal lands there.
            return GeneratorMap(std::move(source), std::move(target),
                                {interval.b, interval.a, -interval.x});
        return GeneratorMap(std::move(source), std::move(target),
                            {z.element, interval.b, z.param * interval.x});
    };
    GeneratorMap iso = make();
    certify("perturbed-interval map is not a morphism", check_morphism(iso));
    certify("perturbed-interval map has singular linear part", linear_part_invertible(iso));
    return iso;
}

BaseIsoChain build_base_iso(int truncation) {
    LsInterval interval = build_interval(truncation);
    DglContext perturbed_a = perturb(interval.ctx, interval.a);

    auto gens = GeneratorSet::make({{"c", -1}, {"w", -1}, {"x", 0}});
    Element c = Element::generator(gens, truncation, 0);
    Element w = Element::generator(gens, truncation, 1);
    Element x = Element::generator(gens, truncation, 2);
    DglContext detached(
        gens, truncation,
        {mc_differential(c), mc_differential(w),
         bracket(x, w) + apply_ad_series(RationalSeries::t_over_expm1(), x, w)});
    certify("detached context not square-zero", check_d_squared(detached));

    GeneratorMap substitution(detached, perturbed_a,
                              {-interval.a, interval.b - interval.a, interval.x});
    GeneratorMap substitution_inverse(perturbed_a, detached, {-c, w - c, x});
    GeneratorMap phi(detached, interval.ctx,
                     {interval.a, gauge(interval.ctx, interval.x, interval.ctx.zero()),
                      -interval.x});
    GeneratorMap composite = compose(phi, substitution_inverse);

    certify("substitution is not a morphism", check_morphism(substitution));
    certify("substitution inverse is not a morphism", check_morphism(substitution_inverse));
    certify("substitution is not invertible", linear_part_invertible(substitution));
    certify("detached-to-interval map is not a morphism", check_morphism(phi));
    certify("detached-to-interval map is not invertible", linear_part_invertible(phi));
    certify("composite is not a morphism", check_morphism(composite));
    certify("composite is not invertible", linear_part_invertible(composite));

    return BaseIsoChain{std::move(detached), std::move(substitution),
                        std::move(substitution_inverse), std::move(phi),
                        std::move(composite)};
}

QuotientModel build_quotient_model(int truncation) {
    LsInterval interval = build_interval(truncation);

    auto gens = GeneratorSet::make({{"a", -1}, {"b", -1}, {"x", 0}});
    Element a = Element::generator(gens, truncation, 0);
    Element b = Element::generator(gens, truncation, 1);
    Element x = Element::generator(gens, truncation, 2);
    Element dx_defining =
        bracket(x, b) + apply_ad_series(RationalSeries::t_over_expm1(), x, b);
    Element dx_alternate =
        apply_ad_series(RationalSeries::t_over_one_minus_expneg(), x, b);

    DglContext ctx(gens, truncation, {mc_differential(a), mc_differential(b), dx_defining});
    certify("quotient context not square-zero", check_d_squared(ctx));

    GeneratorMap phi(ctx, interval.ctx,
                     {interval.a, gauge(interval.ctx, interval.x, interval.ctx.zero()),
                      -interval.x});
    certify("quotient-to-interval map is not a morphism", check_morphism(phi));
    certify("quotient-to-interval map is not invertible", linear_part_invertible(phi));

    return QuotientModel{std::move(ctx), std::move(phi), std::move(dx_defining),
                         std::move(dx_alternate)};
}

GeneratorMap cross_family_candidate(const LsInterval& interval, const Rational& lambda) {
    return GeneratorMap(interval.ctx, interval.ctx,
                        {interval.a, interval.ctx.zero(), lambda * interval.x});
}

}  // namespace lsk
