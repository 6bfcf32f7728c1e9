#include "lsk/verify.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <future>
#include <utility>

#include "lsk/errors.hpp"
#include "lsk/groupoid.hpp"
#include "lsk/interval.hpp"
#include "lsk/printer.hpp"
#include "lsk/series.hpp"

namespace lsk {

Rational RationalSampler::next() {
    static const Rational grid[] = {Rational(-2), Rational(-1, 2), Rational(0),
                                    Rational(1, 3), Rational(1),  Rational(5, 2)};
    if (rng_() % 4 == 0) return grid[rng_() % 6];
    long numerator = static_cast<long>(rng_() % 21) - 10;
    long denominator = static_cast<long>(rng_() % 10) + 1;
    Rational value(numerator, denominator);
    value.canonicalize();
    return value;
}

Rational RationalSampler::next_nonzero() {
    for (;;) {
        Rational value = next();
        if (value != 0) return value;
    }
}

namespace {

struct Check {
    std::string id;
    std::string suite;
    std::string claim;
    std::function<CheckResult()> run;
};

CheckResult failure(std::string detail) {
    CheckResult result;
    result.pass = false;
    result.detail = std::move(detail);
    return result;
}

CheckResult require_equal(const Element& lhs, const Element& rhs, const std::string& what) {
    if (lhs == rhs) return CheckResult::ok();
    CheckResult result;
    result.pass = false;
    result.detail = what + ": sides differ";
    result.witness = lhs - rhs;
    return result;
}

const Rational kParamGrid[] = {Rational(-2), Rational(-1, 2), Rational(0),
                               Rational(1, 3), Rational(1),  Rational(5, 2)};

int capped(int truncation) { return std::min(truncation, 6); }

// Degree-0 Lie sample in the subdivision algebra, where brackets of the two
// arrows do not collapse.
Element degree0_sample(const Subdivision& sub, RationalSampler& sampler) {
    return sampler.next() * sub.x1 + sampler.next() * sub.x2 +
           sampler.next() * bracket(sub.x1, sub.x2);
}

std::vector<Check> build_checks(int truncation, std::uint64_t seed) {
    auto salted = [seed](std::uint64_t salt) { return seed * 1000003 + salt; };
    std::vector<Check> checks;

    checks.push_back(
        {"interval.square_zero", "interval",
         "the interval differential squares to zero on every generator",
         [truncation] { return check_d_squared(build_interval(truncation).ctx); }});

    checks.push_back(
        {"interval.endpoints_mc", "interval",
         "a and b satisfy the Maurer-Cartan equation", [truncation] {
             LsInterval iv = build_interval(truncation);
             if (!mc_residual(iv.ctx, iv.a).is_zero())
                 return failure("a has nonzero Maurer-Cartan residual");
             if (!mc_residual(iv.ctx, iv.b).is_zero())
                 return failure("b has nonzero Maurer-Cartan residual");
             return CheckResult::ok();
         }});

    checks.push_back({"interval.gauge_x_b", "interval", "gauge(x, b) = a", [truncation] {
                          LsInterval iv = build_interval(truncation);
                          return require_equal(gauge(iv.ctx, iv.x, iv.b), iv.a,
                                               "gauge(x, b) vs a");
                      }});

    checks.push_back(
        {"interval.dx_forms", "interval", "both closed forms of dx agree", [truncation] {
             LsInterval iv = build_interval(truncation);
             return require_equal(apply_diff(iv.ctx, iv.x), alternate_interval_dx(truncation),
                                  "defining form of dx vs alternate form");
         }});

    checks.push_back(
        {"interval.bernoulli_oracle", "interval",
         "bernoulli(n) matches the series-division oracle for n <= 20", [] {
             // Independent oracle: coefficients of t/(e^t - 1) by dividing 1
             // by (e^t - 1)/t, i.e. sum_{k=0}^{n} c_k/(n-k+1)! = [n == 0].
             std::vector<Rational> c(21);
             c[0] = 1;
             for (int n = 1; n <= 20; ++n) {
                 Rational sum(0);
                 for (int k = 0; k < n; ++k)
                     sum += c[k] / Rational(factorial(static_cast<unsigned long>(n - k + 1)));
                 c[n] = -sum;
             }
             for (int n = 0; n <= 20; ++n) {
                 Rational expected = Rational(factorial(static_cast<unsigned long>(n))) * c[n];
                 if (bernoulli(n) != expected)
                     return failure("bernoulli(" + std::to_string(n) + ") = " +
                                    to_string(bernoulli(n)) + ", oracle gives " +
                                    to_string(expected));
             }
             const std::pair<int, Rational> frozen[] = {
                 {0, Rational(1)},         {1, Rational(-1, 2)},  {2, Rational(1, 6)},
                 {4, Rational(-1, 30)},    {6, Rational(1, 42)},  {8, Rational(-1, 30)},
                 {10, Rational(5, 66)},    {12, Rational(-691, 2730)},
                 {20, Rational(-174611, 330)}};
             for (const auto& [n, value] : frozen)
                 if (bernoulli(n) != value)
                     return failure("bernoulli(" + std::to_string(n) +
                                    ") differs from the frozen value " + to_string(value));
             for (int k = 1; k <= 5; ++k)
                 if (bernoulli(2 * k + 1) != 0)
                     return failure("bernoulli(" + std::to_string(2 * k + 1) +
                                    ") should vanish");
             return CheckResult::ok();
         }});

    checks.push_back(
        {"gauge.preserves_mc", "gauge",
         "the gauge action preserves the Maurer-Cartan equation (20 seeded cases)",
         [truncation, salted] {
             LsInterval iv = build_interval(truncation);
             RationalSampler sampler(salted(2));
             const Element zs[] = {iv.a, iv.b, iv.ctx.zero(),
                                   solve_mc(iv, Rational(1, 3), Rational(2, 3)).element,
                                   solve_mc(iv, Rational(5, 2), Rational(-5, 2)).element};
             for (int i = 0; i < 20; ++i) {
                 Element y = sampler.next() * iv.x;
                 const Element& z = zs[i % 5];
                 Element residual = mc_residual(iv.ctx, gauge(iv.ctx, y, z));
                 if (!residual.is_zero()) {
                     CheckResult result = failure(
                         "gauge image violates the Maurer-Cartan equation at sample " +
                         std::to_string(i));
                     result.witness = residual;
                     return result;
                 }
             }
             return CheckResult::ok();
         }});

    checks.push_back(
        {"gauge.group_action", "gauge",
         "gauge(bch(y1,y2), z) = gauge(y1, gauge(y2, z)) (10 seeded pairs)",
         [truncation, salted] {
             int n = capped(truncation);
             Subdivision sub = build_subdivision(n);
             RationalSampler sampler(salted(3));
             const Element zs[] = {sub.a0, sub.a1, sub.a2};
             for (int i = 0; i < 10; ++i) {
                 Element y1 = degree0_sample(sub, sampler);
                 Element y2 = degree0_sample(sub, sampler);
                 const Element& z = zs[i % 3];
                 CheckResult result =
                     require_equal(gauge(sub.ctx, bch(y1, y2), z),
                                   gauge(sub.ctx, y1, gauge(sub.ctx, y2, z)),
                                   "pair " + std::to_string(i));
                 if (!result) return result;
             }
             return CheckResult::ok();
         }});

    checks.push_back(
        {"gauge.example_identities", "gauge",
         "gauge(x,0) = a - exp(ad_x)(b); gauge(-x,0) = b - exp(-ad_x)(a); "
         "-((exp(ad_x)-1)/ad_x)(dx) = a - exp(ad_x)(b)",
         [truncation] {
             LsInterval iv = build_interval(truncation);
             const RationalSeries exp_series = RationalSeries::exponential();
             Element lhs1 = gauge(iv.ctx, iv.x, iv.ctx.zero());
             Element rhs1 = iv.a - apply_ad_series(exp_series, iv.x, iv.b);
             CheckResult r1 = require_equal(lhs1, rhs1, "gauge(x,0) vs a - exp(ad_x)(b)");
             if (!r1) return r1;
             Element lhs2 = gauge(iv.ctx, -iv.x, iv.ctx.zero());
             Element rhs2 = iv.b - apply_ad_series(exp_series, -iv.x, iv.a);
             CheckResult r2 = require_equal(lhs2, rhs2, "gauge(-x,0) vs b - exp(-ad_x)(a)");
             if (!r2) return r2;
             Element lhs3 = -apply_ad_series(RationalSeries::expm1_over_t(), iv.x,
                                             apply_diff(iv.ctx, iv.x));
             return require_equal(lhs3, rhs1, "-((exp(ad_x)-1)/ad_x)(dx) vs a - exp(ad_x)(b)");
         }});

    checks.push_back(
        {"gauge.bch_oracle", "gauge",
         "bch matches the closed bracket formula through length 4", [] {
             auto gens = GeneratorSet::make({{"u", 0}, {"v", 0}});
             Element u = Element::generator(gens, 4, 0);
             Element v = Element::generator(gens, 4, 1);
             Element closed = u + v + Rational(1, 2) * bracket(u, v) +
                              Rational(1, 12) * bracket(u, bracket(u, v)) +
                              Rational(1, 12) * bracket(v, bracket(v, u)) -
                              Rational(1, 24) * bracket(v, bracket(u, bracket(u, v)));
             return require_equal(bch(u, v), closed, "bch(u, v) vs closed formula");
         }});

    checks.push_back(
        {"gauge.exp_log_inverse", "gauge",
         "exp and log are mutually inverse (10 seeded elements)", [truncation, salted] {
             auto gens = GeneratorSet::make({{"u", 0}, {"v", 0}});
             Element u = Element::generator(gens, truncation, 0);
             Element v = Element::generator(gens, truncation, 1);
             Element unit = Element::unit(gens, truncation);
             RationalSampler sampler(salted(5));
             for (int i = 0; i < 10; ++i) {
                 Element e = sampler.next() * u + sampler.next() * v +
                             sampler.next() * concat(u, v) + sampler.next() * concat(v, u) +
                             sampler.next() * concat(u, concat(u, v));
                 CheckResult r1 = require_equal(tensor_log(tensor_exp(e)), e,
                                                "log(exp(e)) vs e at sample " +
                                                    std::to_string(i));
                 if (!r1) return r1;
                 CheckResult r2 = require_equal(tensor_exp(tensor_log(unit + e)), unit + e,
                                                "exp(log(1+e)) vs 1+e at sample " +
                                                    std::to_string(i));
                 if (!r2) return r2;
             }
             return CheckResult::ok();
         }});

    checks.push_back({"subdivision.morphism", "subdivision",
                      "a -> a0, b -> a2, x -> bch(x1, x2) is a morphism of the glued intervals",
                      [truncation] {
                          return check_morphism(build_subdivision(capped(truncation)).map);
                      }});

    checks.push_back(
        {"subdivision.endpoints", "subdivision", "gauge(bch(x1, x2), a2) = a0", [truncation] {
             Subdivision sub = build_subdivision(capped(truncation));
             return require_equal(gauge(sub.ctx, bch(sub.x1, sub.x2), sub.a2), sub.a0,
                                  "gauge(bch(x1,x2), a2) vs a0");
         }});

    checks.push_back(
        {"groupoid.uniqueness_family_one", "groupoid",
         "solve_mc(lambda, 1-lambda) equals gauge(lambda*x, b) on the sample grid",
         [truncation] {
             LsInterval iv = build_interval(truncation);
             for (const Rational& lambda : kParamGrid) {
                 CheckResult result = require_equal(
                     solve_mc(iv, lambda, Rational(1 - lambda)).element,
                     gauge(iv.ctx, lambda * iv.x, iv.b), "lambda = " + to_string(lambda));
                 if (!result) return result;
             }
             return CheckResult::ok();
         }});

    checks.push_back(
        {"groupoid.uniqueness_family_two", "groupoid",
         "solve_mc(mu, -mu) equals gauge(mu*x, 0) on the sample grid", [truncation] {
             LsInterval iv = build_interval(truncation);
             for (const Rational& mu : kParamGrid) {
                 CheckResult result = require_equal(
                     solve_mc(iv, mu, Rational(-mu)).element,
                     gauge(iv.ctx, mu * iv.x, iv.ctx.zero()), "mu = " + to_string(mu));
                 if (!result) return result;
             }
             return CheckResult::ok();
         }});

    checks.push_back(
        {"groupoid.no_solution", "groupoid",
         "linear parts with coefficient sum outside {0, 1} are rejected with the "
         "quadratic constraint as witness",
         [truncation] {
             LsInterval iv = build_interval(truncation);
             const std::pair<Rational, Rational> bad[] = {{Rational(1), Rational(1)},
                                                          {Rational(-1), Rational(-1)}};
             for (const auto& [lambda, mu] : bad) {
                 try {
                     solve_mc(iv, lambda, mu);
                     return failure("solve_mc(" + to_string(lambda) + ", " + to_string(mu) +
                                    ") unexpectedly succeeded");
                 } catch (const NoSolution& e) {
                     if (std::string(e.what()).find("(lambda + mu)^2 = lambda + mu") ==
                         std::string::npos)
                         return failure(
                             std::string("NoSolution lacks the constraint witness: ") +
                             e.what());
                 }
             }
             return CheckResult::ok();
         }});

    checks.push_back(
        {"groupoid.connect_grid", "groupoid",
         "connect returns nu = param difference within each family (6x6 grid) and "
         "rejects cross-family pairs",
         [truncation] {
             LsInterval iv = build_interval(truncation);
             std::vector<McDescriptor> one, two;
             for (const Rational& p : kParamGrid) {
                 one.push_back(solve_mc(iv, p, Rational(1 - p)));
                 two.push_back(solve_mc(iv, p, Rational(-p)));
             }
             for (const auto& family : {one, two})
                 for (const auto& from : family)
                     for (const auto& to : family) {
                         GroupoidArrow arrow = connect(iv, from, to);
                         if (arrow.nu != from.param - to.param)
                             return failure("connect returned nu = " + to_string(arrow.nu) +
                                            ", expected " +
                                            to_string(Rational(from.param - to.param)));
                     }
             for (const auto& from : one)
                 for (const auto& to : two) {
                     for (const auto& [src, dst] : {std::pair(&from, &to), std::pair(&to, &from)}) {
                         try {
                             connect(iv, *src, *dst);
                             return failure("cross-family connect unexpectedly succeeded");
                         } catch (const DisconnectedComponents&) {
                         }
                     }
                 }
             return CheckResult::ok();
         }});

    checks.push_back(
        {"groupoid.cross_family_defect", "groupoid",
         "the candidate a -> a, b -> 0, x -> lambda*x fails the morphism check for every "
         "integer lambda in [-3, 3]: the defect on x has linear part (lambda-1)a - lambda*b, "
         "whose b-coefficient forces lambda = 0 while the a-coefficient forbids it",
         [truncation] {
             LsInterval iv = build_interval(truncation);
             for (int l = -3; l <= 3; ++l) {
                 Rational lambda(l);
                 CheckResult morphism = check_morphism(cross_family_candidate(iv, lambda));
                 if (morphism.pass)
                     return failure("candidate with lambda = " + to_string(lambda) +
                                    " unexpectedly commutes with the differentials");
                 if (!morphism.witness || morphism.witness->linear_part().is_zero())
                     return failure("defect witness for lambda = " + to_string(lambda) +
                                    " has vanishing linear part");
                 Element expected = (lambda - 1) * iv.a - lambda * iv.b;
                 if (!(morphism.witness->linear_part() == expected))
                     return failure("defect linear part differs from (lambda-1)a - lambda*b "
                                    "for lambda = " +
                                    to_string(lambda));
             }
             return CheckResult::ok();
         }});

    checks.push_back(
        {"groupoid.morphism_iff_gauge", "groupoid",
         "a -> z', b -> z, x -> y is a morphism precisely when gauge(y, z) = z' "
         "(10 seeded triples)",
         [truncation, salted] {
             LsInterval iv = build_interval(truncation);
             RationalSampler sampler(salted(8));
             const Element zs[] = {iv.b, iv.a, iv.ctx.zero(),
                                   solve_mc(iv, Rational(1, 3), Rational(2, 3)).element,
                                   solve_mc(iv, Rational(-2), Rational(2)).element};
             for (int i = 0; i < 10; ++i) {
                 Element y = sampler.next() * iv.x;
                 const Element& z = zs[i % 5];
                 bool matching = (i % 2) == 0;
                 Element zp = matching ? gauge(iv.ctx, y, z)
                                       : gauge(iv.ctx, y + iv.x, z);
                 CheckResult morphism =
                     check_morphism(morphism_from_gauge(iv.ctx, y, z, zp));
                 if (matching && !morphism.pass)
                     return failure("triple " + std::to_string(i) +
                                    " with z' = gauge(y, z) is not a morphism: " +
                                    morphism.detail);
                 if (!matching && morphism.pass)
                     return failure("triple " + std::to_string(i) +
                                    " with z' != gauge(y, z) passed the morphism check");
             }
             return CheckResult::ok();
         }});

    checks.push_back(
        {"isos.perturbed", "isos",
         "the perturbed interval is isomorphic to the interval for representative z "
         "in both families",
         [truncation] {
             int n = capped(truncation);
             LsInterval iv = build_interval(n);
             const McDescriptor zs[] = {
                 solve_mc(iv, Rational(0), Rational(0)),
                 solve_mc(iv, Rational(1), Rational(-1)),
                 classify_mc(iv, gauge(iv.ctx, Rational(2) * iv.x, iv.b)),
                 classify_mc(iv, iv.b)};
             for (const McDescriptor& z : zs) {
                 GeneratorMap iso = build_perturbed_iso(iv, z);
                 CheckResult morphism = check_morphism(iso);
                 if (!morphism)
                     return failure("map for family " + family_name(z.family) + " param " +
                                    to_string(z.param) +
                                    " is not a morphism: " + morphism.detail);
                 if (!linear_part_invertible(iso))
                     return failure("map for family " + family_name(z.family) + " param " +
                                    to_string(z.param) + " is not invertible");
             }
             return CheckResult::ok();
         }});

    checks.push_back(
        {"isos.base_chain", "isos",
         "the a-perturbed interval is isomorphic to the interval via the substitution chain",
         [truncation] {
             BaseIsoChain chain = build_base_iso(capped(truncation));
             CheckResult phi = check_morphism(chain.phi);
             if (!phi) return failure("detached-to-interval map fails: " + phi.detail);
             CheckResult composite = check_morphism(chain.composite);
             if (!composite) return failure("composite fails: " + composite.detail);
             if (!linear_part_invertible(chain.composite))
                 return failure("composite is not invertible");
             Element image_b = chain.composite.image_of(1);
             Element expected = -chain.composite.target().generator_element("b");
             if (!(image_b.linear_part() == expected))
                 return failure("composite sends b to linear part " +
                                print_canonical(image_b.linear_part()) + ", expected -b");
             return CheckResult::ok();
         }});

    checks.push_back(
        {"quotient.morphism", "quotient",
         "a -> a, b -> gauge(x, 0), x -> -x maps the alternative presentation "
         "isomorphically onto the interval",
         [truncation] {
             QuotientModel model = build_quotient_model(capped(truncation));
             CheckResult morphism = check_morphism(model.phi);
             if (!morphism) return morphism;
             if (!linear_part_invertible(model.phi))
                 return failure("alternative-presentation map is not invertible");
             return CheckResult::ok();
         }});

    checks.push_back(
        {"quotient.dx_forms", "quotient",
         "both closed forms of the alternative dx agree", [truncation] {
             QuotientModel model = build_quotient_model(truncation);
             return require_equal(model.dx_defining_form, model.dx_alternate_form,
                                  "defining form vs alternate form");
         }});

    return checks;
}

}  // namespace

VerificationReport run_verify_suite(const std::string& suite, int truncation,
                                    std::uint64_t seed) {
    static const char* known[] = {"all",      "interval", "gauge",   "subdivision",
                                  "groupoid", "isos",     "quotient"};
    if (std::find_if(std::begin(known), std::end(known),
                     [&](const char* name) { return suite == name; }) == std::end(known))
        throw Error("unknown suite \"" + suite + "\"");
    if (truncation < 1) throw Error("truncation order must be at least 1");

    auto start = std::chrono::steady_clock::now();
    std::vector<Check> checks = build_checks(truncation, seed);

    VerificationReport report;
    report.suite = suite;
    report.truncation = truncation;
    report.seed = seed;

    std::vector<const Check*> selected;
    for (const Check& check : checks)
        if (suite == "all" || suite == check.suite) selected.push_back(&check);
    // Report order is the check id order, decided before anything runs.
    std::sort(selected.begin(), selected.end(),
              [](const Check* lhs, const Check* rhs) { return lhs->id < rhs->id; });

    std::vector<std::future<CheckResult>> futures;
    futures.reserve(selected.size());
    for (const Check* check : selected)
        futures.push_back(std::async(std::launch::async, [check]() -> CheckResult {
            try {
                return check->run();
            } catch (const std::exception& e) {
                CheckResult result;
                result.pass = false;
                result.detail = std::string("exception: ") + e.what();
                return result;
            }
        }));

    report.all_pass = true;
    for (std::size_t i = 0; i < selected.size(); ++i) {
        CheckResult result = futures[i].get();
        CheckLine line;
        line.id = selected[i]->id;
        line.claim = selected[i]->claim;
        line.pass = result.pass;
        if (!result.pass) {
            line.detail = result.detail;
            if (result.witness)
                line.detail += " [witness: " + print_canonical(*result.witness) + "]";
            report.all_pass = false;
        }
        report.checks.push_back(std::move(line));
    }

    report.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                            std::chrono::steady_clock::now() - start)
                            .count();
    return report;
}

std::string report_to_text(const VerificationReport& report) {
    std::string out;
    out += "suite: " + report.suite + "\n";
    out += "truncation: " + std::to_string(report.truncation) + "\n";
    out += "seed: " + std::to_string(report.seed) + "\n";
    std::size_t passed = 0;
    for (const CheckLine& line : report.checks) {
        out += line.pass ? "pass  " : "FAIL  ";
        out += line.id + ": " + line.claim + "\n";
        if (!line.pass) out += "      " + line.detail + "\n";
        if (line.pass) ++passed;
    }
    out += "result: " + std::string(report.all_pass ? "pass" : "FAIL") + " (" +
           std::to_string(passed) + "/" + std::to_string(report.checks.size()) +
           " checks)\n";
    return out;
}

nlohmann::json report_to_json(const VerificationReport& report) {
    nlohmann::json checks = nlohmann::json::array();
    for (const CheckLine& line : report.checks) {
        nlohmann::json entry{{"id", line.id}, {"claim", line.claim}, {"pass", line.pass}};
        if (!line.pass) entry["detail"] = line.detail;
        checks.push_back(std::move(entry));
    }
    return nlohmann::json{{"suite", report.suite},
                          {"truncation", report.truncation},
                          {"seed", report.seed},
                          {"all_pass", report.all_pass},
                          {"checks", std::move(checks)}};
}

}  // namespace lsk
