#ifndef LSK_VERIFY_HPP
#define LSK_VERIFY_HPP

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "lsk/errors.hpp"
#include "lsk/rational.hpp"

namespace lsk {

// One verified claim. `claim` states the mathematical fact being checked;
// `detail` explains a failure and is empty on success.
struct CheckLine {
    std::string id;
    std::string claim;
    bool pass = false;
    std::string detail;
};

// Outcome of a suite run. Rendered forms (text and JSON) are pure functions
// of the fields below except elapsed_ms, which never enters them: identical
// suite/truncation/seed inputs produce byte-identical reports.
struct VerificationReport {
    std::string suite;
    int truncation = 0;
    std::uint64_t seed = 0;
    std::vector<CheckLine> checks;
    bool all_pass = false;
    long long elapsed_ms = 0;
};

// Runs one of: all, interval, gauge, subdivision, groupoid, isos, quotient.
// Checks exercising the five-generator subdivision or the isomorphism chains
// run at min(truncation, 6); everything else runs at the given truncation.
// Checks run concurrently; the report order is fixed in advance. Throws
// Error for an unknown suite name.
VerificationReport run_verify_suite(const std::string& suite, int truncation,
                                    std::uint64_t seed);

std::string report_to_text(const VerificationReport& report);
nlohmann::json report_to_json(const VerificationReport& report);

// Deterministic rational stream for property sampling: values come from a
// fixed grid {-2, -1/2, 0, 1/3, 1, 5/2} or have numerator and denominator
// bounded by 10. Depends only on the seed, never on platform distributions.
class RationalSampler {
public:
    explicit RationalSampler(std::uint64_t seed) : rng_(seed) {}

    Rational next();
    Rational next_nonzero();

private:
    std::mt19937_64 rng_;
};

}  // namespace lsk

#endif  // LSK_VERIFY_HPP
