#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "gdgap/special_cases.hpp"

namespace gdgap {

/// Deterministic per-trial random stream: trial i of seed s always sees
/// the same draws, independent of threading or trial order.
class RandomStream {
public:
    RandomStream(std::uint64_t seed, std::uint64_t index);
    std::uint64_t next();
    long next_in(long lo, long hi);  // uniform inclusive, rejection sampled
    /// Numerator in [-max_abs_num, max_abs_num], denominator in [1, max_den].
    Rational rational(long max_abs_num, long max_den);
    Rational positive_rational(long max_num, long max_den);

private:
    std::uint64_t state_;
};

/// Random valid BaseConfig: vertex coordinates as bounded rationals,
/// orientation fixed by swapping, c from positive barycentric weights,
/// r a random rational certified subcritical by exact comparison.
/// Invalid draws (collinear vertices) are rejected and redrawn.
BaseConfig random_config(RandomStream& rs, long coord_bound, long den_bound);

/// Acute rational triangle with c = its circumcenter (interior by
/// acuteness), subcritical r.
BaseConfig random_acute_circumcenter_config(RandomStream& rs);

/// Heronian triangle (integer sides and area, glued from two rational
/// right triangles, then rationally scaled and translated) with
/// c = its incenter, subcritical r.
BaseConfig random_heronian_incenter_config(RandomStream& rs);

/// Random rational r with r^2 < rc2, certified exactly.
Rational random_subcritical_radius(RandomStream& rs, const Scalar& rc2);

struct FuzzParams {
    std::uint64_t seed = 0;
    int trials = 100;
    long coord_bound = 100;
    long den_bound = 10;
    unsigned threads = 0;  // 0 = hardware concurrency
};

struct FuzzFailure {
    int trial;
    std::string config;  // replayable config text
    std::string message;
};

struct FuzzSummary {
    int trials = 0;
    int ok = 0;
    std::vector<FuzzFailure> failures;
    std::string text() const;
};

/// The exact per-config invariant suite: area additivity, B > 0,
/// positive denominator, tangency, apex height agreement, circumcenter
/// equidistance, certificate identity with perfect-square discriminant,
/// closed-form v agreement, and the inequality verdict itself.
/// Returns the first failure message, or empty on success.
std::optional<std::string> check_invariants(const BaseConfig& cfg);

FuzzSummary run_fuzz(const FuzzParams& params);

}  // namespace gdgap
