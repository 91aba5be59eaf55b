#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace arclab {

// Seed used by the bundled verification suite and as the CLI default. The
// statistical checks are deterministic given this value.
inline constexpr std::uint64_t DEFAULT_SEED = 20240917;

// Classical asymptotic one-sample KS critical value at alpha = 0.01 (the
// threshold is KS_CRITICAL_99 / sqrt(trials)).
inline constexpr double KS_CRITICAL_99 = 1.628;

struct CheckResult {
    int id = 0;
    std::string name;
    bool pass = false;
    std::string detail;
    double seconds = 0.0;
};

// The full verification suite: exact reproduction of the worked example,
// exhaustive codec roundtrips, doubly stochastic / spectral identities,
// enumeration-oracle equalities, closed forms, exact and statistical
// uniform-limit convergence, the MGF functional equation, compression rate
// against the entropy floor, and length concentration. `include_statistical`
// toggles the seeded Monte Carlo checks (8-11); the exact checks always run.
std::vector<CheckResult> run_verification_suite(bool include_statistical,
                                                std::uint64_t seed = DEFAULT_SEED);

bool all_passed(const std::vector<CheckResult>& results);

std::string verification_report_json(const std::vector<CheckResult>& results);

}  // namespace arclab
