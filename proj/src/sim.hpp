#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "codec.hpp"
#include "rational.hpp"
#include "rng.hpp"

namespace arclab {

enum class Backend { exact, floating };

// Common knobs for the seeded experiments. Identical configs (seed included)
// produce bit-identical reports.
struct SimConfig {
    Rational p;
    unsigned n = 0;          // message length (concentration: largest n swept)
    std::uint64_t trials = 1;
    std::uint64_t seed = 0;
    Backend backend = Backend::exact;
};

// The float backend is capped: interval endpoints survive in doubles only
// while min(p,q)^n stays far from underflow.
inline constexpr unsigned FLOAT_BACKEND_MAX_N = 512;

// Enumeration guard for the exhaustive oracle.
inline constexpr unsigned BRUTE_FORCE_MAX_N = 14;

// Highest empirical moment order tracked by the distribution experiment.
inline constexpr unsigned MAX_MOMENT_ORDER = 6;

void validate(const SimConfig& cfg);

// n independent bits, 1 with probability p, drawn exactly (rejection against
// the denominator), deterministic given the rng state.
std::string gen_message(CounterRng& rng, unsigned n, const Rational& p);

// Exhaustive oracle: enumerates all 2^n messages, weights each by
// p^ones q^zeros, runs the coder step exactly and sums X^(m-r) Y^r.
// Refuses n > BRUTE_FORCE_MAX_N.
std::vector<Rational> brute_force_moments(unsigned m, unsigned n, const Rational& p);

// Sup distance between the empirical CDF of samples (all in [0,1]) and the
// Uniform[0,1] CDF. Throws on an empty sample.
double ks_statistic(const std::vector<double>& samples);

struct MomentEstimate {
    double mean = 0.0;
    double std_error = 0.0;
};

struct DistributionReport {
    SimConfig cfg;
    // moments[m-1][r] estimates E[X^(m-r) Y^r] for m = 1..MAX_MOMENT_ORDER.
    std::vector<std::vector<MomentEstimate>> moments;
    double ks_statistic = 0.0;  // midpoint sample vs Uniform[0,1]
    double ks_low = 0.0;
    double ks_high = 0.0;
    // per-trial samples, in trial order
    std::vector<double> low, high, midpoint;
};

// Encodes `trials` random messages and summarizes the final-interval
// endpoints and midpoints against the uniform limit.
DistributionReport run_distribution_experiment(const SimConfig& cfg);

struct MgfCheck {
    double u = 0.0, v = 0.0;
    double lhs_mean = 0.0, rhs_mean = 0.0;
    double pooled_se = 0.0;
    double z = 0.0;
};

// Monte Carlo test of the one-step identity for the bivariate MGF of
// (X_n, Y_n): phi_{n+1}(u,v) against q*phi_n(u+pv, qv) + p*phi_n(pu, qu+v),
// estimated from independent sample sets. Requires |u|, |v| <= 2.
MgfCheck mgf_check(const SimConfig& cfg, double u, double v);

struct ConcentrationRow {
    unsigned n = 0;
    // parallel to the epsilon list:
    std::vector<double> empirical_tail;       // fraction of trials with L_n > eps
    std::vector<Rational> empirical_tail_exact;  // same as an exact count/trials
    std::vector<Rational> true_tail;          // exact binomial tail P(L_n > eps)
    std::vector<Rational> chebyshev_bound;    // V[L_n] / eps^2
    std::vector<bool> dominated;              // empirical tail <= bound, exactly
};

struct ConcentrationReport {
    SimConfig cfg;
    std::vector<Rational> epsilons;
    std::vector<ConcentrationRow> rows;  // n = 0..cfg.n
    // domination verdict over 1 <= n <= cfg.n, per epsilon (n = 0 is the
    // degenerate start L_0 = 1 where the variance bound carries no content)
    std::vector<bool> dominated_from_n1;
    std::vector<bool> tails_nonincreasing;
};

// Sweeps n = 0..cfg.n measuring Prob(L_n > eps) along simulated paths; the
// interval length depends only on the running ones-count, so tails are exact.
ConcentrationReport concentration_experiment(const SimConfig& cfg,
                                             std::vector<Rational> epsilons = {
                                                 Rational(1, 10), Rational(1, 100)});

struct RateReport {
    SimConfig cfg;
    double mean_bits_per_symbol = 0.0;
    double std_error = 0.0;
    double entropy = 0.0;  // binary entropy of p, the Shannon floor
    std::vector<unsigned> code_bits;  // per-trial subinterval codeword lengths
    std::vector<double> low, high, midpoint;
};

// Average subinterval-codeword length per input bit; exact backend only.
RateReport compression_rate_experiment(const SimConfig& cfg);

// -p log2 p - q log2 q, with the limit value 0 at p in {0, 1}.
double binary_entropy(double p);

}  // namespace arclab
