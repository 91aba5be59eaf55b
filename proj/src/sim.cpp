#include "sim.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "moments.hpp"

namespace arclab {

namespace {

constexpr std::uint64_t STREAM_MAIN = 0;
constexpr std::uint64_t STREAM_MGF_LHS = 1;
constexpr std::uint64_t STREAM_MGF_RHS = 2;

struct BernoulliDraw {
    std::uint64_t num;
    std::uint64_t den;

    explicit BernoulliDraw(const Rational& p) {
        if (!p.den().fits_ulong_p() || !p.num().fits_ulong_p())
            throw std::domain_error("simulation: numerator/denominator of p must fit in 64 bits");
        num = p.num().get_ui();
        den = p.den().get_ui();
    }

    int operator()(CounterRng& rng) const { return rng.next_below(den) < num ? 1 : 0; }
};

// Walks one encoded path in double arithmetic (float backend).
void fold_float(const std::string& message, double q, double& x, double& y) {
    x = 0.0;
    y = 1.0;
    for (char c : message) {
        double split = x + q * (y - x);
        if (c == '0')
            y = split;
        else
            x = split;
    }
}

Interval fold_exact(const std::string& message, const Rational& p) {
    Interval iv;
    for (char c : message) iv = refine(iv, c - '0', p);
    return iv;
}

struct MeanVar {
    double sum = 0.0;
    double sum_sq = 0.0;
    std::uint64_t count = 0;

    void add(double x) {
        sum += x;
        sum_sq += x * x;
        ++count;
    }
    double mean() const { return sum / static_cast<double>(count); }
    double variance() const {
        if (count < 2) return 0.0;
        double m = mean();
        double v = (sum_sq - static_cast<double>(count) * m * m) / static_cast<double>(count - 1);
        return v > 0.0 ? v : 0.0;
    }
    double std_error() const { return std::sqrt(variance() / static_cast<double>(count)); }
};

}  // namespace

void validate(const SimConfig& cfg) {
    require_probability(cfg.p);
    if (cfg.trials < 1) throw std::domain_error("simulation: trials must be at least 1");
    if (cfg.backend == Backend::floating && cfg.n > FLOAT_BACKEND_MAX_N)
        throw std::domain_error("simulation: the float backend is limited to n <= " +
                                std::to_string(FLOAT_BACKEND_MAX_N) +
                                "; use the exact backend for longer messages");
    BernoulliDraw check(cfg.p);  // enforces the 64-bit p guard
    (void)check;
}

std::string gen_message(CounterRng& rng, unsigned n, const Rational& p) {
    require_probability(p);
    BernoulliDraw draw(p);
    std::string bits(n, '0');
    for (unsigned i = 0; i < n; ++i)
        if (draw(rng)) bits[i] = '1';
    return bits;
}

std::vector<Rational> brute_force_moments(unsigned m, unsigned n, const Rational& p) {
    if (m < 1) throw std::domain_error("moment order m must be at least 1");
    require_probability(p);
    if (n > BRUTE_FORCE_MAX_N)
        throw std::domain_error("brute_force_moments: n exceeds the exhaustive-enumeration "
                                "guard of " + std::to_string(BRUTE_FORCE_MAX_N));
    Rational q = Rational(1) - p;
    std::vector<Rational> acc(m + 1);
    std::vector<Rational> xp(m + 1), yp(m + 1);
    auto walk = [&](auto&& self, const Interval& iv, const Rational& weight,
                    unsigned depth) -> void {
        if (depth == n) {
            xp[0] = Rational(1);
            yp[0] = Rational(1);
            for (unsigned i = 1; i <= m; ++i) {
                xp[i] = xp[i - 1] * iv.low;
                yp[i] = yp[i - 1] * iv.high;
            }
            for (unsigned r = 0; r <= m; ++r) acc[r] += weight * xp[m - r] * yp[r];
            return;
        }
        self(self, refine(iv, 0, p), weight * q, depth + 1);
        self(self, refine(iv, 1, p), weight * p, depth + 1);
    };
    walk(walk, Interval(), Rational(1), 0);
    return acc;
}

double ks_statistic(const std::vector<double>& samples) {
    if (samples.empty()) throw std::domain_error("ks_statistic: sample must be nonempty");
    std::vector<double> sorted = samples;
    std::sort(sorted.begin(), sorted.end());
    if (sorted.front() < 0.0 || sorted.back() > 1.0)
        throw std::domain_error("ks_statistic: samples must lie in [0,1]");
    double n = static_cast<double>(sorted.size());
    double d = 0.0;
    for (std::size_t i = 0; i < sorted.size(); ++i) {
        double hi = (static_cast<double>(i) + 1.0) / n - sorted[i];
        double lo = sorted[i] - static_cast<double>(i) / n;
        d = std::max(d, std::max(hi, lo));
    }
    return d;
}

DistributionReport run_distribution_experiment(const SimConfig& cfg) {
    validate(cfg);
    DistributionReport report;
    report.cfg = cfg;
    report.low.reserve(cfg.trials);
    report.high.reserve(cfg.trials);
    report.midpoint.reserve(cfg.trials);

    std::vector<std::vector<MeanVar>> acc(MAX_MOMENT_ORDER);
    for (unsigned m = 1; m <= MAX_MOMENT_ORDER; ++m) acc[m - 1].resize(m + 1);

    double qd = 1.0 - cfg.p.to_double();
    double xp[MAX_MOMENT_ORDER + 1], yp[MAX_MOMENT_ORDER + 1];
    for (std::uint64_t trial = 0; trial < cfg.trials; ++trial) {
        CounterRng rng(cfg.seed, STREAM_MAIN, trial);
        std::string message = gen_message(rng, cfg.n, cfg.p);
        double x, y;
        if (cfg.backend == Backend::floating) {
            fold_float(message, qd, x, y);
        } else {
            Interval iv = fold_exact(message, cfg.p);
            x = iv.low.to_double();
            y = iv.high.to_double();
        }
        report.low.push_back(x);
        report.high.push_back(y);
        report.midpoint.push_back(0.5 * (x + y));

        xp[0] = yp[0] = 1.0;
        for (unsigned i = 1; i <= MAX_MOMENT_ORDER; ++i) {
            xp[i] = xp[i - 1] * x;
            yp[i] = yp[i - 1] * y;
        }
        for (unsigned m = 1; m <= MAX_MOMENT_ORDER; ++m)
            for (unsigned r = 0; r <= m; ++r) acc[m - 1][r].add(xp[m - r] * yp[r]);
    }

    report.moments.resize(MAX_MOMENT_ORDER);
    for (unsigned m = 1; m <= MAX_MOMENT_ORDER; ++m) {
        report.moments[m - 1].resize(m + 1);
        for (unsigned r = 0; r <= m; ++r)
            report.moments[m - 1][r] = {acc[m - 1][r].mean(), acc[m - 1][r].std_error()};
    }
    report.ks_statistic = ks_statistic(report.midpoint);
    report.ks_low = ks_statistic(report.low);
    report.ks_high = ks_statistic(report.high);
    return report;
}

MgfCheck mgf_check(const SimConfig& cfg, double u, double v) {
    validate(cfg);
    if (std::abs(u) > 2.0 || std::abs(v) > 2.0)
        throw std::domain_error("mgf_check: |u| and |v| must be at most 2");
    if (cfg.backend == Backend::floating && cfg.n + 1 > FLOAT_BACKEND_MAX_N)
        throw std::domain_error("mgf_check: n + 1 exceeds the float-backend guard");

    double pd = cfg.p.to_double();
    double qd = 1.0 - pd;

    // Left side: phi_{n+1}(u, v) from one sample set; right side: the mixture
    // q*phi_n(u+pv, qv) + p*phi_n(pu, qu+v) from an independent one.
    auto endpoints = [&](CounterRng& rng, unsigned steps, double& x, double& y) {
        std::string message = gen_message(rng, steps, cfg.p);
        if (cfg.backend == Backend::floating) {
            fold_float(message, qd, x, y);
        } else {
            Interval iv = fold_exact(message, cfg.p);
            x = iv.low.to_double();
            y = iv.high.to_double();
        }
    };

    MeanVar lhs, rhs;
    for (std::uint64_t trial = 0; trial < cfg.trials; ++trial) {
        CounterRng rng(cfg.seed, STREAM_MGF_LHS, trial);
        double x, y;
        endpoints(rng, cfg.n + 1, x, y);
        lhs.add(std::exp(u * x + v * y));
    }
    for (std::uint64_t trial = 0; trial < cfg.trials; ++trial) {
        CounterRng rng(cfg.seed, STREAM_MGF_RHS, trial);
        double x, y;
        endpoints(rng, cfg.n, x, y);
        rhs.add(qd * std::exp((u + pd * v) * x + qd * v * y) +
                pd * std::exp(pd * u * x + (qd * u + v) * y));
    }

    MgfCheck out;
    out.u = u;
    out.v = v;
    out.lhs_mean = lhs.mean();
    out.rhs_mean = rhs.mean();
    double t = static_cast<double>(cfg.trials);
    out.pooled_se = std::sqrt(lhs.variance() / t + rhs.variance() / t);
    out.z = out.pooled_se > 0.0 ? (out.lhs_mean - out.rhs_mean) / out.pooled_se : 0.0;
    return out;
}

ConcentrationReport concentration_experiment(const SimConfig& cfg,
                                             std::vector<Rational> epsilons) {
    validate(cfg);
    for (const Rational& eps : epsilons)
        if (eps.sign() <= 0) throw std::domain_error("concentration: epsilons must be positive");

    const unsigned n_max = cfg.n;
    const std::size_t n_eps = epsilons.size();
    Rational q = Rational(1) - cfg.p;

    // L_n is p^a q^(n-a) where a counts ones, so every tail event reduces to
    // the ones-count: precompute exact exceedance tables once.
    std::vector<std::vector<std::vector<bool>>> exceeds(n_eps);
    std::vector<Rational> p_pow(n_max + 1), q_pow(n_max + 1);
    p_pow[0] = q_pow[0] = Rational(1);
    for (unsigned i = 1; i <= n_max; ++i) {
        p_pow[i] = p_pow[i - 1] * cfg.p;
        q_pow[i] = q_pow[i - 1] * q;
    }
    for (std::size_t e = 0; e < n_eps; ++e) {
        exceeds[e].resize(n_max + 1);
        for (unsigned n = 0; n <= n_max; ++n) {
            exceeds[e][n].resize(n + 1);
            for (unsigned a = 0; a <= n; ++a)
                exceeds[e][n][a] = p_pow[a] * q_pow[n - a] > epsilons[e];
        }
    }

    std::vector<std::vector<std::uint64_t>> counts(n_eps,
                                                   std::vector<std::uint64_t>(n_max + 1, 0));
    for (std::uint64_t trial = 0; trial < cfg.trials; ++trial) {
        CounterRng rng(cfg.seed, STREAM_MAIN, trial);
        std::string message = gen_message(rng, n_max, cfg.p);
        unsigned ones = 0;
        for (std::size_t e = 0; e < n_eps; ++e)
            if (exceeds[e][0][0]) ++counts[e][0];
        for (unsigned n = 1; n <= n_max; ++n) {
            if (message[n - 1] == '1') ++ones;
            for (std::size_t e = 0; e < n_eps; ++e)
                if (exceeds[e][n][ones]) ++counts[e][n];
        }
    }

    ConcentrationReport report;
    report.cfg = cfg;
    report.epsilons = std::move(epsilons);
    report.dominated_from_n1.assign(n_eps, true);
    report.tails_nonincreasing.assign(n_eps, true);
    mpz_class trials_z(static_cast<unsigned long>(cfg.trials));

    for (unsigned n = 0; n <= n_max; ++n) {
        ConcentrationRow row;
        row.n = n;
        Rational el = length_moment(n, cfg.p, 1);
        Rational var_len = length_moment(n, cfg.p, 2) - el * el;
        for (std::size_t e = 0; e < n_eps; ++e) {
            Rational tail(mpz_class(static_cast<unsigned long>(counts[e][n])), trials_z);
            Rational bound = var_len / (report.epsilons[e] * report.epsilons[e]);
            Rational truth(0);
            for (unsigned a = 0; a <= n; ++a)
                if (exceeds[e][n][a]) truth += binomial(n, a) * p_pow[a] * q_pow[n - a];
            bool ok = tail <= bound;
            row.empirical_tail.push_back(tail.to_double());
            row.empirical_tail_exact.push_back(std::move(tail));
            row.true_tail.push_back(std::move(truth));
            row.chebyshev_bound.push_back(std::move(bound));
            row.dominated.push_back(ok);
            if (n >= 1 && !ok) report.dominated_from_n1[e] = false;
            if (n >= 1 && counts[e][n] > counts[e][n - 1]) report.tails_nonincreasing[e] = false;
        }
        report.rows.push_back(std::move(row));
    }
    return report;
}

RateReport compression_rate_experiment(const SimConfig& cfg) {
    validate(cfg);
    if (cfg.backend != Backend::exact)
        throw std::domain_error("compression rate experiment: codeword lengths need the exact backend");
    if (cfg.n < 1) throw std::domain_error("compression rate experiment: n must be at least 1");

    RateReport report;
    report.cfg = cfg;
    report.entropy = binary_entropy(cfg.p.to_double());
    report.code_bits.reserve(cfg.trials);

    MeanVar per_symbol;
    for (std::uint64_t trial = 0; trial < cfg.trials; ++trial) {
        CounterRng rng(cfg.seed, STREAM_MAIN, trial);
        std::string message = gen_message(rng, cfg.n, cfg.p);
        Interval iv = fold_exact(message, cfg.p);
        unsigned bits = static_cast<unsigned>(subinterval_codeword(iv).size());
        report.code_bits.push_back(bits);
        per_symbol.add(static_cast<double>(bits) / static_cast<double>(cfg.n));
        double x = iv.low.to_double();
        double y = iv.high.to_double();
        report.low.push_back(x);
        report.high.push_back(y);
        report.midpoint.push_back(0.5 * (x + y));
    }
    report.mean_bits_per_symbol = per_symbol.mean();
    report.std_error = per_symbol.std_error();
    return report;
}

double binary_entropy(double p) {
    if (p < 0.0 || p > 1.0) throw std::domain_error("binary_entropy: p must lie in [0,1]");
    if (p == 0.0 || p == 1.0) return 0.0;  // limit value
    return -p * std::log2(p) - (1.0 - p) * std::log2(1.0 - p);
}

}  // namespace arclab
