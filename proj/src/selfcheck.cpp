#include "selfcheck.hpp"

#include <json.hpp>

#include <chrono>
#include <cstdarg>
#include <cmath>
#include <cstdio>

#include "codec.hpp"
#include "moments.hpp"
#include "rational.hpp"
#include "sim.hpp"

namespace arclab {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

std::string fmt(const char* format, ...) {
    char buf[512];
    va_list args;
    va_start(args, format);
    std::vsnprintf(buf, sizeof(buf), format, args);
    va_end(args);
    return buf;
}

Rational inv_pow10(unsigned e) {
    mpz_class d;
    mpz_ui_pow_ui(d.get_mpz_t(), 10, e);
    return Rational(mpz_class(1), d);
}

const std::vector<Rational>& stochastic_p_grid() {
    static const std::vector<Rational> grid = {Rational(1, 3), Rational(1, 2), Rational(2, 5),
                                               Rational(9, 10)};
    return grid;
}

CheckResult check_worked_example() {
    CheckResult c;
    c.id = 1;
    c.name = "worked example reproduced exactly (trace, codewords, midpoint bits)";
    Rational p(2, 3);
    (void)encode("110", p);  // warm up allocator pools before timing
    auto start = Clock::now();
    EncodeResult enc = encode("011101", p);
    std::string fd = first_disagreement_codeword(enc.final_interval);
    std::string sub = subinterval_codeword(enc.final_interval);
    std::string mid_bits = binary_expansion(enc.final_interval.midpoint(), 11);
    double elapsed = seconds_since(start);

    const char* expected[6][2] = {{"0", "1/3"},     {"1/9", "1/3"},    {"5/27", "1/3"},
                                  {"19/81", "1/3"}, {"19/81", "65/243"}, {"179/729", "65/243"}};
    bool ok = enc.trace.size() == 6;
    for (std::size_t i = 0; ok && i < 6; ++i)
        ok = enc.trace[i].low == Rational::parse(expected[i][0]) &&
             enc.trace[i].high == Rational::parse(expected[i][1]);
    ok = ok && enc.final_interval.low == Rational(179, 729) &&
         enc.final_interval.high == Rational(65, 243) && fd == "01" && sub == "010000" &&
         mid_bits == "01000001101" && elapsed < 1e-3;
    c.pass = ok;
    c.detail = fmt("final [%s, %s], codewords %s/%s, midpoint bits %s, %.0f us",
                   enc.final_interval.low.str().c_str(), enc.final_interval.high.str().c_str(),
                   fd.c_str(), sub.c_str(), mid_bits.c_str(), elapsed * 1e6);
    return c;
}

CheckResult check_roundtrip() {
    CheckResult c;
    c.id = 2;
    c.name = "subinterval codeword roundtrip over all messages up to 12 bits";
    const std::vector<Rational> ps = {Rational(1, 3), Rational(1, 2), Rational(2, 3),
                                      Rational(2, 5)};
    unsigned long total = 0;
    c.pass = true;
    for (const Rational& p : ps) {
        for (unsigned n = 0; n <= 12 && c.pass; ++n) {
            for (unsigned long bits = 0; bits < (1ul << n); ++bits) {
                std::string message(n, '0');
                for (unsigned i = 0; i < n; ++i)
                    if ((bits >> (n - 1 - i)) & 1) message[i] = '1';
                EncodeResult enc = encode(message, p);
                std::string codeword = subinterval_codeword(enc.final_interval);
                std::string decoded = decode(dyadic_value(codeword), n, p);
                ++total;
                if (decoded != message) {
                    c.pass = false;
                    c.detail = fmt("mismatch at p=%s message=%s codeword=%s decoded=%s",
                                   p.str().c_str(), message.c_str(), codeword.c_str(),
                                   decoded.c_str());
                    break;
                }
            }
        }
    }
    if (c.pass) c.detail = fmt("%lu encode/decode pairs, all exact", total);
    return c;
}

CheckResult check_doubly_stochastic() {
    CheckResult c;
    c.id = 3;
    c.name = "moment matrices are regular doubly stochastic (m = 1..10)";
    c.pass = true;
    unsigned checked = 0;
    for (unsigned m = 1; m <= 10 && c.pass; ++m)
        for (const Rational& p : stochastic_p_grid()) {
            StochasticityReport rep = stochasticity_check(build_w(m, p));
            ++checked;
            if (!rep.regular()) {
                c.pass = false;
                c.detail = fmt("failure at m=%u p=%s (rows=%d cols=%d positive=%d)", m,
                               p.str().c_str(), rep.rows_ok, rep.cols_ok, rep.strictly_positive);
                break;
            }
        }
    if (c.pass) c.detail = fmt("%u matrices: exact row/column sums 1, all entries > 0", checked);
    return c;
}

CheckResult check_spectral_identities() {
    CheckResult c;
    c.id = 4;
    c.name = "modal conjugation identities (m = 1..8)";
    c.pass = true;
    for (unsigned m = 1; m <= 8 && c.pass; ++m) {
        RationalMatrix pm = modal_matrix(m);
        RationalMatrix pinv = modal_inverse(m);
        if (!(pm * pinv == RationalMatrix::identity(m + 1))) {
            c.pass = false;
            c.detail = fmt("P*Pinv != I at m=%u", m);
            break;
        }
        for (const Rational& p : stochastic_p_grid()) {
            Rational q = Rational(1) - p;
            RationalMatrix t = pinv * build_l(m, p) * pm;
            RationalMatrix d = pinv * build_u(m, p) * pm;
            RationalMatrix w = pinv * build_w(m, p) * pm;
            bool ok = w.is_lower_triangular();
            for (unsigned i = 0; ok && i <= m; ++i)
                for (unsigned j = 0; ok && j <= m; ++j) {
                    Rational t_expect =
                        j <= i ? binomial(i, j) * p.pow(i - j) * q.pow(m + 1 - i) : Rational(0);
                    Rational d_expect = i == j ? p.pow(m + 1 - j) : Rational(0);
                    ok = t.at(i, j) == t_expect && d.at(i, j) == d_expect;
                }
            for (unsigned j = 0; ok && j <= m; ++j)
                ok = w.at(j, j) == p.pow(m + 1 - j) + q.pow(m + 1 - j);
            if (!ok) {
                c.pass = false;
                c.detail = fmt("conjugation mismatch at m=%u p=%s", m, p.str().c_str());
                break;
            }
        }
    }
    if (c.pass) c.detail = "P*Pinv = I; conjugates match closed forms; diagonal = p^k + q^k";
    return c;
}

CheckResult check_oracle_equality() {
    CheckResult c;
    c.id = 5;
    c.name = "moment vectors match exhaustive enumeration (m <= 4, n <= 12)";
    const std::vector<Rational> ps = {Rational(1, 3), Rational(1, 2), Rational(2, 5)};
    c.pass = true;
    unsigned checked = 0;
    for (const Rational& p : ps)
        for (unsigned m = 1; m <= 4 && c.pass; ++m)
            for (unsigned n = 0; n <= 12; ++n) {
                if (moment_vector(m, n, p) != brute_force_moments(m, n, p)) {
                    c.pass = false;
                    c.detail = fmt("oracle mismatch at m=%u n=%u p=%s", m, n, p.str().c_str());
                    break;
                }
                ++checked;
            }
    if (c.pass) c.detail = fmt("%u moment vectors equal the 2^n enumeration exactly", checked);
    return c;
}

CheckResult check_closed_forms() {
    CheckResult c;
    c.id = 6;
    c.name = "closed-form means and length moments (n <= 200)";
    c.pass = true;
    for (const Rational& p : stochastic_p_grid()) {
        Rational q = Rational(1) - p;
        Rational parabola = Rational(2) * p * p - Rational(2) * p + Rational(1);
        for (unsigned n = 0; n <= 200 && c.pass; ++n) {
            auto [ex, ey] = mean_closed_form(n, p);
            std::vector<Rational> mv = moment_vector(1, n, p);
            if (mv[0] != ex || mv[1] != ey) {
                c.pass = false;
                c.detail = fmt("mean mismatch at n=%u p=%s", n, p.str().c_str());
                break;
            }
            if (length_moment(n, p, 1) != parabola.pow(n)) {
                c.pass = false;
                c.detail = fmt("mean length != (2p^2-2p+1)^n at n=%u p=%s", n, p.str().c_str());
                break;
            }
            RationalMatrix vc = variance_covariance(n, p);
            Rational var_len = vc.at(0, 0) + vc.at(1, 1) - Rational(2) * vc.at(0, 1);
            Rational expected =
                (p.pow(3) + q.pow(3)).pow(n) - (p.pow(2) + q.pow(2)).pow(2 * n);
            if (var_len != expected) {
                c.pass = false;
                c.detail = fmt("length variance mismatch at n=%u p=%s", n, p.str().c_str());
                break;
            }
        }
        if (!c.pass) break;
    }
    if (c.pass)
        c.detail = "means, mean length and length variance agree with the matrix route exactly";
    return c;
}

CheckResult check_exact_uniform_limit() {
    CheckResult c;
    c.id = 7;
    c.name = "exact flattening of matrix powers at rate 1-2pq";
    const std::vector<Rational> ps = {Rational(1, 3), Rational(1, 2), Rational(2, 5)};
    const Rational dev_tol = inv_pow10(20);
    const Rational ratio_tol = inv_pow10(6);
    c.pass = true;
    std::string worst;
    for (unsigned m = 1; m <= 6 && c.pass; ++m)
        for (const Rational& p : ps) {
            Rational lambda2 = Rational(1) - Rational(2) * p * (Rational(1) - p);
            AsymptoticCheck at100 = asymptotic_check(m, p, 100);
            AsymptoticCheck at60 = asymptotic_check(m, p, 60);
            bool dev_ok = at100.deviation < dev_tol;
            bool ratio_ok = at60.ratio && (*at60.ratio - lambda2).abs() < ratio_tol;
            if (!dev_ok || !ratio_ok) {
                c.pass = false;
                c.detail = fmt("m=%u p=%s: deviation@100=%.3g ratio_err@60=%.3g", m,
                               p.str().c_str(), at100.deviation.to_double(),
                               at60.ratio ? ((*at60.ratio - lambda2).abs().to_double()) : -1.0);
                break;
            }
        }
    if (c.pass)
        c.detail = "deviation(n=100) < 1e-20 and deviation ratio within 1e-6 of 1-2pq at n=60";
    return c;
}

CheckResult check_statistical_uniform_limit(std::uint64_t seed) {
    CheckResult c;
    c.id = 8;
    c.name = "midpoint sample uniform by KS test; moments near 1/(m+1)";
    const double trials = 100000.0;
    const double ks_threshold = KS_CRITICAL_99 / std::sqrt(trials);
    c.pass = true;
    double worst_ks = 0.0, worst_sigma = 0.0;
    for (const Rational& p : stochastic_p_grid()) {
        SimConfig cfg{p, 64, 100000, seed, Backend::floating};
        DistributionReport rep = run_distribution_experiment(cfg);
        worst_ks = std::max(worst_ks, rep.ks_statistic);
        if (rep.ks_statistic >= ks_threshold) {
            c.pass = false;
            c.detail = fmt("KS=%.5f >= %.5f at p=%s", rep.ks_statistic, ks_threshold,
                           p.str().c_str());
            return c;
        }
        for (unsigned m = 1; m <= MAX_MOMENT_ORDER; ++m) {
            double limit = 1.0 / (m + 1.0);
            for (const MomentEstimate& e : rep.moments[m - 1]) {
                double sigmas = std::abs(e.mean - limit) / e.std_error;
                worst_sigma = std::max(worst_sigma, sigmas);
                if (sigmas > 5.0) {
                    c.pass = false;
                    c.detail = fmt("moment of order %u off by %.2f standard errors at p=%s", m,
                                   sigmas, p.str().c_str());
                    return c;
                }
            }
        }
    }
    c.detail = fmt("max KS %.5f (threshold %.5f); worst moment offset %.2f standard errors",
                   worst_ks, ks_threshold, worst_sigma);
    return c;
}

CheckResult check_mgf_identity(std::uint64_t seed) {
    CheckResult c;
    c.id = 9;
    c.name = "one-step MGF functional identity (|z| <= 4)";
    SimConfig cfg{Rational(1, 3), 8, 100000, seed, Backend::floating};
    const double pairs[3][2] = {{0.5, -0.3}, {1.0, 1.0}, {-0.7, 0.2}};
    c.pass = true;
    std::string zs;
    for (auto [u, v] : pairs) {
        MgfCheck m = mgf_check(cfg, u, v);
        zs += fmt("%sz(%.1f,%.1f)=%.2f", zs.empty() ? "" : ", ", u, v, m.z);
        if (std::abs(m.z) > 4.0) c.pass = false;
    }
    c.detail = zs;
    return c;
}

CheckResult check_compression_rate(std::uint64_t seed) {
    CheckResult c;
    c.id = 10;
    c.name = "mean code bits per symbol within 0.02 of binary entropy";
    SimConfig cfg{Rational(1, 3), 1024, 200, seed, Backend::exact};
    RateReport rep = compression_rate_experiment(cfg);
    double gap = std::abs(rep.mean_bits_per_symbol - rep.entropy);
    c.pass = gap <= 0.02;
    c.detail = fmt("mean %.4f bits/symbol vs entropy %.4f (|gap| %.4f, tolerance 0.02)",
                   rep.mean_bits_per_symbol, rep.entropy, gap);
    return c;
}

CheckResult check_concentration(std::uint64_t seed) {
    CheckResult c;
    c.id = 11;
    c.name = "interval-length tails vanish and obey the variance bound";
    SimConfig cfg{Rational(1, 3), 30, 100000, seed, Backend::exact};
    ConcentrationReport rep = concentration_experiment(cfg);
    bool tail30_zero = rep.rows[30].empirical_tail_exact[0].is_zero();
    bool dominated = true;
    for (bool d : rep.dominated_from_n1) dominated = dominated && d;
    c.pass = tail30_zero && dominated;
    std::string violations;
    for (const ConcentrationRow& row : rep.rows) {
        if (row.n == 0) continue;
        for (std::size_t e = 0; e < rep.epsilons.size(); ++e)
            if (!row.dominated[e])
                violations += fmt("%s n=%u eps=%s: true tail %s=%.6f > bound %.6f",
                                  violations.empty() ? "" : ";", row.n,
                                  rep.epsilons[e].str().c_str(), row.true_tail[e].str().c_str(),
                                  row.true_tail[e].to_double(),
                                  row.chebyshev_bound[e].to_double());
    }
    c.detail = fmt("tail(n=30, eps=1/10)=%.0f; variance bound dominates for 1<=n<=30: %s%s%s",
                   rep.rows[30].empirical_tail[0], dominated ? "yes" : "NO",
                   violations.empty() ? "" : " —", violations.c_str());
    return c;
}

}  // namespace

std::vector<CheckResult> run_verification_suite(bool include_statistical, std::uint64_t seed) {
    std::vector<CheckResult> results;
    auto timed = [&](CheckResult (*fn)()) {
        auto start = Clock::now();
        CheckResult r = fn();
        r.seconds = seconds_since(start);
        results.push_back(std::move(r));
    };
    auto timed_seeded = [&](CheckResult (*fn)(std::uint64_t)) {
        auto start = Clock::now();
        CheckResult r = fn(seed);
        r.seconds = seconds_since(start);
        results.push_back(std::move(r));
    };

    timed(check_worked_example);
    timed(check_roundtrip);
    timed(check_doubly_stochastic);
    timed(check_spectral_identities);
    timed(check_oracle_equality);
    timed(check_closed_forms);
    timed(check_exact_uniform_limit);
    if (include_statistical) {
        timed_seeded(check_statistical_uniform_limit);
        timed_seeded(check_mgf_identity);
        timed_seeded(check_compression_rate);
        timed_seeded(check_concentration);
    }
    return results;
}

bool all_passed(const std::vector<CheckResult>& results) {
    for (const CheckResult& r : results)
        if (!r.pass) return false;
    return true;
}

std::string verification_report_json(const std::vector<CheckResult>& results) {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const CheckResult& r : results)
        arr.push_back(nlohmann::ordered_json{{"id", r.id},
                                             {"name", r.name},
                                             {"pass", r.pass},
                                             {"detail", r.detail},
                                             {"seconds", r.seconds}});
    nlohmann::ordered_json j{{"checks", arr}, {"all_pass", all_passed(results)}};
    return j.dump(2) + "\n";
}

}  // namespace arclab
