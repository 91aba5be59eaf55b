#include "serialize.hpp"

#include <json.hpp>

#include <cstdio>
#include <stdexcept>

namespace arclab {

using ordered_json = nlohmann::ordered_json;

namespace {

std::string dump(const ordered_json& j) { return j.dump(2) + "\n"; }

ordered_json config_json(const SimConfig& cfg) {
    return ordered_json{{"p", cfg.p.str()},
                        {"n", cfg.n},
                        {"trials", cfg.trials},
                        {"seed", cfg.seed},
                        {"backend", backend_name(cfg.backend)}};
}

ordered_json rational_array(const std::vector<Rational>& values) {
    ordered_json a = ordered_json::array();
    for (const Rational& v : values) a.push_back(v.str());
    return a;
}

ordered_json matrix_json(const RationalMatrix& m) {
    ordered_json rows = ordered_json::array();
    for (std::size_t i = 0; i < m.order(); ++i) {
        ordered_json row = ordered_json::array();
        for (std::size_t j = 0; j < m.order(); ++j) row.push_back(m.at(i, j).str());
        rows.push_back(std::move(row));
    }
    return rows;
}

}  // namespace

std::string backend_name(Backend b) {
    return b == Backend::exact ? "exact" : "float";
}

Backend parse_backend(const std::string& name) {
    if (name == "exact") return Backend::exact;
    if (name == "float") return Backend::floating;
    throw std::invalid_argument("backend must be \"exact\" or \"float\"");
}

std::string eigen_report_json(unsigned m, const Rational& p) {
    RationalMatrix w = build_w(m, p);
    StochasticityReport stoch = stochasticity_check(w);
    SpectrumReport spectrum = conjugate(m, p);

    bool triangular = spectrum.triangular_conjugate.is_lower_triangular();
    bool diagonal_matches = true;
    for (unsigned j = 0; j <= m; ++j)
        if (spectrum.triangular_conjugate.at(j, j) != spectrum.eigenvalues[m - j])
            diagonal_matches = false;

    ordered_json j{
        {"m", m},
        {"p", p.str()},
        {"eigenvalues", rational_array(spectrum.eigenvalues)},
        {"doubly_stochastic", stoch.doubly_stochastic()},
        {"regular", stoch.regular()},
        {"triangularization",
         ordered_json{{"lower_triangular", triangular},
                      {"diagonal_matches_eigenvalues", diagonal_matches}}},
        {"modal", matrix_json(spectrum.modal)},
        {"modal_inverse", matrix_json(spectrum.modal_inverse)},
        {"triangular_conjugate", matrix_json(spectrum.triangular_conjugate)},
    };
    return dump(j);
}

namespace {

struct MomentTable {
    std::vector<std::vector<Rational>> rows;  // step n -> components
    std::vector<Rational> max_deviation;      // step n -> max |comp - 1/(m+1)|
};

MomentTable build_moment_table(unsigned m, unsigned long n_max, const Rational& p) {
    RationalMatrix w = build_w(m, p);
    Rational limit(1, static_cast<long>(m) + 1);
    std::vector<Rational> v(m + 1);
    v[m] = Rational(1);
    MomentTable table;
    for (unsigned long n = 0; n <= n_max; ++n) {
        if (n > 0) v = w * v;
        Rational dev(0);
        for (const Rational& c : v) {
            Rational d = (c - limit).abs();
            if (d > dev) dev = std::move(d);
        }
        table.rows.push_back(v);
        table.max_deviation.push_back(std::move(dev));
    }
    return table;
}

}  // namespace

std::string moment_table_json(unsigned m, unsigned long n_max, const Rational& p) {
    MomentTable table = build_moment_table(m, n_max, p);
    ordered_json rows = ordered_json::array();
    for (unsigned long n = 0; n <= n_max; ++n)
        rows.push_back(ordered_json{{"n", n},
                                    {"components", rational_array(table.rows[n])},
                                    {"max_abs_deviation", table.max_deviation[n].str()}});
    ordered_json j{{"m", m},
                   {"p", p.str()},
                   {"limit", Rational(1, static_cast<long>(m) + 1).str()},
                   {"rows", rows}};
    return dump(j);
}

std::string moment_table_csv(unsigned m, unsigned long n_max, const Rational& p) {
    MomentTable table = build_moment_table(m, n_max, p);
    std::string csv = "n";
    for (unsigned r = 0; r <= m; ++r) csv += ",comp_" + std::to_string(r);
    csv += ",max_abs_deviation\n";
    char buf[64];
    for (unsigned long n = 0; n <= n_max; ++n) {
        csv += std::to_string(n);
        for (const Rational& c : table.rows[n]) {
            csv += ',';
            csv += c.str();
        }
        std::snprintf(buf, sizeof(buf), ",%.17g\n", table.max_deviation[n].to_double());
        csv += buf;
    }
    return csv;
}

std::string distribution_report_json(const DistributionReport& report) {
    ordered_json moments = ordered_json::array();
    for (unsigned m = 1; m <= report.moments.size(); ++m) {
        ordered_json means = ordered_json::array();
        ordered_json ses = ordered_json::array();
        for (const MomentEstimate& e : report.moments[m - 1]) {
            means.push_back(e.mean);
            ses.push_back(e.std_error);
        }
        moments.push_back(ordered_json{
            {"order", m},
            {"limit", Rational(1, static_cast<long>(m) + 1).to_double()},
            {"means", means},
            {"std_errors", ses}});
    }
    ordered_json j{{"config", config_json(report.cfg)},
                   {"empirical_moments", moments},
                   {"ks_statistic", report.ks_statistic},
                   {"ks_low", report.ks_low},
                   {"ks_high", report.ks_high}};
    return dump(j);
}

std::string mgf_report_json(const SimConfig& cfg, const std::vector<MgfCheck>& checks) {
    ordered_json arr = ordered_json::array();
    for (const MgfCheck& c : checks)
        arr.push_back(ordered_json{{"u", c.u},
                                   {"v", c.v},
                                   {"lhs_mean", c.lhs_mean},
                                   {"rhs_mean", c.rhs_mean},
                                   {"pooled_se", c.pooled_se},
                                   {"z", c.z}});
    ordered_json j{{"config", config_json(cfg)}, {"mgf_checks", arr}};
    return dump(j);
}

std::string concentration_report_json(const ConcentrationReport& report) {
    ordered_json eps = ordered_json::array();
    for (const Rational& e : report.epsilons) eps.push_back(e.str());
    ordered_json rows = ordered_json::array();
    for (const ConcentrationRow& row : report.rows) {
        ordered_json tails = ordered_json::array();
        ordered_json true_tails = ordered_json::array();
        ordered_json bounds = ordered_json::array();
        ordered_json bounds_real = ordered_json::array();
        ordered_json dominated = ordered_json::array();
        for (std::size_t e = 0; e < report.epsilons.size(); ++e) {
            tails.push_back(row.empirical_tail[e]);
            true_tails.push_back(row.true_tail[e].str());
            bounds.push_back(row.chebyshev_bound[e].str());
            bounds_real.push_back(row.chebyshev_bound[e].to_double());
            dominated.push_back(static_cast<bool>(row.dominated[e]));
        }
        rows.push_back(ordered_json{{"n", row.n},
                                    {"empirical_tails", tails},
                                    {"true_tails", true_tails},
                                    {"chebyshev_bounds", bounds},
                                    {"chebyshev_bounds_real", bounds_real},
                                    {"dominated", dominated}});
    }
    ordered_json dom = ordered_json::array();
    ordered_json mono = ordered_json::array();
    for (std::size_t e = 0; e < report.epsilons.size(); ++e) {
        dom.push_back(static_cast<bool>(report.dominated_from_n1[e]));
        mono.push_back(static_cast<bool>(report.tails_nonincreasing[e]));
    }
    ordered_json j{{"config", config_json(report.cfg)},
                   {"epsilons", eps},
                   {"rows", rows},
                   {"dominated_for_n_geq_1", dom},
                   {"tails_nonincreasing", mono}};
    return dump(j);
}

std::string rate_report_json(const RateReport& report) {
    double gap = report.mean_bits_per_symbol - report.entropy;
    ordered_json j{{"config", config_json(report.cfg)},
                   {"mean_bits_per_symbol", report.mean_bits_per_symbol},
                   {"std_error", report.std_error},
                   {"binary_entropy", report.entropy},
                   {"gap", gap}};
    return dump(j);
}

std::string samples_csv(const std::vector<double>& low, const std::vector<double>& high,
                        const std::vector<double>& midpoint,
                        const std::vector<unsigned>* code_bits) {
    std::string csv = "trial,x,y,midpoint,code_bits\n";
    char buf[128];
    for (std::size_t i = 0; i < low.size(); ++i) {
        std::snprintf(buf, sizeof(buf), "%zu,%.17g,%.17g,%.17g,", i, low[i], high[i],
                      midpoint[i]);
        csv += buf;
        if (code_bits) csv += std::to_string((*code_bits)[i]);
        csv += '\n';
    }
    return csv;
}

}  // namespace arclab
