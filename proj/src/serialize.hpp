#pragma once

#include <string>

#include "moments.hpp"
#include "sim.hpp"

namespace arclab {

// Canonical JSON/CSV renderings of reports. All rationals cross as exact
// "a/b" strings; reals are emitted with enough digits to round-trip.

std::string backend_name(Backend b);
Backend parse_backend(const std::string& name);

// Eigenvalue list plus the doubly-stochastic and triangularization verdicts.
std::string eigen_report_json(unsigned m, const Rational& p);

// Exact moment trajectories for steps 0..n_max with deviations from the
// uniform-limit value 1/(m+1).
std::string moment_table_json(unsigned m, unsigned long n_max, const Rational& p);
// CSV columns (fixed, v1): n,comp_0,...,comp_m,max_abs_deviation
std::string moment_table_csv(unsigned m, unsigned long n_max, const Rational& p);

std::string distribution_report_json(const DistributionReport& report);
std::string mgf_report_json(const SimConfig& cfg, const std::vector<MgfCheck>& checks);
std::string concentration_report_json(const ConcentrationReport& report);
std::string rate_report_json(const RateReport& report);

// Raw per-trial samples. CSV columns (fixed, v1): trial,x,y,midpoint,code_bits
// (code_bits is blank when the experiment did not compute codewords).
std::string samples_csv(const std::vector<double>& low, const std::vector<double>& high,
                        const std::vector<double>& midpoint,
                        const std::vector<unsigned>* code_bits);

}  // namespace arclab
