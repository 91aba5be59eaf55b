#include "arclab.h"

#include <cstdlib>
#include <cstring>
#include <memory>
#include <fstream>
#include <new>
#include <stdexcept>
#include <string>

#include "codec.hpp"
#include "rational.hpp"
#include "selfcheck.hpp"
#include "serialize.hpp"
#include "sim.hpp"

struct arclab_encoding {
    arclab::EncodeResult result;
};

namespace {

thread_local std::string g_last_error;

char* dup_string(const std::string& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    if (!out) throw std::bad_alloc();
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

// Maps C++ exceptions from the core onto status codes, capturing the message.
template <typename Fn>
arclab_status guarded(Fn&& fn) {
    try {
        return fn();
    } catch (const std::invalid_argument& e) {
        g_last_error = e.what();
        return ARCLAB_ERR_INVALID_ARGUMENT;
    } catch (const std::domain_error& e) {
        g_last_error = e.what();
        // Guard refusals (enumeration / float caps) surface as LIMIT.
        if (g_last_error.find("guard") != std::string::npos ||
            g_last_error.find("limited to") != std::string::npos)
            return ARCLAB_ERR_LIMIT;
        return ARCLAB_ERR_DOMAIN;
    } catch (const std::exception& e) {
        g_last_error = e.what();
        return ARCLAB_ERR_INTERNAL;
    } catch (...) {
        g_last_error = "unknown error";
        return ARCLAB_ERR_INTERNAL;
    }
}

arclab_status require_args(std::initializer_list<const void*> ptrs) {
    for (const void* p : ptrs)
        if (!p) {
            g_last_error = "null argument";
            return ARCLAB_ERR_INVALID_ARGUMENT;
        }
    return ARCLAB_OK;
}

arclab::SimConfig convert_config(const arclab_sim_config* cfg) {
    arclab::SimConfig out;
    out.p = arclab::Rational::parse(cfg->p);
    out.n = cfg->n;
    out.trials = cfg->trials;
    out.seed = cfg->seed;
    out.backend =
        cfg->backend == ARCLAB_BACKEND_FLOAT ? arclab::Backend::floating : arclab::Backend::exact;
    return out;
}

std::string codeword_for(const arclab::Interval& iv, arclab_codeword_rule rule) {
    switch (rule) {
        case ARCLAB_CODEWORD_FIRST_DISAGREEMENT:
            return arclab::first_disagreement_codeword(iv);
        case ARCLAB_CODEWORD_MIDPOINT:
            return arclab::midpoint_codeword(iv);
        case ARCLAB_CODEWORD_SUBINTERVAL:
            return arclab::subinterval_codeword(iv);
    }
    throw std::invalid_argument("unknown codeword rule");
}

}  // namespace

extern "C" {

const char* arclab_version(void) { return "0.1.0"; }

const char* arclab_status_name(arclab_status status) {
    switch (status) {
        case ARCLAB_OK: return "ok";
        case ARCLAB_ERR_INVALID_ARGUMENT: return "invalid argument";
        case ARCLAB_ERR_DOMAIN: return "domain error";
        case ARCLAB_ERR_LIMIT: return "limit exceeded";
        case ARCLAB_ERR_CHECK_FAILED: return "verification failed";
        case ARCLAB_ERR_INTERNAL: return "internal error";
    }
    return "unknown";
}

const char* arclab_last_error(void) { return g_last_error.c_str(); }

void arclab_string_free(char* s) { std::free(s); }

arclab_status arclab_binary_expansion(const char* r, size_t k, char** bits_out) {
    if (arclab_status s = require_args({r, bits_out})) return s;
    return guarded([&] {
        *bits_out = dup_string(arclab::binary_expansion(arclab::Rational::parse(r), k));
        return ARCLAB_OK;
    });
}

arclab_status arclab_dyadic_value(const char* bits, char** rational_out) {
    if (arclab_status s = require_args({bits, rational_out})) return s;
    return guarded([&] {
        *rational_out = dup_string(arclab::dyadic_value(bits).str());
        return ARCLAB_OK;
    });
}

arclab_status arclab_encode(const char* message_bits, const char* p, arclab_encoding** out) {
    if (arclab_status s = require_args({message_bits, p, out})) return s;
    return guarded([&] {
        auto enc = std::make_unique<arclab_encoding>();
        enc->result = arclab::encode(message_bits, arclab::Rational::parse(p));
        *out = enc.release();
        return ARCLAB_OK;
    });
}

void arclab_encoding_free(arclab_encoding* enc) { delete enc; }

size_t arclab_encoding_steps(const arclab_encoding* enc) {
    return enc ? enc->result.trace.size() : 0;
}

arclab_status arclab_encoding_interval(const arclab_encoding* enc, size_t step, char** low_out,
                                       char** high_out) {
    if (arclab_status s = require_args({enc, low_out, high_out})) return s;
    if (step >= enc->result.trace.size()) {
        g_last_error = "trace step out of range";
        return ARCLAB_ERR_INVALID_ARGUMENT;
    }
    return guarded([&] {
        *low_out = dup_string(enc->result.trace[step].low.str());
        *high_out = dup_string(enc->result.trace[step].high.str());
        return ARCLAB_OK;
    });
}

arclab_status arclab_encoding_final(const arclab_encoding* enc, char** low_out,
                                    char** high_out) {
    if (arclab_status s = require_args({enc, low_out, high_out})) return s;
    return guarded([&] {
        *low_out = dup_string(enc->result.final_interval.low.str());
        *high_out = dup_string(enc->result.final_interval.high.str());
        return ARCLAB_OK;
    });
}

arclab_status arclab_encoding_codeword(const arclab_encoding* enc, arclab_codeword_rule rule,
                                       char** bits_out) {
    if (arclab_status s = require_args({enc, bits_out})) return s;
    return guarded([&] {
        *bits_out = dup_string(codeword_for(enc->result.final_interval, rule));
        return ARCLAB_OK;
    });
}

arclab_status arclab_interval_codeword(const char* low, const char* high,
                                       arclab_codeword_rule rule, char** bits_out) {
    if (arclab_status s = require_args({low, high, bits_out})) return s;
    return guarded([&] {
        arclab::Interval iv(arclab::Rational::parse(low), arclab::Rational::parse(high));
        *bits_out = dup_string(codeword_for(iv, rule));
        return ARCLAB_OK;
    });
}

arclab_status arclab_decode(const char* value, size_t n, const char* p, char** message_out) {
    if (arclab_status s = require_args({value, p, message_out})) return s;
    return guarded([&] {
        *message_out = dup_string(
            arclab::decode(arclab::Rational::parse(value), n, arclab::Rational::parse(p)));
        return ARCLAB_OK;
    });
}

arclab_status arclab_eigen_report(uint32_t m, const char* p, char** json_out) {
    if (arclab_status s = require_args({p, json_out})) return s;
    return guarded([&] {
        *json_out = dup_string(arclab::eigen_report_json(m, arclab::Rational::parse(p)));
        return ARCLAB_OK;
    });
}

arclab_status arclab_moment_table(uint32_t m, uint32_t n, const char* p, int as_csv,
                                  char** out) {
    if (arclab_status s = require_args({p, out})) return s;
    return guarded([&] {
        arclab::Rational pr = arclab::Rational::parse(p);
        *out = dup_string(as_csv ? arclab::moment_table_csv(m, n, pr)
                                 : arclab::moment_table_json(m, n, pr));
        return ARCLAB_OK;
    });
}

arclab_status arclab_simulate(const arclab_sim_config* cfg, const char* samples_csv_path,
                              char** json_out) {
    if (arclab_status s = require_args({cfg, json_out})) return s;
    if (arclab_status s = require_args({cfg->p})) return s;
    return guarded([&] {
        arclab::DistributionReport rep =
            arclab::run_distribution_experiment(convert_config(cfg));
        if (samples_csv_path) {
            std::ofstream out(samples_csv_path);
            if (!out) throw std::invalid_argument(std::string("cannot open samples CSV path: ") +
                                                  samples_csv_path);
            out << arclab::samples_csv(rep.low, rep.high, rep.midpoint, nullptr);
        }
        *json_out = dup_string(arclab::distribution_report_json(rep));
        return ARCLAB_OK;
    });
}

arclab_status arclab_mgf_check(const arclab_sim_config* cfg, double u, double v,
                               char** json_out) {
    if (arclab_status s = require_args({cfg, json_out})) return s;
    if (arclab_status s = require_args({cfg->p})) return s;
    return guarded([&] {
        arclab::SimConfig config = convert_config(cfg);
        arclab::MgfCheck check = arclab::mgf_check(config, u, v);
        *json_out = dup_string(arclab::mgf_report_json(config, {check}));
        return ARCLAB_OK;
    });
}

arclab_status arclab_concentration(const arclab_sim_config* cfg, char** json_out) {
    if (arclab_status s = require_args({cfg, json_out})) return s;
    if (arclab_status s = require_args({cfg->p})) return s;
    return guarded([&] {
        *json_out = dup_string(arclab::concentration_report_json(
            arclab::concentration_experiment(convert_config(cfg))));
        return ARCLAB_OK;
    });
}

arclab_status arclab_rate_experiment(const arclab_sim_config* cfg, char** json_out) {
    if (arclab_status s = require_args({cfg, json_out})) return s;
    if (arclab_status s = require_args({cfg->p})) return s;
    return guarded([&] {
        *json_out = dup_string(
            arclab::rate_report_json(arclab::compression_rate_experiment(convert_config(cfg))));
        return ARCLAB_OK;
    });
}

arclab_status arclab_self_check(int full, uint64_t seed, char** json_out) {
    if (arclab_status s = require_args({json_out})) return s;
    return guarded([&]() -> arclab_status {
        std::vector<arclab::CheckResult> results =
            arclab::run_verification_suite(full != 0, seed);
        *json_out = dup_string(arclab::verification_report_json(results));
        if (!arclab::all_passed(results)) {
            g_last_error = "verification suite reported failures";
            return ARCLAB_ERR_CHECK_FAILED;
        }
        return ARCLAB_OK;
    });
}

uint64_t arclab_default_seed(void) { return arclab::DEFAULT_SEED; }

}  // extern "C"
