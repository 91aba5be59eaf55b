/*
 * arclab - exact arithmetic-coding codec and interval-distribution analysis.
 *
 * C interface to the shared library. Rational numbers cross this boundary as
 * exact "a/b" strings (a bare integer "a" means a/1); messages and codewords
 * are '0'/'1' strings. Every function returns an arclab_status; outputs are
 * written through out-parameters. Strings returned by the library are heap
 * allocated and must be released with arclab_string_free. On failure,
 * arclab_last_error() gives a human-readable diagnostic for the calling
 * thread's most recent error.
 */

#ifndef ARCLAB_H
#define ARCLAB_H

#include <stddef.h>
#include <stdint.h>

#if defined _WIN32 || defined __CYGWIN__
#define ARCLAB_API __declspec(dllexport)
#else
#define ARCLAB_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum arclab_status {
    ARCLAB_OK = 0,
    ARCLAB_ERR_INVALID_ARGUMENT = 1, /* null pointer or malformed input */
    ARCLAB_ERR_DOMAIN = 2,           /* violated precondition (e.g. p outside (0,1)) */
    ARCLAB_ERR_LIMIT = 3,            /* guard exceeded (enumeration or float-backend cap) */
    ARCLAB_ERR_CHECK_FAILED = 4,     /* verification suite reported a failure */
    ARCLAB_ERR_INTERNAL = 5
} arclab_status;

typedef enum arclab_codeword_rule {
    /* prefix of the upper endpoint at the first bit where the endpoint
       expansions disagree */
    ARCLAB_CODEWORD_FIRST_DISAGREEMENT = 0,
    /* shortest prefix of the interval midpoint that stays inside */
    ARCLAB_CODEWORD_MIDPOINT = 1,
    /* shortest dyadic subinterval contained in the interval (uniquely
       decodable in a concatenated stream) */
    ARCLAB_CODEWORD_SUBINTERVAL = 2
} arclab_codeword_rule;

typedef enum arclab_backend {
    ARCLAB_BACKEND_EXACT = 0,
    ARCLAB_BACKEND_FLOAT = 1 /* doubles; capped at message length 512 */
} arclab_backend;

/* Result of one encoding run: the final interval plus the per-bit trace. */
typedef struct arclab_encoding arclab_encoding;

typedef struct arclab_sim_config {
    const char* p;   /* rational in (0,1), e.g. "1/3" */
    uint32_t n;      /* message length (sweep bound for the concentration run) */
    uint64_t trials; /* >= 1 */
    uint64_t seed;
    arclab_backend backend;
} arclab_sim_config;

ARCLAB_API const char* arclab_version(void);
ARCLAB_API const char* arclab_status_name(arclab_status status);
ARCLAB_API const char* arclab_last_error(void);
ARCLAB_API void arclab_string_free(char* s);

/* --- exact dyadic utilities --- */

/* First k binary digits of the rational r in [0,1); terminating expansions
 * for dyadic values. */
ARCLAB_API arclab_status arclab_binary_expansion(const char* r, size_t k, char** bits_out);

/* Value of a bit string as a binary fraction, as an exact rational. */
ARCLAB_API arclab_status arclab_dyadic_value(const char* bits, char** rational_out);

/* --- codec --- */

ARCLAB_API arclab_status arclab_encode(const char* message_bits, const char* p,
                                       arclab_encoding** out);
ARCLAB_API void arclab_encoding_free(arclab_encoding* enc);

/* Number of processed bits (= trace length). */
ARCLAB_API size_t arclab_encoding_steps(const arclab_encoding* enc);

/* Interval after processing bit `step` (0-based; step < steps). */
ARCLAB_API arclab_status arclab_encoding_interval(const arclab_encoding* enc, size_t step,
                                                  char** low_out, char** high_out);

/* Final interval ([0,1] for an empty message). */
ARCLAB_API arclab_status arclab_encoding_final(const arclab_encoding* enc, char** low_out,
                                               char** high_out);

ARCLAB_API arclab_status arclab_encoding_codeword(const arclab_encoding* enc,
                                                  arclab_codeword_rule rule, char** bits_out);

/* Codeword for an arbitrary interval 0 <= low < high <= 1. */
ARCLAB_API arclab_status arclab_interval_codeword(const char* low, const char* high,
                                                  arclab_codeword_rule rule, char** bits_out);

/* Replays n splits of [0,1] against `value` in [0,1) and returns the decoded
 * message. Values equal to a split point take the upper branch. */
ARCLAB_API arclab_status arclab_decode(const char* value, size_t n, const char* p,
                                       char** message_out);

/* --- spectral analysis and exact moments (JSON reports) --- */

/* Eigenvalues {p^k + q^k} of the order-m moment matrix with the
 * doubly-stochastic and triangularization verdicts. Requires m >= 1. */
ARCLAB_API arclab_status arclab_eigen_report(uint32_t m, const char* p, char** json_out);

/* Exact moment trajectories for steps 0..n with deviations from 1/(m+1);
 * JSON, or CSV when as_csv is nonzero. */
ARCLAB_API arclab_status arclab_moment_table(uint32_t m, uint32_t n, const char* p, int as_csv,
                                             char** out);

/* --- seeded experiments (JSON reports) --- */

/* Distribution of the final interval: empirical mixed moments of orders 1..6
 * and KS statistics against Uniform[0,1]. If samples_csv_path is non-null the
 * per-trial samples are also written there as CSV. */
ARCLAB_API arclab_status arclab_simulate(const arclab_sim_config* cfg,
                                         const char* samples_csv_path, char** json_out);

/* Monte Carlo check of the one-step identity for the bivariate moment
 * generating function at (u, v); |u|, |v| <= 2. */
ARCLAB_API arclab_status arclab_mgf_check(const arclab_sim_config* cfg, double u, double v,
                                          char** json_out);

/* Tail probabilities of the interval length over n = 0..cfg->n against the
 * exact variance bound. */
ARCLAB_API arclab_status arclab_concentration(const arclab_sim_config* cfg, char** json_out);

/* Mean subinterval-codeword length per input bit against the entropy floor.
 * Exact backend only. */
ARCLAB_API arclab_status arclab_rate_experiment(const arclab_sim_config* cfg, char** json_out);

/* --- verification --- */

/* Runs the bundled verification suite (exact identities; plus the seeded
 * statistical experiments when `full` is nonzero) and returns a JSON report.
 * Returns ARCLAB_OK when every check passes, ARCLAB_ERR_CHECK_FAILED when the
 * suite ran but a check failed (json_out is still filled). */
ARCLAB_API arclab_status arclab_self_check(int full, uint64_t seed, char** json_out);

/* Seed used by the bundled verification suite. */
ARCLAB_API uint64_t arclab_default_seed(void);

#ifdef __cplusplus
}
#endif

#endif /* ARCLAB_H */
