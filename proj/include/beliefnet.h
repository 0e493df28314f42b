/*
 * beliefnet C API.
 *
 * Opaque handles over the C++ core: communication matrices, signal models
 * and experiment reports. Every function returns a bn_status; on failure
 * bn_last_error() holds a thread-local diagnostic that stays valid until the
 * next failing call on the same thread.
 *
 * Conventions: agent and state indices are 0-based, all strings are UTF-8
 * JSON documents in the formats described in the README, and any char*
 * produced by a bn_*_format function must be released with bn_free.
 */
#ifndef BELIEFNET_H
#define BELIEFNET_H

#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum bn_status {
  BN_OK = 0,
  BN_E_INVALID_ARGUMENT = 1,
  BN_E_REDUCIBLE = 2,
  BN_E_NON_CONVERGENT = 3,
  BN_E_NUMERICAL_FAILURE = 4,
  BN_E_UNKNOWN_SIGNAL = 5,
  BN_E_DIMENSION_MISMATCH = 6,
  BN_E_DOMAIN = 7,
  BN_E_INVALID_NETWORK = 8,
  BN_E_NOT_IDENTIFIABLE = 9,
  BN_E_COMPLEX_SPECTRUM = 10,
  BN_E_NOT_SYMMETRIC = 11,
  BN_E_NO_SUCH_EDGE = 12,
  BN_E_GENERATION_FAILED = 13,
  BN_E_UNSUPPORTED = 14,
  BN_E_IO = 15,
  BN_E_INTERNAL = 16
} bn_status;

typedef struct bn_matrix_s bn_matrix;
typedef struct bn_model_s bn_model;
typedef struct bn_report_s bn_report;

const char* bn_status_name(bn_status status);
const char* bn_last_error(void);
void bn_free(char* text);

/* Matrices ---------------------------------------------------------------- */

/* {"n": int, "rows": [[...], ...]} */
bn_status bn_matrix_parse(const char* json, bn_matrix** out);

/* Network spec JSON, e.g. {"kind": "star", "n": 8, "omega": 0.5}. */
bn_status bn_matrix_generate(const char* spec_json, bn_matrix** out);

bn_status bn_matrix_format(const bn_matrix* m, char** json_out);
void bn_matrix_free(bn_matrix* m);

int bn_matrix_order(const bn_matrix* m);
bn_status bn_matrix_entry(const bn_matrix* m, int i, int j, double* out);

/* pi_out must hold bn_matrix_order(m) doubles. */
bn_status bn_matrix_stationary(const bn_matrix* m, double* pi_out);

/* re/im hold the spectrum sorted by descending modulus (length n); any of
 * the output pointers may be NULL to skip that value. */
bn_status bn_matrix_spectrum(const bn_matrix* m, double* re, double* im,
                             double* lambda_max, double* gap);

bn_status bn_matrix_mixing_sum(const bn_matrix* m, int agent, int rounds, double* out);

bn_status bn_matrix_optimal_mix(const bn_matrix* m, double* alpha_out, double* gamma_out,
                                bn_matrix** mixed_out);

bn_status bn_matrix_remove_link(const bn_matrix* m, int i, int j, bn_matrix** out,
                                int* disconnected_out);

/* Signal models ------------------------------------------------------------ */

bn_status bn_model_parse(const char* json, bn_model** out);

/* {"id": "equivalence-binary", "n": 8, "p_high": 0.75}
 * {"id": "channel", "epsilon": 0.1}
 * {"id": "allocation", "n": 9, "informative_agent": 0, "p_high": 0.75} */
bn_status bn_model_builtin(const char* params_json, bn_model** out);

bn_status bn_model_format(const bn_model* m, char** json_out);
void bn_model_free(bn_model* m);

int bn_model_agents(const bn_model* m);
int bn_model_states(const bn_model* m);
bn_status bn_model_log_bound(const bn_model* m, double* out);

/* 1 when the model is globally identifiable under the given stationary
 * distribution (pi has bn_model_agents entries). */
bn_status bn_model_identifiable(const bn_model* m, const double* pi, int* out);

/* Experiments --------------------------------------------------------------- */

/* Runs one experiment described by a config document (see README); writes
 * any configured output files and returns the report. */
bn_status bn_experiment_run(const char* config_json, bn_report** out);

bn_status bn_report_format(const bn_report* r, char** json_out);
int bn_report_checks_passed(const bn_report* r);
void bn_report_free(bn_report* r);

#ifdef __cplusplus
}
#endif

#endif /* BELIEFNET_H */
