//------------------------------------------------------------------------------
//
//   Copyright 2026 The tidlab Authors
//
//   Licensed under the Apache License, Version 2.0 (the "License");
//   you may not use this file except in compliance with the License.
//   You may obtain a copy of the License at
//
//       http://www.apache.org/licenses/LICENSE-2.0
//
//   Unless required by applicable law or agreed to in writing, software
//   distributed under the License is distributed on an "AS IS" BASIS,
//   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
//   See the License for the specific language governing permissions and
//   limitations under the License.
//
//------------------------------------------------------------------------------

#ifndef TIDLAB_TIDLAB_H
#define TIDLAB_TIDLAB_H

/* C interface to the tidlab library. Handles are opaque; every fallible call returns a
 * tidlab_status and leaves a message in tidlab_last_error() on failure. Strings returned
 * from a handle stay valid until that handle is freed. */

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define TIDLAB_API __declspec(dllexport)
#else
#define TIDLAB_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum tidlab_status
{
  TIDLAB_OK = 0,
  TIDLAB_ERR_ARGUMENT,   /* null or out-of-range argument */
  TIDLAB_ERR_PARSE,      /* scenario, ratio, hex or key file syntax */
  TIDLAB_ERR_IO,         /* file could not be read or written */
  TIDLAB_ERR_INTEGRITY,  /* ciphertext tag mismatch or truncation */
  TIDLAB_ERR_DECODE,     /* invalid scalar or group element encoding */
  TIDLAB_ERR_INTERNAL
} tidlab_status;

typedef struct tidlab_scenario tidlab_scenario;
typedef struct tidlab_report   tidlab_report;
typedef struct tidlab_sweep    tidlab_sweep;

TIDLAB_API const char *tidlab_version(void);
TIDLAB_API const char *tidlab_status_name(tidlab_status status);
/* Message of the last failed call on this thread; empty if none. */
TIDLAB_API const char *tidlab_last_error(void);

/* --- scenarios --- */

TIDLAB_API tidlab_status tidlab_scenario_load(const char *path, tidlab_scenario **out);
TIDLAB_API tidlab_status tidlab_scenario_parse(const char *text, size_t len,
                                               tidlab_scenario **out);
/* kind is "happy" or "sad"; ratio is "a/b". */
TIDLAB_API tidlab_status tidlab_scenario_builtin(const char *kind, size_t n, const char *ratio,
                                                 tidlab_scenario **out);
TIDLAB_API const char   *tidlab_scenario_name(const tidlab_scenario *scenario);
TIDLAB_API size_t        tidlab_scenario_members(const tidlab_scenario *scenario);
TIDLAB_API void          tidlab_scenario_free(tidlab_scenario *scenario);

/* --- runs --- */

/* Runs the protocol end to end. A run whose invariants fail still returns TIDLAB_OK;
 * check tidlab_report_passed. */
TIDLAB_API tidlab_status tidlab_run(const tidlab_scenario *scenario, const char *seed,
                                    tidlab_report **out);
/* bias_hex may be NULL, in which case the bias is derived from the seed. */
TIDLAB_API tidlab_status tidlab_bias_demo(size_t n, const char *bias_hex, const char *seed,
                                          tidlab_report **out);

TIDLAB_API int         tidlab_report_passed(const tidlab_report *report);
/* "name: detail" of the first failed invariant, or NULL. */
TIDLAB_API const char *tidlab_report_first_violation(const tidlab_report *report);
/* "completed", "aborted" or "unrecovered". */
TIDLAB_API const char *tidlab_report_outcome(const tidlab_report *report);
TIDLAB_API size_t      tidlab_report_threshold(const tidlab_report *report);
TIDLAB_API size_t      tidlab_report_invariant_count(const tidlab_report *report);
TIDLAB_API tidlab_status tidlab_report_invariant(const tidlab_report *report, size_t index,
                                                 const char **name, int *passed,
                                                 const char **detail);
/* Number of logged events with the given name, e.g. "MemberDisqualified". */
TIDLAB_API size_t        tidlab_report_event_count(const tidlab_report *report,
                                                   const char *event);
TIDLAB_API const char   *tidlab_report_json(const tidlab_report *report);
TIDLAB_API tidlab_status tidlab_report_write(const tidlab_report *report, const char *dir);
TIDLAB_API void          tidlab_report_free(tidlab_report *report);

/* --- cost sweeps --- */

/* One council per (ns[i], ratios[i]) pair. */
TIDLAB_API tidlab_status tidlab_sweep_run(const size_t *ns, const char *const *ratios,
                                          size_t count, const char *seed, tidlab_sweep **out);
TIDLAB_API int           tidlab_sweep_passed(const tidlab_sweep *sweep);
TIDLAB_API size_t        tidlab_sweep_failure_count(const tidlab_sweep *sweep);
TIDLAB_API const char   *tidlab_sweep_failure(const tidlab_sweep *sweep, size_t index);
/* Constant part of the dispute exponentiation count, or -1 if unknown. */
TIDLAB_API int64_t       tidlab_sweep_dispute_constant(const tidlab_sweep *sweep);
TIDLAB_API const char   *tidlab_sweep_csv(const tidlab_sweep *sweep);
TIDLAB_API void          tidlab_sweep_free(tidlab_sweep *sweep);

/* --- submissions --- */

/* Hybrid encryption of a file under the mpk key file. seed may be NULL for fresh
 * system randomness; otherwise encryption is deterministic in it. */
TIDLAB_API tidlab_status tidlab_encrypt_file(const char *mpk_path, const char *in_path,
                                             const char *out_path, const char *seed);
TIDLAB_API tidlab_status tidlab_decrypt_file(const char *msk_path, const char *in_path,
                                             const char *out_path);

/* In-memory variants. Keys are hex strings; *out is released with tidlab_bytes_free. */
TIDLAB_API tidlab_status tidlab_encrypt(const char *mpk_hex, const uint8_t *data, size_t len,
                                        const char *seed, uint8_t **out, size_t *out_len);
TIDLAB_API tidlab_status tidlab_decrypt(const char *msk_hex, const uint8_t *data, size_t len,
                                        uint8_t **out, size_t *out_len);
TIDLAB_API void          tidlab_bytes_free(uint8_t *bytes);

#ifdef __cplusplus
}
#endif

#endif /* TIDLAB_TIDLAB_H */
