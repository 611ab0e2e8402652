/* Copyright 2026 The cellform Authors
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

/* C interface to the cellform solver.
 *
 * Objects are opaque handles created by cf_*_load / cf_solve and released
 * with the matching cf_*_free. Every fallible call returns a cf_status; on
 * failure the output handle is left untouched and cf_last_error() returns a
 * message for the calling thread. Handles are immutable once created and may
 * be read from several threads.
 *
 * Machine and part indices are 0-based. Cell labels are 1-based. All
 * results are reported in the orientation of the input file, even when the
 * solver internally works on the transposed matrix.
 */

#ifndef CELLFORM_CELLFORM_H_
#define CELLFORM_CELLFORM_H_

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define CF_API __declspec(dllexport)
#else
#define CF_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum cf_status {
  CF_OK = 0,
  CF_ERR_INVALID_ARGUMENT = 1,
  CF_ERR_IO = 2,
  CF_ERR_PARSE_HEADER = 3,
  CF_ERR_PARSE_TOKEN = 4,
  CF_ERR_PARSE_SHAPE = 5,
  CF_ERR_NO_ONES = 6,
  CF_ERR_SIZE_GUARD = 7,
  CF_ERR_INTERNAL = 8
} cf_status;

typedef struct cf_instance cf_instance;
typedef struct cf_result cf_result;

typedef struct cf_solve_config {
  /* <= 0 means no limit. */
  double time_limit_seconds;
  int64_t node_limit;
  /* Initial incumbent efficacy num/den, used when has_initial_incumbent. */
  int has_initial_incumbent;
  int64_t initial_incumbent_num;
  int64_t initial_incumbent_den;
} cf_solve_config;

CF_API const char* cf_version(void);
CF_API const char* cf_status_name(cf_status status);
CF_API const char* cf_last_error(void);

CF_API cf_status cf_instance_load_file(const char* path, cf_instance** out);
CF_API cf_status cf_instance_load_text(const char* text, size_t length, cf_instance** out);
CF_API void cf_instance_free(cf_instance* instance);

/* Dimensions as written in the input (rows x columns). */
CF_API int cf_instance_rows(const cf_instance* instance);
CF_API int cf_instance_cols(const cf_instance* instance);
CF_API int cf_instance_ones(const cf_instance* instance);
/* Nonzero when the solver works on the transpose (more rows than columns). */
CF_API int cf_instance_transposed(const cf_instance* instance);
/* Nonzero when the brute-force oracle accepts this instance. */
CF_API int cf_instance_oracle_ok(const cf_instance* instance);

CF_API void cf_solve_config_init(cf_solve_config* config);
CF_API cf_status cf_solve(const cf_instance* instance, const cf_solve_config* config,
                          cf_result** out);
/* Exhaustive enumeration; CF_ERR_SIZE_GUARD unless cf_instance_oracle_ok. */
CF_API cf_status cf_brute_force_solve(const cf_instance* instance, cf_result** out);
CF_API void cf_result_free(cf_result* result);

CF_API int cf_result_has_solution(const cf_result* result);
/* Efficacy in lowest terms. CF_ERR_INVALID_ARGUMENT if there is no solution. */
CF_API cf_status cf_result_efficacy(const cf_result* result, int64_t* num, int64_t* den);
CF_API int cf_result_proven_optimal(const cf_result* result);
CF_API int64_t cf_result_nodes_explored(const cf_result* result);
CF_API int64_t cf_result_nodes_pruned(const cf_result* result);
CF_API int cf_result_max_depth(const cf_result* result);
CF_API double cf_result_elapsed_seconds(const cf_result* result);
CF_API int cf_result_cells(const cf_result* result);
/* Copies the cell label of each input row / column. `length` must equal
 * cf_instance_rows / cf_instance_cols of the solved instance. */
CF_API cf_status cf_result_row_cells(const cf_result* result, int32_t* labels, size_t length);
CF_API cf_status cf_result_col_cells(const cf_result* result, int32_t* labels, size_t length);

#ifdef __cplusplus
}
#endif

#endif /* CELLFORM_CELLFORM_H_ */
