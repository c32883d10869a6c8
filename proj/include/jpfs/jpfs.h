/*
 * Copyright 2026 The jpfs Authors
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

/*
 * C interface of the jpfs simulator.
 *
 * Every fallible call returns a jpfs_status; on failure a message for the
 * calling thread is available from jpfs_last_error() until the next call.
 * Handles are opaque and owned by the caller: release them with the
 * matching *_free function. Strings returned through char** out-parameters
 * are released with jpfs_string_free.
 */

#ifndef JPFS_JPFS_H
#define JPFS_JPFS_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  if defined(JPFS_BUILDING_LIBRARY)
#    define JPFS_API __declspec(dllexport)
#  else
#    define JPFS_API __declspec(dllimport)
#  endif
#else
#  define JPFS_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum jpfs_status {
  JPFS_OK = 0,
  JPFS_ERR_INVALID_ARGUMENT = 1,
  JPFS_ERR_FILE_NOT_FOUND = 2,
  JPFS_ERR_PARSE = 3,
  JPFS_ERR_SCHEMA = 4,
  JPFS_ERR_SCENARIO = 5,
  JPFS_ERR_DOMAIN = 6,
  JPFS_ERR_IO = 7,
  JPFS_ERR_INTERNAL = 8
} jpfs_status;

typedef enum jpfs_scheduler {
  JPFS_SCHED_CONVENTIONAL = 0,
  JPFS_SCHED_ES_JPFS = 1,
  JPFS_SCHED_IS_JPFS = 2
} jpfs_scheduler;

typedef struct jpfs_config jpfs_config;
typedef struct jpfs_results jpfs_results;

/* One result cell. Absent metrics are NaN; feasible == 0 marks an
 * exhaustive-search cell refused by the enumeration budget. */
typedef struct jpfs_metrics {
  int scheduler;
  int feasible;
  double x;
  uint64_t seed;
  size_t num_active_aps;
  size_t num_ues;
  double density_per_m2;
  double total_rate_gbps;
  double spatial_reuse;
  double fairness_index;
  uint64_t complexity_switchings;
  double predicted_switchings;
  double alpha_mean;
  double predicted_es_patterns;
} jpfs_metrics;

JPFS_API const char* jpfs_version(void);
JPFS_API const char* jpfs_status_string(int status);
JPFS_API const char* jpfs_last_error(void);
JPFS_API void jpfs_string_free(char* str);

/* Scenario configuration. */
JPFS_API int jpfs_config_from_file(const char* path, jpfs_config** out);
JPFS_API int jpfs_config_from_string(const char* text, jpfs_config** out);
JPFS_API void jpfs_config_free(jpfs_config* config);
JPFS_API int jpfs_config_set_seed(jpfs_config* config, uint64_t seed);
JPFS_API int jpfs_config_set_schedulers(jpfs_config* config, const int* kinds, size_t count);
JPFS_API int jpfs_config_set_trace(jpfs_config* config, int enabled);
JPFS_API int jpfs_config_validate(const jpfs_config* config);
/* Fully resolved configuration document (JSON). */
JPFS_API int jpfs_config_to_json(const jpfs_config* config, char** out_json);
JPFS_API int jpfs_scheduler_from_name(const char* name, int* out_kind);

/* Experiments. */
JPFS_API int jpfs_run(const jpfs_config* config, jpfs_results** out);
JPFS_API int jpfs_sweep_aps(const jpfs_config* config, jpfs_results** out);
JPFS_API int jpfs_sweep_density(const jpfs_config* config, jpfs_results** out);
JPFS_API int jpfs_compare(const jpfs_config* config, jpfs_results** out);

JPFS_API size_t jpfs_results_count(const jpfs_results* results);
JPFS_API int jpfs_results_metrics(const jpfs_results* results, size_t index, jpfs_metrics* out);
JPFS_API int jpfs_results_summary_csv(const jpfs_results* results, char** out_csv);
JPFS_API int jpfs_results_write(const jpfs_results* results, const char* out_dir);
JPFS_API void jpfs_results_free(jpfs_results* results);

/* Model functions. */
JPFS_API int jpfs_beam_gain_db(double azimuth_offset_deg, double elevation_offset_deg,
                               double az_beamwidth_deg, double el_beamwidth_deg, double* out_db);
JPFS_API int jpfs_fairness_index(const double* rates, size_t count, double* out_fi);

#ifdef __cplusplus
}
#endif

#endif /* JPFS_JPFS_H */
