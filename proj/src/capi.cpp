// Copyright 2026 The jpfs Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "jpfs/jpfs.h"

#include <cmath>
#include <cstring>
#include <limits>
#include <new>
#include <string>

#include "jpfs/channel.hpp"
#include "jpfs/config.hpp"
#include "jpfs/error.hpp"
#include "jpfs/metrics.hpp"
#include "jpfs/output.hpp"
#include "jpfs/sim.hpp"

struct jpfs_config {
  jpfs::ScenarioConfig config;
};

struct jpfs_results {
  jpfs::ResultSet results;
};

namespace {

thread_local std::string g_last_error;

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

int fail(int status, const std::string& message) {
  g_last_error = message;
  return status;
}

// Runs `body`, translating exceptions into status codes.
template <typename F>
int guarded(F&& body) {
  g_last_error.clear();
  try {
    body();
    return JPFS_OK;
  } catch (const jpfs::Error& e) {
    return fail(static_cast<int>(e.code()), e.what());
  } catch (const std::bad_alloc&) {
    return fail(JPFS_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(JPFS_ERR_INTERNAL, e.what());
  } catch (...) {
    return fail(JPFS_ERR_INTERNAL, "unknown error");
  }
}

char* copy_string(const std::string& s) {
  char* out = new char[s.size() + 1];
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

double or_nan(const std::optional<double>& v) { return v ? *v : kNaN; }

int make_results(const jpfs_config* config, jpfs_results** out,
                 jpfs::ResultSet (*produce)(const jpfs::ScenarioConfig&)) {
  if (!config || !out) return fail(JPFS_ERR_INVALID_ARGUMENT, "null argument");
  *out = nullptr;
  return guarded([&] { *out = new jpfs_results{produce(config->config)}; });
}

jpfs::ResultSet produce_run(const jpfs::ScenarioConfig& c) { return jpfs::run_all(c); }

jpfs::ResultSet produce_sweep_aps(const jpfs::ScenarioConfig& c) {
  return jpfs::from_sweep(jpfs::sweep_ap_count(c, c.sweep.ap_counts, c.schedulers),
                          c.scheduler.es_budget);
}

jpfs::ResultSet produce_sweep_density(const jpfs::ScenarioConfig& c) {
  return jpfs::from_sweep(jpfs::sweep_density(c, c.sweep.densities, c.schedulers),
                          c.scheduler.es_budget);
}

jpfs::ResultSet produce_compare(const jpfs::ScenarioConfig& c) {
  return jpfs::from_compare(jpfs::compare(c, c.schedulers, c.compare_seeds()), c.scheduler.es_budget);
}

}  // namespace

extern "C" {

const char* jpfs_version(void) { return "1.0.0"; }

const char* jpfs_status_string(int status) {
  switch (status) {
    case JPFS_OK: return "ok";
    case JPFS_ERR_INVALID_ARGUMENT: return "invalid argument";
    case JPFS_ERR_FILE_NOT_FOUND: return "file not found";
    case JPFS_ERR_PARSE: return "parse error";
    case JPFS_ERR_SCHEMA: return "schema error";
    case JPFS_ERR_SCENARIO: return "infeasible scenario";
    case JPFS_ERR_DOMAIN: return "domain error";
    case JPFS_ERR_IO: return "I/O error";
    case JPFS_ERR_INTERNAL: return "internal error";
    default: return "unknown status";
  }
}

const char* jpfs_last_error(void) { return g_last_error.c_str(); }

void jpfs_string_free(char* str) { delete[] str; }

int jpfs_config_from_file(const char* path, jpfs_config** out) {
  if (!path || !out) return fail(JPFS_ERR_INVALID_ARGUMENT, "null argument");
  *out = nullptr;
  return guarded([&] { *out = new jpfs_config{jpfs::parse_config_file(path)}; });
}

int jpfs_config_from_string(const char* text, jpfs_config** out) {
  if (!text || !out) return fail(JPFS_ERR_INVALID_ARGUMENT, "null argument");
  *out = nullptr;
  return guarded([&] { *out = new jpfs_config{jpfs::parse_config_text(text)}; });
}

void jpfs_config_free(jpfs_config* config) { delete config; }

int jpfs_config_set_seed(jpfs_config* config, uint64_t seed) {
  if (!config) return fail(JPFS_ERR_INVALID_ARGUMENT, "null config");
  config->config.seed = seed;
  return JPFS_OK;
}

int jpfs_config_set_schedulers(jpfs_config* config, const int* kinds, size_t count) {
  if (!config || !kinds || count == 0) return fail(JPFS_ERR_INVALID_ARGUMENT, "need at least one scheduler");
  std::vector<jpfs::SchedulerKind> list;
  for (size_t i = 0; i < count; ++i) {
    if (kinds[i] < JPFS_SCHED_CONVENTIONAL || kinds[i] > JPFS_SCHED_IS_JPFS)
      return fail(JPFS_ERR_INVALID_ARGUMENT, "unknown scheduler kind " + std::to_string(kinds[i]));
    list.push_back(static_cast<jpfs::SchedulerKind>(kinds[i]));
  }
  config->config.schedulers = std::move(list);
  return JPFS_OK;
}

int jpfs_config_set_trace(jpfs_config* config, int enabled) {
  if (!config) return fail(JPFS_ERR_INVALID_ARGUMENT, "null config");
  config->config.trace = enabled != 0;
  return JPFS_OK;
}

int jpfs_config_validate(const jpfs_config* config) {
  if (!config) return fail(JPFS_ERR_INVALID_ARGUMENT, "null config");
  return guarded([&] { config->config.validate(); });
}

int jpfs_config_to_json(const jpfs_config* config, char** out_json) {
  if (!config || !out_json) return fail(JPFS_ERR_INVALID_ARGUMENT, "null argument");
  *out_json = nullptr;
  return guarded([&] { *out_json = copy_string(jpfs::config_to_json(config->config).dump(2) + "\n"); });
}

int jpfs_scheduler_from_name(const char* name, int* out_kind) {
  if (!name || !out_kind) return fail(JPFS_ERR_INVALID_ARGUMENT, "null argument");
  const auto kind = jpfs::parse_scheduler_kind(name);
  if (!kind) return fail(JPFS_ERR_INVALID_ARGUMENT, std::string("unknown scheduler '") + name + "'");
  *out_kind = static_cast<int>(*kind);
  return JPFS_OK;
}

int jpfs_run(const jpfs_config* config, jpfs_results** out) {
  return make_results(config, out, produce_run);
}

int jpfs_sweep_aps(const jpfs_config* config, jpfs_results** out) {
  return make_results(config, out, produce_sweep_aps);
}

int jpfs_sweep_density(const jpfs_config* config, jpfs_results** out) {
  return make_results(config, out, produce_sweep_density);
}

int jpfs_compare(const jpfs_config* config, jpfs_results** out) {
  return make_results(config, out, produce_compare);
}

size_t jpfs_results_count(const jpfs_results* results) {
  return results ? results->results.cells.size() : 0;
}

int jpfs_results_metrics(const jpfs_results* results, size_t index, jpfs_metrics* out) {
  if (!results || !out) return fail(JPFS_ERR_INVALID_ARGUMENT, "null argument");
  if (index >= results->results.cells.size()) return fail(JPFS_ERR_INVALID_ARGUMENT, "index out of range");
  const jpfs::RunCell& cell = results->results.cells[index];
  jpfs_metrics m{};
  m.scheduler = static_cast<int>(cell.scheduler);
  m.feasible = cell.feasible() ? 1 : 0;
  m.x = cell.x;
  m.seed = cell.seed;
  m.num_active_aps = cell.num_active;
  m.num_ues = cell.num_ues;
  m.density_per_m2 = or_nan(cell.density);
  m.predicted_es_patterns = cell.predicted_es_patterns;
  m.total_rate_gbps = m.spatial_reuse = m.fairness_index = m.alpha_mean = kNaN;
  m.predicted_switchings = kNaN;
  if (cell.result) {
    const jpfs::MetricsReport& r = cell.result->metrics;
    m.total_rate_gbps = or_nan(r.total_rate_gbps);
    m.spatial_reuse = or_nan(r.spatial_reuse);
    m.fairness_index = or_nan(r.fairness_index);
    m.complexity_switchings = r.complexity_switchings;
    m.predicted_switchings = r.predicted_switchings;
    m.alpha_mean = or_nan(r.alpha_mean);
  }
  *out = m;
  return JPFS_OK;
}

int jpfs_results_summary_csv(const jpfs_results* results, char** out_csv) {
  if (!results || !out_csv) return fail(JPFS_ERR_INVALID_ARGUMENT, "null argument");
  *out_csv = nullptr;
  return guarded([&] {
    for (const auto& f : jpfs::render_results(results->results)) {
      if (f.name == "summary.csv") {
        *out_csv = copy_string(f.content);
        return;
      }
    }
  });
}

int jpfs_results_write(const jpfs_results* results, const char* out_dir) {
  if (!results || !out_dir) return fail(JPFS_ERR_INVALID_ARGUMENT, "null argument");
  return guarded([&] { jpfs::emit_results(results->results, out_dir); });
}

void jpfs_results_free(jpfs_results* results) { delete results; }

int jpfs_beam_gain_db(double azimuth_offset_deg, double elevation_offset_deg,
                      double az_beamwidth_deg, double el_beamwidth_deg, double* out_db) {
  if (!out_db) return fail(JPFS_ERR_INVALID_ARGUMENT, "null argument");
  if (!(az_beamwidth_deg > 0.0) || !(el_beamwidth_deg > 0.0 && el_beamwidth_deg < 180.0) ||
      !std::isfinite(azimuth_offset_deg) || !std::isfinite(elevation_offset_deg))
    return fail(JPFS_ERR_DOMAIN, "invalid beam gain arguments");
  return guarded([&] {
    *out_db = jpfs::beam_gain_db(jpfs::Beam{0.0, 0.0}, azimuth_offset_deg, elevation_offset_deg,
                                 az_beamwidth_deg, el_beamwidth_deg);
  });
}

int jpfs_fairness_index(const double* rates, size_t count, double* out_fi) {
  if (!out_fi || (!rates && count > 0)) return fail(JPFS_ERR_INVALID_ARGUMENT, "null argument");
  const auto fi = jpfs::fairness_index(std::span<const double>(rates, count));
  if (!fi) return fail(JPFS_ERR_DOMAIN, "fairness index undefined for an all-zero rate vector");
  *out_fi = *fi;
  return JPFS_OK;
}

}  // extern "C"
