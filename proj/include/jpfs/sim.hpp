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

// End-to-end experiments: one run, the AP-count and user-density sweeps, and
// multi-seed scheduler comparison.

#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "jpfs/channel.hpp"
#include "jpfs/geometry.hpp"
#include "jpfs/metrics.hpp"
#include "jpfs/rate.hpp"
#include "jpfs/sched.hpp"

namespace jpfs {

struct CodebookSpec {
  double beamwidth_deg = 30.0;
  double downtilt_deg = 45.0;

  friend bool operator==(const CodebookSpec&, const CodebookSpec&) = default;
};

// Exactly one of density / explicit positions.
struct UserSpec {
  std::optional<double> density_per_m2 = 0.2;
  std::vector<Vec3> positions;

  friend bool operator==(const UserSpec&, const UserSpec&) = default;
};

struct SweepSpec {
  std::vector<std::size_t> ap_counts{1, 2, 3, 4, 5, 6};
  double ap_count_density = 1.0;
  // Keep the base config's users instead of re-dropping at ap_count_density.
  bool ap_count_use_base_users = false;
  std::vector<double> densities{0.2, 0.5, 1.0, 1.5, 2.0};
  std::vector<std::size_t> density_active_aps{1, 2, 3, 4};

  friend bool operator==(const SweepSpec&, const SweepSpec&) = default;
};

struct CompareSpec {
  // Explicit seed list; when empty, num_seeds consecutive seeds from `seed`.
  std::vector<std::uint64_t> seeds;
  std::size_t num_seeds = 20;

  friend bool operator==(const CompareSpec&, const CompareSpec&) = default;
};

struct ScenarioConfig {
  Room room;
  std::vector<Vec3> ap_positions = default_ap_grid(Room{});
  std::vector<std::size_t> active_aps{0, 1, 2, 3, 4, 5};
  CodebookSpec codebook;
  UserSpec users;
  ChannelParams channel;
  RadioParams radio;
  std::vector<SchedulerKind> schedulers{SchedulerKind::kConventional, SchedulerKind::kEsJpfs,
                                        SchedulerKind::kIsJpfs};
  SchedulerOptions scheduler;
  std::size_t n_slots = 500;
  std::uint64_t seed = 1;
  bool trace = false;
  SweepSpec sweep;
  CompareSpec compare;

  // Parameter ranges and referential consistency (active APs exist, K >= M).
  // Throws DomainError / ScenarioError.
  void validate() const;
  std::size_t num_ues() const;
  std::vector<std::uint64_t> compare_seeds() const;
};

// Materialized scenario: placements, codebook and derived link budget.
struct Scenario {
  Room room;
  Placement placement;
  std::vector<std::size_t> active_aps;
  BeamCodebook codebook;
  ChannelParams channel;
  RadioParams radio;
};

Scenario build_scenario(const ScenarioConfig& config);

struct SlotTrace {
  Pattern pattern;
  double sum_rate_bps = 0.0;
  double objective = 0.0;
  std::size_t iterations = 0;
};

struct RunResult {
  ScenarioConfig config;  // resolved; schedulers holds exactly this run's kind
  SchedulerKind scheduler = SchedulerKind::kConventional;
  std::size_t num_active = 0;
  std::size_t num_ues = 0;
  std::size_t num_beams = 0;
  MetricsReport metrics;
  ComplexityLedger ledger;
  std::vector<SlotTrace> trace;
};

// Predicted ES pattern count for a config and whether it fits the budget.
double predicted_es_patterns(const ScenarioConfig& config);
bool es_within_budget(const ScenarioConfig& config);

// Deterministic in the config. Throws ScenarioError for infeasible scenarios
// and for ES runs above the enumeration budget.
RunResult run(const ScenarioConfig& config, SchedulerKind kind);

// One (x, scheduler) cell of a sweep or comparison. `result` is empty when
// ES was refused by the budget; the predicted enumeration size is kept.
struct RunCell {
  double x = 0.0;
  SchedulerKind scheduler = SchedulerKind::kConventional;
  std::uint64_t seed = 0;
  std::size_t num_active = 0;
  std::size_t num_ues = 0;
  std::optional<double> density;
  double predicted_es_patterns = 0.0;
  std::optional<RunResult> result;

  bool feasible() const { return result.has_value(); }
};

RunCell run_cell(const ScenarioConfig& config, SchedulerKind kind, double x);

// Runs cells on a thread pool; output order is input order.
std::vector<RunCell> run_cells(const std::vector<ScenarioConfig>& configs,
                               const std::vector<SchedulerKind>& kinds,
                               const std::vector<double>& xs, std::size_t max_threads = 0);

enum class SweepAxis { kApCount, kDensity };

struct SweepTable {
  SweepAxis axis = SweepAxis::kApCount;
  std::vector<double> xs;
  std::vector<SchedulerKind> schedulers;
  std::vector<RunCell> cells;  // x-major, scheduler-minor

  const RunCell& cell(std::size_t xi, std::size_t si) const {
    return cells[xi * schedulers.size() + si];
  }
};

SweepTable sweep_ap_count(const ScenarioConfig& base, const std::vector<std::size_t>& ap_counts,
                          const std::vector<SchedulerKind>& schedulers);
SweepTable sweep_density(const ScenarioConfig& base, const std::vector<double>& densities,
                         const std::vector<SchedulerKind>& schedulers);

struct SchedulerMean {
  SchedulerKind scheduler = SchedulerKind::kConventional;
  std::size_t runs = 0;  // feasible runs averaged
  std::optional<double> total_rate_gbps;
  std::optional<double> spatial_reuse;
  std::optional<double> fairness_index;
  std::optional<double> complexity_switchings;
  std::optional<double> alpha_mean;
};

struct SchedulerRatio {
  SchedulerKind numerator = SchedulerKind::kIsJpfs;
  SchedulerKind denominator = SchedulerKind::kConventional;
  std::optional<double> total_rate;
  std::optional<double> spatial_reuse;
  std::optional<double> fairness_index;
};

// IS objective over ES objective on identical per-slot state (ES drives PF).
struct ObjectiveRatio {
  std::uint64_t seed = 0;
  std::size_t slots = 0;
  double mean = 0.0;
  double min = 0.0;
};

struct CompareReport {
  std::vector<SchedulerKind> schedulers;
  std::vector<std::uint64_t> seeds;
  std::vector<RunCell> cells;  // seed-major, scheduler-minor
  std::vector<SchedulerMean> means;
  std::vector<SchedulerRatio> ratios;
  std::vector<ObjectiveRatio> objective_ratios;
};

CompareReport compare(const ScenarioConfig& config, const std::vector<SchedulerKind>& schedulers,
                      const std::vector<std::uint64_t>& seeds);

// Runs ES for the config and, every slot, IS on the same PF state.
ObjectiveRatio paired_objective_ratio(const ScenarioConfig& config);

}  // namespace jpfs
