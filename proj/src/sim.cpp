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

#include "jpfs/sim.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <limits>
#include <thread>

#include "jpfs/error.hpp"

namespace jpfs {
namespace {

std::size_t codebook_size(double beamwidth_deg) {
  return static_cast<std::size_t>(std::ceil(360.0 / beamwidth_deg - 1e-12));
}

template <typename T>
std::optional<double> mean_of(const std::vector<T>& values) {
  if (values.empty()) return std::nullopt;
  double sum = 0.0;
  for (const auto& v : values) sum += static_cast<double>(v);
  return sum / static_cast<double>(values.size());
}

std::optional<double> ratio_of(std::optional<double> a, std::optional<double> b) {
  if (!a || !b || !(*b != 0.0)) return std::nullopt;
  return *a / *b;
}

}  // namespace

void ScenarioConfig::validate() const {
  room.validate();
  channel.validate();
  radio.validate();
  scheduler.validate();
  if (!(codebook.beamwidth_deg > 0.0) || codebook.beamwidth_deg > 360.0)
    throw DomainError("codebook beamwidth must lie in (0, 360]");
  if (!std::isfinite(codebook.downtilt_deg)) throw DomainError("codebook downtilt must be finite");

  if (ap_positions.empty()) throw ScenarioError("scenario has no APs");
  Placement placement{ap_positions, users.positions};
  placement.validate(room);

  if (active_aps.empty()) throw ScenarioError("at least one AP must be active");
  std::vector<std::size_t> sorted = active_aps;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw ScenarioError("active AP list contains duplicates");
  if (sorted.back() >= ap_positions.size())
    throw ScenarioError("active AP index " + std::to_string(sorted.back()) + " does not exist");

  const bool has_density = users.density_per_m2.has_value();
  const bool has_positions = !users.positions.empty();
  if (has_density == has_positions)
    throw ScenarioError("users need exactly one of density_per_m2 or positions");
  if (has_density && !(*users.density_per_m2 > 0.0)) throw DomainError("user density must be positive");

  const std::size_t k = num_ues();
  if (k < active_aps.size()) {
    throw ScenarioError(std::to_string(k) + " UEs are fewer than the " +
                        std::to_string(active_aps.size()) + " active APs");
  }
}

std::size_t ScenarioConfig::num_ues() const {
  if (users.density_per_m2) return ue_count_for_density(room, *users.density_per_m2);
  return users.positions.size();
}

std::vector<std::uint64_t> ScenarioConfig::compare_seeds() const {
  if (!compare.seeds.empty()) return compare.seeds;
  std::vector<std::uint64_t> seeds;
  for (std::size_t i = 0; i < compare.num_seeds; ++i) seeds.push_back(seed + i);
  return seeds;
}

Scenario build_scenario(const ScenarioConfig& config) {
  config.validate();
  Scenario s;
  s.room = config.room;
  s.placement.ap_positions = config.ap_positions;
  s.placement.ue_positions =
      config.users.density_per_m2
          ? drop_ues(config.room, *config.users.density_per_m2, config.seed, config.active_aps.size())
          : config.users.positions;
  s.active_aps = config.active_aps;
  std::sort(s.active_aps.begin(), s.active_aps.end());
  s.codebook = uniform_codebook(config.codebook.beamwidth_deg, config.codebook.downtilt_deg);
  s.channel = config.channel;
  s.radio = config.radio;
  return s;
}

double predicted_es_patterns(const ScenarioConfig& config) {
  return es_complexity(config.num_ues(), config.active_aps.size(),
                       codebook_size(config.codebook.beamwidth_deg));
}

bool es_within_budget(const ScenarioConfig& config) {
  return predicted_es_patterns(config) <= config.scheduler.es_budget;
}

RunResult run(const ScenarioConfig& config, SchedulerKind kind) {
  const Scenario scenario = build_scenario(config);
  if (kind == SchedulerKind::kEsJpfs && !es_within_budget(config)) {
    throw ScenarioError("exhaustive search over " + std::to_string(predicted_es_patterns(config)) +
                        " patterns per slot exceeds the budget of " +
                        std::to_string(config.scheduler.es_budget));
  }

  const std::size_t num_ues = scenario.placement.num_ues();
  const LinkBudget budget(scenario.placement, scenario.codebook, scenario.channel);
  const ChannelRealization channel =
      realize(scenario.channel, scenario.placement.num_aps(), num_ues, config.n_slots, config.seed);
  Scheduler scheduler(kind, config.scheduler, budget, scenario.active_aps);
  PfState pf = PfState::initial(num_ues, config.scheduler.epsilon_bps);

  std::vector<Pattern> patterns;
  std::vector<PatternRates> rates;
  patterns.reserve(config.n_slots);
  rates.reserve(config.n_slots);

  RunResult out;
  for (std::size_t n = 0; n < config.n_slots; ++n) {
    const PowerTable table = budget.slot_table(channel, n);
    SlotOutcome slot = scheduler.run_slot(table, scenario.radio, pf);
    if (config.trace) {
      out.trace.push_back({slot.pattern, slot.rates.sum_rate_bps(), slot.objective, slot.iterations});
    }
    patterns.push_back(std::move(slot.pattern));
    rates.push_back(std::move(slot.rates));
  }

  out.config = config;
  out.config.schedulers = {kind};
  out.scheduler = kind;
  out.num_active = scenario.active_aps.size();
  out.num_ues = num_ues;
  out.num_beams = scenario.codebook.size();
  out.ledger = scheduler.ledger();
  out.metrics = summarize_run(kind, patterns, rates, out.ledger, num_ues, out.num_active,
                              out.num_beams);
  return out;
}

RunCell run_cell(const ScenarioConfig& config, SchedulerKind kind, double x) {
  config.validate();
  RunCell cell;
  cell.x = x;
  cell.scheduler = kind;
  cell.seed = config.seed;
  cell.num_active = config.active_aps.size();
  cell.num_ues = config.num_ues();
  cell.density = config.users.density_per_m2;
  cell.predicted_es_patterns = predicted_es_patterns(config);
  if (kind == SchedulerKind::kEsJpfs && !es_within_budget(config)) return cell;
  cell.result = run(config, kind);
  return cell;
}

std::vector<RunCell> run_cells(const std::vector<ScenarioConfig>& configs,
                               const std::vector<SchedulerKind>& kinds,
                               const std::vector<double>& xs, std::size_t max_threads) {
  const std::size_t n = configs.size();
  if (kinds.size() != n || xs.size() != n) throw ContractError("run_cells inputs differ in length");
  std::vector<RunCell> cells(n);
  std::vector<std::exception_ptr> errors(n);
  std::atomic<std::size_t> next{0};

  auto worker = [&] {
    for (std::size_t i = next++; i < n; i = next++) {
      try {
        cells[i] = run_cell(configs[i], kinds[i], xs[i]);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };

  std::size_t threads = max_threads > 0 ? max_threads : std::max(1u, std::thread::hardware_concurrency());
  threads = std::min(threads, n);
  std::vector<std::thread> pool;
  for (std::size_t t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();

  // First failure by cell index, not by completion order.
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return cells;
}

SweepTable sweep_ap_count(const ScenarioConfig& base, const std::vector<std::size_t>& ap_counts,
                          const std::vector<SchedulerKind>& schedulers) {
  SweepTable table;
  table.axis = SweepAxis::kApCount;
  table.schedulers = schedulers;
  std::vector<ScenarioConfig> configs;
  std::vector<SchedulerKind> kinds;
  std::vector<double> xs;
  for (const std::size_t count : ap_counts) {
    if (count == 0 || count > base.ap_positions.size()) {
      throw ScenarioError("AP count " + std::to_string(count) + " exceeds the " +
                          std::to_string(base.ap_positions.size()) + " available AP positions");
    }
    ScenarioConfig cfg = base;
    cfg.active_aps.clear();
    for (std::size_t m = 0; m < count; ++m) cfg.active_aps.push_back(m);
    if (!base.sweep.ap_count_use_base_users) cfg.users = UserSpec{base.sweep.ap_count_density, {}};
    table.xs.push_back(static_cast<double>(count));
    for (const SchedulerKind kind : schedulers) {
      configs.push_back(cfg);
      kinds.push_back(kind);
      xs.push_back(static_cast<double>(count));
    }
  }
  table.cells = run_cells(configs, kinds, xs);
  return table;
}

SweepTable sweep_density(const ScenarioConfig& base, const std::vector<double>& densities,
                         const std::vector<SchedulerKind>& schedulers) {
  SweepTable table;
  table.axis = SweepAxis::kDensity;
  table.schedulers = schedulers;
  std::vector<ScenarioConfig> configs;
  std::vector<SchedulerKind> kinds;
  std::vector<double> xs;
  for (const double density : densities) {
    if (!(density > 0.0)) throw DomainError("sweep densities must be positive");
    ScenarioConfig cfg = base;
    cfg.active_aps = base.sweep.density_active_aps;
    cfg.users = UserSpec{density, {}};
    table.xs.push_back(density);
    for (const SchedulerKind kind : schedulers) {
      configs.push_back(cfg);
      kinds.push_back(kind);
      xs.push_back(density);
    }
  }
  table.cells = run_cells(configs, kinds, xs);
  return table;
}

ObjectiveRatio paired_objective_ratio(const ScenarioConfig& config) {
  const Scenario scenario = build_scenario(config);
  if (!es_within_budget(config)) throw ScenarioError("exhaustive search exceeds the budget");
  const std::size_t num_ues = scenario.placement.num_ues();
  const LinkBudget budget(scenario.placement, scenario.codebook, scenario.channel);
  const ChannelRealization channel =
      realize(scenario.channel, scenario.placement.num_aps(), num_ues, config.n_slots, config.seed);
  Scheduler es(SchedulerKind::kEsJpfs, config.scheduler, budget, scenario.active_aps);
  PfState pf = PfState::initial(num_ues, config.scheduler.epsilon_bps);

  ObjectiveRatio out;
  out.seed = config.seed;
  out.min = std::numeric_limits<double>::infinity();
  double sum = 0.0;
  for (std::size_t n = 0; n < config.n_slots; ++n) {
    const PowerTable table = budget.slot_table(channel, n);
    ComplexityLedger scratch;
    const IsResult is = is_jpfs_slot({table, scenario.radio, scenario.active_aps}, pf,
                                     config.scheduler, scratch);
    const SlotOutcome slot = es.run_slot(table, scenario.radio, pf);
    if (!(slot.objective > 0.0)) continue;
    const double r = is.objective / slot.objective;
    sum += r;
    out.min = std::min(out.min, r);
    ++out.slots;
  }
  if (out.slots == 0) {
    out.min = 0.0;
    return out;
  }
  out.mean = sum / static_cast<double>(out.slots);
  return out;
}

CompareReport compare(const ScenarioConfig& config, const std::vector<SchedulerKind>& schedulers,
                      const std::vector<std::uint64_t>& seeds) {
  if (seeds.empty()) throw ContractError("compare needs at least one seed");
  CompareReport report;
  report.schedulers = schedulers;
  report.seeds = seeds;

  std::vector<ScenarioConfig> configs;
  std::vector<SchedulerKind> kinds;
  std::vector<double> xs;
  for (const std::uint64_t seed : seeds) {
    ScenarioConfig cfg = config;
    cfg.seed = seed;
    for (const SchedulerKind kind : schedulers) {
      configs.push_back(cfg);
      kinds.push_back(kind);
      xs.push_back(static_cast<double>(seed));
    }
  }
  report.cells = run_cells(configs, kinds, xs);

  for (std::size_t si = 0; si < schedulers.size(); ++si) {
    std::vector<double> rate, rho, fi, complexity, alpha;
    for (std::size_t i = 0; i < seeds.size(); ++i) {
      const RunCell& cell = report.cells[i * schedulers.size() + si];
      if (!cell.result) continue;
      const MetricsReport& m = cell.result->metrics;
      if (m.total_rate_gbps) rate.push_back(*m.total_rate_gbps);
      if (m.spatial_reuse) rho.push_back(*m.spatial_reuse);
      if (m.fairness_index) fi.push_back(*m.fairness_index);
      if (m.alpha_mean) alpha.push_back(*m.alpha_mean);
      complexity.push_back(static_cast<double>(m.complexity_switchings));
    }
    SchedulerMean mean;
    mean.scheduler = schedulers[si];
    mean.runs = complexity.size();
    mean.total_rate_gbps = mean_of(rate);
    mean.spatial_reuse = mean_of(rho);
    mean.fairness_index = mean_of(fi);
    mean.complexity_switchings = mean_of(complexity);
    mean.alpha_mean = mean_of(alpha);
    report.means.push_back(mean);
  }

  auto find_mean = [&](SchedulerKind kind) -> const SchedulerMean* {
    for (const auto& m : report.means)
      if (m.scheduler == kind) return &m;
    return nullptr;
  };
  const std::pair<SchedulerKind, SchedulerKind> pairs[] = {
      {SchedulerKind::kIsJpfs, SchedulerKind::kConventional},
      {SchedulerKind::kEsJpfs, SchedulerKind::kConventional},
      {SchedulerKind::kIsJpfs, SchedulerKind::kEsJpfs},
  };
  for (const auto& [num, den] : pairs) {
    const SchedulerMean* a = find_mean(num);
    const SchedulerMean* b = find_mean(den);
    if (!a || !b || a->runs == 0 || b->runs == 0) continue;
    report.ratios.push_back({num, den, ratio_of(a->total_rate_gbps, b->total_rate_gbps),
                             ratio_of(a->spatial_reuse, b->spatial_reuse),
                             ratio_of(a->fairness_index, b->fairness_index)});
  }

  if (find_mean(SchedulerKind::kIsJpfs) && find_mean(SchedulerKind::kEsJpfs)) {
    for (const std::uint64_t seed : seeds) {
      ScenarioConfig cfg = config;
      cfg.seed = seed;
      if (!es_within_budget(cfg)) continue;
      report.objective_ratios.push_back(paired_objective_ratio(cfg));
    }
  }
  return report;
}

}  // namespace jpfs
