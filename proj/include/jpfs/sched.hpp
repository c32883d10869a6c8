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

// Per-slot schedulers and the proportional-fair state machine.
//
//   Conventional  max-power association once per run, then independent
//                 round robin in every AP.
//   EsJpfs        exhaustive joint search over ordered user selections and
//                 beam tuples, maximizing sum(R_k(n) / Rbar_k(n-1)).
//   IsJpfs        link-by-link coordinate ascent on the same objective,
//                 repeated until the relative gain of an iteration <= delta_th.
//
// Complexity is counted in beam switchings:
//   conventional  B * M          (once per run)
//   ES            K!/(K-M)! * B^M (per slot)
//   IS            alpha * B * M   (per slot, alpha = iterations)

#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "jpfs/channel.hpp"
#include "jpfs/rate.hpp"

namespace jpfs {

struct PfState {
  std::vector<double> avg_rate_bps;
  std::uint64_t slot_index = 0;
  double epsilon_bps = 1e3;

  static PfState initial(std::size_t num_ues, double epsilon_bps);
};

// Rbar_k(n) = (1 - 1/n) Rbar_k(n-1) + (1/n) R_k(n), floored at epsilon.
// Unscheduled users carry rate 0. Throws ContractError on negative rates.
PfState pf_update(const PfState& state, std::span<const double> instantaneous_rate_bps);
void pf_update_in_place(PfState& state, std::span<const double> instantaneous_rate_bps);

struct ComplexityLedger {
  std::uint64_t beam_switch_count = 0;
  std::uint64_t is_iterations = 0;
  std::vector<std::uint64_t> per_slot_switches;
  std::vector<std::uint32_t> per_slot_iterations;
};

enum class SchedulerKind { kConventional, kEsJpfs, kIsJpfs };

// "conv" | "es" | "is"
std::string_view to_string(SchedulerKind kind);
// Accepts the short names plus "conventional", "es-jpfs", "is-jpfs".
std::optional<SchedulerKind> parse_scheduler_kind(std::string_view name);

struct SchedulerOptions {
  double delta_th = 0.1;
  double epsilon_bps = 1e3;
  std::size_t is_max_iterations = 1000;
  // Refuse ES when K!/(K-M)! * B^M exceeds this many patterns.
  double es_budget = 1e8;
  // Order in which IS visits the active APs (AP indices); empty = ascending.
  std::vector<std::size_t> is_visit_order;

  void validate() const;
};

// Closed forms, as doubles (they overflow integers quickly).
double conventional_complexity(std::size_t num_beams, std::size_t num_aps);
double es_complexity(std::size_t num_ues, std::size_t num_aps, std::size_t num_beams);
double is_complexity(double alpha, std::size_t num_beams, std::size_t num_aps);

// One slot's inputs: the channel, the radio and the set of APs that may
// transmit (ascending AP indices into the power table).
struct SlotContext {
  const PowerTable& power;
  const RadioParams& radio;
  std::span<const std::size_t> active_aps;
};

struct Association {
  // Per UE: serving AP and beam.
  std::vector<std::size_t> ap_of_ue;
  std::vector<std::size_t> beam_of_ue;
  // Per AP (all APs, inactive ones empty): associated UEs, ascending.
  std::vector<std::vector<std::size_t>> ues_of_ap;
};

// Max expected (shadow-free, unblocked) received power over active APs and
// beams; ties go to the lowest (AP, beam). Charges B * M switchings.
Association conventional_associate(const LinkBudget& budget, std::span<const std::size_t> active_aps,
                                   ComplexityLedger& ledger);

// Each AP serves the next UE of its association list; APs without UEs idle.
Pattern conventional_slot(const Association& association, std::vector<std::size_t>& cursors);

struct EsResult {
  Pattern pattern;
  double objective = 0.0;
};

// Throws ScenarioError when K < active APs.
EsResult es_jpfs_slot(const SlotContext& ctx, const PfState& pf, ComplexityLedger& ledger);

struct IsResult {
  Pattern pattern;
  double objective = 0.0;
  std::size_t iterations = 0;
  // Objective of the full pattern after each iteration.
  std::vector<double> objective_trace;
};

IsResult is_jpfs_slot(const SlotContext& ctx, const PfState& pf, const SchedulerOptions& options,
                      ComplexityLedger& ledger);

struct SlotOutcome {
  Pattern pattern;
  PatternRates rates;
  double objective = 0.0;  // PF objective against Rbar(n-1)
  std::size_t iterations = 0;
};

// Owns the per-run scheduler state: association and round-robin cursors for
// the conventional scheme, and the complexity ledger for all three.
class Scheduler {
 public:
  Scheduler(SchedulerKind kind, SchedulerOptions options, const LinkBudget& budget,
            std::vector<std::size_t> active_aps);

  SchedulerKind kind() const { return kind_; }
  const ComplexityLedger& ledger() const { return ledger_; }
  const std::optional<Association>& association() const { return association_; }
  std::span<const std::size_t> active_aps() const { return active_aps_; }

  // Picks the slot's pattern, evaluates it and advances the PF state.
  SlotOutcome run_slot(const PowerTable& power, const RadioParams& radio, PfState& pf);

 private:
  SchedulerKind kind_;
  SchedulerOptions options_;
  std::vector<std::size_t> active_aps_;
  std::optional<Association> association_;
  std::vector<std::size_t> cursors_;
  ComplexityLedger ledger_;
};

}  // namespace jpfs
