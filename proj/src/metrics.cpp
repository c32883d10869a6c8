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

#include "jpfs/metrics.hpp"

#include "jpfs/error.hpp"

namespace jpfs {

std::optional<double> spatial_reuse(std::span<const PatternRates> slots, std::size_t num_active) {
  double concurrent = 0.0;
  double isolated = 0.0;
  for (const PatternRates& r : slots) {
    concurrent += r.sum_rate_bps();
    isolated += r.sum_iso_rate_bps();
  }
  if (!(isolated > 0.0) || num_active == 0) return std::nullopt;
  return concurrent / (isolated / static_cast<double>(num_active));
}

std::optional<double> fairness_index(std::span<const double> per_user_rate) {
  double sum = 0.0;
  double sum_sq = 0.0;
  for (const double r : per_user_rate) {
    sum += r;
    sum_sq += r * r;
  }
  if (per_user_rate.empty() || !(sum_sq > 0.0)) return std::nullopt;
  return sum * sum / (static_cast<double>(per_user_rate.size()) * sum_sq);
}

std::vector<double> accumulate_user_rates(std::span<const Pattern> patterns,
                                          std::span<const PatternRates> rates,
                                          std::size_t num_ues) {
  if (patterns.size() != rates.size()) throw ContractError("pattern and rate traces differ in length");
  std::vector<double> total(num_ues, 0.0);
  for (std::size_t n = 0; n < patterns.size(); ++n) {
    const Pattern& p = patterns[n];
    for (std::size_t m = 0; m < p.num_aps(); ++m) {
      if (p.links[m]) total.at(p.links[m]->user) += rates[n].per_link_rate_bps[m];
    }
  }
  return total;
}

ComplexitySummary complexity_summary(SchedulerKind kind, const ComplexityLedger& ledger,
                                     std::size_t num_ues, std::size_t num_active,
                                     std::size_t num_beams, std::size_t num_slots) {
  ComplexitySummary out;
  out.measured_switchings = ledger.beam_switch_count;
  const double slots = static_cast<double>(num_slots);
  switch (kind) {
    case SchedulerKind::kConventional:
      out.predicted_switchings = conventional_complexity(num_beams, num_active);
      break;
    case SchedulerKind::kEsJpfs:
      out.predicted_switchings = es_complexity(num_ues, num_active, num_beams) * slots;
      break;
    case SchedulerKind::kIsJpfs:
      if (num_slots > 0) out.alpha_mean = static_cast<double>(ledger.is_iterations) / slots;
      out.predicted_switchings = is_complexity(out.alpha_mean.value_or(0.0), num_beams, num_active) * slots;
      break;
  }
  return out;
}

MetricsReport summarize_run(SchedulerKind kind, std::span<const Pattern> patterns,
                            std::span<const PatternRates> rates, const ComplexityLedger& ledger,
                            std::size_t num_ues, std::size_t num_active, std::size_t num_beams) {
  MetricsReport out;
  out.per_user_rate_bps = accumulate_user_rates(patterns, rates, num_ues);
  if (!rates.empty()) {
    double sum = 0.0;
    for (const PatternRates& r : rates) sum += r.sum_rate_bps();
    out.total_rate_gbps = sum / static_cast<double>(rates.size()) / 1e9;
  }
  out.spatial_reuse = spatial_reuse(rates, num_active);
  out.fairness_index = fairness_index(out.per_user_rate_bps);
  const ComplexitySummary c =
      complexity_summary(kind, ledger, num_ues, num_active, num_beams, patterns.size());
  out.complexity_switchings = c.measured_switchings;
  out.predicted_switchings = c.predicted_switchings;
  out.alpha_mean = c.alpha_mean;
  return out;
}

}  // namespace jpfs
