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

#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "jpfs/rate.hpp"
#include "jpfs/sched.hpp"

namespace jpfs {

// Run totals: concurrent sum rate over (isolated sum rate / num_active).
// Absent when no isolated rate was ever recorded.
std::optional<double> spatial_reuse(std::span<const PatternRates> slots, std::size_t num_active);

// Jain index (sum r)^2 / (K sum r^2). Absent for an empty or all-zero vector.
std::optional<double> fairness_index(std::span<const double> per_user_rate);

// r_k: each user's served rate summed over all slots and APs.
std::vector<double> accumulate_user_rates(std::span<const Pattern> patterns,
                                          std::span<const PatternRates> rates,
                                          std::size_t num_ues);

struct ComplexitySummary {
  std::uint64_t measured_switchings = 0;
  double predicted_switchings = 0.0;  // closed form over the whole run
  std::optional<double> alpha_mean;   // IS only
};

ComplexitySummary complexity_summary(SchedulerKind kind, const ComplexityLedger& ledger,
                                     std::size_t num_ues, std::size_t num_active,
                                     std::size_t num_beams, std::size_t num_slots);

struct MetricsReport {
  std::optional<double> total_rate_gbps;  // mean over slots of the pattern sum rate
  std::optional<double> spatial_reuse;
  std::optional<double> fairness_index;
  std::uint64_t complexity_switchings = 0;
  double predicted_switchings = 0.0;
  std::optional<double> alpha_mean;
  std::vector<double> per_user_rate_bps;
};

MetricsReport summarize_run(SchedulerKind kind, std::span<const Pattern> patterns,
                            std::span<const PatternRates> rates, const ComplexityLedger& ledger,
                            std::size_t num_ues, std::size_t num_active, std::size_t num_beams);

}  // namespace jpfs
