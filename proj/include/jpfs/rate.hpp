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

// SINR, modified-Shannon link rates and evaluation of concurrent patterns.
// All arithmetic is in linear units; dB only appears at the boundary.

#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "jpfs/channel.hpp"

namespace jpfs {

// Thermal noise over a bandwidth plus receiver noise figure, dBm.
double thermal_noise_dbm(double bandwidth_hz, double noise_figure_db);

inline constexpr double kDefaultNoiseFigureDb = 7.0;

struct RadioParams {
  double bandwidth_hz = 2.16e9;
  double bw_efficiency = 0.6;
  double snr_efficiency = 1.0;
  double noise_power_dbm = thermal_noise_dbm(2.16e9, kDefaultNoiseFigureDb);

  void validate() const;
  friend bool operator==(const RadioParams&, const RadioParams&) = default;
};

struct Link {
  std::size_t user = 0;
  std::size_t beam = 0;

  friend bool operator==(const Link&, const Link&) = default;
};

// One entry per AP; nullopt marks an AP that transmits nothing this slot.
struct Pattern {
  std::vector<std::optional<Link>> links;

  Pattern() = default;
  explicit Pattern(std::size_t num_aps) : links(num_aps) {}

  std::size_t num_aps() const { return links.size(); }
  std::size_t num_active() const;
  // Throws ContractError when two active links share a user.
  void validate(std::size_t num_ues, std::size_t num_beams) const;

  friend bool operator==(const Pattern&, const Pattern&) = default;
};

struct PatternRates {
  std::vector<double> per_link_rate_bps;      // with interference
  std::vector<double> per_link_iso_rate_bps;  // interference removed

  double sum_rate_bps() const;
  double sum_iso_rate_bps() const;
};

// eta_BW * BW * log2(1 + eta_SNR * sinr). Throws DomainError for sinr < 0.
double link_rate_bps(double sinr_linear, const RadioParams& radio);

double sinr_linear(double signal_dbm, std::span<const double> interferer_dbm, double noise_dbm);

// Linear-domain SINR used on the hot path.
inline double sinr_from_mw(double signal_mw, double interference_mw, double noise_mw) {
  return signal_mw / (noise_mw + interference_mw);
}

// Rates of every active link under the slot's power table. Each active AP's
// signal reaches every other active link's user as interference.
PatternRates evaluate_pattern(const Pattern& pattern, const PowerTable& power,
                              const RadioParams& radio);

// Sum over active links of rate / average rate of the link's user.
double pf_objective(const Pattern& pattern, const PatternRates& rates,
                    std::span<const double> avg_rate_bps);

double pf_objective(const Pattern& pattern, const PowerTable& power, const RadioParams& radio,
                    std::span<const double> avg_rate_bps);

}  // namespace jpfs
