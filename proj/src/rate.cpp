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

#include "jpfs/rate.hpp"

#include <cmath>
#include <numeric>
#include <string>

#include "jpfs/error.hpp"

namespace jpfs {

double thermal_noise_dbm(double bandwidth_hz, double noise_figure_db) {
  return -174.0 + 10.0 * std::log10(bandwidth_hz) + noise_figure_db;
}

void RadioParams::validate() const {
  if (!(bandwidth_hz > 0.0)) throw DomainError("bandwidth_hz must be positive");
  if (!(bw_efficiency > 0.0 && bw_efficiency <= 1.0))
    throw DomainError("bw_efficiency must lie in (0, 1]");
  if (!(snr_efficiency > 0.0 && snr_efficiency <= 1.0))
    throw DomainError("snr_efficiency must lie in (0, 1]");
  if (!std::isfinite(noise_power_dbm)) throw DomainError("noise_power_dbm must be finite");
}

std::size_t Pattern::num_active() const {
  std::size_t n = 0;
  for (const auto& l : links) n += l.has_value() ? 1 : 0;
  return n;
}

void Pattern::validate(std::size_t num_ues, std::size_t num_beams) const {
  std::vector<bool> used(num_ues, false);
  for (std::size_t m = 0; m < links.size(); ++m) {
    if (!links[m]) continue;
    const Link& l = *links[m];
    if (l.user >= num_ues || l.beam >= num_beams)
      throw ContractError("pattern link " + std::to_string(m) + " is out of range");
    if (used[l.user])
      throw ContractError("user " + std::to_string(l.user) + " appears on two links");
    used[l.user] = true;
  }
}

double PatternRates::sum_rate_bps() const {
  return std::accumulate(per_link_rate_bps.begin(), per_link_rate_bps.end(), 0.0);
}

double PatternRates::sum_iso_rate_bps() const {
  return std::accumulate(per_link_iso_rate_bps.begin(), per_link_iso_rate_bps.end(), 0.0);
}

double link_rate_bps(double sinr, const RadioParams& radio) {
  if (!(sinr >= 0.0)) throw DomainError("SINR must be non-negative");
  return radio.bw_efficiency * radio.bandwidth_hz * std::log2(1.0 + radio.snr_efficiency * sinr);
}

double sinr_linear(double signal_dbm, std::span<const double> interferer_dbm, double noise_dbm) {
  double interference = 0.0;
  for (const double i : interferer_dbm) interference += dbm_to_mw(i);
  return dbm_to_mw(signal_dbm) / (dbm_to_mw(noise_dbm) + interference);
}

PatternRates evaluate_pattern(const Pattern& pattern, const PowerTable& power,
                              const RadioParams& radio) {
  pattern.validate(power.num_ues(), power.num_beams());
  const std::size_t num_aps = pattern.num_aps();
  const double noise_mw = dbm_to_mw(radio.noise_power_dbm);

  PatternRates out;
  out.per_link_rate_bps.assign(num_aps, 0.0);
  out.per_link_iso_rate_bps.assign(num_aps, 0.0);
  for (std::size_t m = 0; m < num_aps; ++m) {
    if (!pattern.links[m]) continue;
    const Link& own = *pattern.links[m];
    double interference = 0.0;
    for (std::size_t j = 0; j < num_aps; ++j) {
      if (j == m || !pattern.links[j]) continue;
      interference += power.mw(j, own.user, pattern.links[j]->beam);
    }
    const double signal = power.mw(m, own.user, own.beam);
    out.per_link_rate_bps[m] = link_rate_bps(sinr_from_mw(signal, interference, noise_mw), radio);
    out.per_link_iso_rate_bps[m] = link_rate_bps(sinr_from_mw(signal, 0.0, noise_mw), radio);
  }
  return out;
}

double pf_objective(const Pattern& pattern, const PatternRates& rates,
                    std::span<const double> avg_rate_bps) {
  double total = 0.0;
  for (std::size_t m = 0; m < pattern.num_aps(); ++m) {
    if (!pattern.links[m]) continue;
    const double avg = avg_rate_bps[pattern.links[m]->user];
    if (!(avg > 0.0)) throw ContractError("PF objective needs positive average rates");
    total += rates.per_link_rate_bps[m] / avg;
  }
  return total;
}

double pf_objective(const Pattern& pattern, const PowerTable& power, const RadioParams& radio,
                    std::span<const double> avg_rate_bps) {
  return pf_objective(pattern, evaluate_pattern(pattern, power, radio), avg_rate_bps);
}

}  // namespace jpfs
