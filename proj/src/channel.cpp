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

#include "jpfs/channel.hpp"

#include <algorithm>
#include <numbers>
#include <random>

#include "jpfs/error.hpp"
#include "jpfs/random.hpp"

namespace jpfs {
namespace {

constexpr double kDegToRad = std::numbers::pi / 180.0;

// Sidelobe floor relative to boresight.
constexpr double kSidelobeFloorDb = 12.0;

double sector_attenuation_db(double offset_deg, double beamwidth_deg, double cap_db) {
  const double ratio = offset_deg / beamwidth_deg;
  return std::min(12.0 * ratio * ratio, cap_db);
}

}  // namespace

void ChannelParams::validate() const {
  if (!(ref_dist_m > 0.0)) throw DomainError("ref_dist_m must be positive");
  if (!(pl_exponent > 0.0)) throw DomainError("pl_exponent must be positive");
  if (!(shadow_sigma_db >= 0.0)) throw DomainError("shadow_sigma_db must be non-negative");
  if (!(block_prob >= 0.0 && block_prob <= 1.0)) throw DomainError("block_prob must lie in [0, 1]");
  if (!(block_loss_db >= 0.0)) throw DomainError("block_loss_db must be non-negative");
  if (!std::isfinite(tx_power_dbm) || !std::isfinite(pl_ref_db))
    throw DomainError("tx_power_dbm and pl_ref_db must be finite");
}

ChannelRealization::ChannelRealization(std::size_t num_aps, std::size_t num_ues,
                                       std::size_t num_slots)
    : num_aps_(num_aps), num_ues_(num_ues), num_slots_(num_slots),
      shadow_db_(num_aps * num_ues, 0.0), blocked_(num_slots * num_aps * num_ues, 0) {}

double boresight_gain_db(double el_beamwidth_deg) {
  return 20.0 * std::log10(1.6162 / std::sin(el_beamwidth_deg / 2.0 * kDegToRad));
}

double beam_gain_db(const Beam& beam, double azimuth_deg, double elevation_deg,
                    double az_beamwidth_deg, double el_beamwidth_deg) {
  const double g0 = boresight_gain_db(el_beamwidth_deg);
  const double cap = kSidelobeFloorDb + g0;
  const double horizontal = -sector_attenuation_db(
      azimuth_offset(azimuth_deg, beam.azimuth_center_deg), az_beamwidth_deg, cap);
  const double vertical =
      -sector_attenuation_db(elevation_deg - beam.elevation_center_deg, el_beamwidth_deg, cap);
  return g0 - std::min(-(horizontal + vertical), cap);
}

double pathloss_db(double distance_m, const ChannelParams& params, double shadow_db) {
  if (!(distance_m > 0.0)) throw DomainError("pathloss distance must be positive");
  return params.pl_ref_db + 10.0 * params.pl_exponent * std::log10(distance_m / params.ref_dist_m) +
         shadow_db;
}

double received_power_dbm(const Vec3& ap, const Vec3& ue, const Beam& beam,
                          const BeamCodebook& codebook, const ChannelParams& params,
                          double shadow_db, bool blocked) {
  const DepartureAngles aod = departure_angles(ap, ue);
  const double gain = beam_gain_db(beam, aod, codebook);
  const double loss = pathloss_db(aod.distance_m, params, shadow_db);
  return params.tx_power_dbm + gain - loss - (blocked ? params.block_loss_db : 0.0);
}

ChannelRealization realize(const ChannelParams& params, std::size_t num_aps, std::size_t num_ues,
                           std::size_t num_slots, std::uint64_t seed) {
  params.validate();
  ChannelRealization out(num_aps, num_ues, num_slots);

  if (params.shadow_sigma_db > 0.0) {
    auto rng = make_stream(seed, Stream::kShadowing);
    std::normal_distribution<double> normal(0.0, params.shadow_sigma_db);
    for (std::size_t m = 0; m < num_aps; ++m)
      for (std::size_t k = 0; k < num_ues; ++k) out.shadow_db(m, k) = normal(rng);
  }

  // Slot-major: a longer run extends a shorter one.
  if (params.block_prob > 0.0) {
    auto rng = make_stream(seed, Stream::kBlockage);
    std::bernoulli_distribution coin(params.block_prob);
    for (std::size_t n = 0; n < num_slots; ++n)
      for (std::size_t m = 0; m < num_aps; ++m)
        for (std::size_t k = 0; k < num_ues; ++k) out.set_blocked(n, m, k, coin(rng));
  }
  return out;
}

LinkBudget::LinkBudget(const Placement& placement, const BeamCodebook& codebook,
                       const ChannelParams& params)
    : num_aps_(placement.num_aps()), num_ues_(placement.num_ues()), num_beams_(codebook.size()),
      block_loss_db_(params.block_loss_db), expected_dbm_(num_aps_ * num_ues_ * num_beams_) {
  codebook.validate();
  params.validate();
  for (std::size_t m = 0; m < num_aps_; ++m) {
    for (std::size_t k = 0; k < num_ues_; ++k) {
      const DepartureAngles aod = departure_angles(placement.ap_positions[m], placement.ue_positions[k]);
      const double loss = pathloss_db(aod.distance_m, params, 0.0);
      for (std::size_t b = 0; b < num_beams_; ++b) {
        const double gain = beam_gain_db(codebook.beams[b], aod, codebook);
        expected_dbm_[(m * num_ues_ + k) * num_beams_ + b] = params.tx_power_dbm + gain - loss;
      }
    }
  }
}

PowerTable LinkBudget::expected_table() const {
  PowerTable table(num_aps_, num_ues_, num_beams_);
  for (std::size_t m = 0; m < num_aps_; ++m)
    for (std::size_t k = 0; k < num_ues_; ++k)
      for (std::size_t b = 0; b < num_beams_; ++b) table.mw(m, k, b) = dbm_to_mw(expected_dbm(m, k, b));
  return table;
}

PowerTable LinkBudget::slot_table(const ChannelRealization& realization, std::size_t slot) const {
  PowerTable table(num_aps_, num_ues_, num_beams_);
  for (std::size_t m = 0; m < num_aps_; ++m) {
    for (std::size_t k = 0; k < num_ues_; ++k) {
      const double offset = realization.shadow_db(m, k) +
                            (realization.blocked(slot, m, k) ? block_loss_db_ : 0.0);
      for (std::size_t b = 0; b < num_beams_; ++b)
        table.mw(m, k, b) = dbm_to_mw(expected_dbm(m, k, b) - offset);
    }
  }
  return table;
}

}  // namespace jpfs
