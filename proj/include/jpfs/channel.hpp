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

// Link budget: sectored 3D beam gain, log-distance pathloss with quasi-static
// shadowing, and i.i.d. per-slot human-body blockage.

#pragma once

#include <cmath>
#include <cstddef>
#include <cstdint>
#include <vector>

#include "jpfs/geometry.hpp"

namespace jpfs {

struct ChannelParams {
  double tx_power_dbm = 10.0;
  double pl_ref_db = 68.0;  // free space at 1 m, 60 GHz
  double ref_dist_m = 1.0;
  double pl_exponent = 2.0;
  double shadow_sigma_db = 1.5;
  double block_prob = 0.5;
  double block_loss_db = 30.0;

  void validate() const;
  friend bool operator==(const ChannelParams&, const ChannelParams&) = default;
};

// Random channel state for one run. Shadowing is drawn once per (AP, UE)
// pair; blockage once per (slot, AP, UE).
class ChannelRealization {
 public:
  ChannelRealization() = default;
  ChannelRealization(std::size_t num_aps, std::size_t num_ues, std::size_t num_slots);

  std::size_t num_aps() const { return num_aps_; }
  std::size_t num_ues() const { return num_ues_; }
  std::size_t num_slots() const { return num_slots_; }

  double shadow_db(std::size_t ap, std::size_t ue) const { return shadow_db_[ap * num_ues_ + ue]; }
  double& shadow_db(std::size_t ap, std::size_t ue) { return shadow_db_[ap * num_ues_ + ue]; }

  bool blocked(std::size_t slot, std::size_t ap, std::size_t ue) const {
    return blocked_[(slot * num_aps_ + ap) * num_ues_ + ue] != 0;
  }
  void set_blocked(std::size_t slot, std::size_t ap, std::size_t ue, bool value) {
    blocked_[(slot * num_aps_ + ap) * num_ues_ + ue] = value ? 1 : 0;
  }

 private:
  std::size_t num_aps_ = 0;
  std::size_t num_ues_ = 0;
  std::size_t num_slots_ = 0;
  std::vector<double> shadow_db_;
  std::vector<std::uint8_t> blocked_;
};

// Boresight gain G_o = 20 log10(1.6162 / sin(el_beamwidth / 2)), dB.
double boresight_gain_db(double el_beamwidth_deg);

// Gain toward (azimuth, elevation) of a beam, in [-12, G_o] dB. The azimuth
// offset is taken on the circle.
double beam_gain_db(const Beam& beam, double azimuth_deg, double elevation_deg,
                    double az_beamwidth_deg, double el_beamwidth_deg);

inline double beam_gain_db(const Beam& beam, const DepartureAngles& aod, const BeamCodebook& cb) {
  return beam_gain_db(beam, aod.azimuth_deg, aod.elevation_deg, cb.az_beamwidth_deg,
                      cb.el_beamwidth_deg);
}

// PL_o(d_o) + 10 n log10(d / d_o) + shadow. Throws DomainError for d <= 0.
double pathloss_db(double distance_m, const ChannelParams& params, double shadow_db);

// P_t + G - PL - blockage. The UE antenna is quasi-omni (0 dBi).
double received_power_dbm(const Vec3& ap, const Vec3& ue, const Beam& beam,
                          const BeamCodebook& codebook, const ChannelParams& params,
                          double shadow_db, bool blocked);

ChannelRealization realize(const ChannelParams& params, std::size_t num_aps, std::size_t num_ues,
                           std::size_t num_slots, std::uint64_t seed);

inline double dbm_to_mw(double dbm) { return std::pow(10.0, dbm / 10.0); }

// Received power for every (AP, UE, beam) triple in one slot, linear mW.
class PowerTable {
 public:
  PowerTable() = default;
  PowerTable(std::size_t num_aps, std::size_t num_ues, std::size_t num_beams)
      : num_aps_(num_aps), num_ues_(num_ues), num_beams_(num_beams),
        mw_(num_aps * num_ues * num_beams, 0.0) {}

  std::size_t num_aps() const { return num_aps_; }
  std::size_t num_ues() const { return num_ues_; }
  std::size_t num_beams() const { return num_beams_; }

  double mw(std::size_t ap, std::size_t ue, std::size_t beam) const {
    return mw_[index(ap, ue, beam)];
  }
  double& mw(std::size_t ap, std::size_t ue, std::size_t beam) { return mw_[index(ap, ue, beam)]; }

 private:
  std::size_t index(std::size_t ap, std::size_t ue, std::size_t beam) const {
    return (ap * num_ues_ + ue) * num_beams_ + beam;
  }

  std::size_t num_aps_ = 0;
  std::size_t num_ues_ = 0;
  std::size_t num_beams_ = 0;
  std::vector<double> mw_;
};

// Geometry-only part of the link budget, evaluated once per run; per-slot
// tables are derived by applying shadowing and blockage.
class LinkBudget {
 public:
  LinkBudget(const Placement& placement, const BeamCodebook& codebook, const ChannelParams& params);

  std::size_t num_aps() const { return num_aps_; }
  std::size_t num_ues() const { return num_ues_; }
  std::size_t num_beams() const { return num_beams_; }

  // Shadow-free, unblocked received power, dBm.
  double expected_dbm(std::size_t ap, std::size_t ue, std::size_t beam) const {
    return expected_dbm_[(ap * num_ues_ + ue) * num_beams_ + beam];
  }

  PowerTable expected_table() const;
  PowerTable slot_table(const ChannelRealization& realization, std::size_t slot) const;

 private:
  std::size_t num_aps_;
  std::size_t num_ues_;
  std::size_t num_beams_;
  double block_loss_db_;
  std::vector<double> expected_dbm_;
};

}  // namespace jpfs
