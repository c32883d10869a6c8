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

#include "jpfs/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "jpfs/error.hpp"
#include "jpfs/random.hpp"

namespace jpfs {
namespace {

constexpr double kRadToDeg = 180.0 / std::numbers::pi;
constexpr double kPositionTolerance = 1e-9;

std::string to_string(const Vec3& p) {
  return "(" + std::to_string(p.x) + ", " + std::to_string(p.y) + ", " + std::to_string(p.z) + ")";
}

}  // namespace

void Room::validate() const {
  if (!(length_m > 0.0) || !(width_m > 0.0) || !(height_m > 0.0))
    throw DomainError("room dimensions must be positive");
  if (!(ue_height_m > 0.0) || !(ue_height_m < height_m))
    throw DomainError("ue_height_m must lie strictly between floor and ceiling");
}

bool Room::contains(const Vec3& p) const {
  const double t = kPositionTolerance;
  return p.x >= -t && p.x <= length_m + t && p.y >= -t && p.y <= width_m + t &&
         p.z >= -t && p.z <= height_m + t;
}

void Placement::validate(const Room& room) const {
  for (std::size_t m = 0; m < ap_positions.size(); ++m) {
    const Vec3& p = ap_positions[m];
    if (!room.contains(p))
      throw ScenarioError("AP " + std::to_string(m) + " at " + to_string(p) + " is outside the room");
    if (std::abs(p.z - room.height_m) > kPositionTolerance)
      throw ScenarioError("AP " + std::to_string(m) + " is not at ceiling height");
  }
  for (std::size_t k = 0; k < ue_positions.size(); ++k) {
    const Vec3& p = ue_positions[k];
    if (!room.contains(p))
      throw ScenarioError("UE " + std::to_string(k) + " at " + to_string(p) + " is outside the room");
    if (std::abs(p.z - room.ue_height_m) > kPositionTolerance)
      throw ScenarioError("UE " + std::to_string(k) + " is not at ue_height_m");
  }
}

void BeamCodebook::validate() const {
  if (beams.empty()) throw DomainError("codebook must hold at least one beam");
  if (!(az_beamwidth_deg > 0.0) || az_beamwidth_deg > 360.0)
    throw DomainError("azimuth beamwidth must lie in (0, 360]");
  if (!(el_beamwidth_deg > 0.0) || !(el_beamwidth_deg < 180.0))
    throw DomainError("elevation beamwidth must lie in (0, 180)");
  for (std::size_t b = 1; b < beams.size(); ++b) {
    if (!(beams[b].azimuth_center_deg > beams[b - 1].azimuth_center_deg))
      throw DomainError("beam azimuth centers must be strictly increasing");
  }
}

double normalize_azimuth(double deg) {
  double a = std::fmod(deg, 360.0);
  if (a < 0.0) a += 360.0;
  if (a >= 360.0) a -= 360.0;  // fmod of tiny negatives can round up to 360
  return a;
}

double azimuth_offset(double a_deg, double b_deg) {
  double d = normalize_azimuth(a_deg - b_deg);
  if (d > 180.0) d -= 360.0;
  return d;
}

DepartureAngles departure_angles(const Vec3& ap, const Vec3& ue) {
  const double dx = ue.x - ap.x;
  const double dy = ue.y - ap.y;
  const double drop = ap.z - ue.z;
  const double horizontal = std::hypot(dx, dy);
  const double distance = std::hypot(horizontal, drop);
  if (!(distance > 0.0)) throw DomainError("departure angles undefined for coincident points");

  if (horizontal == 0.0) {
    return {0.0, drop > 0.0 ? kMaxElevationDeg : -kMaxElevationDeg, distance};
  }
  const double az = normalize_azimuth(std::atan2(dy, dx) * kRadToDeg);
  const double el = std::clamp(std::atan2(drop, horizontal) * kRadToDeg, -kMaxElevationDeg,
                               kMaxElevationDeg);
  return {az, el, distance};
}

BeamCodebook uniform_codebook(double az_beamwidth_deg, double downtilt_deg) {
  if (!(az_beamwidth_deg > 0.0) || az_beamwidth_deg > 360.0)
    throw DomainError("azimuth beamwidth must lie in (0, 360]");

  BeamCodebook cb;
  cb.az_beamwidth_deg = az_beamwidth_deg;
  cb.el_beamwidth_deg = std::min(az_beamwidth_deg, kMaxElevationBeamwidthDeg);
  const auto count = static_cast<std::size_t>(std::ceil(360.0 / az_beamwidth_deg - 1e-12));
  cb.beams.reserve(count);
  for (std::size_t b = 0; b < count; ++b) {
    const double center = static_cast<double>(b) * az_beamwidth_deg + az_beamwidth_deg / 2.0;
    cb.beams.push_back({normalize_azimuth(center), downtilt_deg});
  }
  // Non-divisible widths wrap the last center past 360.
  std::sort(cb.beams.begin(), cb.beams.end(), [](const Beam& a, const Beam& b) {
    return a.azimuth_center_deg < b.azimuth_center_deg;
  });
  cb.validate();
  return cb;
}

std::vector<Vec3> default_ap_grid(const Room& room) {
  std::vector<Vec3> aps;
  for (const double y : {room.width_m / 4.0, 3.0 * room.width_m / 4.0}) {
    for (const double x : {room.length_m / 6.0, room.length_m / 2.0, 5.0 * room.length_m / 6.0}) {
      aps.push_back({x, y, room.height_m});
    }
  }
  return aps;
}

std::size_t ue_count_for_density(const Room& room, double density_per_m2) {
  if (!(density_per_m2 > 0.0)) throw DomainError("user density must be positive");
  return static_cast<std::size_t>(std::llround(density_per_m2 * room.length_m * room.width_m));
}

std::vector<Vec3> drop_ues(const Room& room, double density_per_m2, std::uint64_t seed,
                           std::size_t min_users) {
  room.validate();
  const std::size_t count = ue_count_for_density(room, density_per_m2);
  if (count < min_users) {
    throw ScenarioError("density " + std::to_string(density_per_m2) + " yields " +
                        std::to_string(count) + " UEs, fewer than the " +
                        std::to_string(min_users) + " active APs");
  }
  auto rng = make_stream(seed, Stream::kDrop);
  std::uniform_real_distribution<double> ux(0.0, room.length_m);
  std::uniform_real_distribution<double> uy(0.0, room.width_m);
  std::vector<Vec3> ues;
  ues.reserve(count);
  for (std::size_t k = 0; k < count; ++k) {
    const double x = ux(rng);
    const double y = uy(rng);
    ues.push_back({x, y, room.ue_height_m});
  }
  return ues;
}

}  // namespace jpfs
