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

// Room, AP/UE placements and the AP transmit-beam codebook.
//
// Axes: x along the room length, y along the width, z up from the floor.
// Azimuth is measured in the horizontal plane from +x toward +y, in
// [0, 360). Elevation is the downtilt below horizontal (positive = down).

#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace jpfs {

struct Vec3 {
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;

  friend bool operator==(const Vec3&, const Vec3&) = default;
};

struct Room {
  double length_m = 20.0;
  double width_m = 10.0;
  double height_m = 4.0;
  double ue_height_m = 1.0;

  // Throws DomainError unless all dimensions are positive and the UE plane
  // lies strictly between floor and ceiling.
  void validate() const;
  bool contains(const Vec3& p) const;

  friend bool operator==(const Room&, const Room&) = default;
};

struct Placement {
  std::vector<Vec3> ap_positions;
  std::vector<Vec3> ue_positions;

  std::size_t num_aps() const { return ap_positions.size(); }
  std::size_t num_ues() const { return ue_positions.size(); }

  // APs at ceiling height, UEs at ue_height_m, everything inside the room.
  // Throws ScenarioError.
  void validate(const Room& room) const;
};

struct Beam {
  double azimuth_center_deg = 0.0;
  double elevation_center_deg = 0.0;
};

struct BeamCodebook {
  std::vector<Beam> beams;
  double az_beamwidth_deg = 30.0;
  double el_beamwidth_deg = 30.0;

  std::size_t size() const { return beams.size(); }
  void validate() const;
};

struct DepartureAngles {
  double azimuth_deg;
  double elevation_deg;
  double distance_m;
};

// Elevation used when a UE sits directly below (or above) an AP.
inline constexpr double kMaxElevationDeg = 89.999999;

// Largest elevation beamwidth a uniform codebook will carry.
inline constexpr double kMaxElevationBeamwidthDeg = 179.0;

// Wraps any finite angle into [0, 360).
double normalize_azimuth(double deg);

// Shortest signed angular distance a - b, in (-180, 180].
double azimuth_offset(double a_deg, double b_deg);

DepartureAngles departure_angles(const Vec3& ap, const Vec3& ue);

// ceil(360 / az_beamwidth) beams with centers at (b - 1/2) * az_beamwidth,
// all at the same downtilt. az_beamwidth must lie in (0, 360].
BeamCodebook uniform_codebook(double az_beamwidth_deg, double downtilt_deg);

// 2 x 3 ceiling grid, row-major: x in {L/6, L/2, 5L/6}, y in {W/4, 3W/4}.
std::vector<Vec3> default_ap_grid(const Room& room);

// Number of UEs a density produces on the room floor.
std::size_t ue_count_for_density(const Room& room, double density_per_m2);

// i.i.d. uniform floor drop at ue_height_m. Throws ScenarioError when the
// drop yields fewer than min_users points.
std::vector<Vec3> drop_ues(const Room& room, double density_per_m2,
                           std::uint64_t seed, std::size_t min_users = 0);

}  // namespace jpfs
