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


#include <doctest.h>

#include <cmath>
#include <numbers>

#include "jpfs/error.hpp"
#include "jpfs/geometry.hpp"

using namespace jpfs;

namespace {
constexpr double kRad = 180.0 / std::numbers::pi;
}

TEST_SUITE("geometry") {

TEST_CASE("departure angles of an offset user") {
  const DepartureAngles a = departure_angles({0, 0, 4}, {3, 4, 1});
  CHECK(a.azimuth_deg == doctest::Approx(std::atan2(4.0, 3.0) * kRad).epsilon(1e-12));
  CHECK(a.elevation_deg == doctest::Approx(std::atan2(3.0, 5.0) * kRad).epsilon(1e-12));
  CHECK(a.distance_m == doctest::Approx(std::sqrt(34.0)).epsilon(1e-12));
}

TEST_CASE("azimuth lands in [0, 360)") {
  const DepartureAngles a = departure_angles({5, 5, 4}, {5, 2, 1});
  CHECK(a.azimuth_deg == doctest::Approx(270.0));
  const DepartureAngles b = departure_angles({5, 5, 4}, {8, 5, 1});
  CHECK(b.azimuth_deg == doctest::Approx(0.0));
}

TEST_CASE("user directly below the AP") {
  const DepartureAngles a = departure_angles({2, 2, 4}, {2, 2, 1});
  CHECK(a.azimuth_deg == 0.0);
  CHECK(a.elevation_deg == kMaxElevationDeg);
  CHECK(a.distance_m == doctest::Approx(3.0));
}

TEST_CASE("coincident points are a domain error") {
  CHECK_THROWS_AS(departure_angles({1, 1, 1}, {1, 1, 1}), DomainError);
}

TEST_CASE("rotating the user about the AP shifts azimuth only") {
  const Vec3 ap{10, 5, 4};
  const double r = 3.0;
  const DepartureAngles base = departure_angles(ap, {ap.x + r, ap.y, 1});
  for (double theta = 0.0; theta < 360.0; theta += 17.0) {
    const double t = theta / kRad;
    const DepartureAngles a = departure_angles(ap, {ap.x + r * std::cos(t), ap.y + r * std::sin(t), 1});
    CHECK(std::abs(azimuth_offset(a.azimuth_deg, theta)) < 1e-9);
    CHECK(a.elevation_deg == doctest::Approx(base.elevation_deg).epsilon(1e-12));
    CHECK(a.distance_m == doctest::Approx(base.distance_m).epsilon(1e-12));
  }
}

TEST_CASE("azimuth offset is the shortest signed difference") {
  CHECK(azimuth_offset(350, 10) == doctest::Approx(-20));
  CHECK(azimuth_offset(10, 350) == doctest::Approx(20));
  CHECK(azimuth_offset(0, 180) == doctest::Approx(180));
  CHECK(azimuth_offset(180, 0) == doctest::Approx(180));
  CHECK(normalize_azimuth(-30) == doctest::Approx(330));
  CHECK(normalize_azimuth(720) == doctest::Approx(0));
}

TEST_CASE("uniform codebook tiles the circle") {
  const BeamCodebook cb = uniform_codebook(30.0, 45.0);
  REQUIRE(cb.size() == 12);
  for (std::size_t b = 0; b < cb.size(); ++b) {
    CHECK(cb.beams[b].azimuth_center_deg == doctest::Approx(15.0 + 30.0 * b));
    CHECK(cb.beams[b].elevation_center_deg == 45.0);
  }
  CHECK(cb.az_beamwidth_deg == 30.0);
  CHECK(cb.el_beamwidth_deg == 30.0);
  CHECK(uniform_codebook(100.0, 45.0).size() == 4);
  CHECK(uniform_codebook(360.0, 45.0).size() == 1);
  CHECK(uniform_codebook(360.0, 45.0).el_beamwidth_deg == kMaxElevationBeamwidthDeg);
  CHECK_NOTHROW(uniform_codebook(7.0, 30.0).validate());
}

TEST_CASE("default grid is two rows of three on the ceiling") {
  const Room room;
  const auto grid = default_ap_grid(room);
  REQUIRE(grid.size() == 6);
  CHECK(grid[0] == Vec3{20.0 / 6, 2.5, 4});
  CHECK(grid[1] == Vec3{10, 2.5, 4});
  CHECK(grid[5] == Vec3{100.0 / 6, 7.5, 4});
}

TEST_CASE("user drop") {
  const Room room;
  CHECK(ue_count_for_density(room, 0.2) == 40);
  CHECK(ue_count_for_density(room, 1.0) == 200);

  const auto a = drop_ues(room, 0.2, 42);
  const auto b = drop_ues(room, 0.2, 42);
  const auto c = drop_ues(room, 0.2, 43);
  REQUIRE(a.size() == 40);
  CHECK(a == b);
  CHECK(a != c);
  for (const Vec3& p : a) {
    CHECK(room.contains(p));
    CHECK(p.z == room.ue_height_m);
  }
  CHECK_THROWS_AS(drop_ues(room, 0.01, 1, 6), ScenarioError);
}

TEST_CASE("placement validation") {
  const Room room;
  Placement p{default_ap_grid(room), drop_ues(room, 0.1, 3)};
  CHECK_NOTHROW(p.validate(room));
  p.ap_positions[0].z = 3.0;
  CHECK_THROWS_AS(p.validate(room), ScenarioError);
  p.ap_positions[0].z = 4.0;
  p.ue_positions[0].x = 25.0;
  CHECK_THROWS_AS(p.validate(room), ScenarioError);
}

}  // TEST_SUITE
