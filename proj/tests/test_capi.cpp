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


// Exercises the shared library through its C header only.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <string>

#include "jpfs/jpfs.h"

namespace {

const char* kSmall = R"({
  "room": {"length_m": 6, "width_m": 4, "height_m": 3},
  "ap_positions": [[1.5, 2, 3], [4.5, 2, 3]],
  "active_aps": [0, 1],
  "codebook": {"beamwidth_deg": 120},
  "users": {"positions": [[1, 1, 1], [2, 3, 1], [4, 1, 1], [5, 3, 1]]},
  "schedulers": ["conv", "es", "is"],
  "n_slots": 20,
  "seed": 7
})";

}  // namespace

TEST_CASE("status strings and version") {
  CHECK(std::string(jpfs_version()) == "1.0.0");
  CHECK(std::string(jpfs_status_string(JPFS_OK)) == "ok");
  CHECK(std::string(jpfs_status_string(JPFS_ERR_SCHEMA)) == "schema error");
  CHECK(std::string(jpfs_status_string(99)) == "unknown status");
}

TEST_CASE("error codes by class") {
  jpfs_config* c = nullptr;
  CHECK(jpfs_config_from_file("/nonexistent.json", &c) == JPFS_ERR_FILE_NOT_FOUND);
  CHECK(c == nullptr);
  CHECK(std::strlen(jpfs_last_error()) > 0);
  CHECK(jpfs_config_from_string("{", &c) == JPFS_ERR_PARSE);
  CHECK(jpfs_config_from_string(R"({"beam_widthh": 1})", &c) == JPFS_ERR_SCHEMA);
  CHECK(std::string(jpfs_last_error()).find("beam_widthh") != std::string::npos);
  CHECK(jpfs_config_from_string(R"({"active_aps": [7]})", &c) == JPFS_ERR_SCENARIO);
  CHECK(jpfs_config_from_string(nullptr, &c) == JPFS_ERR_INVALID_ARGUMENT);
  CHECK(jpfs_run(nullptr, nullptr) == JPFS_ERR_INVALID_ARGUMENT);
}

TEST_CASE("run through the C interface") {
  jpfs_config* c = nullptr;
  REQUIRE(jpfs_config_from_string(kSmall, &c) == JPFS_OK);
  CHECK(jpfs_config_validate(c) == JPFS_OK);

  jpfs_results* r = nullptr;
  REQUIRE(jpfs_run(c, &r) == JPFS_OK);
  REQUIRE(jpfs_results_count(r) == 3);
  jpfs_metrics m;
  for (size_t i = 0; i < 3; ++i) {
    REQUIRE(jpfs_results_metrics(r, i, &m) == JPFS_OK);
    CHECK(m.feasible == 1);
    CHECK(m.num_active_aps == 2);
    CHECK(m.num_ues == 4);
    CHECK(std::isnan(m.density_per_m2));
    CHECK(m.total_rate_gbps > 0.0);
    CHECK(m.fairness_index > 0.0);
    CHECK(m.fairness_index <= 1.0);
  }
  REQUIRE(jpfs_results_metrics(r, 1, &m) == JPFS_OK);
  CHECK(m.scheduler == JPFS_SCHED_ES_JPFS);
  CHECK(m.complexity_switchings == 20u * 108u);
  CHECK(std::isnan(m.alpha_mean));
  REQUIRE(jpfs_results_metrics(r, 2, &m) == JPFS_OK);
  CHECK(m.alpha_mean >= 1.0);
  CHECK(jpfs_results_metrics(r, 3, &m) == JPFS_ERR_INVALID_ARGUMENT);

  char* csv = nullptr;
  REQUIRE(jpfs_results_summary_csv(r, &csv) == JPFS_OK);
  const std::string text(csv);
  jpfs_string_free(csv);
  CHECK(text.rfind("scheduler,M,K,density,seed,total_rate_gbps,rho,fairness_index,complexity,alpha_mean\n", 0) == 0);

  const auto dir = std::filesystem::temp_directory_path() / "jpfs_capi_out";
  std::filesystem::remove_all(dir);
  CHECK(jpfs_results_write(r, dir.string().c_str()) == JPFS_OK);
  CHECK(std::filesystem::exists(dir / "summary.csv"));
  CHECK(std::filesystem::exists(dir / "run-0002.json"));
  CHECK(jpfs_results_write(r, (dir / "summary.csv" / "x").string().c_str()) == JPFS_ERR_IO);
  std::filesystem::remove_all(dir);

  jpfs_results_free(r);
  jpfs_config_free(c);
}

TEST_CASE("overrides") {
  jpfs_config* c = nullptr;
  REQUIRE(jpfs_config_from_string(kSmall, &c) == JPFS_OK);
  int kind = -1;
  CHECK(jpfs_scheduler_from_name("is", &kind) == JPFS_OK);
  CHECK(kind == JPFS_SCHED_IS_JPFS);
  CHECK(jpfs_scheduler_from_name("bogus", &kind) == JPFS_ERR_INVALID_ARGUMENT);
  CHECK(jpfs_config_set_schedulers(c, &kind, 1) == JPFS_OK);
  const int bad = 7;
  CHECK(jpfs_config_set_schedulers(c, &bad, 1) == JPFS_ERR_INVALID_ARGUMENT);
  CHECK(jpfs_config_set_seed(c, 99) == JPFS_OK);
  CHECK(jpfs_config_set_trace(c, 1) == JPFS_OK);

  char* json = nullptr;
  REQUIRE(jpfs_config_to_json(c, &json) == JPFS_OK);
  const std::string doc(json);
  jpfs_string_free(json);
  CHECK(doc.find("\"seed\": 99") != std::string::npos);
  CHECK(doc.find("\"trace\": true") != std::string::npos);

  jpfs_results* r = nullptr;
  REQUIRE(jpfs_run(c, &r) == JPFS_OK);
  CHECK(jpfs_results_count(r) == 1);
  jpfs_results_free(r);
  jpfs_config_free(c);
}

TEST_CASE("sweeps and comparison") {
  jpfs_config* c = nullptr;
  REQUIRE(jpfs_config_from_string(R"({"n_slots": 3, "schedulers": ["conv", "es"],
                                      "sweep": {"ap_counts": [1, 6], "ap_count_density": 0.05,
                                                "densities": [0.05]},
                                      "compare": {"num_seeds": 2}})", &c) == JPFS_OK);
  jpfs_results* r = nullptr;
  REQUIRE(jpfs_sweep_aps(c, &r) == JPFS_OK);
  REQUIRE(jpfs_results_count(r) == 4);
  jpfs_metrics m;
  REQUIRE(jpfs_results_metrics(r, 3, &m) == JPFS_OK);
  CHECK(m.feasible == 0);
  CHECK(m.predicted_es_patterns > 1e8);
  CHECK(std::isnan(m.total_rate_gbps));
  jpfs_results_free(r);

  REQUIRE(jpfs_sweep_density(c, &r) == JPFS_OK);
  CHECK(jpfs_results_count(r) == 2);
  jpfs_results_free(r);

  REQUIRE(jpfs_compare(c, &r) == JPFS_OK);
  CHECK(jpfs_results_count(r) == 4);
  jpfs_results_free(r);
  jpfs_config_free(c);
}

TEST_CASE("model functions") {
  double g = 0.0;
  REQUIRE(jpfs_beam_gain_db(0.0, 0.0, 30.0, 30.0, &g) == JPFS_OK);
  CHECK(std::abs(g - 20.0 * std::log10(1.6162 / std::sin(15.0 * 3.14159265358979323846 / 180.0))) < 1e-12);
  REQUIRE(jpfs_beam_gain_db(170.0, 0.0, 30.0, 30.0, &g) == JPFS_OK);
  CHECK(g == -12.0);
  CHECK(jpfs_beam_gain_db(0.0, 0.0, 30.0, 180.0, &g) == JPFS_ERR_DOMAIN);

  const double rates[] = {1.0, 2.0, 3.0};
  double fi = 0.0;
  REQUIRE(jpfs_fairness_index(rates, 3, &fi) == JPFS_OK);
  CHECK(std::abs(fi - 6.0 / 7.0) < 1e-12);
  const double zeros[] = {0.0, 0.0};
  CHECK(jpfs_fairness_index(zeros, 2, &fi) == JPFS_ERR_DOMAIN);
}
