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

// jpfs-sim: scenario-driven scheduler simulation.
//
//   jpfs-sim run|sweep-aps|sweep-density|compare|validate --config <path>
//            --out <dir> [--seed N] [--scheduler conv|es|is] [--trace]
//
// Exit status is the library status code (0 on success, 1..8 by error class).

#include <CLI11.hpp>

#include <cstdint>
#include <cstdio>
#include <memory>
#include <string>
#include <vector>

#include "jpfs/jpfs.h"

namespace {

struct ConfigDeleter {
  void operator()(jpfs_config* c) const { jpfs_config_free(c); }
};
struct ResultsDeleter {
  void operator()(jpfs_results* r) const { jpfs_results_free(r); }
};
using ConfigPtr = std::unique_ptr<jpfs_config, ConfigDeleter>;
using ResultsPtr = std::unique_ptr<jpfs_results, ResultsDeleter>;

int report(int status, const char* what) {
  if (status != JPFS_OK)
    std::fprintf(stderr, "jpfs-sim: %s: %s: %s\n", what, jpfs_status_string(status), jpfs_last_error());
  return status;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Joint proportional-fair beam scheduling simulator"};
  app.require_subcommand(1);

  std::string config_path;
  std::string out_dir;
  std::uint64_t seed = 0;
  bool seed_set = false;
  std::vector<std::string> schedulers;
  bool trace = false;

  const char* names[] = {"run", "sweep-aps", "sweep-density", "compare", "validate"};
  const char* help[] = {"run each configured scheduler once",
                        "sweep the number of active APs",
                        "sweep the user density",
                        "compare schedulers across seeds",
                        "check the config and print its resolved form"};
  for (int i = 0; i < 5; ++i) {
    CLI::App* sub = app.add_subcommand(names[i], help[i]);
    sub->add_option("--config", config_path, "scenario config file")->required();
    auto* out = sub->add_option("--out", out_dir, "output directory");
    if (i != 4) out->required();
    sub->add_option("--seed", seed, "override the master seed")
        ->each([&](const std::string&) { seed_set = true; });
    sub->add_option("--scheduler", schedulers, "restrict to these schedulers (conv, es, is)")
        ->delimiter(',');
    sub->add_flag("--trace", trace, "record per-slot traces in run JSON");
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : JPFS_ERR_INVALID_ARGUMENT;
  }
  const std::string command = app.get_subcommands().front()->get_name();

  jpfs_config* raw = nullptr;
  if (int rc = jpfs_config_from_file(config_path.c_str(), &raw)) return report(rc, config_path.c_str());
  ConfigPtr config(raw);

  if (seed_set) jpfs_config_set_seed(config.get(), seed);
  if (trace) jpfs_config_set_trace(config.get(), 1);
  if (!schedulers.empty()) {
    std::vector<int> kinds;
    for (const std::string& name : schedulers) {
      int kind = 0;
      if (int rc = jpfs_scheduler_from_name(name.c_str(), &kind)) return report(rc, "--scheduler");
      kinds.push_back(kind);
    }
    if (int rc = jpfs_config_set_schedulers(config.get(), kinds.data(), kinds.size()))
      return report(rc, "--scheduler");
  }
  if (int rc = jpfs_config_validate(config.get())) return report(rc, config_path.c_str());

  if (command == "validate") {
    char* json = nullptr;
    if (int rc = jpfs_config_to_json(config.get(), &json)) return report(rc, "validate");
    std::fputs(json, stdout);
    jpfs_string_free(json);
    return JPFS_OK;
  }

  jpfs_results* results_raw = nullptr;
  int rc = JPFS_OK;
  if (command == "run") rc = jpfs_run(config.get(), &results_raw);
  else if (command == "sweep-aps") rc = jpfs_sweep_aps(config.get(), &results_raw);
  else if (command == "sweep-density") rc = jpfs_sweep_density(config.get(), &results_raw);
  else rc = jpfs_compare(config.get(), &results_raw);
  if (rc) return report(rc, command.c_str());
  ResultsPtr results(results_raw);

  if (int wrc = jpfs_results_write(results.get(), out_dir.c_str())) return report(wrc, out_dir.c_str());

  char* csv = nullptr;
  if (int crc = jpfs_results_summary_csv(results.get(), &csv)) return report(crc, "summary");
  std::fputs(csv, stdout);
  jpfs_string_free(csv);
  return JPFS_OK;
}
