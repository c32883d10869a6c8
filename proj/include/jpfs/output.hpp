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

// Result files. Column orders are fixed:
//
//   summary.csv          scheduler,M,K,density,seed,total_rate_gbps,rho,
//                        fairness_index,complexity,alpha_mean
//   run-NNNN.json        full run result with the resolved config
//   plot-<figure>.csv    x column, then one column per scheduler
//   *.notes.csv          x,scheduler,predicted_es_patterns,es_budget for
//                        every NA cell of the file it accompanies
//   compare.csv          scheduler,runs,total_rate_gbps,rho,fairness_index,
//                        complexity,alpha_mean
//   compare-ratios.csv   numerator,denominator,rate_ratio,rho_ratio,fi_ratio
//   compare-objective.csv seed,slots,mean_is_over_es,min_is_over_es
//
// Floating-point cells use 9 significant digits; absent values are `NA`.

#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "jpfs/sim.hpp"

namespace jpfs {

enum class ResultKind { kRun, kSweepAps, kSweepDensity, kCompare };

struct ResultSet {
  ResultKind kind = ResultKind::kRun;
  std::vector<RunCell> cells;
  // Sweeps only.
  std::vector<double> xs;
  std::vector<SchedulerKind> schedulers;
  double es_budget = 0.0;
  std::optional<CompareReport> comparison;
};

// One run per scheduler in config.schedulers.
ResultSet run_all(const ScenarioConfig& config);
ResultSet from_sweep(const SweepTable& table, double es_budget);
ResultSet from_compare(CompareReport report, double es_budget);

std::string format_number(double value);

struct OutputFile {
  std::string name;
  std::string content;
};

// Everything emit_results would write, in write order.
std::vector<OutputFile> render_results(const ResultSet& results);

// Throws IoError when the directory cannot be created or written.
void emit_results(const ResultSet& results, const std::filesystem::path& out_dir);

}  // namespace jpfs
