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

#include "jpfs/output.hpp"

#include <cstdio>
#include <fstream>
#include <functional>
#include <system_error>

#include "jpfs/config.hpp"
#include "jpfs/error.hpp"

namespace jpfs {
namespace {

using nlohmann::json;

std::string na_or(const std::optional<double>& v) { return v ? format_number(*v) : "NA"; }

std::string cell_id(std::size_t index) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%04zu", index);
  return buf;
}

std::string notes_header() { return "x,scheduler,predicted_es_patterns,es_budget\n"; }

std::string note_row(const RunCell& cell, double es_budget) {
  return format_number(cell.x) + "," + std::string(to_string(cell.scheduler)) + "," +
         format_number(cell.predicted_es_patterns) + "," + format_number(es_budget) + "\n";
}

std::string summary_csv(const ResultSet& results, std::string* notes) {
  std::string out =
      "scheduler,M,K,density,seed,total_rate_gbps,rho,fairness_index,complexity,alpha_mean\n";
  for (const RunCell& cell : results.cells) {
    out += std::string(to_string(cell.scheduler)) + "," + std::to_string(cell.num_active) + "," +
           std::to_string(cell.num_ues) + "," + na_or(cell.density) + "," +
           std::to_string(cell.seed) + ",";
    if (cell.result) {
      const MetricsReport& m = cell.result->metrics;
      out += na_or(m.total_rate_gbps) + "," + na_or(m.spatial_reuse) + "," +
             na_or(m.fairness_index) + "," + std::to_string(m.complexity_switchings) + "," +
             na_or(m.alpha_mean) + "\n";
    } else {
      out += "NA,NA,NA,NA,NA\n";
      *notes += note_row(cell, results.es_budget);
    }
  }
  return out;
}

using MetricPick = std::function<std::optional<double>(const MetricsReport&)>;

void plot(const ResultSet& results, const std::string& name, const MetricPick& pick,
          std::vector<OutputFile>& files) {
  const bool aps = results.kind == ResultKind::kSweepAps;
  std::string out = aps ? "num_aps" : "density_per_m2";
  for (const SchedulerKind k : results.schedulers) out += "," + std::string(to_string(k));
  out += "\n";

  std::string notes;
  const std::size_t width = results.schedulers.size();
  for (std::size_t xi = 0; xi < results.xs.size(); ++xi) {
    out += aps ? std::to_string(static_cast<std::size_t>(results.xs[xi])) : format_number(results.xs[xi]);
    for (std::size_t si = 0; si < width; ++si) {
      const RunCell& cell = results.cells[xi * width + si];
      if (cell.result) {
        out += "," + na_or(pick(cell.result->metrics));
      } else {
        out += ",NA";
        notes += note_row(cell, results.es_budget);
      }
    }
    out += "\n";
  }
  files.push_back({"plot-" + name + ".csv", out});
  if (!notes.empty()) files.push_back({"plot-" + name + ".notes.csv", notes_header() + notes});
}

json cell_json(const RunCell& cell) {
  return {{"x", cell.x},
          {"scheduler", std::string(to_string(cell.scheduler))},
          {"seed", cell.seed},
          {"num_active_aps", cell.num_active},
          {"num_ues", cell.num_ues},
          {"feasible", cell.feasible()},
          {"predicted_es_patterns", cell.predicted_es_patterns}};
}

void compare_files(const CompareReport& report, std::vector<OutputFile>& files) {
  std::string means = "scheduler,runs,total_rate_gbps,rho,fairness_index,complexity,alpha_mean\n";
  auto opt = [](const std::optional<double>& v) { return v ? json(*v) : json(nullptr); };
  json doc;
  doc["seeds"] = report.seeds;
  doc["means"] = json::array();
  for (const SchedulerMean& m : report.means) {
    means += std::string(to_string(m.scheduler)) + "," + std::to_string(m.runs) + "," +
             na_or(m.total_rate_gbps) + "," + na_or(m.spatial_reuse) + "," +
             na_or(m.fairness_index) + "," + na_or(m.complexity_switchings) + "," +
             na_or(m.alpha_mean) + "\n";
    doc["means"].push_back({{"scheduler", std::string(to_string(m.scheduler))},
                            {"runs", m.runs},
                            {"total_rate_gbps", opt(m.total_rate_gbps)},
                            {"spatial_reuse", opt(m.spatial_reuse)},
                            {"fairness_index", opt(m.fairness_index)},
                            {"complexity_switchings", opt(m.complexity_switchings)},
                            {"alpha_mean", opt(m.alpha_mean)}});
  }
  files.push_back({"compare.csv", means});

  std::string ratios = "numerator,denominator,rate_ratio,rho_ratio,fi_ratio\n";
  doc["ratios"] = json::array();
  for (const SchedulerRatio& r : report.ratios) {
    ratios += std::string(to_string(r.numerator)) + "," + std::string(to_string(r.denominator)) +
              "," + na_or(r.total_rate) + "," + na_or(r.spatial_reuse) + "," +
              na_or(r.fairness_index) + "\n";
    doc["ratios"].push_back({{"numerator", std::string(to_string(r.numerator))},
                             {"denominator", std::string(to_string(r.denominator))},
                             {"rate_ratio", opt(r.total_rate)},
                             {"rho_ratio", opt(r.spatial_reuse)},
                             {"fi_ratio", opt(r.fairness_index)}});
  }
  files.push_back({"compare-ratios.csv", ratios});

  if (!report.objective_ratios.empty()) {
    std::string objective = "seed,slots,mean_is_over_es,min_is_over_es\n";
    doc["objective_ratios"] = json::array();
    for (const ObjectiveRatio& r : report.objective_ratios) {
      objective += std::to_string(r.seed) + "," + std::to_string(r.slots) + "," +
                   format_number(r.mean) + "," + format_number(r.min) + "\n";
      doc["objective_ratios"].push_back(
          {{"seed", r.seed}, {"slots", r.slots}, {"mean", r.mean}, {"min", r.min}});
    }
    files.push_back({"compare-objective.csv", objective});
  }
  doc["cells"] = json::array();
  for (const RunCell& c : report.cells) doc["cells"].push_back(cell_json(c));
  files.push_back({"compare.json", doc.dump(2) + "\n"});
}

}  // namespace

ResultSet run_all(const ScenarioConfig& config) {
  config.validate();
  ResultSet out;
  out.kind = ResultKind::kRun;
  out.schedulers = config.schedulers;
  out.es_budget = config.scheduler.es_budget;
  std::vector<ScenarioConfig> configs(config.schedulers.size(), config);
  std::vector<double> xs(config.schedulers.size(), 0.0);
  out.cells = run_cells(configs, config.schedulers, xs);
  return out;
}

ResultSet from_sweep(const SweepTable& table, double es_budget) {
  ResultSet out;
  out.kind = table.axis == SweepAxis::kApCount ? ResultKind::kSweepAps : ResultKind::kSweepDensity;
  out.cells = table.cells;
  out.xs = table.xs;
  out.schedulers = table.schedulers;
  out.es_budget = es_budget;
  return out;
}

ResultSet from_compare(CompareReport report, double es_budget) {
  ResultSet out;
  out.kind = ResultKind::kCompare;
  out.cells = report.cells;
  out.schedulers = report.schedulers;
  out.es_budget = es_budget;
  out.comparison = std::move(report);
  return out;
}

std::string format_number(double value) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.9g", value);
  return buf;
}

std::vector<OutputFile> render_results(const ResultSet& results) {
  std::vector<OutputFile> files;
  std::string notes;
  files.push_back({"summary.csv", summary_csv(results, &notes)});
  if (!notes.empty()) files.push_back({"summary.notes.csv", notes_header() + notes});

  for (std::size_t i = 0; i < results.cells.size(); ++i) {
    const RunCell& cell = results.cells[i];
    if (!cell.result) continue;
    json doc = run_result_to_json(*cell.result);
    doc["cell"] = cell_json(cell);
    files.push_back({"run-" + cell_id(i) + ".json", doc.dump(2) + "\n"});
  }

  auto rate = [](const MetricsReport& m) { return m.total_rate_gbps; };
  auto rho = [](const MetricsReport& m) { return m.spatial_reuse; };
  auto fi = [](const MetricsReport& m) { return m.fairness_index; };
  auto complexity = [](const MetricsReport& m) -> std::optional<double> {
    return static_cast<double>(m.complexity_switchings);
  };
  if (results.kind == ResultKind::kSweepAps) {
    plot(results, "rate", rate, files);
    plot(results, "rho", rho, files);
    plot(results, "fi", fi, files);
    plot(results, "complexity", complexity, files);
  } else if (results.kind == ResultKind::kSweepDensity) {
    plot(results, "density-rate", rate, files);
    plot(results, "density-rho", rho, files);
    plot(results, "density-fi", fi, files);
  } else if (results.kind == ResultKind::kCompare && results.comparison) {
    compare_files(*results.comparison, files);
  }
  return files;
}

void emit_results(const ResultSet& results, const std::filesystem::path& out_dir) {
  std::error_code ec;
  std::filesystem::create_directories(out_dir, ec);
  if (ec || !std::filesystem::is_directory(out_dir))
    throw IoError("cannot create output directory '" + out_dir.string() + "'");
  for (const OutputFile& f : render_results(results)) {
    const std::filesystem::path path = out_dir / f.name;
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    out << f.content;
    out.close();
    if (!out) throw IoError("cannot write '" + path.string() + "'");
  }
}

}  // namespace jpfs
