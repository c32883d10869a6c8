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

#include "jpfs/config.hpp"

#include <fstream>
#include <initializer_list>
#include <sstream>

#include "jpfs/error.hpp"

namespace jpfs {
namespace {

using nlohmann::json;

// Object reader that rejects keys it was not asked about.
class Section {
 public:
  Section(const json& node, std::string path, std::initializer_list<std::string_view> allowed)
      : node_(node), path_(std::move(path)) {
    if (!node_.is_object()) throw SchemaError(where() + " must be an object");
    for (const auto& [key, value] : node_.items()) {
      bool known = false;
      for (const auto a : allowed) known = known || key == a;
      if (!known) throw SchemaError("unknown key '" + key + "' in " + where());
    }
  }

  bool has(const char* key) const { return node_.contains(key); }
  const json& at(const char* key) const { return node_.at(key); }
  std::string child(const char* key) const { return path_.empty() ? key : path_ + "." + key; }

  double number(const char* key, double fallback) const {
    if (!has(key)) return fallback;
    const json& v = at(key);
    if (!v.is_number()) throw SchemaError(child(key) + " must be a number");
    return v.get<double>();
  }

  std::uint64_t unsigned_integer(const char* key, std::uint64_t fallback) const {
    if (!has(key)) return fallback;
    const json& v = at(key);
    if (!v.is_number_unsigned()) throw SchemaError(child(key) + " must be a non-negative integer");
    return v.get<std::uint64_t>();
  }

  bool boolean(const char* key, bool fallback) const {
    if (!has(key)) return fallback;
    const json& v = at(key);
    if (!v.is_boolean()) throw SchemaError(child(key) + " must be true or false");
    return v.get<bool>();
  }

 private:
  std::string where() const { return path_.empty() ? "config" : "'" + path_ + "'"; }

  const json& node_;
  std::string path_;
};

std::vector<double> number_list(const json& v, const std::string& path) {
  if (!v.is_array()) throw SchemaError(path + " must be an array of numbers");
  std::vector<double> out;
  for (const json& e : v) {
    if (!e.is_number()) throw SchemaError(path + " must be an array of numbers");
    out.push_back(e.get<double>());
  }
  return out;
}

template <typename T>
std::vector<T> unsigned_list(const json& v, const std::string& path) {
  if (!v.is_array()) throw SchemaError(path + " must be an array of non-negative integers");
  std::vector<T> out;
  for (const json& e : v) {
    if (!e.is_number_unsigned())
      throw SchemaError(path + " must be an array of non-negative integers");
    out.push_back(static_cast<T>(e.get<std::uint64_t>()));
  }
  return out;
}

std::vector<Vec3> point_list(const json& v, const std::string& path) {
  if (!v.is_array()) throw SchemaError(path + " must be an array of [x, y, z] points");
  std::vector<Vec3> out;
  for (const json& p : v) {
    const std::vector<double> xyz = number_list(p, path + " entry");
    if (xyz.size() != 3) throw SchemaError(path + " entries must have exactly 3 coordinates");
    out.push_back({xyz[0], xyz[1], xyz[2]});
  }
  return out;
}

SchedulerKind scheduler_from(const json& v, const std::string& path) {
  if (!v.is_string()) throw SchemaError(path + " must name a scheduler");
  const auto kind = parse_scheduler_kind(v.get<std::string>());
  if (!kind) throw SchemaError(path + ": unknown scheduler '" + v.get<std::string>() + "'");
  return *kind;
}

json points_json(const std::vector<Vec3>& points) {
  json out = json::array();
  for (const Vec3& p : points) out.push_back({p.x, p.y, p.z});
  return out;
}

json optional_json(const std::optional<double>& v) { return v ? json(*v) : json(nullptr); }

json pattern_json(const Pattern& pattern) {
  json out = json::array();
  for (std::size_t m = 0; m < pattern.num_aps(); ++m) {
    if (pattern.links[m]) out.push_back({m, pattern.links[m]->user, pattern.links[m]->beam});
  }
  return out;
}

}  // namespace

ScenarioConfig parse_config_json(const json& doc) {
  const Section top(doc, "",
                    {"room", "ap_positions", "active_aps", "codebook", "users", "channel", "radio",
                     "scheduler", "schedulers", "scheduler_options", "n_slots", "seed", "trace",
                     "sweep", "compare"});
  ScenarioConfig cfg;

  if (top.has("room")) {
    const Section s(top.at("room"), "room", {"length_m", "width_m", "height_m", "ue_height_m"});
    cfg.room.length_m = s.number("length_m", cfg.room.length_m);
    cfg.room.width_m = s.number("width_m", cfg.room.width_m);
    cfg.room.height_m = s.number("height_m", cfg.room.height_m);
    cfg.room.ue_height_m = s.number("ue_height_m", cfg.room.ue_height_m);
  }
  cfg.ap_positions = top.has("ap_positions") ? point_list(top.at("ap_positions"), "ap_positions")
                                             : default_ap_grid(cfg.room);
  cfg.active_aps.clear();
  if (top.has("active_aps")) {
    cfg.active_aps = unsigned_list<std::size_t>(top.at("active_aps"), "active_aps");
  } else {
    for (std::size_t m = 0; m < cfg.ap_positions.size(); ++m) cfg.active_aps.push_back(m);
  }

  if (top.has("codebook")) {
    const Section s(top.at("codebook"), "codebook", {"beamwidth_deg", "downtilt_deg"});
    cfg.codebook.beamwidth_deg = s.number("beamwidth_deg", cfg.codebook.beamwidth_deg);
    cfg.codebook.downtilt_deg = s.number("downtilt_deg", cfg.codebook.downtilt_deg);
  }

  if (top.has("users")) {
    const Section s(top.at("users"), "users", {"density_per_m2", "positions"});
    if (s.has("density_per_m2") && s.has("positions"))
      throw SchemaError("users takes density_per_m2 or positions, not both");
    if (s.has("positions")) {
      cfg.users.density_per_m2.reset();
      cfg.users.positions = point_list(s.at("positions"), "users.positions");
    } else {
      cfg.users.density_per_m2 = s.number("density_per_m2", *cfg.users.density_per_m2);
    }
  }

  if (top.has("channel")) {
    const Section s(top.at("channel"), "channel",
                    {"tx_power_dbm", "pl_ref_db", "ref_dist_m", "pl_exponent", "shadow_sigma_db",
                     "block_prob", "block_loss_db"});
    ChannelParams& c = cfg.channel;
    c.tx_power_dbm = s.number("tx_power_dbm", c.tx_power_dbm);
    c.pl_ref_db = s.number("pl_ref_db", c.pl_ref_db);
    c.ref_dist_m = s.number("ref_dist_m", c.ref_dist_m);
    c.pl_exponent = s.number("pl_exponent", c.pl_exponent);
    c.shadow_sigma_db = s.number("shadow_sigma_db", c.shadow_sigma_db);
    c.block_prob = s.number("block_prob", c.block_prob);
    c.block_loss_db = s.number("block_loss_db", c.block_loss_db);
  }

  if (top.has("radio")) {
    const Section s(top.at("radio"), "radio",
                    {"bandwidth_hz", "bw_efficiency", "snr_efficiency", "noise_power_dbm",
                     "noise_figure_db"});
    RadioParams& r = cfg.radio;
    if (s.has("noise_power_dbm") && s.has("noise_figure_db"))
      throw SchemaError("radio takes noise_power_dbm or noise_figure_db, not both");
    r.bandwidth_hz = s.number("bandwidth_hz", r.bandwidth_hz);
    r.bw_efficiency = s.number("bw_efficiency", r.bw_efficiency);
    r.snr_efficiency = s.number("snr_efficiency", r.snr_efficiency);
    if (s.has("noise_power_dbm")) {
      r.noise_power_dbm = s.number("noise_power_dbm", r.noise_power_dbm);
    } else if (r.bandwidth_hz > 0.0) {
      r.noise_power_dbm =
          thermal_noise_dbm(r.bandwidth_hz, s.number("noise_figure_db", kDefaultNoiseFigureDb));
    }
  }

  if (top.has("scheduler") && top.has("schedulers"))
    throw SchemaError("config takes scheduler or schedulers, not both");
  if (top.has("scheduler")) {
    cfg.schedulers = {scheduler_from(top.at("scheduler"), "scheduler")};
  } else if (top.has("schedulers")) {
    const json& list = top.at("schedulers");
    if (!list.is_array() || list.empty())
      throw SchemaError("schedulers must be a non-empty array of scheduler names");
    cfg.schedulers.clear();
    for (const json& v : list) cfg.schedulers.push_back(scheduler_from(v, "schedulers"));
  }

  if (top.has("scheduler_options")) {
    const Section s(top.at("scheduler_options"), "scheduler_options",
                    {"delta_th", "epsilon_bps", "is_max_iterations", "es_budget", "is_visit_order"});
    SchedulerOptions& o = cfg.scheduler;
    o.delta_th = s.number("delta_th", o.delta_th);
    o.epsilon_bps = s.number("epsilon_bps", o.epsilon_bps);
    o.is_max_iterations = s.unsigned_integer("is_max_iterations", o.is_max_iterations);
    o.es_budget = s.number("es_budget", o.es_budget);
    if (s.has("is_visit_order"))
      o.is_visit_order = unsigned_list<std::size_t>(s.at("is_visit_order"), "scheduler_options.is_visit_order");
  }

  cfg.n_slots = top.unsigned_integer("n_slots", cfg.n_slots);
  cfg.seed = top.unsigned_integer("seed", cfg.seed);
  cfg.trace = top.boolean("trace", cfg.trace);

  if (top.has("sweep")) {
    const Section s(top.at("sweep"), "sweep",
                    {"ap_counts", "ap_count_density", "ap_count_use_base_users", "densities",
                     "density_active_aps"});
    SweepSpec& w = cfg.sweep;
    if (s.has("ap_counts")) w.ap_counts = unsigned_list<std::size_t>(s.at("ap_counts"), "sweep.ap_counts");
    w.ap_count_density = s.number("ap_count_density", w.ap_count_density);
    w.ap_count_use_base_users = s.boolean("ap_count_use_base_users", w.ap_count_use_base_users);
    if (s.has("densities")) w.densities = number_list(s.at("densities"), "sweep.densities");
    if (s.has("density_active_aps"))
      w.density_active_aps = unsigned_list<std::size_t>(s.at("density_active_aps"), "sweep.density_active_aps");
  }

  if (top.has("compare")) {
    const Section s(top.at("compare"), "compare", {"seeds", "num_seeds"});
    if (s.has("seeds")) cfg.compare.seeds = unsigned_list<std::uint64_t>(s.at("seeds"), "compare.seeds");
    cfg.compare.num_seeds = s.unsigned_integer("num_seeds", cfg.compare.num_seeds);
  }

  try {
    cfg.validate();
  } catch (const DomainError& e) {
    throw SchemaError(e.what());
  }
  return cfg;
}

ScenarioConfig parse_config_text(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text.begin(), text.end(), nullptr, true, /*ignore_comments=*/true);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("malformed config: ") + e.what());
  }
  return parse_config_json(doc);
}

ScenarioConfig parse_config_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw FileNotFoundError("cannot open config file '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_config_text(buffer.str());
}

json config_to_json(const ScenarioConfig& cfg) {
  json doc;
  doc["room"] = {{"length_m", cfg.room.length_m},
                 {"width_m", cfg.room.width_m},
                 {"height_m", cfg.room.height_m},
                 {"ue_height_m", cfg.room.ue_height_m}};
  doc["ap_positions"] = points_json(cfg.ap_positions);
  doc["active_aps"] = cfg.active_aps;
  doc["codebook"] = {{"beamwidth_deg", cfg.codebook.beamwidth_deg},
                     {"downtilt_deg", cfg.codebook.downtilt_deg}};
  if (cfg.users.density_per_m2) {
    doc["users"] = {{"density_per_m2", *cfg.users.density_per_m2}};
  } else {
    doc["users"] = {{"positions", points_json(cfg.users.positions)}};
  }
  const ChannelParams& c = cfg.channel;
  doc["channel"] = {{"tx_power_dbm", c.tx_power_dbm},       {"pl_ref_db", c.pl_ref_db},
                    {"ref_dist_m", c.ref_dist_m},           {"pl_exponent", c.pl_exponent},
                    {"shadow_sigma_db", c.shadow_sigma_db}, {"block_prob", c.block_prob},
                    {"block_loss_db", c.block_loss_db}};
  const RadioParams& r = cfg.radio;
  doc["radio"] = {{"bandwidth_hz", r.bandwidth_hz},
                  {"bw_efficiency", r.bw_efficiency},
                  {"snr_efficiency", r.snr_efficiency},
                  {"noise_power_dbm", r.noise_power_dbm}};
  json kinds = json::array();
  for (const SchedulerKind k : cfg.schedulers) kinds.push_back(std::string(to_string(k)));
  doc["schedulers"] = kinds;
  const SchedulerOptions& o = cfg.scheduler;
  doc["scheduler_options"] = {{"delta_th", o.delta_th},
                              {"epsilon_bps", o.epsilon_bps},
                              {"is_max_iterations", o.is_max_iterations},
                              {"es_budget", o.es_budget},
                              {"is_visit_order", o.is_visit_order}};
  doc["n_slots"] = cfg.n_slots;
  doc["seed"] = cfg.seed;
  doc["trace"] = cfg.trace;
  doc["sweep"] = {{"ap_counts", cfg.sweep.ap_counts},
                  {"ap_count_density", cfg.sweep.ap_count_density},
                  {"ap_count_use_base_users", cfg.sweep.ap_count_use_base_users},
                  {"densities", cfg.sweep.densities},
                  {"density_active_aps", cfg.sweep.density_active_aps}};
  doc["compare"] = {{"seeds", cfg.compare.seeds}, {"num_seeds", cfg.compare.num_seeds}};
  return doc;
}

json run_result_to_json(const RunResult& result) {
  json doc;
  doc["config"] = config_to_json(result.config);
  doc["scheduler"] = std::string(to_string(result.scheduler));
  doc["num_active_aps"] = result.num_active;
  doc["num_ues"] = result.num_ues;
  doc["num_beams"] = result.num_beams;

  const MetricsReport& m = result.metrics;
  doc["metrics"] = {{"total_rate_gbps", optional_json(m.total_rate_gbps)},
                    {"spatial_reuse", optional_json(m.spatial_reuse)},
                    {"fairness_index", optional_json(m.fairness_index)},
                    {"complexity_switchings", m.complexity_switchings},
                    {"predicted_switchings", m.predicted_switchings},
                    {"alpha_mean", optional_json(m.alpha_mean)},
                    {"per_user_rate_bps", m.per_user_rate_bps}};
  doc["ledger"] = {{"beam_switch_count", result.ledger.beam_switch_count},
                   {"is_iterations", result.ledger.is_iterations}};
  doc["metadata"] = {
      {"n_slots", result.config.n_slots},
      {"shadowing", "quasi-static, one draw per (AP, UE) pair per run"},
      {"blockage", "i.i.d. per (slot, AP, UE); attenuates desired and interfering paths"},
      {"interference", "sum of received power from every other active AP's selected beam"},
      {"pf_average_init", "epsilon_bps"},
      {"is_convergence", "stop when objective gain <= delta_th * previous objective"},
      {"conventional_association", "once per run on shadow-free, unblocked power"},
  };
  if (!result.trace.empty()) {
    json trace = json::array();
    for (std::size_t n = 0; n < result.trace.size(); ++n) {
      const SlotTrace& t = result.trace[n];
      trace.push_back({{"slot", n + 1},
                       {"links", pattern_json(t.pattern)},
                       {"sum_rate_bps", t.sum_rate_bps},
                       {"objective", t.objective},
                       {"iterations", t.iterations}});
    }
    doc["trace"] = trace;
  }
  return doc;
}

}  // namespace jpfs
