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


// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails.

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <numeric>
#include <string>
#include <vector>

#include "jpfs/channel.hpp"
#include "jpfs/metrics.hpp"
#include "jpfs/output.hpp"
#include "jpfs/sched.hpp"
#include "jpfs/sim.hpp"
#include "instances.hpp"
#include "oracle.hpp"

using namespace jpfs;

namespace {

int g_failures = 0;

void report(int id, const char* title, bool ok, const std::string& detail) {
  std::printf("[%s] %2d %s: %s\n", ok ? "PASS" : "FAIL", id, title, detail.c_str());
  std::fflush(stdout);
  if (!ok) ++g_failures;
}

std::string fmt(const char* f, double a) {
  char buf[128];
  std::snprintf(buf, sizeof buf, f, a);
  return buf;
}

std::vector<std::size_t> iota(std::size_t n) {
  std::vector<std::size_t> v(n);
  std::iota(v.begin(), v.end(), std::size_t{0});
  return v;
}

std::uint64_t falling_factorial(std::uint64_t k, std::uint64_t m) {
  std::uint64_t out = 1;
  for (std::uint64_t i = 0; i < m; ++i) out *= k - i;
  return out;
}

std::uint64_t ipow(std::uint64_t b, std::uint64_t e) {
  std::uint64_t out = 1;
  while (e-- > 0) out *= b;
  return out;
}

void gain_anchors() {
  const Beam beam{195.0, 45.0};
  const double g0 = beam_gain_db(beam, 195.0, 45.0, 30.0, 30.0);
  const double formula = 20.0 * std::log10(1.6162 / std::sin(15.0 * std::numbers::pi / 180.0));
  const double half_az = beam_gain_db(beam, 210.0, 45.0, 30.0, 30.0) - g0;
  const double half_el = beam_gain_db(beam, 195.0, 30.0, 30.0, 30.0) - g0;
  const double floor = beam_gain_db(beam, 15.0, 45.0, 30.0, 30.0);
  const bool literal = std::abs(g0 - 15.9116) <= 1e-4;
  const bool ok = literal && std::abs(g0 - formula) <= 1e-12 && std::abs(half_az + 3.0) <= 1e-9 &&
                  std::abs(half_el + 3.0) <= 1e-9 && floor == -12.0;
  report(1, "gain-model anchors", ok,
         fmt("boresight %.6f dB", g0) + fmt(" (20log10(1.6162/sin 15deg) = %.6f", formula) +
             (literal ? ", within 1e-4 of 15.9116)" : ", NOT within 1e-4 of 15.9116)") +
             fmt(", half-beamwidth az %.12f dB", half_az) + fmt(", el %.12f dB", half_el) +
             fmt(", floor %.17g dB", floor));
}

void es_oracle() {
  std::size_t objective_ok = 0, pattern_ok = 0;
  double worst = 0.0;
  for (std::uint64_t seed = 1; seed <= 50; ++seed) {
    const auto inst = testing_support::make_instance(seed, 2, 4, 3);
    ComplexityLedger ledger;
    const EsResult es = es_jpfs_slot({inst.power, inst.radio, inst.active}, inst.pf, ledger);
    const oracle::Best best = oracle::exhaustive(inst.power, inst.radio, inst.active, inst.pf.avg_rate_bps);
    const double rel = std::abs(es.objective - best.objective) / best.objective;
    worst = std::max(worst, rel);
    if (rel <= 1e-12) ++objective_ok;
    bool same = true;
    for (std::size_t m = 0; m < 2; ++m)
      same = same && es.pattern.links[m] && es.pattern.links[m]->user == best.users[m] &&
             es.pattern.links[m]->beam == best.beams[m];
    if (same) ++pattern_ok;
  }
  report(2, "ES oracle equivalence", objective_ok == 50 && pattern_ok == 50,
         std::to_string(objective_ok) + "/50 objectives within 1e-12 (worst " + fmt("%.3g", worst) + "), " +
             std::to_string(pattern_ok) + "/50 patterns equal the lexicographic first optimum");
}

void is_vs_es() {
  double sum = 0.0, min_ratio = 1e300;
  std::size_t exceed = 0, non_monotone = 0, max_alpha = 0;
  const std::size_t n = 100;
  for (std::uint64_t i = 0; i < n; ++i) {
    const std::size_t combo = i % 12;
    const std::size_t m = 2 + combo % 2;
    const std::size_t k = 4 + (combo / 2) % 3;
    const std::size_t b = 2 + combo / 6;
    const auto inst = testing_support::make_instance(1000 + i, m, k, b);
    ComplexityLedger le, li;
    const SlotContext ctx{inst.power, inst.radio, inst.active};
    const EsResult es = es_jpfs_slot(ctx, inst.pf, le);
    const IsResult is = is_jpfs_slot(ctx, inst.pf, SchedulerOptions{}, li);
    const double ratio = is.objective / es.objective;
    sum += ratio;
    min_ratio = std::min(min_ratio, ratio);
    if (is.objective > es.objective) ++exceed;
    for (std::size_t t = 1; t < is.objective_trace.size(); ++t)
      if (is.objective_trace[t] < is.objective_trace[t - 1]) {
        ++non_monotone;
        break;
      }
    max_alpha = std::max(max_alpha, is.iterations);
  }
  const double mean = sum / static_cast<double>(n);
  report(3, "IS vs ES objective", mean >= 0.95 && min_ratio >= 0.80 && exceed == 0,
         fmt("mean IS/ES %.6f", mean) + fmt(", min %.6f", min_ratio) + ", IS above ES on " +
             std::to_string(exceed) + "/100 instances");
  report(4, "IS monotonicity and termination", non_monotone == 0 && max_alpha <= 20,
         std::to_string(non_monotone) + "/100 non-monotone iteration traces, max alpha " +
             std::to_string(max_alpha));
}

void complexity_formulas() {
  std::string detail;
  bool ok = true;

  // Conventional: B * M per run, on the default grid.
  const Room room;
  const Placement pl{default_ap_grid(room), drop_ues(room, 0.2, 5)};
  const std::vector<std::pair<double, std::size_t>> conv{{30, 6}, {30, 1}, {90, 3}, {45, 2}, {120, 4}};
  std::size_t conv_ok = 0;
  for (const auto& [bw, m] : conv) {
    const BeamCodebook cb = uniform_codebook(bw, 45.0);
    const LinkBudget budget(pl, cb, ChannelParams{});
    Scheduler s(SchedulerKind::kConventional, {}, budget, iota(m));
    PfState pf = PfState::initial(pl.num_ues(), 1e3);
    const PowerTable t = budget.expected_table();
    for (int n = 0; n < 3; ++n) s.run_slot(t, RadioParams{}, pf);
    if (s.ledger().beam_switch_count == cb.size() * m) ++conv_ok;
  }

  struct Tuple { std::size_t k, m, b; };
  const std::vector<Tuple> tuples{{4, 2, 2}, {3, 1, 4}, {5, 2, 3}, {5, 3, 2}, {6, 3, 3}, {4, 4, 2}};
  std::size_t es_ok = 0, is_ok = 0;
  for (std::size_t i = 0; i < tuples.size(); ++i) {
    const Tuple& t = tuples[i];
    const auto inst = testing_support::make_instance(500 + i, t.m, t.k, t.b);
    const SlotContext ctx{inst.power, inst.radio, inst.active};
    ComplexityLedger le, li;
    es_jpfs_slot(ctx, inst.pf, le);
    es_jpfs_slot(ctx, inst.pf, le);
    if (le.beam_switch_count == 2 * falling_factorial(t.k, t.m) * ipow(t.b, t.m)) ++es_ok;
    const IsResult r1 = is_jpfs_slot(ctx, inst.pf, {}, li);
    const IsResult r2 = is_jpfs_slot(ctx, inst.pf, {}, li);
    if (li.beam_switch_count == (r1.iterations + r2.iterations) * t.b * t.m) ++is_ok;
  }
  ok = conv_ok == conv.size() && es_ok == tuples.size() && is_ok == tuples.size();
  detail = "conventional " + std::to_string(conv_ok) + "/" + std::to_string(conv.size()) + ", ES " +
           std::to_string(es_ok) + "/" + std::to_string(tuples.size()) + ", IS " + std::to_string(is_ok) +
           "/" + std::to_string(tuples.size()) + " ledgers exact";

  // Reduction at M=6, K=40, B=12 with alpha measured on the default scenario.
  ScenarioConfig c;
  const RunResult r = run(c, SchedulerKind::kIsJpfs);
  const double alpha = r.metrics.alpha_mean.value_or(0.0);
  const double reduction = is_complexity(alpha, 12, 6) / es_complexity(40, 6, 12);
  ok = ok && r.num_ues == 40 && reduction < 1e-10;
  detail += fmt("; measured alpha %.4f", alpha) + fmt(", alpha*B*M / ES = %.3e", reduction);
  report(5, "complexity formulas", ok, detail);
}

void pf_dynamics() {
  ScenarioConfig c;
  c.ap_positions = {{10, 5, 4}};
  c.active_aps = {0};
  c.users.density_per_m2.reset();
  c.users.positions = {{8, 5, 1}, {12, 5, 1}};
  c.channel.shadow_sigma_db = 0.0;
  c.channel.block_prob = 0.0;
  c.n_slots = 100;
  c.trace = true;
  bool ok = true;
  std::string detail;
  for (const SchedulerKind kind : {SchedulerKind::kEsJpfs, SchedulerKind::kIsJpfs}) {
    const RunResult r = run(c, kind);
    std::size_t repeats = 0;
    for (std::size_t n = 2; n < r.trace.size(); ++n)
      if (r.trace[n].pattern.links[0]->user == r.trace[n - 1].pattern.links[0]->user) ++repeats;
    const double fi = r.metrics.fairness_index.value_or(0.0);
    ok = ok && repeats == 0 && fi >= 0.999;
    detail += std::string(detail.empty() ? "" : "; ") + std::string(to_string(kind)) + ": " +
              std::to_string(repeats) + " repeated users after slot 2" + fmt(", FI %.6f", fi);
  }
  report(6, "PF dynamics", ok, detail);
}

void spatial_reuse_anchor() {
  ScenarioConfig c;
  c.room = Room{40, 40, 4, 1};
  c.ap_positions = {{10, 10, 4}, {30, 10, 4}, {10, 30, 4}, {30, 30, 4}};
  c.active_aps = {0, 1, 2, 3};
  const double d = 3.0 / std::numbers::sqrt2;
  c.users.density_per_m2.reset();
  c.users.positions = {{10 - d, 10 - d, 1}, {30 + d, 10 - d, 1}, {10 - d, 30 + d, 1}, {30 + d, 30 + d, 1}};
  c.channel.shadow_sigma_db = 0.0;
  c.channel.block_prob = 0.0;
  c.n_slots = 50;
  c.trace = true;
  const RunResult r = run(c, SchedulerKind::kIsJpfs);

  // Preconditions: every cross path of every scheduled pattern sits at the
  // gain floor and is at least three times the own distance.
  const Scenario s = build_scenario(c);
  bool floor_ok = true, distance_ok = true;
  for (const SlotTrace& t : r.trace) {
    for (std::size_t m = 0; m < 4; ++m) {
      const std::size_t own = t.pattern.links[m]->user;
      const double own_d = departure_angles(s.placement.ap_positions[m], s.placement.ue_positions[own]).distance_m;
      for (std::size_t j = 0; j < 4; ++j) {
        if (j == m) continue;
        const DepartureAngles a = departure_angles(s.placement.ap_positions[j], s.placement.ue_positions[own]);
        const Beam& beam = s.codebook.beams[t.pattern.links[j]->beam];
        floor_ok = floor_ok && beam_gain_db(beam, a, s.codebook) == -12.0;
        distance_ok = distance_ok && a.distance_m >= 3.0 * own_d;
      }
    }
  }
  const double rho = r.metrics.spatial_reuse.value_or(0.0);
  report(7, "spatial-reuse anchor", floor_ok && distance_ok && rho >= 3.95,
         fmt("rho %.6f", rho) + (floor_ok ? ", cross gains at -12 dB" : ", cross gains ABOVE floor") +
             (distance_ok ? ", cross distances >= 3x own" : ", cross distances too short"));
}

void fairness_anchors() {
  const double flat = *fairness_index(std::vector<double>(10, 2.5));
  const double one_hot = *fairness_index(std::vector<double>{0, 0, 0, 7, 0});
  const double three = *fairness_index(std::vector<double>{1, 2, 3});
  const bool ok = std::abs(flat - 1.0) <= 1e-12 && std::abs(one_hot - 0.2) <= 1e-12 &&
                  std::abs(three - 6.0 / 7.0) <= 1e-12;
  report(8, "fairness-index anchors", ok,
         fmt("FI(c..c) %.15f", flat) + fmt(", FI(one-hot, K=5) %.15f", one_hot) + fmt(", FI(1,2,3) %.15f", three));
}

struct SeedMetrics {
  double rate = 0.0, fi = 0.0, rho = 0.0;
};

std::vector<SeedMetrics> per_seed(const CompareReport& report, SchedulerKind kind) {
  std::vector<SeedMetrics> out;
  for (const RunCell& cell : report.cells) {
    if (cell.scheduler != kind || !cell.result) continue;
    const MetricsReport& m = cell.result->metrics;
    out.push_back({m.total_rate_gbps.value_or(0.0), m.fairness_index.value_or(0.0), m.spatial_reuse.value_or(0.0)});
  }
  return out;
}

double mean_of(const std::vector<SeedMetrics>& v, double SeedMetrics::*field) {
  double s = 0.0;
  for (const auto& x : v) s += x.*field;
  return v.empty() ? 0.0 : s / static_cast<double>(v.size());
}

void trends() {
  ScenarioConfig c;
  c.active_aps = {1, 2, 3, 4};
  c.users.density_per_m2 = 1.0;
  c.n_slots = 500;
  std::vector<std::uint64_t> seeds(20);
  std::iota(seeds.begin(), seeds.end(), std::uint64_t{1});

  const CompareReport cmp = compare(c, {SchedulerKind::kConventional, SchedulerKind::kIsJpfs}, seeds);
  const auto conv = per_seed(cmp, SchedulerKind::kConventional);
  const auto is = per_seed(cmp, SchedulerKind::kIsJpfs);
  std::size_t wins = 0;
  for (std::size_t i = 0; i < std::min(conv.size(), is.size()); ++i)
    if (is[i].rate > conv[i].rate) ++wins;
  const double rate_c = mean_of(conv, &SeedMetrics::rate), rate_i = mean_of(is, &SeedMetrics::rate);
  const double fi_c = mean_of(conv, &SeedMetrics::fi), fi_i = mean_of(is, &SeedMetrics::fi);
  const double rho_c = mean_of(conv, &SeedMetrics::rho), rho_i = mean_of(is, &SeedMetrics::rho);
  const bool sched_ok = conv.size() == 20 && is.size() == 20 && rate_i > rate_c && wins >= 16 &&
                        fi_i > fi_c && rho_i > rho_c;

  ScenarioConfig lo = c, hi = c;
  lo.users.density_per_m2 = 0.2;
  hi.users.density_per_m2 = 2.0;
  const auto conv_lo = per_seed(compare(lo, {SchedulerKind::kConventional}, seeds), SchedulerKind::kConventional);
  const auto conv_hi = per_seed(compare(hi, {SchedulerKind::kConventional}, seeds), SchedulerKind::kConventional);
  const double rate_lo = mean_of(conv_lo, &SeedMetrics::rate), rate_hi = mean_of(conv_hi, &SeedMetrics::rate);
  const double fi_lo = mean_of(conv_lo, &SeedMetrics::fi), fi_hi = mean_of(conv_hi, &SeedMetrics::fi);
  const bool density_ok = rate_hi < rate_lo && fi_hi > fi_lo;

  report(9, "trend reproduction", sched_ok && density_ok,
         fmt("rate IS %.4f", rate_i) + fmt(" vs conv %.4f Gbps", rate_c) + " (IS ahead on " +
             std::to_string(wins) + "/20 seeds)" + fmt(", FI %.4f", fi_i) + fmt(" vs %.4f", fi_c) +
             fmt(", rho %.4f", rho_i) + fmt(" vs %.4f", rho_c) + fmt("; conv rate at 0.2/m2 %.4f", rate_lo) +
             fmt(" vs 2/m2 %.4f Gbps", rate_hi) + fmt(", FI %.4f", fi_lo) + fmt(" vs %.4f", fi_hi));
}

std::string summary_of(const ResultSet& results) { return render_results(results).front().content; }

void determinism() {
  ScenarioConfig c;
  c.n_slots = 100;
  c.schedulers = {SchedulerKind::kConventional, SchedulerKind::kIsJpfs};
  const std::string a = summary_of(run_all(c));
  const std::string b = summary_of(run_all(c));

  ScenarioConfig s = c;
  s.n_slots = 20;
  s.sweep.ap_count_density = 0.05;
  const std::vector<SchedulerKind> all{SchedulerKind::kConventional, SchedulerKind::kEsJpfs, SchedulerKind::kIsJpfs};
  const std::string sa = summary_of(from_sweep(sweep_ap_count(s, {1, 2, 4}, all), s.scheduler.es_budget));
  const std::string sb = summary_of(from_sweep(sweep_ap_count(s, {1, 2, 4}, all), s.scheduler.es_budget));
  report(10, "determinism", a == b && sa == sb && !a.empty(),
         std::string(a == b ? "run" : "run DIFFERS") + " and " + (sa == sb ? "sweep" : "sweep DIFFERS") +
             " summary.csv byte-identical on repeat (" + std::to_string(a.size() + sa.size()) + " bytes)");
}

}  // namespace

int main() {
  gain_anchors();
  es_oracle();
  is_vs_es();
  complexity_formulas();
  pf_dynamics();
  spatial_reuse_anchor();
  fairness_anchors();
  trends();
  determinism();
  std::printf("%d criteria failed\n", g_failures);
  return g_failures == 0 ? 0 : 1;
}
