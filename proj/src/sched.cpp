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

#include "jpfs/sched.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <utility>

#include "jpfs/error.hpp"

namespace jpfs {
namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();

void require_enough_users(std::size_t num_ues, std::size_t num_active) {
  if (num_ues < num_active) {
    throw ScenarioError(std::to_string(num_ues) + " UEs cannot fill " + std::to_string(num_active) +
                        " active APs with distinct users");
  }
}

// PF objective of a dense (aps[i], users[i], beams[i]) pattern. Summation
// order matches evaluate_pattern + pf_objective for ascending aps.
double dense_objective(const PowerTable& power, const RadioParams& radio, double noise_mw,
                       std::span<const std::size_t> aps, std::span<const std::size_t> users,
                       std::span<const std::size_t> beams, std::span<const double> avg) {
  double total = 0.0;
  for (std::size_t i = 0; i < aps.size(); ++i) {
    double interference = 0.0;
    for (std::size_t j = 0; j < aps.size(); ++j) {
      if (j != i) interference += power.mw(aps[j], users[i], beams[j]);
    }
    const double sinr = sinr_from_mw(power.mw(aps[i], users[i], beams[i]), interference, noise_mw);
    total += link_rate_bps(sinr, radio) / avg[users[i]];
  }
  return total;
}

class EsSearch {
 public:
  EsSearch(const SlotContext& ctx, std::span<const double> avg)
      : ctx_(ctx), avg_(avg), noise_mw_(dbm_to_mw(ctx.radio.noise_power_dbm)),
        num_active_(ctx.active_aps.size()), users_(num_active_), beams_(num_active_),
        best_users_(num_active_), best_beams_(num_active_), used_(ctx.power.num_ues(), false) {}

  void run() { choose_user(0); }

  double best() const { return best_; }
  std::uint64_t evaluated() const { return evaluated_; }
  const std::vector<std::size_t>& best_users() const { return best_users_; }
  const std::vector<std::size_t>& best_beams() const { return best_beams_; }

 private:
  // User tuples in lexicographic order; beam tuples lexicographic inside.
  void choose_user(std::size_t pos) {
    if (pos == num_active_) {
      scan_beams();
      return;
    }
    for (std::size_t k = 0; k < used_.size(); ++k) {
      if (used_[k]) continue;
      used_[k] = true;
      users_[pos] = k;
      choose_user(pos + 1);
      used_[k] = false;
    }
  }

  void scan_beams() {
    const std::size_t num_beams = ctx_.power.num_beams();
    std::fill(beams_.begin(), beams_.end(), 0);
    while (true) {
      const double obj = dense_objective(ctx_.power, ctx_.radio, noise_mw_, ctx_.active_aps, users_,
                                         beams_, avg_);
      ++evaluated_;
      if (obj > best_) {
        best_ = obj;
        best_users_ = users_;
        best_beams_ = beams_;
      }
      std::size_t digit = num_active_;
      while (digit > 0) {
        --digit;
        if (++beams_[digit] < num_beams) break;
        beams_[digit] = 0;
        if (digit == 0) return;
      }
      if (num_active_ == 0) return;
    }
  }

  const SlotContext& ctx_;
  std::span<const double> avg_;
  double noise_mw_;
  std::size_t num_active_;
  std::vector<std::size_t> users_;
  std::vector<std::size_t> beams_;
  std::vector<std::size_t> best_users_;
  std::vector<std::size_t> best_beams_;
  std::vector<bool> used_;
  double best_ = kNegInf;
  std::uint64_t evaluated_ = 0;
};

// Coordinate ascent on the PF objective, one active AP at a time.
class IsSearch {
 public:
  IsSearch(const SlotContext& ctx, std::span<const double> avg, std::vector<std::size_t> order)
      : ctx_(ctx), avg_(avg), noise_mw_(dbm_to_mw(ctx.radio.noise_power_dbm)),
        order_(std::move(order)), pattern_(ctx.power.num_aps()),
        user_taken_(ctx.power.num_ues(), false), others_score_(ctx.power.num_beams()),
        own_interference_(ctx.power.num_ues()) {}

  const Pattern& pattern() const { return pattern_; }

  double objective() const { return pf_objective(pattern_, ctx_.power, ctx_.radio, avg_); }

  // Re-selects the link of AP `ap` against every other placed link. Returns
  // the objective of the resulting (partial) pattern.
  double update_link(std::size_t ap, double incumbent_objective) {
    const std::optional<Link> incumbent = pattern_.links[ap];
    if (incumbent) user_taken_[incumbent->user] = false;
    pattern_.links[ap].reset();

    const PowerTable& power = ctx_.power;
    const std::size_t num_beams = power.num_beams();
    const std::size_t num_ues = power.num_ues();

    // Contribution of the other links as a function of this AP's beam.
    std::fill(others_score_.begin(), others_score_.end(), 0.0);
    for (const std::size_t j : order_) {
      if (j == ap || !pattern_.links[j]) continue;
      const Link& lj = *pattern_.links[j];
      double base = 0.0;
      for (const std::size_t i : order_) {
        if (i == j || i == ap || !pattern_.links[i]) continue;
        base += power.mw(i, lj.user, pattern_.links[i]->beam);
      }
      const double signal = power.mw(j, lj.user, lj.beam);
      for (std::size_t b = 0; b < num_beams; ++b) {
        const double sinr = sinr_from_mw(signal, base + power.mw(ap, lj.user, b), noise_mw_);
        others_score_[b] += link_rate_bps(sinr, ctx_.radio) / avg_[lj.user];
      }
    }
    // Interference the other links put on each candidate user.
    for (std::size_t k = 0; k < num_ues; ++k) {
      double interference = 0.0;
      for (const std::size_t j : order_) {
        if (j != ap && pattern_.links[j]) interference += power.mw(j, k, pattern_.links[j]->beam);
      }
      own_interference_[k] = interference;
    }

    double best = kNegInf;
    Link choice;
    for (std::size_t k = 0; k < num_ues; ++k) {
      if (user_taken_[k]) continue;
      for (std::size_t b = 0; b < num_beams; ++b) {
        const double sinr = sinr_from_mw(power.mw(ap, k, b), own_interference_[k], noise_mw_);
        const double score = others_score_[b] + link_rate_bps(sinr, ctx_.radio) / avg_[k];
        if (score > best) {
          best = score;
          choice = {k, b};
        }
      }
    }

    pattern_.links[ap] = choice;
    double objective = this->objective();
    // The decomposed score and the full evaluation can differ in the last
    // ulp; never let that step the objective below the incumbent.
    if (incumbent && objective < incumbent_objective) {
      pattern_.links[ap] = incumbent;
      objective = incumbent_objective;
    }
    user_taken_[pattern_.links[ap]->user] = true;
    return objective;
  }

 private:
  const SlotContext& ctx_;
  std::span<const double> avg_;
  double noise_mw_;
  std::vector<std::size_t> order_;
  Pattern pattern_;
  std::vector<bool> user_taken_;
  std::vector<double> others_score_;
  std::vector<double> own_interference_;
};

}  // namespace

PfState PfState::initial(std::size_t num_ues, double epsilon_bps) {
  if (!(epsilon_bps > 0.0)) throw DomainError("epsilon_bps must be positive");
  PfState s;
  s.avg_rate_bps.assign(num_ues, epsilon_bps);
  s.epsilon_bps = epsilon_bps;
  return s;
}

void pf_update_in_place(PfState& state, std::span<const double> rates) {
  if (rates.size() != state.avg_rate_bps.size())
    throw ContractError("rate vector length does not match the PF state");
  for (const double r : rates) {
    if (!(r >= 0.0)) throw ContractError("instantaneous rates must be non-negative");
  }
  state.slot_index += 1;
  const double n = static_cast<double>(state.slot_index);
  const double keep = 1.0 - 1.0 / n;
  for (std::size_t k = 0; k < rates.size(); ++k) {
    const double next = keep * state.avg_rate_bps[k] + rates[k] / n;
    state.avg_rate_bps[k] = std::max(next, state.epsilon_bps);
  }
}

PfState pf_update(const PfState& state, std::span<const double> rates) {
  PfState next = state;
  pf_update_in_place(next, rates);
  return next;
}

std::string_view to_string(SchedulerKind kind) {
  switch (kind) {
    case SchedulerKind::kConventional: return "conv";
    case SchedulerKind::kEsJpfs: return "es";
    case SchedulerKind::kIsJpfs: return "is";
  }
  return "unknown";
}

std::optional<SchedulerKind> parse_scheduler_kind(std::string_view name) {
  if (name == "conv" || name == "conventional") return SchedulerKind::kConventional;
  if (name == "es" || name == "es-jpfs") return SchedulerKind::kEsJpfs;
  if (name == "is" || name == "is-jpfs") return SchedulerKind::kIsJpfs;
  return std::nullopt;
}

void SchedulerOptions::validate() const {
  if (!(delta_th > 0.0)) throw DomainError("delta_th must be positive");
  if (!(epsilon_bps > 0.0)) throw DomainError("epsilon_bps must be positive");
  if (is_max_iterations == 0) throw DomainError("is_max_iterations must be at least 1");
  if (!(es_budget > 0.0)) throw DomainError("es_budget must be positive");
}

double conventional_complexity(std::size_t num_beams, std::size_t num_aps) {
  return static_cast<double>(num_beams) * static_cast<double>(num_aps);
}

double es_complexity(std::size_t num_ues, std::size_t num_aps, std::size_t num_beams) {
  if (num_ues < num_aps) return 0.0;
  double count = 1.0;
  for (std::size_t i = 0; i < num_aps; ++i) count *= static_cast<double>(num_ues - i);
  return count * std::pow(static_cast<double>(num_beams), static_cast<double>(num_aps));
}

double is_complexity(double alpha, std::size_t num_beams, std::size_t num_aps) {
  return alpha * static_cast<double>(num_beams) * static_cast<double>(num_aps);
}

Association conventional_associate(const LinkBudget& budget, std::span<const std::size_t> active_aps,
                                   ComplexityLedger& ledger) {
  Association out;
  out.ap_of_ue.assign(budget.num_ues(), 0);
  out.beam_of_ue.assign(budget.num_ues(), 0);
  out.ues_of_ap.assign(budget.num_aps(), {});
  if (!active_aps.empty()) {
    for (std::size_t k = 0; k < budget.num_ues(); ++k) {
      double best = kNegInf;
      for (const std::size_t m : active_aps) {
        for (std::size_t b = 0; b < budget.num_beams(); ++b) {
          const double p = budget.expected_dbm(m, k, b);
          if (p > best) {
            best = p;
            out.ap_of_ue[k] = m;
            out.beam_of_ue[k] = b;
          }
        }
      }
      out.ues_of_ap[out.ap_of_ue[k]].push_back(k);
    }
  }
  const auto cost = static_cast<std::uint64_t>(budget.num_beams() * active_aps.size());
  ledger.beam_switch_count += cost;
  return out;
}

Pattern conventional_slot(const Association& association, std::vector<std::size_t>& cursors) {
  const std::size_t num_aps = association.ues_of_ap.size();
  cursors.resize(num_aps, 0);
  Pattern pattern(num_aps);
  for (std::size_t m = 0; m < num_aps; ++m) {
    const auto& ues = association.ues_of_ap[m];
    if (ues.empty()) continue;
    const std::size_t k = ues[cursors[m] % ues.size()];
    cursors[m] = (cursors[m] + 1) % ues.size();
    pattern.links[m] = Link{k, association.beam_of_ue[k]};
  }
  return pattern;
}

EsResult es_jpfs_slot(const SlotContext& ctx, const PfState& pf, ComplexityLedger& ledger) {
  require_enough_users(ctx.power.num_ues(), ctx.active_aps.size());
  EsSearch search(ctx, pf.avg_rate_bps);
  search.run();

  EsResult out;
  out.pattern = Pattern(ctx.power.num_aps());
  for (std::size_t i = 0; i < ctx.active_aps.size(); ++i)
    out.pattern.links[ctx.active_aps[i]] = Link{search.best_users()[i], search.best_beams()[i]};
  out.objective = ctx.active_aps.empty() ? 0.0 : search.best();

  ledger.beam_switch_count += search.evaluated();
  ledger.per_slot_switches.push_back(search.evaluated());
  return out;
}

IsResult is_jpfs_slot(const SlotContext& ctx, const PfState& pf, const SchedulerOptions& options,
                      ComplexityLedger& ledger) {
  require_enough_users(ctx.power.num_ues(), ctx.active_aps.size());
  std::vector<std::size_t> order(ctx.active_aps.begin(), ctx.active_aps.end());
  if (!options.is_visit_order.empty()) {
    std::vector<std::size_t> a = options.is_visit_order;
    std::vector<std::size_t> b = order;
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    if (a != b) throw ContractError("is_visit_order must be a permutation of the active APs");
    order = options.is_visit_order;
  }

  IsSearch search(ctx, pf.avg_rate_bps, order);
  IsResult out;
  double objective = 0.0;
  while (out.iterations < options.is_max_iterations) {
    const double previous = objective;
    for (const std::size_t ap : order) objective = search.update_link(ap, objective);
    ++out.iterations;
    out.objective_trace.push_back(objective);
    if (objective - previous <= options.delta_th * previous) break;
  }
  if (order.empty()) out.iterations = 0;
  out.pattern = search.pattern();
  out.objective = objective;

  const auto cost = static_cast<std::uint64_t>(out.iterations * ctx.power.num_beams() * order.size());
  ledger.beam_switch_count += cost;
  ledger.is_iterations += out.iterations;
  ledger.per_slot_switches.push_back(cost);
  ledger.per_slot_iterations.push_back(static_cast<std::uint32_t>(out.iterations));
  return out;
}

Scheduler::Scheduler(SchedulerKind kind, SchedulerOptions options, const LinkBudget& budget,
                     std::vector<std::size_t> active_aps)
    : kind_(kind), options_(std::move(options)), active_aps_(std::move(active_aps)) {
  options_.validate();
  std::sort(active_aps_.begin(), active_aps_.end());
  if (std::adjacent_find(active_aps_.begin(), active_aps_.end()) != active_aps_.end())
    throw ScenarioError("active AP list contains duplicates");
  for (const std::size_t m : active_aps_) {
    if (m >= budget.num_aps()) throw ScenarioError("active AP index " + std::to_string(m) + " does not exist");
  }
  if (kind_ == SchedulerKind::kConventional) {
    association_ = conventional_associate(budget, active_aps_, ledger_);
    cursors_.assign(budget.num_aps(), 0);
  } else {
    require_enough_users(budget.num_ues(), active_aps_.size());
  }
}

SlotOutcome Scheduler::run_slot(const PowerTable& power, const RadioParams& radio, PfState& pf) {
  SlotOutcome out;
  const SlotContext ctx{power, radio, active_aps_};
  switch (kind_) {
    case SchedulerKind::kConventional:
      out.pattern = conventional_slot(*association_, cursors_);
      ledger_.per_slot_switches.push_back(0);
      break;
    case SchedulerKind::kEsJpfs:
      out.pattern = es_jpfs_slot(ctx, pf, ledger_).pattern;
      break;
    case SchedulerKind::kIsJpfs: {
      IsResult r = is_jpfs_slot(ctx, pf, options_, ledger_);
      out.pattern = std::move(r.pattern);
      out.iterations = r.iterations;
      break;
    }
  }
  out.rates = evaluate_pattern(out.pattern, power, radio);
  out.objective = pf_objective(out.pattern, out.rates, pf.avg_rate_bps);

  std::vector<double> served(power.num_ues(), 0.0);
  for (std::size_t m = 0; m < out.pattern.num_aps(); ++m) {
    if (out.pattern.links[m]) served[out.pattern.links[m]->user] = out.rates.per_link_rate_bps[m];
  }
  pf_update_in_place(pf, served);
  return out;
}

}  // namespace jpfs
