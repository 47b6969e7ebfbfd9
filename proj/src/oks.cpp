/*
 * Copyright 2026 the omac authors
 * Licensed under the terms of the Apache 2.0 License.
 * See LICENSE file in the project root for terms.
 */
#include "omac/oks.hpp"

#include <algorithm>
#include <stdexcept>

namespace omac {

namespace {

// Shared greedy core over (value, cost) profiles; used for raw OKS items and
// for OMAC agents under the reduction (value = weight, cost = share).
struct Profile {
  std::vector<Rational> value;
  std::vector<Rational> cost;

  ExtendedValue quality(int i) const {
    const Rational& c = cost[static_cast<size_t>(i)];
    const Rational& p = value[static_cast<size_t>(i)];
    if (c.is_zero()) return p.is_zero() ? ExtendedValue(Rational(0)) : ExtendedValue::pos_inf();
    return p / c;
  }
  bool greedy_before(int a, int b) const {
    ExtendedValue qa = quality(a), qb = quality(b);
    if (qa != qb) return qa > qb;
    const Rational& ca = cost[static_cast<size_t>(a)];
    const Rational& cb = cost[static_cast<size_t>(b)];
    if (ca != cb) return ca < cb;
    return a < b;
  }
};

std::vector<int> greedy_rebuild(const Profile& pr, std::vector<int> candidates,
                                const Rational& budget, std::vector<int>* dropped = nullptr) {
  std::sort(candidates.begin(), candidates.end(),
            [&](int a, int b) { return pr.greedy_before(a, b); });
  std::vector<int> kept;
  Rational used;
  for (int id : candidates) {
    if (used + pr.cost[static_cast<size_t>(id)] <= budget) {
      used += pr.cost[static_cast<size_t>(id)];
      kept.push_back(id);
    } else if (dropped) {
      dropped->push_back(id);
    }
  }
  std::sort(kept.begin(), kept.end());
  return kept;
}

Profile oks_profile(const OksInstance& oks) {
  Profile pr;
  for (const OksItem& it : oks.items) {
    pr.value.push_back(it.value);
    pr.cost.push_back(it.cost);
  }
  return pr;
}

Profile omac_profile(const Instance& inst) {
  if (!inst.additive()) {
    throw std::domain_error("static-threshold algorithms need an additive instance");
  }
  Profile pr;
  for (AgentId i = 0; i < inst.size(); ++i) {
    ExtendedValue share = additive_share(inst, i);
    if (!share.is_finite() || share.finite() > Rational(1)) {
      throw std::invalid_argument("agent " + std::to_string(i + 1) +
                                  " has share above 1; outside the reduction's range");
    }
    pr.value.push_back(inst.reward.weights[static_cast<size_t>(i)]);
    pr.cost.push_back(share.finite());
  }
  return pr;
}

std::optional<int> max_step_profile(const Profile& pr, std::optional<int> incumbent,
                                    int arrival) {
  if (pr.cost[static_cast<size_t>(arrival)] > Rational(1)) return incumbent;
  if (!incumbent) return arrival;
  return pr.value[static_cast<size_t>(arrival)] > pr.value[static_cast<size_t>(*incumbent)]
             ? std::optional<int>(arrival)
             : incumbent;
}

}  // namespace

ValidationReport validate_oks(const OksInstance& oks) {
  ValidationReport r;
  if (!(oks.budget > Rational(0)) || oks.budget > Rational(1)) {
    r.errors.push_back("budget must lie in (0, 1]");
  }
  for (size_t i = 0; i < oks.items.size(); ++i) {
    if (oks.items[i].value.sign() < 0) {
      r.errors.push_back("item " + std::to_string(i + 1) + " has negative value");
    }
    if (oks.items[i].cost.sign() < 0) {
      r.errors.push_back("item " + std::to_string(i + 1) + " has negative cost");
    }
  }
  return r;
}

std::vector<int> oks_greedy_step(const OksInstance& oks, const std::vector<int>& selected,
                                 int arrival) {
  if (std::find(selected.begin(), selected.end(), arrival) != selected.end()) {
    throw std::invalid_argument("arrival already selected");
  }
  std::vector<int> candidates = selected;
  candidates.push_back(arrival);
  return greedy_rebuild(oks_profile(oks), std::move(candidates), oks.budget);
}

std::optional<int> oks_max_step(const OksInstance& oks, std::optional<int> incumbent,
                                int arrival) {
  return max_step_profile(oks_profile(oks), incumbent, arrival);
}

std::vector<int> oks_greedy_select(const OksInstance& oks) {
  Profile pr = oks_profile(oks);
  std::vector<int> selected;
  for (int arrival = 0; arrival < oks.size(); ++arrival) {
    std::vector<int> candidates = selected;
    candidates.push_back(arrival);
    selected = greedy_rebuild(pr, std::move(candidates), oks.budget);
  }
  return selected;
}

std::optional<int> oks_max_select(const OksInstance& oks) {
  Profile pr = oks_profile(oks);
  std::optional<int> incumbent;
  for (int arrival = 0; arrival < oks.size(); ++arrival) {
    incumbent = max_step_profile(pr, incumbent, arrival);
  }
  return incumbent;
}

Rational oks_value(const OksInstance& oks, const std::vector<int>& selection) {
  Rational v;
  for (int i : selection) v += oks.items[static_cast<size_t>(i)].value;
  return v;
}

Rational oks_cost(const OksInstance& oks, const std::vector<int>& selection) {
  Rational c;
  for (int i : selection) c += oks.items[static_cast<size_t>(i)].cost;
  return c;
}

Instance phi_reduction(const OksInstance& oks) {
  Instance inst;
  inst.label = oks.label.empty() ? "phi-reduced" : "phi(" + oks.label + ")";
  inst.family = oks.family;
  std::vector<Rational> weights;
  for (size_t i = 0; i < oks.items.size(); ++i) {
    const OksItem& it = oks.items[i];
    if (it.cost > Rational(1)) {
      throw std::invalid_argument("item " + std::to_string(i + 1) +
                                  " has cost above 1; shares are fractions of the reward");
    }
    if (it.value.is_zero() && it.cost.sign() > 0) {
      throw std::invalid_argument("item " + std::to_string(i + 1) +
                                  " has zero value at positive cost; not representable");
    }
    weights.push_back(it.value);
    inst.costs.push_back(it.cost * it.value);
  }
  inst.reward = RewardFunction::additive(std::move(weights));
  return inst;
}

Trajectory run_oks_beta_greedy(const Instance& inst, const Rational& beta) {
  Profile pr = omac_profile(inst);
  Trajectory traj;
  traj.algorithm = "oks-beta[greedy]";
  std::vector<int> selected;
  std::vector<bool> departed(static_cast<size_t>(inst.size()), false);
  for (int arrival = 0; arrival < inst.size(); ++arrival) {
    std::vector<int> candidates = selected;
    candidates.push_back(arrival);
    std::vector<int> dropped;
    std::vector<int> kept = greedy_rebuild(pr, std::move(candidates), beta, &dropped);
    StepRecord rec;
    rec.arrival = arrival;
    for (int id : dropped) {
      if (departed[static_cast<size_t>(id)]) throw std::logic_error("greedy dismissed twice");
      departed[static_cast<size_t>(id)] = true;
      rec.dismissed.push_back(id);
    }
    std::sort(rec.dismissed.begin(), rec.dismissed.end());
    if (std::binary_search(kept.begin(), kept.end(), arrival)) rec.accepted.push_back(arrival);
    rec.utility = principal_utility(inst, kept);
    rec.hired_count = static_cast<int>(kept.size());
    traj.steps.push_back(std::move(rec));
    selected = std::move(kept);
  }
  traj.final_set = selected;
  traj.final_utility =
      traj.steps.empty() ? ExtendedValue(Rational(0)) : traj.steps.back().utility;
  return traj;
}

Trajectory run_oks_beta_max(const Instance& inst) {
  Profile pr = omac_profile(inst);
  Trajectory traj;
  traj.algorithm = "oks-beta[max]";
  std::optional<int> incumbent;
  for (int arrival = 0; arrival < inst.size(); ++arrival) {
    std::optional<int> next = max_step_profile(pr, incumbent, arrival);
    StepRecord rec;
    rec.arrival = arrival;
    if (next == incumbent) {
      rec.dismissed.push_back(arrival);
    } else {
      rec.accepted.push_back(arrival);
      if (incumbent) rec.dismissed.push_back(*incumbent);
    }
    AgentSet held;
    if (next) held.push_back(*next);
    rec.utility = principal_utility(inst, held);
    rec.hired_count = next ? 1 : 0;
    traj.steps.push_back(std::move(rec));
    incumbent = next;
  }
  if (incumbent) traj.final_set.push_back(*incumbent);
  traj.final_utility =
      traj.steps.empty() ? ExtendedValue(Rational(0)) : traj.steps.back().utility;
  return traj;
}

ExtendedValue alg_omac_beta_expected(const Instance& inst, const Rational& beta) {
  ExtendedValue g = run_oks_beta_greedy(inst, beta).final_utility;
  ExtendedValue m = run_oks_beta_max(inst).final_utility;
  if (!g.is_finite() || !m.is_finite()) {
    throw std::logic_error("static-threshold run produced an infinite utility");
  }
  return (g.finite() + m.finite()) * Rational(1, 2);
}

OksInstance gen_thm9_lb_items(const Rational& beta, const Rational& eps) {
  if (!(eps > Rational(0)) || !(eps < Rational(1))) {
    throw std::invalid_argument("epsilon must lie in (0, 1)");
  }
  if (!(beta > Rational(0)) || beta > Rational(1)) {
    throw std::invalid_argument("beta must lie in (0, 1]");
  }
  OksInstance oks;
  oks.budget = beta;
  FamilyTag tag;
  tag.name = "thm9_lb";
  tag.params = {{"beta", beta.str()}, {"epsilon", eps.str()}};
  oks.family = tag;
  if (beta < Rational(1, 2)) {
    // One oversized high-value item against a pair that jointly beats it.
    Rational unit_cost = beta + eps;
    if (unit_cost * 2 > Rational(1)) {
      throw std::invalid_argument("epsilon too large: the big item's cost would exceed 1");
    }
    oks.label = "thm9_lb_case1(beta=" + beta.str() + ",eps=" + eps.str() + ")";
    oks.items.push_back({Rational(1) + eps, unit_cost * 2});  // v
    oks.items.push_back({Rational(1), unit_cost});            // u1
    oks.items.push_back({Rational(1), unit_cost});            // u2
  } else {
    // A budget-filling dud plus 1/eps small items worth 1 in total.
    if (!(eps < beta)) throw std::invalid_argument("epsilon must be below beta in this regime");
    Rational inv = Rational(1) / eps;
    if (!inv.is_integer()) throw std::invalid_argument("1/epsilon must be an integer");
    long count = static_cast<long>(inv.num().convert_to<long long>());
    oks.label = "thm9_lb_case2(beta=" + beta.str() + ",eps=" + eps.str() + ")";
    oks.items.push_back({eps, beta - eps});  // v
    for (long i = 0; i < count; ++i) oks.items.push_back({eps, eps * eps});
  }
  return oks;
}

Instance gen_thm9_lb(const Rational& beta, const Rational& eps) {
  return phi_reduction(gen_thm9_lb_items(beta, eps));
}

}  // namespace omac
