/*
 * Copyright 2026 the omac authors
 * Licensed under the terms of the Apache 2.0 License.
 * See LICENSE file in the project root for terms.
 */
#include "omac/engine.hpp"

#include <algorithm>
#include <stdexcept>

#include "omac/oks.hpp"

namespace omac {

const char* alg_name(AlgKind k) {
  switch (k) {
    case AlgKind::bp: return "bp";
    case AlgKind::max: return "max";
    case AlgKind::alg_omac: return "omac";
    case AlgKind::oks_beta: return "oks-beta";
    case AlgKind::no_op: return "noop";
  }
  return "?";
}

std::optional<AlgKind> alg_from_name(const std::string& name) {
  if (name == "bp") return AlgKind::bp;
  if (name == "max") return AlgKind::max;
  if (name == "omac") return AlgKind::alg_omac;
  if (name == "oks-beta") return AlgKind::oks_beta;
  if (name == "noop") return AlgKind::no_op;
  return std::nullopt;
}

AgentSet Trajectory::set_after(int step_count) const {
  AgentSet s;
  for (int i = 0; i < step_count && i < static_cast<int>(steps.size()); ++i) {
    for (AgentId a : steps[static_cast<size_t>(i)].accepted) s = set_with(std::move(s), a);
    for (AgentId a : steps[static_cast<size_t>(i)].dismissed) s = set_without(std::move(s), a);
  }
  return s;
}

namespace {

struct RebuildResult {
  std::vector<AgentId> kept;  // canonical order
  std::vector<AgentId> dropped;
  Rational share;
  Rational reward;
};

// Single pass of Algorithm BP over canonical-sorted candidates. Balance
// points depend only on the accepted prefix of strictly higher quality, so
// the pass keeps two running sums: everything accepted above the current
// group, and the accepted part of the current group.
RebuildResult bp_rebuild(const Instance& inst, const QualityStructure& qs,
                         const std::vector<AgentId>& candidates) {
  RebuildResult r;
  Rational above_share, above_reward;
  Rational group_share, group_reward;
  int cur_group = -1;
  for (AgentId id : candidates) {
    int x = qs.group_of[static_cast<size_t>(id)];
    if (x != cur_group) {
      above_share += group_share;
      above_reward += group_reward;
      group_share = Rational(0);
      group_reward = Rational(0);
      cur_group = x;
    }
    ExtendedValue share = additive_share(inst, id);
    if (!share.is_finite()) {
      // alpha(S + i) = +inf is never below a balance point.
      r.dropped.push_back(id);
      continue;
    }
    Rational b = balance_point_from_sums(above_share, above_reward,
                                         qs.group_quality[static_cast<size_t>(x)]);
    if (above_share + group_share + share.finite() < b) {
      group_share += share.finite();
      group_reward += inst.reward.weights[static_cast<size_t>(id)];
      r.kept.push_back(id);
    } else {
      r.dropped.push_back(id);
    }
  }
  r.share = above_share + group_share;
  r.reward = above_reward + group_reward;
  return r;
}

void insert_canonical(const QualityStructure& qs, std::vector<AgentId>& sorted, AgentId id) {
  auto pos = std::lower_bound(sorted.begin(), sorted.end(), id, [&](AgentId a, AgentId b) {
    return qs.canonical_pos[static_cast<size_t>(a)] < qs.canonical_pos[static_cast<size_t>(b)];
  });
  sorted.insert(pos, id);
}

ExtendedValue singleton_utility(const Instance& inst, std::optional<AgentId> id) {
  if (!id) return Rational(0);
  return principal_utility(inst, AgentSet{*id});
}

}  // namespace

AgentSet bp_step(const Instance& inst, const QualityStructure& qs, const AgentSet& hired,
                 AgentId arrival) {
  if (!inst.additive()) throw std::domain_error("BP needs an additive instance");
  if (set_contains(hired, arrival)) throw std::invalid_argument("arrival already hired");
  std::vector<AgentId> candidates;
  candidates.reserve(hired.size() + 1);
  for (AgentId id : hired) candidates.push_back(id);
  std::sort(candidates.begin(), candidates.end(), [&](AgentId a, AgentId b) {
    return qs.canonical_pos[static_cast<size_t>(a)] < qs.canonical_pos[static_cast<size_t>(b)];
  });
  insert_canonical(qs, candidates, arrival);
  RebuildResult r = bp_rebuild(inst, qs, candidates);
  AgentSet out(r.kept.begin(), r.kept.end());
  std::sort(out.begin(), out.end());
  return out;
}

Trajectory run_bp(const Instance& inst) {
  if (!inst.additive()) throw std::domain_error("BP needs an additive instance");
  QualityStructure qs = build_quality_structure(inst);
  Trajectory traj;
  traj.algorithm = "bp";
  std::vector<AgentId> hired;  // canonical order
  std::vector<bool> departed(static_cast<size_t>(inst.size()), false);
  for (AgentId arrival = 0; arrival < inst.size(); ++arrival) {
    insert_canonical(qs, hired, arrival);
    RebuildResult r = bp_rebuild(inst, qs, hired);
    StepRecord rec;
    rec.arrival = arrival;
    for (AgentId id : r.dropped) {
      if (departed[static_cast<size_t>(id)]) throw std::logic_error("BP dismissed an agent twice");
      departed[static_cast<size_t>(id)] = true;
      rec.dismissed.push_back(id);
    }
    bool arrival_kept = std::find(r.kept.begin(), r.kept.end(), arrival) != r.kept.end();
    if (arrival_kept) rec.accepted.push_back(arrival);
    rec.utility = (Rational(1) - r.share) * r.reward;
    rec.hired_count = static_cast<int>(r.kept.size());
    traj.steps.push_back(std::move(rec));
    hired = std::move(r.kept);
  }
  traj.final_set.assign(hired.begin(), hired.end());
  std::sort(traj.final_set.begin(), traj.final_set.end());
  traj.final_utility = traj.steps.empty() ? ExtendedValue(Rational(0)) : traj.steps.back().utility;
  return traj;
}

std::optional<AgentId> max_step(const Instance& inst, std::optional<AgentId> incumbent,
                                AgentId arrival) {
  ExtendedValue held = singleton_utility(inst, incumbent);
  ExtendedValue offered = singleton_utility(inst, arrival);
  return offered > held ? std::optional<AgentId>(arrival) : incumbent;
}

Trajectory run_max(const Instance& inst) {
  Trajectory traj;
  traj.algorithm = "max";
  std::optional<AgentId> incumbent;
  for (AgentId arrival = 0; arrival < inst.size(); ++arrival) {
    std::optional<AgentId> next = max_step(inst, incumbent, arrival);
    StepRecord rec;
    rec.arrival = arrival;
    if (next == incumbent) {
      rec.dismissed.push_back(arrival);
    } else {
      rec.accepted.push_back(arrival);
      if (incumbent) rec.dismissed.push_back(*incumbent);
    }
    rec.utility = singleton_utility(inst, next);
    rec.hired_count = next ? 1 : 0;
    traj.steps.push_back(std::move(rec));
    incumbent = next;
  }
  if (incumbent) traj.final_set.push_back(*incumbent);
  traj.final_utility = traj.steps.empty() ? ExtendedValue(Rational(0)) : traj.steps.back().utility;
  return traj;
}

Trajectory run_noop(const Instance& inst) {
  Trajectory traj;
  traj.algorithm = "noop";
  for (AgentId arrival = 0; arrival < inst.size(); ++arrival) {
    StepRecord rec;
    rec.arrival = arrival;
    rec.dismissed.push_back(arrival);
    rec.utility = Rational(0);
    traj.steps.push_back(std::move(rec));
  }
  traj.final_utility = Rational(0);
  return traj;
}

Trajectory run_online(const OnlineAlgorithm& alg, const Instance& inst) {
  Trajectory traj;
  switch (alg.kind) {
    case AlgKind::bp: traj = run_bp(inst); break;
    case AlgKind::max: traj = run_max(inst); break;
    case AlgKind::no_op: traj = run_noop(inst); break;
    case AlgKind::alg_omac:
      if (alg.analytic) {
        throw std::invalid_argument(
            "analytic ALG-OMAC has no single trajectory; use alg_omac_expected_utility");
      }
      traj = alg_omac_sampled(inst, alg.seed);
      break;
    case AlgKind::oks_beta: traj = run_oks_beta_greedy(inst, alg.beta); break;
  }
  check_trajectory(inst, traj);
  return traj;
}

ExtendedValue alg_omac_expected_utility(const Instance& inst) {
  ExtendedValue bp = run_bp(inst).final_utility;
  ExtendedValue mx = run_max(inst).final_utility;
  if (!bp.is_finite() || !mx.is_finite()) {
    throw std::logic_error("BP/MAX produced an infinite utility");
  }
  return (bp.finite() + mx.finite()) * Rational(1, 2);
}

Trajectory alg_omac_sampled(const Instance& inst, std::uint64_t seed) {
  // One fair coin for the whole run; seed parity is the coin so that seeds
  // {0,1} enumerate the two-point mixture exactly.
  bool coin_bp = (seed & 1u) == 0;
  Trajectory traj = coin_bp ? run_bp(inst) : run_max(inst);
  traj.algorithm = coin_bp ? "omac[coin=bp]" : "omac[coin=max]";
  return traj;
}

void check_trajectory(const Instance& inst, const Trajectory& traj) {
  if (static_cast<int>(traj.steps.size()) != inst.size()) {
    throw std::logic_error("trajectory has wrong step count");
  }
  AgentSet held;
  std::vector<bool> departed(static_cast<size_t>(inst.size()), false);
  for (int i = 0; i < inst.size(); ++i) {
    const StepRecord& rec = traj.steps[static_cast<size_t>(i)];
    if (rec.arrival != i) throw std::logic_error("trajectory arrival order mismatch");
    for (AgentId a : rec.accepted) {
      if (a != i) throw std::logic_error("trajectory accepted an agent other than the arrival");
      if (departed[static_cast<size_t>(a)]) throw std::logic_error("trajectory rehired a dismissed agent");
      held = set_with(std::move(held), a);
    }
    AgentSet offered = rec.accepted.empty() ? set_with(held, i) : held;
    for (AgentId a : rec.dismissed) {
      if (!set_contains(offered, a)) {
        throw std::logic_error("trajectory dismissed an agent that was not held");
      }
      if (departed[static_cast<size_t>(a)]) throw std::logic_error("trajectory dismissed an agent twice");
      departed[static_cast<size_t>(a)] = true;
      held = set_without(std::move(held), a);
    }
    if (static_cast<int>(held.size()) != rec.hired_count) {
      throw std::logic_error("trajectory hired_count mismatch");
    }
    if (principal_utility(inst, held) != rec.utility) {
      throw std::logic_error("trajectory utility mismatch at step " + std::to_string(i + 1));
    }
  }
  if (held != traj.final_set) throw std::logic_error("trajectory final set mismatch");
  if (principal_utility(inst, held) != traj.final_utility) {
    throw std::logic_error("trajectory final utility mismatch");
  }
}

bool bp_containment_ok(const Instance& inst, const QualityStructure& qs, const AgentSet& s) {
  Rational above_share, above_reward;
  for (int x = 0; x < qs.group_count(); ++x) {
    Rational group_share, group_reward;
    bool touched = false;
    for (AgentId id : qs.groups[static_cast<size_t>(x)]) {
      if (!set_contains(s, id)) continue;
      touched = true;
      ExtendedValue share = additive_share(inst, id);
      if (!share.is_finite()) return false;
      group_share += share.finite();
      group_reward += inst.reward.weights[static_cast<size_t>(id)];
    }
    if (touched) {
      Rational b = balance_point_from_sums(above_share, above_reward,
                                           qs.group_quality[static_cast<size_t>(x)]);
      if (!(above_share + group_share < b)) return false;
    }
    above_share += group_share;
    above_reward += group_reward;
  }
  return true;
}

}  // namespace omac
