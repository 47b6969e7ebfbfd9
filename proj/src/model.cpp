/*
 * Copyright 2026 the omac authors
 * Licensed under the terms of the Apache 2.0 License.
 * See LICENSE file in the project root for terms.
 */
#include "omac/model.hpp"

#include <algorithm>
#include <stdexcept>

namespace omac {

bool set_contains(const AgentSet& s, AgentId i) {
  return std::binary_search(s.begin(), s.end(), i);
}

AgentSet set_with(AgentSet s, AgentId i) {
  auto it = std::lower_bound(s.begin(), s.end(), i);
  if (it == s.end() || *it != i) s.insert(it, i);
  return s;
}

AgentSet set_without(AgentSet s, AgentId i) {
  auto it = std::lower_bound(s.begin(), s.end(), i);
  if (it != s.end() && *it == i) s.erase(it);
  return s;
}

namespace {

void check_ids(const AgentSet& s, int agent_count) {
  for (AgentId i : s) {
    if (i < 0 || i >= agent_count) throw std::out_of_range("agent id out of range");
  }
}

Rational clause_value(const std::vector<Rational>& clause, const AgentSet& s) {
  Rational v;
  for (AgentId i : s) v += clause[static_cast<size_t>(i)];
  return v;
}

}  // namespace

Rational eval_reward(const RewardFunction& f, const AgentSet& s, int agent_count) {
  check_ids(s, agent_count);
  if (f.kind == RewardKind::additive) {
    Rational v;
    for (AgentId i : s) v += f.weights[static_cast<size_t>(i)];
    return v;
  }
  // XOS: best clause; the empty team scores 0 on every clause.
  Rational best;
  bool first = true;
  for (const auto& clause : f.clauses) {
    Rational v = clause_value(clause, s);
    if (first || v > best) {
      best = std::move(v);
      first = false;
    }
  }
  return best;
}

Rational eval_reward(const Instance& inst, const AgentSet& s) {
  return eval_reward(inst.reward, s, inst.size());
}

Rational marginal(const RewardFunction& f, const AgentSet& s, AgentId i, int agent_count) {
  if (!set_contains(s, i)) throw std::invalid_argument("marginal: agent not in team");
  if (f.kind == RewardKind::additive) {
    check_ids(s, agent_count);
    return f.weights[static_cast<size_t>(i)];
  }
  return eval_reward(f, s, agent_count) - eval_reward(f, set_without(s, i), agent_count);
}

Rational marginal(const Instance& inst, const AgentSet& s, AgentId i) {
  return marginal(inst.reward, s, i, inst.size());
}

ExtendedValue share_of(const RewardFunction& f, const AgentSet& s, AgentId i,
                       const Rational& cost, int agent_count) {
  if (cost.is_zero()) return Rational(0);
  Rational m = marginal(f, s, i, agent_count);
  if (m.is_zero()) return ExtendedValue::pos_inf();
  return cost / m;
}

ExtendedValue share_of(const Instance& inst, const AgentSet& s, AgentId i) {
  return share_of(inst.reward, s, i, inst.costs[static_cast<size_t>(i)], inst.size());
}

ExtendedValue additive_share(const Instance& inst, AgentId i) {
  const Rational& c = inst.costs[static_cast<size_t>(i)];
  if (c.is_zero()) return Rational(0);
  const Rational& w = inst.reward.weights[static_cast<size_t>(i)];
  if (w.is_zero()) return ExtendedValue::pos_inf();
  return c / w;
}

ExtendedValue total_share(const Instance& inst, const AgentSet& s) {
  check_ids(s, inst.size());
  Rational sum;
  for (AgentId i : s) {
    ExtendedValue a = inst.additive() ? additive_share(inst, i) : share_of(inst, s, i);
    if (!a.is_finite()) return ExtendedValue::pos_inf();
    sum += a.finite();
  }
  return sum;
}

ExtendedValue principal_utility(const Instance& inst, const AgentSet& s) {
  if (s.empty()) return Rational(0);
  ExtendedValue alpha = total_share(inst, s);
  if (!alpha.is_finite()) return ExtendedValue::neg_inf();
  return (Rational(1) - alpha.finite()) * eval_reward(inst, s);
}

ExtendedValue quality_of_agent(const Instance& inst, AgentId i) {
  if (!inst.additive()) throw std::domain_error("quality is defined for additive rewards only");
  if (i < 0 || i >= inst.size()) throw std::out_of_range("agent id out of range");
  const Rational& w = inst.reward.weights[static_cast<size_t>(i)];
  const Rational& c = inst.costs[static_cast<size_t>(i)];
  if (c.is_zero()) {
    if (w.is_zero()) throw std::invalid_argument("undefined agent: zero cost and zero weight");
    return ExtendedValue::pos_inf();
  }
  if (w.is_zero()) return Rational(0);
  return w * w / c;
}

ExtendedValue quality_of_set(const Instance& inst, const AgentSet& s) {
  if (!inst.additive()) throw std::domain_error("quality is defined for additive rewards only");
  if (s.empty()) return Rational(0);
  ExtendedValue alpha = total_share(inst, s);
  if (!alpha.is_finite()) return Rational(0);
  Rational f = eval_reward(inst, s);
  if (alpha.finite().is_zero()) return f.is_zero() ? ExtendedValue(Rational(0)) : ExtendedValue::pos_inf();
  return f / alpha.finite();
}

Team Team::compute(const Instance& inst, AgentSet members) {
  Team t;
  t.members = std::move(members);
  t.reward = eval_reward(inst, t.members);
  t.share = total_share(inst, t.members);
  t.utility = principal_utility(inst, t.members);
  return t;
}

ValidationReport validate(const Instance& inst) {
  ValidationReport r;
  const size_t n = inst.costs.size();
  for (size_t i = 0; i < n; ++i) {
    if (inst.costs[i].sign() < 0) {
      r.errors.push_back("agent " + std::to_string(i + 1) + " has negative cost");
    }
  }
  if (inst.reward.kind == RewardKind::additive) {
    if (inst.reward.weights.size() != n) {
      r.errors.push_back("weight vector length does not match agent count");
      return r;
    }
    for (size_t i = 0; i < n; ++i) {
      const Rational& w = inst.reward.weights[i];
      if (w.sign() < 0) r.errors.push_back("agent " + std::to_string(i + 1) + " has negative weight");
      if (w.is_zero() && inst.costs[i].is_zero()) {
        r.errors.push_back("agent " + std::to_string(i + 1) +
                           " is undefined (zero cost and zero weight)");
      } else if (w.is_zero() && inst.costs[i].sign() > 0) {
        r.warnings.push_back("agent " + std::to_string(i + 1) +
                             " has zero weight at positive cost (share is +inf)");
      }
    }
  } else {
    if (inst.reward.clauses.empty()) r.errors.push_back("XOS reward needs at least one clause");
    for (size_t c = 0; c < inst.reward.clauses.size(); ++c) {
      if (inst.reward.clauses[c].size() != n) {
        r.errors.push_back("clause " + std::to_string(c + 1) +
                           " length does not match agent count");
        continue;
      }
      for (const Rational& w : inst.reward.clauses[c]) {
        if (w.sign() < 0) {
          r.errors.push_back("clause " + std::to_string(c + 1) + " has a negative weight");
          break;
        }
      }
    }
  }
  return r;
}

}  // namespace omac
