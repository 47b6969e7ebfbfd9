/*
 * Copyright 2026 the omac authors
 * Licensed under the terms of the Apache 2.0 License.
 * See LICENSE file in the project root for terms.
 */
#include "omac/balance.hpp"

#include <stdexcept>

namespace omac {

std::pair<Rational, Rational> prefix_share_reward(const Instance& inst,
                                                  const QualityStructure& qs,
                                                  const AgentSet& hired, int group_index) {
  Rational share, reward;
  for (AgentId i : hired) {
    if (qs.group_of[static_cast<size_t>(i)] >= group_index) continue;
    ExtendedValue a = additive_share(inst, i);
    if (!a.is_finite()) throw std::domain_error("balance point over a prefix with infinite share");
    share += a.finite();
    reward += inst.reward.weights[static_cast<size_t>(i)];
  }
  return {std::move(share), std::move(reward)};
}

Rational balance_point_from_sums(const Rational& prefix_share, const Rational& prefix_reward,
                                 const ExtendedValue& group_quality) {
  static const Rational half(1, 2);
  // A share-free prefix leaves the parabola centered at 1/2 regardless of the
  // quality ratio; this also covers the top group and zero-cost prefixes.
  if (prefix_share.is_zero()) return half;
  if (!group_quality.is_finite() || group_quality.finite().is_zero()) {
    throw std::domain_error("balance point undefined for this group quality");
  }
  Rational q_prefix = prefix_reward / prefix_share;
  return half + half * (Rational(1) - q_prefix / group_quality.finite()) * prefix_share;
}

Rational balance_point(const Instance& inst, const QualityStructure& qs,
                       const AgentSet& hired, int group_index) {
  if (!inst.additive()) throw std::domain_error("balance points need an additive instance");
  if (group_index < 0 || group_index >= qs.group_count()) {
    throw std::out_of_range("quality group index out of range");
  }
  auto [share, reward] = prefix_share_reward(inst, qs, hired, group_index);
  return balance_point_from_sums(share, reward, qs.group_quality[static_cast<size_t>(group_index)]);
}

Rational balance_point(const BalanceQuery& q) {
  return balance_point(*q.instance, *q.structure, q.hired, q.group_index);
}

Rational auxiliary_share(const Instance& inst, const QualityStructure& qs,
                         const AgentSet& hired, int group_index) {
  if (!inst.additive()) throw std::domain_error("balance points need an additive instance");
  if (group_index < 0 || group_index >= qs.group_count()) {
    throw std::out_of_range("quality group index out of range");
  }
  auto [share, reward] = prefix_share_reward(inst, qs, hired, group_index);
  return balance_point_from_sums(share, reward, qs.group_quality[static_cast<size_t>(group_index)]) -
         share;
}

Rational auxiliary_share(const BalanceQuery& q) {
  return auxiliary_share(*q.instance, *q.structure, q.hired, q.group_index);
}

bool crosses_balance_point(const Instance& inst, const QualityStructure& qs,
                           const AgentSet& hired, AgentId i) {
  if (!set_contains(hired, i)) {
    throw std::invalid_argument("crosses_balance_point: agent not in team");
  }
  int x = qs.group_of[static_cast<size_t>(i)];
  Rational b = balance_point(inst, qs, hired, x);
  ExtendedValue prefix_share = Rational(0);
  int my_pos = qs.canonical_pos[static_cast<size_t>(i)];
  for (AgentId j : hired) {
    if (qs.canonical_pos[static_cast<size_t>(j)] <= my_pos) {
      prefix_share = prefix_share + additive_share(inst, j);
    }
  }
  return prefix_share >= ExtendedValue(b);
}

ExtendedValue utility_with_auxiliary(const Instance& inst, const AgentSet& hired,
                                     const Rational& aux_quality, const Rational& aux_share) {
  ExtendedValue alpha = total_share(inst, hired);
  if (!alpha.is_finite()) return ExtendedValue::neg_inf();
  Rational total = alpha.finite() + aux_share;
  Rational reward = eval_reward(inst, hired) + aux_share * aux_quality;
  return (Rational(1) - total) * reward;
}

}  // namespace omac
