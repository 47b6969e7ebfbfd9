/*
 * Copyright 2026 the omac authors
 * Licensed under the terms of the Apache 2.0 License.
 * See LICENSE file in the project root for terms.
 */
#ifndef OMAC_BALANCE_HPP
#define OMAC_BALANCE_HPP

#include "omac/model.hpp"
#include "omac/quality.hpp"

namespace omac {

/// A balance-point query: the hired set S and a quality group index x
/// (0-based). The prefix S^{x-1} of S over strictly higher quality groups is
/// derived from the structure.
struct BalanceQuery {
  const Instance* instance = nullptr;
  const QualityStructure* structure = nullptr;
  AgentSet hired;
  int group_index = 0;
};

/// Share and reward of S restricted to groups strictly above group_index.
/// Throws std::domain_error when a prefix member has an infinite share.
std::pair<Rational, Rational> prefix_share_reward(const Instance& inst,
                                                  const QualityStructure& qs,
                                                  const AgentSet& hired, int group_index);

/// The share level at which adding quality-q^x agents stops helping:
///   b(S, x) = 1/2 + (1 - q(S^{x-1})/q^x) * alpha(S^{x-1}) / 2.
/// Equals 1/2 whenever the prefix carries no share, in particular for the
/// top group. Exact rational; never computed by optimization.
Rational balance_point(const BalanceQuery& q);
Rational balance_point(const Instance& inst, const QualityStructure& qs,
                       const AgentSet& hired, int group_index);

/// Share of the hypothetical quality-q^x agent that tops the prefix up to the
/// balance point: alpha_r with alpha(S^{x-1}) + alpha_r = b(S, x). May be
/// negative when the prefix already exceeds the balance point; such an
/// auxiliary agent has no realizable cost.
Rational auxiliary_share(const BalanceQuery& q);
Rational auxiliary_share(const Instance& inst, const QualityStructure& qs,
                         const AgentSet& hired, int group_index);

/// True iff the canonical-order prefix of S through agent i reaches i's
/// balance point: alpha(S-bar_i) >= b(S, x) with i in Q_x. Requires i in S.
bool crosses_balance_point(const Instance& inst, const QualityStructure& qs,
                           const AgentSet& hired, AgentId i);

/// Balance point straight from prefix sums, for callers that maintain the
/// sums incrementally (the BP rebuild loop).
Rational balance_point_from_sums(const Rational& prefix_share, const Rational& prefix_reward,
                                 const ExtendedValue& group_quality);

/// Utility of a concrete team extended by a hypothetical agent of the given
/// quality and share: (1 - alpha(S) - share) * (f(S) + share * quality).
/// Used by the auxiliary-agent comparisons; the hypothetical agent never
/// enters an instance.
ExtendedValue utility_with_auxiliary(const Instance& inst, const AgentSet& hired,
                                     const Rational& aux_quality, const Rational& aux_share);

}  // namespace omac

#endif  // OMAC_BALANCE_HPP
