/*
 * Copyright 2026 the omac authors
 * Licensed under the terms of the Apache 2.0 License.
 * See LICENSE file in the project root for terms.
 */
#ifndef OMAC_MODEL_HPP
#define OMAC_MODEL_HPP

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "omac/rational.hpp"

namespace omac {

/// Agents are identified by their arrival index: 0-based internally,
/// rendered 1-based in reports.
using AgentId = int;

/// A team is a vector of agent ids, sorted ascending, no duplicates.
using AgentSet = std::vector<AgentId>;

bool set_contains(const AgentSet& s, AgentId i);
AgentSet set_with(AgentSet s, AgentId i);
AgentSet set_without(AgentSet s, AgentId i);

enum class RewardKind { additive, xos };

/// Reward over teams: either an additive weight vector, or an XOS function
/// given by a clause matrix (the value of a team is the best clause total).
struct RewardFunction {
  RewardKind kind = RewardKind::additive;
  std::vector<Rational> weights;              // additive: one weight per agent
  std::vector<std::vector<Rational>> clauses; // xos: each clause has one weight per agent

  static RewardFunction additive(std::vector<Rational> w) {
    RewardFunction f;
    f.kind = RewardKind::additive;
    f.weights = std::move(w);
    return f;
  }
  static RewardFunction xos(std::vector<std::vector<Rational>> c) {
    RewardFunction f;
    f.kind = RewardKind::xos;
    f.clauses = std::move(c);
    return f;
  }
};

/// Optional provenance for generated instances, round-tripped through files.
struct FamilyTag {
  std::string name;
  std::map<std::string, std::string> params;

  friend bool operator==(const FamilyTag& a, const FamilyTag& b) {
    return a.name == b.name && a.params == b.params;
  }
};

inline bool operator==(const RewardFunction& a, const RewardFunction& b) {
  return a.kind == b.kind && a.weights == b.weights && a.clauses == b.clauses;
}

/// An arrival-ordered list of agent costs plus the reward function.
struct Instance {
  std::string label;
  std::vector<Rational> costs;
  RewardFunction reward;
  std::optional<FamilyTag> family;

  int size() const { return static_cast<int>(costs.size()); }
  bool additive() const { return reward.kind == RewardKind::additive; }

  friend bool operator==(const Instance& a, const Instance& b) {
    return a.label == b.label && a.costs == b.costs && a.reward == b.reward &&
           a.family == b.family;
  }
};

/// f(S). Throws std::out_of_range if S mentions an unknown agent.
Rational eval_reward(const RewardFunction& f, const AgentSet& s, int agent_count);
Rational eval_reward(const Instance& inst, const AgentSet& s);

/// f(S) - f(S \ {i}); requires i in S. Non-negative by monotonicity.
Rational marginal(const RewardFunction& f, const AgentSet& s, AgentId i, int agent_count);
Rational marginal(const Instance& inst, const AgentSet& s, AgentId i);

/// Minimal incentivizing share of agent i within team S:
///   cost / marginal contribution,
/// with the conventions: 0 when cost = 0 (regardless of the marginal), and
/// +inf when the marginal is 0 at positive cost.
ExtendedValue share_of(const RewardFunction& f, const AgentSet& s, AgentId i,
                       const Rational& cost, int agent_count);
ExtendedValue share_of(const Instance& inst, const AgentSet& s, AgentId i);

/// Additive fast path: shares do not depend on the team.
ExtendedValue additive_share(const Instance& inst, AgentId i);

/// Total share alpha(S); +inf if any member's share is +inf.
ExtendedValue total_share(const Instance& inst, const AgentSet& s);

/// Principal's utility g(S) = (1 - alpha(S)) f(S), with g(empty) = 0 and
/// g(S) = -inf whenever some member has share +inf.
ExtendedValue principal_utility(const Instance& inst, const AgentSet& s);

/// Per-agent quality f({i})^2 / c_i (additive instances only).
/// +inf for zero-cost agents with positive weight, 0 for zero-weight agents
/// with positive cost. Throws on XOS instances and on the undefined
/// zero-cost zero-weight agent.
ExtendedValue quality_of_agent(const Instance& inst, AgentId i);

/// Set quality q(S) = f(S) / alpha(S), with q(empty) = 0 (additive only).
/// When alpha(S) = 0 on a non-empty team (all zero-cost) the quality is +inf;
/// when alpha(S) = +inf the ratio collapses to 0.
ExtendedValue quality_of_set(const Instance& inst, const AgentSet& s);

/// A team with cached reward/share/utility. Caches are produced by compute()
/// and must always equal recomputation (tests assert this).
struct Team {
  AgentSet members;
  Rational reward;
  ExtendedValue share;
  ExtendedValue utility;

  static Team compute(const Instance& inst, AgentSet members);
};

struct ValidationReport {
  std::vector<std::string> errors;
  std::vector<std::string> warnings;
  bool ok() const { return errors.empty(); }
};

/// Structural checks: matching clause/weight lengths, non-negative data,
/// no zero-cost zero-weight agents. Zero-weight agents at positive cost are
/// legal but flagged (their share is +inf, so hiring them is utility -inf).
ValidationReport validate(const Instance& inst);

}  // namespace omac

#endif  // OMAC_MODEL_HPP
