/*
 * Copyright 2026 the omac authors
 * Licensed under the terms of the Apache 2.0 License.
 * See LICENSE file in the project root for terms.
 */
#ifndef OMAC_FAMILIES_HPP
#define OMAC_FAMILIES_HPP

#include <utility>
#include <vector>

#include "omac/engine.hpp"
#include "omac/model.hpp"
#include "omac/oracle.hpp"

namespace omac {

/// Hard-instance family with one near-saturating agent (share 1 - eps^2,
/// quality eps) followed by ceil(1/(2 eps^2)) small agents (share and quality
/// eps^2). Deterministic algorithms fail on some prefix of it.
Instance gen_det_lb(const Rational& eps);

/// The same construction, exposed separately: against randomized algorithms
/// the prefix analysis bounds the expected competitive ratio by 1/2 + O(eps).
Instance gen_rand_ub(const Rational& eps);

/// m groups of n unit-cost agents; sigma picks one designated agent per group
/// below the last. Each agent carries one clause: weight 1 on the designated
/// agents of the earlier groups and on itself. Requires eps < min(1/n, 1/m).
Instance gen_xos_instance(int n, int m, const Rational& eps, const std::vector<int>& sigma);

/// All n^(m-1) sigma choices, each with probability 1 / n^(m-1).
std::vector<std::pair<Instance, Rational>> enumerate_xos_distribution(
    int n, int m, const Rational& eps, long cap = 1L << 20);

/// The 6-agent illustration instance: n = 2, m = 3, designated agents second
/// in each group.
Instance gen_example1(const Rational& eps);

/// Uniform-quality family for the no-dismissal impossibility: agent i
/// (0-based) has share 1 - eps^(n-i), so any two agents overflow the full
/// reward. Played against the uniform distribution over arrival prefixes.
Instance gen_no_preempt(int n, const Rational& eps, const Rational& q);

/// The state-value recurrence behind the XOS distribution:
///   A_h^m = h/m,   A_h^l = (1/n) A_{h+1}^{l+1} + ((n-1)/n) A_h^{l+1},
/// together with its closed form A_h^{m-k} = (h n + k) / (n m).
struct ARecurrence {
  int n = 0;
  int m = 0;
  /// table[h][l] = A_h^l for 1 <= h, l <= m (index 0 unused).
  std::vector<std::vector<Rational>> table;
  bool closed_form_ok = false;

  const Rational& a11() const { return table[1][1]; }
};
ARecurrence a_recurrence(int n, int m);

/// Stops the arrival sequence where it hurts the most: runs the algorithm
/// once over the full order and returns argmin over prefixes i of
/// g(S_i) / OPT(N_i). Ratio conventions: 0/0 counts as 1, a non-positive
/// utility against a positive optimum counts as 0.
struct PrefixAdversaryResult {
  int worst_prefix = 0;  // 1-based arrival count
  ExtendedValue worst_cr = Rational(1);
  std::vector<ExtendedValue> per_prefix_cr;  // index i = after i arrivals
  std::vector<ExtendedValue> per_prefix_utility;
  std::vector<ExtendedValue> per_prefix_opt;
};
PrefixAdversaryResult adaptive_prefix_adversary(const OnlineAlgorithm& alg, const Instance& inst,
                                                const OracleConfig& cfg = {},
                                                const std::vector<ExtendedValue>* opt_per_prefix = nullptr);

/// The fixed demonstration strategy for the XOS distribution: hold the
/// designated agents identified so far plus one probe from the newest group;
/// replace the probe once it is known to contribute nothing. Decisions use
/// reward-function queries only.
struct ProbeRun {
  AgentSet final_set;
  ExtendedValue utility;
};
ProbeRun xos_probe_strategy_run(const Instance& inst, int n, int m);
Rational xos_probe_strategy_expected_utility(int n, int m, const Rational& eps);

/// Exact optimum over deterministic online policies for the XOS distribution,
/// in the recurrence's idealized accounting: a final safe team of h
/// contributing agents scores h/m (cost terms dropped), and every
/// intermediate team must be free of zero-marginal members since arrivals may
/// cease at any step. Backward induction over information states; small n, m
/// only.
Rational xos_policy_search_expected_cr(int n, int m);

}  // namespace omac

#endif  // OMAC_FAMILIES_HPP
