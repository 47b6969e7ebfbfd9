/*
 * Copyright 2026 the omac authors
 * Licensed under the terms of the Apache 2.0 License.
 * See LICENSE file in the project root for terms.
 */
#ifndef OMAC_OKS_HPP
#define OMAC_OKS_HPP

#include <optional>
#include <string>
#include <vector>

#include "omac/engine.hpp"
#include "omac/model.hpp"

namespace omac {

/// Online knapsack with preemption: items with value p_e and cost c_e, a
/// budget beta in (0, 1], selections feasible when their total cost fits.
struct OksItem {
  Rational value;
  Rational cost;

  friend bool operator==(const OksItem& a, const OksItem& b) {
    return a.value == b.value && a.cost == b.cost;
  }
};

struct OksInstance {
  std::string label;
  Rational budget;
  std::vector<OksItem> items;
  std::optional<FamilyTag> family;

  int size() const { return static_cast<int>(items.size()); }

  friend bool operator==(const OksInstance& a, const OksInstance& b) {
    return a.label == b.label && a.budget == b.budget && a.items == b.items &&
           a.family == b.family;
  }
};

ValidationReport validate_oks(const OksInstance& oks);

/// One greedy step: rebuild from selected + arrival in decreasing quality
/// order (p/c; ties prefer smaller cost, then id), accepting every item whose
/// inclusion keeps the running cost within the budget. The scan continues
/// past rejections, mirroring the BP rebuild.
std::vector<int> oks_greedy_step(const OksInstance& oks, const std::vector<int>& selected,
                                 int arrival);

/// One MAX step over values: keep the higher-value item among incumbent and
/// arrival, restricted to items of cost at most 1 (items above the budget but
/// within total reward stay eligible). Ties keep the incumbent.
std::optional<int> oks_max_step(const OksInstance& oks, std::optional<int> incumbent,
                                int arrival);

std::vector<int> oks_greedy_select(const OksInstance& oks);
std::optional<int> oks_max_select(const OksInstance& oks);

Rational oks_value(const OksInstance& oks, const std::vector<int>& selection);
Rational oks_cost(const OksInstance& oks, const std::vector<int>& selection);

/// The order-preserving reduction: item e becomes an agent with
/// f({i}) = p_e and share alpha_i = c_e (so cost c_i = c_e * p_e).
/// Requires every c_e <= 1; zero-value items are representable only at zero
/// cost. The reduction is its own inverse on shares: alpha_i = c_e exactly.
Instance phi_reduction(const OksInstance& oks);

/// Static-threshold greedy on an additive OMAC instance: item values are the
/// weights, item costs are the shares. Requires all shares finite and <= 1.
Trajectory run_oks_beta_greedy(const Instance& inst, const Rational& beta);
Trajectory run_oks_beta_max(const Instance& inst);

/// Expected utility of the uniform greedy/max mixture at threshold beta:
/// (g(greedy set) + g(max singleton)) / 2, exactly.
ExtendedValue alg_omac_beta_expected(const Instance& inst, const Rational& beta);

/// Tightness families for the static-threshold algorithm; the case is picked
/// by the budget regime (beta < 1/2 or beta >= 1/2).
OksInstance gen_thm9_lb_items(const Rational& beta, const Rational& eps);
Instance gen_thm9_lb(const Rational& beta, const Rational& eps);

}  // namespace omac

#endif  // OMAC_OKS_HPP
