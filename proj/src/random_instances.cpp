/*
 * Copyright 2026 the omac authors
 * Licensed under the terms of the Apache 2.0 License.
 * See LICENSE file in the project root for terms.
 */
#include "omac/random_instances.hpp"

namespace omac {

namespace {

std::uint64_t draw(std::mt19937_64& rng, std::uint64_t bound) { return rng() % bound; }

const Rational& pick(std::mt19937_64& rng, const std::vector<Rational>& grid) {
  return grid[draw(rng, grid.size())];
}

const std::vector<Rational>& quality_grid() {
  static const std::vector<Rational> g = {Rational(1), Rational(2),      Rational(3),
                                          Rational(4), Rational(6),      Rational(1, 2),
                                          Rational(8), Rational(3, 2)};
  return g;
}

const std::vector<Rational>& share_grid() {
  static const std::vector<Rational> g = {Rational(1, 8), Rational(1, 6), Rational(1, 4),
                                          Rational(1, 3), Rational(1, 2), Rational(2, 3),
                                          Rational(3, 4), Rational(1),    Rational(9, 8)};
  return g;
}

}  // namespace

Instance random_additive_instance(std::mt19937_64& rng, int min_n, int max_n) {
  int n = min_n + static_cast<int>(draw(rng, static_cast<std::uint64_t>(max_n - min_n + 1)));
  Instance inst;
  inst.label = "random_additive";
  std::vector<Rational> weights;
  for (int i = 0; i < n; ++i) {
    // Draw (quality, share) and derive weight = q*a, cost = q*a^2; costs and
    // weights stay positive so shares and qualities are finite.
    Rational q = pick(rng, quality_grid());
    Rational a = pick(rng, share_grid());
    weights.push_back(q * a);
    inst.costs.push_back(q * a * a);
  }
  inst.reward = RewardFunction::additive(std::move(weights));
  return inst;
}

Instance random_xos_instance(std::mt19937_64& rng, int max_n, int max_clauses) {
  static const std::vector<Rational> wgrid = {Rational(0), Rational(0), Rational(1, 2),
                                              Rational(1), Rational(2)};
  static const std::vector<Rational> cgrid = {Rational(1, 4), Rational(1, 2), Rational(1)};
  int n = 1 + static_cast<int>(draw(rng, static_cast<std::uint64_t>(max_n)));
  int m = 1 + static_cast<int>(draw(rng, static_cast<std::uint64_t>(max_clauses)));
  Instance inst;
  inst.label = "random_xos";
  for (int i = 0; i < n; ++i) inst.costs.push_back(pick(rng, cgrid));
  std::vector<std::vector<Rational>> clauses;
  for (int c = 0; c < m; ++c) {
    std::vector<Rational> clause;
    for (int i = 0; i < n; ++i) clause.push_back(pick(rng, wgrid));
    clauses.push_back(std::move(clause));
  }
  inst.reward = RewardFunction::xos(std::move(clauses));
  return inst;
}

OksInstance random_oks_instance(std::mt19937_64& rng, bool within_budget_costs, int max_n) {
  static const std::vector<Rational> vgrid = {Rational(1, 4), Rational(1, 2), Rational(1),
                                              Rational(3, 2), Rational(2),    Rational(3)};
  static const std::vector<Rational> tight = {Rational(1, 16), Rational(1, 8), Rational(3, 16),
                                              Rational(1, 4),  Rational(3, 8), Rational(1, 2)};
  static const std::vector<Rational> wide = {Rational(1, 8), Rational(1, 4), Rational(3, 8),
                                             Rational(1, 2), Rational(5, 8), Rational(3, 4),
                                             Rational(1)};
  int n = 1 + static_cast<int>(draw(rng, static_cast<std::uint64_t>(max_n)));
  OksInstance oks;
  oks.label = "random_oks";
  oks.budget = Rational(1, 2);
  for (int i = 0; i < n; ++i) {
    oks.items.push_back({pick(rng, vgrid), pick(rng, within_budget_costs ? tight : wide)});
  }
  return oks;
}

AgentSet random_subset(std::mt19937_64& rng, int n) {
  AgentSet s;
  for (int i = 0; i < n; ++i) {
    if (draw(rng, 2) == 1) s.push_back(i);
  }
  return s;
}

}  // namespace omac
