/*
 * Copyright 2026 the omac authors
 * Licensed under the terms of the Apache 2.0 License.
 * See LICENSE file in the project root for terms.
 */
#ifndef OMAC_RANDOM_INSTANCES_HPP
#define OMAC_RANDOM_INSTANCES_HPP

#include <random>

#include "omac/model.hpp"
#include "omac/oks.hpp"

namespace omac {

/// Seeded generators for the property and acceptance suites. Draws use
/// rng() % k directly so sequences are identical across standard libraries.
/// Qualities and shares come from small rational grids, which makes exact
/// quality ties (and hence multi-member quality groups) common on purpose.
Instance random_additive_instance(std::mt19937_64& rng, int min_n = 1, int max_n = 12);

/// Random XOS instance for monotonicity/evaluation properties.
Instance random_xos_instance(std::mt19937_64& rng, int max_n = 7, int max_clauses = 4);

/// Random knapsack items. within_budget_costs keeps every cost at or below
/// 1/2 (the regime where the static-threshold guarantee is provable);
/// otherwise costs range up to 1.
OksInstance random_oks_instance(std::mt19937_64& rng, bool within_budget_costs,
                                int max_n = 12);

/// Uniform pick of a subset of the first n agents.
AgentSet random_subset(std::mt19937_64& rng, int n);

}  // namespace omac

#endif  // OMAC_RANDOM_INSTANCES_HPP
