/*
 * Copyright 2026 the omac authors
 * Licensed under the terms of the Apache 2.0 License.
 * See LICENSE file in the project root for terms.
 */
#ifndef OMAC_ORACLE_HPP
#define OMAC_ORACLE_HPP

#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "omac/model.hpp"

namespace omac {

/// Exhaustive-search budget: at most 2^cap_bits candidate sets per query.
/// The OpenMP kernel is the default; the serial walk is kept as the reference
/// implementation and cross-checked in tests and in the benchmark tool.
struct OracleConfig {
  int cap_bits = 22;
  bool parallel = true;
};

class OracleCapExceeded : public std::runtime_error {
 public:
  explicit OracleCapExceeded(const std::string& what) : std::runtime_error(what) {}
};

struct OracleResult {
  AgentSet best_set;
  ExtendedValue best_value;
  /// per_prefix[i] = OPT(N_i), the optimum over the first i arrivals;
  /// per_prefix[0] = 0. Non-decreasing in i.
  std::vector<ExtendedValue> per_prefix;
};

/// Exact offline optimum over the first prefix_n arrivals. Ties go to the
/// smaller set, then to the lexicographically smallest id list. Enumerates
/// all subsets; for additive instances wider than the cap, agents with
/// identical (weight, cost) are collapsed into interchangeable classes and
/// the enumeration runs over class counts instead (still exact; identical
/// agents are indistinguishable in g). Throws OracleCapExceeded when neither
/// route fits the budget.
std::pair<AgentSet, ExtendedValue> brute_force_opt(const Instance& inst, int prefix_n,
                                                   const OracleConfig& cfg = {});

/// OPT for every prefix plus the full-instance maximizer.
OracleResult prefix_opts(const Instance& inst, const OracleConfig& cfg = {});

/// Best single hire within the first prefix_n arrivals, against the empty
/// team. Ties prefer the empty team, then the lowest id.
std::pair<std::optional<AgentId>, ExtendedValue> best_singleton(const Instance& inst,
                                                                int prefix_n);

/// Serial reference enumeration (no OpenMP, no class collapsing); the
/// parallel kernel must match it set-for-set.
std::pair<AgentSet, ExtendedValue> brute_force_opt_serial(const Instance& inst, int prefix_n,
                                                          int cap_bits = 22);

}  // namespace omac

#endif  // OMAC_ORACLE_HPP
