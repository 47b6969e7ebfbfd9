/*
 * Copyright 2026 the omac authors
 * Licensed under the terms of the Apache 2.0 License.
 * See LICENSE file in the project root for terms.
 */
#ifndef OMAC_QUALITY_HPP
#define OMAC_QUALITY_HPP

#include <vector>

#include "omac/model.hpp"

namespace omac {

/// The partition of an additive instance into quality groups Q_0 > ... > Q_{p-1}
/// (strictly decreasing group quality; membership by exact rational equality),
/// plus the canonical ordering: decreasing quality, then non-decreasing share,
/// then arrival index. Group indices are 0-based here; reports render 1-based.
struct QualityStructure {
  std::vector<std::vector<AgentId>> groups;
  std::vector<ExtendedValue> group_quality;
  std::vector<int> group_of;         // agent id -> group index
  std::vector<AgentId> canonical_order;
  std::vector<int> canonical_pos;    // agent id -> position in canonical_order

  int group_count() const { return static_cast<int>(groups.size()); }
};

/// Throws std::domain_error on non-additive instances.
QualityStructure build_quality_structure(const Instance& inst);

/// Canonical comparator (quality desc, share asc, id asc) exposed for reuse.
bool canonical_less(const Instance& inst, AgentId a, AgentId b);

}  // namespace omac

#endif  // OMAC_QUALITY_HPP
