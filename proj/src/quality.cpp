/*
 * Copyright 2026 the omac authors
 * Licensed under the terms of the Apache 2.0 License.
 * See LICENSE file in the project root for terms.
 */
#include "omac/quality.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace omac {

bool canonical_less(const Instance& inst, AgentId a, AgentId b) {
  ExtendedValue qa = quality_of_agent(inst, a);
  ExtendedValue qb = quality_of_agent(inst, b);
  if (qa != qb) return qa > qb;
  ExtendedValue sa = additive_share(inst, a);
  ExtendedValue sb = additive_share(inst, b);
  if (sa != sb) return sa < sb;
  return a < b;
}

QualityStructure build_quality_structure(const Instance& inst) {
  if (!inst.additive()) {
    throw std::domain_error("quality structure is defined for additive instances only");
  }
  const int n = inst.size();
  QualityStructure qs;
  qs.canonical_order.resize(static_cast<size_t>(n));
  std::iota(qs.canonical_order.begin(), qs.canonical_order.end(), 0);
  std::sort(qs.canonical_order.begin(), qs.canonical_order.end(),
            [&](AgentId a, AgentId b) { return canonical_less(inst, a, b); });

  qs.canonical_pos.assign(static_cast<size_t>(n), -1);
  qs.group_of.assign(static_cast<size_t>(n), -1);
  for (int pos = 0; pos < n; ++pos) {
    AgentId id = qs.canonical_order[static_cast<size_t>(pos)];
    qs.canonical_pos[static_cast<size_t>(id)] = pos;
    ExtendedValue q = quality_of_agent(inst, id);
    if (qs.groups.empty() || q != qs.group_quality.back()) {
      qs.groups.emplace_back();
      qs.group_quality.push_back(q);
    }
    qs.groups.back().push_back(id);
    qs.group_of[static_cast<size_t>(id)] = static_cast<int>(qs.groups.size()) - 1;
  }
  return qs;
}

}  // namespace omac
