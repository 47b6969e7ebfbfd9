/*
 * Copyright 2026 the omac authors
 * Licensed under the terms of the Apache 2.0 License.
 * See LICENSE file in the project root for terms.
 */
#ifndef OMAC_ACCEPTANCE_HPP
#define OMAC_ACCEPTANCE_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace omac::acceptance {

/// One end-to-end claim checked at a pinned tolerance with exact arithmetic.
struct CriterionOutcome {
  int id = 0;
  std::string name;
  bool passed = false;
  std::string details;
  double seconds = 0.0;
};

/// Runs every criterion whose name contains the filter (empty = all).
std::vector<CriterionOutcome> run_all(const std::string& filter = "");

/// One pass/fail line per criterion; returns 0 when everything passed,
/// 1 otherwise.
int report(const std::vector<CriterionOutcome>& outcomes, std::ostream& out);

}  // namespace omac::acceptance

#endif  // OMAC_ACCEPTANCE_HPP
