/*
 * Copyright 2026 the omac authors
 * Licensed under the terms of the Apache 2.0 License.
 * See LICENSE file in the project root for terms.
 */

// Acceptance gate: one pass/fail line per criterion, nonzero exit on any
// failure. Also reachable as `omac suite --acceptance`.

#include <iostream>
#include <string>

#include "omac/acceptance.hpp"

int main(int argc, char** argv) {
  std::string filter = argc > 1 ? argv[1] : "";
  auto outcomes = omac::acceptance::run_all(filter);
  return omac::acceptance::report(outcomes, std::cout);
}
