/*
 * Copyright 2026 the omac authors
 * Licensed under the terms of the Apache 2.0 License.
 * See LICENSE file in the project root for terms.
 */
#include "omac/rational.hpp"

#include <cctype>
#include <limits>

namespace omac {

namespace {

bool all_digits(const std::string& s, size_t from, size_t to) {
  if (from >= to) return false;
  for (size_t i = from; i < to; ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  }
  return true;
}

}  // namespace

Rational parse_rational(const std::string& text) {
  if (text.empty()) throw std::invalid_argument("empty rational literal");
  size_t pos = 0;
  bool negative = false;
  if (text[0] == '+' || text[0] == '-') {
    negative = text[0] == '-';
    pos = 1;
  }
  size_t slash = text.find('/', pos);
  size_t num_end = slash == std::string::npos ? text.size() : slash;
  if (!all_digits(text, pos, num_end)) {
    throw std::invalid_argument("malformed rational literal: '" + text + "'");
  }
  BigInt num(text.substr(pos, num_end - pos));
  if (negative) num = -num;
  if (slash == std::string::npos) return Rational(std::move(num));

  if (!all_digits(text, slash + 1, text.size())) {
    throw std::invalid_argument("malformed rational literal: '" + text + "'");
  }
  BigInt den(text.substr(slash + 1));
  if (den == 0) throw std::domain_error("rational literal with zero denominator: '" + text + "'");
  return Rational(std::move(num), std::move(den));
}

double ExtendedValue::to_double() const {
  switch (kind_) {
    case Kind::neg_inf: return -std::numeric_limits<double>::infinity();
    case Kind::pos_inf: return std::numeric_limits<double>::infinity();
    default: return value_.to_double();
  }
}

}  // namespace omac
