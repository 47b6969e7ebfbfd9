/*
 * Copyright 2026 the omac authors
 * Licensed under the terms of the Apache 2.0 License.
 * See LICENSE file in the project root for terms.
 */
#ifndef OMAC_RATIONAL_HPP
#define OMAC_RATIONAL_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>

namespace omac {

using BigInt = boost::multiprecision::cpp_int;

/// Exact fraction with arbitrary-precision numerator and denominator.
/// Always stored in lowest terms with a positive denominator, so that
/// operator== is structural equality.
class Rational {
 public:
  Rational() : num_(0), den_(1) {}
  Rational(long long n) : num_(n), den_(1) {}  // NOLINT: implicit by design
  Rational(BigInt n) : num_(std::move(n)), den_(1) {}
  Rational(BigInt n, BigInt d) : num_(std::move(n)), den_(std::move(d)) { normalize(); }
  Rational(long long n, long long d) : num_(n), den_(d) { normalize(); }

  const BigInt& num() const { return num_; }
  const BigInt& den() const { return den_; }

  bool is_zero() const { return num_ == 0; }
  bool is_integer() const { return den_ == 1; }
  int sign() const { return num_ == 0 ? 0 : (num_ < 0 ? -1 : 1); }

  Rational operator-() const { return Rational(-num_, den_, no_normalize{}); }

  Rational& operator+=(const Rational& o) {
    num_ = num_ * o.den_ + o.num_ * den_;
    den_ *= o.den_;
    normalize();
    return *this;
  }
  Rational& operator-=(const Rational& o) {
    num_ = num_ * o.den_ - o.num_ * den_;
    den_ *= o.den_;
    normalize();
    return *this;
  }
  Rational& operator*=(const Rational& o) {
    num_ *= o.num_;
    den_ *= o.den_;
    normalize();
    return *this;
  }
  Rational& operator/=(const Rational& o) {
    if (o.num_ == 0) throw std::domain_error("rational division by zero");
    num_ *= o.den_;
    den_ *= o.num_;
    normalize();
    return *this;
  }

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
  friend bool operator<(const Rational& a, const Rational& b) {
    return a.num_ * b.den_ < b.num_ * a.den_;
  }
  friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
  friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
  friend bool operator>=(const Rational& a, const Rational& b) { return !(a < b); }

  Rational pow(unsigned e) const {
    Rational r(1);
    Rational base = *this;
    for (; e > 0; e >>= 1) {
      if (e & 1u) r *= base;
      if (e > 1) base *= base;
    }
    return r;
  }

  /// Canonical text form: "n" when the denominator is 1, else "n/d".
  std::string str() const {
    std::string s = num_.str();
    if (den_ != 1) {
      s += '/';
      s += den_.str();
    }
    return s;
  }

  /// Display-only conversion; never used in comparisons.
  double to_double() const {
    return num_.convert_to<double>() / den_.convert_to<double>();
  }

 private:
  struct no_normalize {};
  Rational(BigInt n, BigInt d, no_normalize) : num_(std::move(n)), den_(std::move(d)) {}

  void normalize() {
    if (den_ == 0) throw std::domain_error("rational with zero denominator");
    if (den_ < 0) {
      num_ = -num_;
      den_ = -den_;
    }
    BigInt g = boost::multiprecision::gcd(num_ < 0 ? BigInt(-num_) : num_, den_);
    if (g > 1) {
      num_ /= g;
      den_ /= g;
    }
  }

  BigInt num_;
  BigInt den_;
};

/// Parses "int" or "int/int" (optional leading sign on the numerator).
/// Throws std::invalid_argument on malformed text and std::domain_error on a
/// zero denominator. format(parse(t)) is canonical for every accepted t.
Rational parse_rational(const std::string& text);

/// A rational extended with -inf / +inf sentinels. Shares can be +inf (zero
/// marginal contribution at positive cost) and utilities can be -inf (a team
/// holding such an agent), so the ordering is total: -inf < finite < +inf.
class ExtendedValue {
 public:
  enum class Kind : std::uint8_t { neg_inf, finite, pos_inf };

  ExtendedValue() : kind_(Kind::finite) {}
  ExtendedValue(Rational v) : kind_(Kind::finite), value_(std::move(v)) {}  // NOLINT
  ExtendedValue(long long v) : kind_(Kind::finite), value_(v) {}            // NOLINT

  static ExtendedValue neg_inf() { return ExtendedValue(Kind::neg_inf); }
  static ExtendedValue pos_inf() { return ExtendedValue(Kind::pos_inf); }

  Kind kind() const { return kind_; }
  bool is_finite() const { return kind_ == Kind::finite; }
  bool is_pos_inf() const { return kind_ == Kind::pos_inf; }
  bool is_neg_inf() const { return kind_ == Kind::neg_inf; }

  const Rational& finite() const {
    if (!is_finite()) throw std::logic_error("finite() on infinite ExtendedValue");
    return value_;
  }

  friend bool operator==(const ExtendedValue& a, const ExtendedValue& b) {
    if (a.kind_ != b.kind_) return false;
    return a.kind_ != Kind::finite || a.value_ == b.value_;
  }
  friend bool operator!=(const ExtendedValue& a, const ExtendedValue& b) { return !(a == b); }
  friend bool operator<(const ExtendedValue& a, const ExtendedValue& b) {
    if (a.kind_ == b.kind_)
      return a.kind_ == Kind::finite ? a.value_ < b.value_ : false;
    return rank(a.kind_) < rank(b.kind_);
  }
  friend bool operator>(const ExtendedValue& a, const ExtendedValue& b) { return b < a; }
  friend bool operator<=(const ExtendedValue& a, const ExtendedValue& b) { return !(b < a); }
  friend bool operator>=(const ExtendedValue& a, const ExtendedValue& b) { return !(a < b); }

  /// Infinity-absorbing addition. Adding opposite infinities is a logic error
  /// (never arises in the model: shares sum over [0, +inf], utilities over
  /// [-inf, finite]).
  ExtendedValue operator+(const ExtendedValue& o) const {
    if (is_finite() && o.is_finite()) return ExtendedValue(value_ + o.value_);
    if (is_finite()) return o;
    if (o.is_finite()) return *this;
    if (kind_ != o.kind_) throw std::logic_error("adding opposite infinities");
    return *this;
  }

  std::string str() const {
    switch (kind_) {
      case Kind::neg_inf: return "-inf";
      case Kind::pos_inf: return "inf";
      default: return value_.str();
    }
  }

  double to_double() const;

 private:
  explicit ExtendedValue(Kind k) : kind_(k) {}
  static int rank(Kind k) { return k == Kind::neg_inf ? 0 : (k == Kind::finite ? 1 : 2); }

  Kind kind_;
  Rational value_;
};

}  // namespace omac

#endif  // OMAC_RATIONAL_HPP
