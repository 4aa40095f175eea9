// Copyright 2026 The ttr Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <compare>
#include <cstdint>
#include <limits>
#include <ostream>
#include <string>
#include <utility>

#include <boost/multiprecision/cpp_int.hpp>

#include "ttr/error.hpp"

namespace ttr {

/// Exact arbitrary-precision rational backed by Boost.Multiprecision.
/// num() and den() narrow to 64 bits and throw if the value does not fit.
class Rational {
 public:
  using Value = boost::multiprecision::cpp_rational;

  Rational() = default;
  Rational(std::int64_t value) : value_(value) {}  // NOLINT: implicit by design of arithmetic types
  Rational(std::int64_t num, std::int64_t den) {
    if (den == 0) throw InternalError("rational with zero denominator");
    boost::multiprecision::cpp_int n = num, d = den;
    if (d < 0) {
      n = -n;
      d = -d;
    }
    value_ = Value(n, d);
  }

  std::int64_t num() const { return narrow(boost::multiprecision::numerator(value_)); }
  std::int64_t den() const { return narrow(boost::multiprecision::denominator(value_)); }
  bool is_integer() const { return boost::multiprecision::denominator(value_) == 1; }
  int sign() const { return value_.sign(); }

  std::int64_t floor() const {
    const auto& n = boost::multiprecision::numerator(value_);
    const auto& d = boost::multiprecision::denominator(value_);
    boost::multiprecision::cpp_int q = n / d;
    if (n % d != 0 && n < 0) --q;
    return narrow(q);
  }
  std::int64_t ceil() const { return -Rational(-*this).floor(); }

  Rational operator-() const { return Rational(Value(-value_)); }

  friend Rational operator+(const Rational& a, const Rational& b) { return Rational(Value(a.value_ + b.value_)); }
  friend Rational operator-(const Rational& a, const Rational& b) { return Rational(Value(a.value_ - b.value_)); }
  friend Rational operator*(const Rational& a, const Rational& b) { return Rational(Value(a.value_ * b.value_)); }
  friend Rational operator/(const Rational& a, const Rational& b) {
    if (b.value_ == 0) throw InternalError("rational division by zero");
    return Rational(Value(a.value_ / b.value_));
  }
  Rational& operator+=(const Rational& o) {
    value_ += o.value_;
    return *this;
  }
  Rational& operator-=(const Rational& o) {
    value_ -= o.value_;
    return *this;
  }
  Rational& operator*=(const Rational& o) {
    value_ *= o.value_;
    return *this;
  }
  Rational& operator/=(const Rational& o) { return *this = *this / o; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    if (a.value_ < b.value_) return std::strong_ordering::less;
    if (b.value_ < a.value_) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

  std::string to_string() const { return value_.str(); }
  friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

 private:
  explicit Rational(Value v) : value_(std::move(v)) {}

  static std::int64_t narrow(const boost::multiprecision::cpp_int& v) {
    if (v > std::numeric_limits<std::int64_t>::max() || v < std::numeric_limits<std::int64_t>::min()) {
      throw InternalError("rational component " + v.str() + " does not fit in 64 bits");
    }
    return static_cast<std::int64_t>(v);
  }

  Value value_;
};

}  // namespace ttr
