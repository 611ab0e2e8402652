// Copyright 2026 The cellform Authors
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

#ifndef CELLFORM_RATIONAL_HPP_
#define CELLFORM_RATIONAL_HPP_

#include <compare>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

namespace cellform {

// Exact fraction with a positive denominator, always kept in lowest terms.
//
// Efficacies and bounds are non-negative, but the same type also carries the
// signed intermediates of the alternative comparison, so the numerator is
// signed. Products are formed in 128-bit arithmetic; every value the solver
// produces fits comfortably in 64 bits (numerators and denominators are
// bounded by the matrix size).
class Rational {
 public:
  constexpr Rational() = default;
  constexpr Rational(std::int64_t value) : num_(value) {}  // NOLINT
  constexpr Rational(std::int64_t num, std::int64_t den) : num_(num), den_(den) {
    if (den_ == 0) throw std::domain_error("Rational: zero denominator");
    Normalize();
  }

  constexpr std::int64_t num() const { return num_; }
  constexpr std::int64_t den() const { return den_; }

  double ToDouble() const {
    return static_cast<double>(num_) / static_cast<double>(den_);
  }

  // "num/den", or just "num" for integers.
  std::string ToString() const {
    if (den_ == 1) return std::to_string(num_);
    return std::to_string(num_) + "/" + std::to_string(den_);
  }

  friend constexpr bool operator==(const Rational& x, const Rational& y) {
    return x.num_ == y.num_ && x.den_ == y.den_;
  }
  friend constexpr std::strong_ordering operator<=>(const Rational& x,
                                                    const Rational& y) {
    const __int128 lhs = static_cast<__int128>(x.num_) * y.den_;
    const __int128 rhs = static_cast<__int128>(y.num_) * x.den_;
    if (lhs < rhs) return std::strong_ordering::less;
    if (lhs > rhs) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

  friend constexpr Rational operator+(const Rational& x, const Rational& y) {
    return FromWide(static_cast<__int128>(x.num_) * y.den_ +
                        static_cast<__int128>(y.num_) * x.den_,
                    static_cast<__int128>(x.den_) * y.den_);
  }
  friend constexpr Rational operator-(const Rational& x, const Rational& y) {
    return FromWide(static_cast<__int128>(x.num_) * y.den_ -
                        static_cast<__int128>(y.num_) * x.den_,
                    static_cast<__int128>(x.den_) * y.den_);
  }
  friend constexpr Rational operator*(const Rational& x, const Rational& y) {
    return FromWide(static_cast<__int128>(x.num_) * y.num_,
                    static_cast<__int128>(x.den_) * y.den_);
  }
  friend constexpr Rational operator/(const Rational& x, const Rational& y) {
    if (y.num_ == 0) throw std::domain_error("Rational: division by zero");
    return FromWide(static_cast<__int128>(x.num_) * y.den_,
                    static_cast<__int128>(x.den_) * y.num_);
  }
  constexpr Rational operator-() const { return Rational(-num_, den_); }

 private:
  static constexpr __int128 Gcd(__int128 a, __int128 b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b != 0) {
      const __int128 t = a % b;
      a = b;
      b = t;
    }
    return a;
  }

  static constexpr Rational FromWide(__int128 num, __int128 den) {
    if (den < 0) {
      num = -num;
      den = -den;
    }
    const __int128 g = Gcd(num, den);
    if (g > 1) {
      num /= g;
      den /= g;
    }
    constexpr __int128 kMax = INT64_MAX;
    if (num > kMax || num < -kMax || den > kMax) {
      throw std::overflow_error("Rational: value exceeds 64-bit range");
    }
    Rational r;
    r.num_ = static_cast<std::int64_t>(num);
    r.den_ = static_cast<std::int64_t>(den);
    return r;
  }

  constexpr void Normalize() {
    if (den_ < 0) {
      num_ = -num_;
      den_ = -den_;
    }
    const std::int64_t g = std::gcd(num_, den_);
    if (g > 1) {
      num_ /= g;
      den_ /= g;
    }
  }

  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

}  // namespace cellform

#endif  // CELLFORM_RATIONAL_HPP_
