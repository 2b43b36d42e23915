// Copyright 2026 the segstab authors
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

#ifndef SEGSTAB_RATIONAL_HPP
#define SEGSTAB_RATIONAL_HPP

#include <gmpxx.h>

#include <compare>
#include <iosfwd>
#include <string>
#include <string_view>

namespace segstab {

/// Exact rational number, always kept reduced with a positive denominator.
/// Every mass and price in the library is one of these; there is no floating
/// point anywhere on a decision path.
class Rational {
 public:
  Rational() : q_(0) {}
  Rational(long n) : q_(n) {}  // NOLINT(google-explicit-constructor)
  Rational(int n) : q_(n) {}   // NOLINT(google-explicit-constructor)
  Rational(long num, long den);

  /// Accepts "p", "-p" or "p/q" with arbitrary-size integers.
  /// Throws std::invalid_argument on malformed input or zero denominator.
  static Rational from_string(std::string_view text);

  mpz_class numerator() const { return q_.get_num(); }
  mpz_class denominator() const { return q_.get_den(); }

  bool is_zero() const { return sgn(q_) == 0; }
  bool is_positive() const { return sgn(q_) > 0; }
  bool is_negative() const { return sgn(q_) < 0; }

  Rational operator-() const { return Rational(-q_); }
  Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
  Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
  Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) {
    return cmp(a.q_, b.q_) == 0;
  }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const int c = cmp(a.q_, b.q_);
    if (c < 0) return std::strong_ordering::less;
    if (c > 0) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

  /// Serialized as "p/q", or just "p" when the denominator is 1.
  std::string str() const;

  /// Exact only for display; never used in a decision.
  double approx() const { return q_.get_d(); }

  static Rational min(const Rational& a, const Rational& b) { return a < b ? a : b; }
  static Rational max(const Rational& a, const Rational& b) { return a < b ? b : a; }
  Rational abs() const { return is_negative() ? -*this : *this; }

  /// gcd of |a| and |b| as nonnegative rationals: gcd(p/q, r/s) = gcd(p,r)/lcm(q,s).
  /// Used to find the coarsest exact atom grid.
  static Rational gcd(const Rational& a, const Rational& b);

 private:
  explicit Rational(mpq_class q) : q_(std::move(q)) {}
  mpq_class q_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

}  // namespace segstab

#endif  // SEGSTAB_RATIONAL_HPP
