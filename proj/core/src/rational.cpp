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

#include "segstab/rational.hpp"

#include <ostream>
#include <stdexcept>

namespace segstab {

Rational::Rational(long num, long den) : q_(num, den) {
  if (den == 0) throw std::invalid_argument("rational with zero denominator");
  q_.canonicalize();
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw std::invalid_argument("rational division by zero");
  q_ /= o.q_;
  return *this;
}

Rational Rational::from_string(std::string_view text) {
  if (text.empty()) throw std::invalid_argument("empty rational literal");
  const auto slash = text.find('/');
  auto parse_int = [](std::string_view s) {
    if (s.empty()) throw std::invalid_argument("empty integer literal");
    std::size_t start = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (start == s.size()) throw std::invalid_argument("sign without digits");
    for (std::size_t i = start; i < s.size(); ++i) {
      if (s[i] < '0' || s[i] > '9')
        throw std::invalid_argument("malformed integer literal");
    }
    return mpz_class(std::string(s));
  };
  mpq_class q;
  if (slash == std::string_view::npos) {
    q = parse_int(text);
  } else {
    mpz_class num = parse_int(text.substr(0, slash));
    mpz_class den = parse_int(text.substr(slash + 1));
    if (sgn(den) == 0) throw std::invalid_argument("rational with zero denominator");
    q = mpq_class(num) / mpq_class(den);
  }
  q.canonicalize();
  return Rational(std::move(q));
}

std::string Rational::str() const {
  if (q_.get_den() == 1) return q_.get_num().get_str();
  return q_.get_num().get_str() + "/" + q_.get_den().get_str();
}

Rational Rational::gcd(const Rational& a, const Rational& b) {
  mpz_class num, den;
  mpz_gcd(num.get_mpz_t(), a.q_.get_num_mpz_t(), b.q_.get_num_mpz_t());
  mpz_lcm(den.get_mpz_t(), a.q_.get_den_mpz_t(), b.q_.get_den_mpz_t());
  mpq_class q(num, den);
  q.canonicalize();
  return Rational(std::move(q));
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
  return os << r.str();
}

}  // namespace segstab
