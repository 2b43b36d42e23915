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

#include "segstab/market.hpp"

#include <utility>

namespace segstab {

Market::Market(std::vector<Rational> values, std::vector<Rational> masses)
    : values_(std::move(values)), masses_(std::move(masses)), total_(0) {
  if (values_.empty()) throw ValidationError("market needs at least one value");
  if (values_.size() != masses_.size())
    throw ValidationError("market values and masses differ in length");
  for (std::size_t i = 0; i < values_.size(); ++i) {
    if (!values_[i].is_positive())
      throw ValidationError("market values must be strictly positive");
    if (i > 0 && !(values_[i - 1] < values_[i]))
      throw ValidationError("market values must be strictly increasing");
    if (!masses_[i].is_positive())
      throw ValidationError("market masses must be strictly positive");
    total_ += masses_[i];
  }
}

std::size_t Market::index_of(const Rational& value) const {
  for (std::size_t i = 0; i < values_.size(); ++i)
    if (values_[i] == value) return i;
  throw ValidationError("value " + value.str() + " is not in the market");
}

bool same_market(const MarketPtr& a, const MarketPtr& b) {
  return a == b || (a && b && *a == *b);
}

Coalition::Coalition(MarketPtr market, std::vector<Rational> mass_by_value)
    : market_(std::move(market)), mass_(std::move(mass_by_value)) {
  if (!market_) throw ValidationError("coalition without a market");
  if (mass_.size() != market_->size())
    throw ValidationError("coalition mass vector length mismatch");
  for (const Rational& m : mass_)
    if (m.is_negative())
      throw NegativeMassError("coalition mass must be non-negative");
}

Coalition Coalition::empty(MarketPtr market) {
  const std::size_t n = market->size();
  return Coalition(std::move(market), std::vector<Rational>(n, Rational(0)));
}

Coalition Coalition::full(MarketPtr market) {
  auto masses = market->masses();
  return Coalition(std::move(market), std::move(masses));
}

Coalition Coalition::single(MarketPtr market, std::size_t i, Rational mass) {
  std::vector<Rational> m(market->size(), Rational(0));
  m.at(i) = std::move(mass);
  return Coalition(std::move(market), std::move(m));
}

bool Coalition::is_empty() const {
  for (const Rational& m : mass_)
    if (m.is_positive()) return false;
  return true;
}

Rational Coalition::total_mass() const {
  Rational t(0);
  for (const Rational& m : mass_) t += m;
  return t;
}

std::vector<std::size_t> Coalition::support() const {
  std::vector<std::size_t> s;
  for (std::size_t i = 0; i < mass_.size(); ++i)
    if (mass_[i].is_positive()) s.push_back(i);
  return s;
}

Coalition Coalition::plus(const Coalition& other) const {
  if (!same_market(market_, other.market_))
    throw ValidationError("coalition algebra across different markets");
  std::vector<Rational> m(mass_);
  for (std::size_t i = 0; i < m.size(); ++i) m[i] += other.mass_[i];
  return Coalition(market_, std::move(m));
}

Coalition Coalition::minus(const Coalition& other) const {
  if (!same_market(market_, other.market_))
    throw ValidationError("coalition algebra across different markets");
  std::vector<Rational> m(mass_);
  for (std::size_t i = 0; i < m.size(); ++i) {
    m[i] -= other.mass_[i];
    if (m[i].is_negative())
      throw NegativeMassError("coalition subtraction went negative at value " +
                              market_->value(i).str());
  }
  return Coalition(market_, std::move(m));
}

Coalition Coalition::scaled(const Rational& factor) const {
  if (factor.is_negative())
    throw NegativeMassError("coalition scale factor must be non-negative");
  std::vector<Rational> m(mass_);
  for (Rational& x : m) x *= factor;
  return Coalition(market_, std::move(m));
}

Rational revenue(const Coalition& coalition, const Rational& price) {
  if (!price.is_positive())
    throw ValidationError("revenue requires a strictly positive price");
  const Market& mkt = *coalition.market();
  Rational buyers(0);
  for (std::size_t i = 0; i < mkt.size(); ++i)
    if (!(mkt.value(i) < price)) buyers += coalition.mass(i);
  return price * buyers;
}

std::vector<Rational> optimal_prices(const Coalition& coalition) {
  if (coalition.is_empty()) throw EmptyCoalitionError();
  const Market& mkt = *coalition.market();
  // Candidates are all of V: any price outside V is weakly dominated by one
  // inside, and candidates without coalition mass lose to the next supported
  // value above them, so the argmax lands on supported values automatically.
  Rational best(0);
  std::vector<Rational> out;
  for (std::size_t i = 0; i < mkt.size(); ++i) {
    const Rational r = revenue(coalition, mkt.value(i));
    if (r > best) {
      best = r;
      out.clear();
      out.push_back(mkt.value(i));
    } else if (r == best && !out.empty()) {
      out.push_back(mkt.value(i));
    }
  }
  return out;
}

bool is_optimal_price(const Coalition& coalition, const Rational& price) {
  for (const Rational& p : optimal_prices(coalition))
    if (p == price) return true;
  return false;
}

Rational min_supported_value(const Coalition& coalition) {
  const Market& mkt = *coalition.market();
  for (std::size_t i = 0; i < mkt.size(); ++i)
    if (coalition.mass(i).is_positive()) return mkt.value(i);
  throw EmptyCoalitionError();
}

}  // namespace segstab
