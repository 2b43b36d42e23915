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

#ifndef SEGSTAB_MARKET_HPP
#define SEGSTAB_MARKET_HPP

#include <cstddef>
#include <memory>
#include <vector>

#include "segstab/errors.hpp"
#include "segstab/rational.hpp"

namespace segstab {

/// A finite-type market: strictly increasing positive values v_1 < ... < v_n,
/// each with a strictly positive mass of consumers. Total mass need not be 1;
/// everything downstream is scale-invariant.
class Market {
 public:
  Market(std::vector<Rational> values, std::vector<Rational> masses);

  std::size_t size() const { return values_.size(); }
  const std::vector<Rational>& values() const { return values_; }
  const std::vector<Rational>& masses() const { return masses_; }
  const Rational& value(std::size_t i) const { return values_.at(i); }
  const Rational& mass(std::size_t i) const { return masses_.at(i); }
  const Rational& total_mass() const { return total_; }

  /// Index of a value in V; throws ValidationError if absent.
  std::size_t index_of(const Rational& value) const;

  friend bool operator==(const Market& a, const Market& b) {
    return a.values_ == b.values_ && a.masses_ == b.masses_;
  }

 private:
  std::vector<Rational> values_;
  std::vector<Rational> masses_;
  Rational total_;
};

using MarketPtr = std::shared_ptr<const Market>;

/// A sub-population of the market as a per-value mass vector f^C, index
/// aligned with the market's value list. Coalitions are value-anonymous;
/// consumer identity lives in transport plans.
class Coalition {
 public:
  Coalition(MarketPtr market, std::vector<Rational> mass_by_value);

  static Coalition empty(MarketPtr market);
  static Coalition full(MarketPtr market);
  /// Mass only at value index i.
  static Coalition single(MarketPtr market, std::size_t i, Rational mass);

  const MarketPtr& market() const { return market_; }
  std::size_t size() const { return mass_.size(); }
  const std::vector<Rational>& masses() const { return mass_; }
  const Rational& mass(std::size_t i) const { return mass_.at(i); }

  bool is_empty() const;
  Rational total_mass() const;
  /// Indices with positive mass, ascending.
  std::vector<std::size_t> support() const;

  Coalition plus(const Coalition& other) const;
  /// Throws NegativeMassError if other exceeds *this anywhere.
  Coalition minus(const Coalition& other) const;
  /// Throws NegativeMassError for negative factors.
  Coalition scaled(const Rational& factor) const;

  friend bool operator==(const Coalition& a, const Coalition& b) {
    return a.mass_ == b.mass_ && *a.market_ == *b.market_;
  }

 private:
  MarketPtr market_;
  std::vector<Rational> mass_;
};

/// True when the two objects live over the same market (pointer or value).
bool same_market(const MarketPtr& a, const MarketPtr& b);

/// price * (mass of coalition members with value >= price). Exact; an empty
/// coalition earns 0 at any price. Requires price > 0.
Rational revenue(const Coalition& coalition, const Rational& price);

/// All revenue-maximizing candidate prices in V, ascending. Every returned
/// price carries positive coalition mass. Throws EmptyCoalitionError.
std::vector<Rational> optimal_prices(const Coalition& coalition);

bool is_optimal_price(const Coalition& coalition, const Rational& price);

/// Lowest value with positive mass. Throws EmptyCoalitionError.
Rational min_supported_value(const Coalition& coalition);

}  // namespace segstab

#endif  // SEGSTAB_MARKET_HPP
