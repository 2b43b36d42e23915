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

#ifndef SEGSTAB_SEGMENTATION_HPP
#define SEGSTAB_SEGMENTATION_HPP

#include <cstddef>
#include <map>
#include <vector>

#include "segstab/market.hpp"

namespace segstab {

/// A coalition together with one of its optimal prices. Construction
/// validates optimality, so a Segment is a segment in the model's sense.
class Segment {
 public:
  Segment(Coalition coalition, Rational price);

  const Coalition& coalition() const { return coalition_; }
  const Rational& price() const { return price_; }

  friend bool operator==(const Segment& a, const Segment& b) {
    return a.price_ == b.price_ && a.coalition_ == b.coalition_;
  }

 private:
  Coalition coalition_;
  Rational price_;
};

/// A finite list of segments whose coalitions partition the market exactly.
class Segmentation {
 public:
  explicit Segmentation(std::vector<Segment> segments);

  const std::vector<Segment>& segments() const { return segments_; }
  const Segment& segment(std::size_t i) const { return segments_.at(i); }
  std::size_t size() const { return segments_.size(); }
  const MarketPtr& market() const { return segments_.front().coalition().market(); }

  friend bool operator==(const Segmentation& a, const Segmentation& b) {
    return a.segments_ == b.segments_;
  }

 private:
  std::vector<Segment> segments_;
};

/// The one-segment segmentation at the given price; the price must be optimal
/// for the whole market.
Segmentation trivial_segmentation(MarketPtr market, const Rational& price);

/// max(value - price, 0).
Rational consumer_surplus(const Rational& value, const Rational& price);

/// Total consumer surplus divided by total market mass.
Rational average_consumer_surplus(const Segmentation& s);

/// Sum of per-segment revenues at the assigned prices (not averaged).
Rational seller_revenue(const Segmentation& s);

/// Merge all same-price segments; output sorted by ascending price.
/// Idempotent, surplus-preserving; merged prices stay optimal.
Segmentation canonicalize(const Segmentation& s);

/// For each value index: the distribution of prices faced, as price -> mass.
/// Per-value masses sum to the market mass of that value.
class SurplusProfile {
 public:
  SurplusProfile(MarketPtr market,
                 std::vector<std::map<Rational, Rational>> price_mass_by_value);

  const MarketPtr& market() const { return market_; }
  const std::map<Rational, Rational>& prices_faced(std::size_t value_index) const {
    return by_value_.at(value_index);
  }
  /// Distribution of surplus levels for one value class, surplus -> mass.
  std::map<Rational, Rational> surplus_distribution(std::size_t value_index) const;

 private:
  MarketPtr market_;
  std::vector<std::map<Rational, Rational>> by_value_;
};

SurplusProfile surplus_profile(const Segmentation& s);

/// True iff the canonical forms carry identical price -> mass-vector maps.
bool weak_surplus_equivalent(const Segmentation& a, const Segmentation& b);

/// True iff every value class sees the same surplus distribution under both
/// segmentations. Implied by weak surplus equivalence but strictly weaker:
/// zero-surplus consumers may face different prices on the two sides.
bool surplus_equivalent_in_distribution(const Segmentation& a, const Segmentation& b);

}  // namespace segstab

#endif  // SEGSTAB_SEGMENTATION_HPP
