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

#include "segstab/segmentation.hpp"

#include <utility>

namespace segstab {

Segment::Segment(Coalition coalition, Rational price)
    : coalition_(std::move(coalition)), price_(std::move(price)) {
  if (coalition_.is_empty())
    throw InvalidSegmentError("segment coalition is empty");
  if (!is_optimal_price(coalition_, price_))
    throw InvalidSegmentError("price " + price_.str() +
                              " is not optimal for the segment coalition");
}

Segmentation::Segmentation(std::vector<Segment> segments)
    : segments_(std::move(segments)) {
  if (segments_.empty())
    throw ValidationError("segmentation needs at least one segment");
  const MarketPtr& mkt = segments_.front().coalition().market();
  Coalition sum = Coalition::empty(mkt);
  for (const Segment& seg : segments_) {
    if (!same_market(seg.coalition().market(), mkt))
      throw ValidationError("segments live over different markets");
    sum = sum.plus(seg.coalition());
  }
  for (std::size_t i = 0; i < mkt->size(); ++i) {
    if (!(sum.mass(i) == mkt->mass(i)))
      throw ValidationError("partition condition violated at value " +
                            mkt->value(i).str() + ": segments carry " +
                            sum.mass(i).str() + " of " + mkt->mass(i).str());
  }
}

Segmentation trivial_segmentation(MarketPtr market, const Rational& price) {
  Coalition all = Coalition::full(market);
  return Segmentation({Segment(std::move(all), price)});
}

Rational consumer_surplus(const Rational& value, const Rational& price) {
  Rational diff = value - price;
  return diff.is_positive() ? diff : Rational(0);
}

Rational average_consumer_surplus(const Segmentation& s) {
  const Market& mkt = *s.market();
  Rational total(0);
  for (const Segment& seg : s.segments())
    for (std::size_t i = 0; i < mkt.size(); ++i)
      total += seg.coalition().mass(i) * consumer_surplus(mkt.value(i), seg.price());
  return total / mkt.total_mass();
}

Rational seller_revenue(const Segmentation& s) {
  Rational total(0);
  for (const Segment& seg : s.segments())
    total += revenue(seg.coalition(), seg.price());
  return total;
}

Segmentation canonicalize(const Segmentation& s) {
  std::map<Rational, Coalition> merged;
  for (const Segment& seg : s.segments()) {
    auto it = merged.find(seg.price());
    if (it == merged.end())
      merged.emplace(seg.price(), seg.coalition());
    else
      it->second = it->second.plus(seg.coalition());
  }
  std::vector<Segment> out;
  out.reserve(merged.size());
  for (auto& [price, coalition] : merged)
    out.emplace_back(std::move(coalition), price);
  return Segmentation(std::move(out));
}

SurplusProfile::SurplusProfile(
    MarketPtr market, std::vector<std::map<Rational, Rational>> price_mass_by_value)
    : market_(std::move(market)), by_value_(std::move(price_mass_by_value)) {
  if (by_value_.size() != market_->size())
    throw ValidationError("surplus profile length mismatch");
  for (std::size_t i = 0; i < by_value_.size(); ++i) {
    Rational sum(0);
    for (const auto& [price, mass] : by_value_[i]) {
      if (mass.is_negative())
        throw NegativeMassError("surplus profile mass must be non-negative");
      sum += mass;
    }
    if (!(sum == market_->mass(i)))
      throw ValidationError("surplus profile masses do not cover value " +
                            market_->value(i).str());
  }
}

std::map<Rational, Rational> SurplusProfile::surplus_distribution(
    std::size_t value_index) const {
  std::map<Rational, Rational> out;
  const Rational& v = market_->value(value_index);
  for (const auto& [price, mass] : by_value_.at(value_index))
    out[consumer_surplus(v, price)] += mass;
  return out;
}

SurplusProfile surplus_profile(const Segmentation& s) {
  const MarketPtr& mkt = s.market();
  std::vector<std::map<Rational, Rational>> by_value(mkt->size());
  for (const Segment& seg : s.segments())
    for (std::size_t i = 0; i < mkt->size(); ++i)
      if (seg.coalition().mass(i).is_positive())
        by_value[i][seg.price()] += seg.coalition().mass(i);
  return SurplusProfile(mkt, std::move(by_value));
}

bool surplus_equivalent_in_distribution(const Segmentation& a, const Segmentation& b) {
  if (!same_market(a.market(), b.market()))
    throw ValidationError("surplus equivalence across different markets");
  const SurplusProfile pa = surplus_profile(a);
  const SurplusProfile pb = surplus_profile(b);
  for (std::size_t i = 0; i < a.market()->size(); ++i)
    if (pa.surplus_distribution(i) != pb.surplus_distribution(i)) return false;
  return true;
}

bool weak_surplus_equivalent(const Segmentation& a, const Segmentation& b) {
  if (!same_market(a.market(), b.market()))
    throw ValidationError("weak surplus equivalence across different markets");
  const Segmentation ca = canonicalize(a);
  const Segmentation cb = canonicalize(b);
  if (ca.size() != cb.size()) return false;
  // Canonical output is price-sorted, so positional comparison decides
  // equality of the price -> mass-vector maps.
  for (std::size_t j = 0; j < ca.size(); ++j) {
    if (!(ca.segment(j).price() == cb.segment(j).price())) return false;
    if (!(ca.segment(j).coalition().masses() == cb.segment(j).coalition().masses()))
      return false;
  }
  return true;
}

}  // namespace segstab
