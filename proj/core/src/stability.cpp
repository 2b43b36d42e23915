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

#include "segstab/stability.hpp"

#include <utility>

namespace segstab {

bool is_efficient(const Segmentation& s) {
  for (const Segment& seg : s.segments())
    if (!(seg.price() == min_supported_value(seg.coalition()))) return false;
  return true;
}

bool is_saturated(const Segmentation& s) {
  const std::size_t k = s.size();
  for (std::size_t a = 0; a < k; ++a) {
    const Rational& p = s.segment(a).price();
    std::vector<Rational> opt;  // computed lazily, only for segments that need it
    bool opt_ready = false;
    for (std::size_t b = 0; b < k; ++b) {
      if (b == a || !(p < s.segment(b).price())) continue;
      const Rational ceiling = min_supported_value(s.segment(b).coalition());
      if (!opt_ready) {
        opt = optimal_prices(s.segment(a).coalition());
        opt_ready = true;
      }
      bool found = false;
      for (const Rational& cand : opt) {
        if (p < cand && !(ceiling < cand)) {
          found = true;
          break;
        }
      }
      if (!found) return false;
    }
  }
  return true;
}

bool is_stable(const Segmentation& s) {
  const Segmentation canon = canonicalize(s);
  return is_efficient(canon) && is_saturated(canon);
}

bool is_fragmentation_proof(const Segmentation& s) { return is_efficient(s); }

namespace {

// Largest eps = 1/2^k (k >= 1) for which the carve-out of segment (C,p) stays
// valid: all below-price and lowest-value mass plus an eps share of every
// other supported value, priced at the lowest supported value.
struct CarveOut {
  Coalition carved;
  Coalition rest;
  Rational low_price;
};

CarveOut carve_inefficient_segment(const Coalition& c, const Rational& p) {
  const MarketPtr& mkt = c.market();
  const Rational low = min_supported_value(c);
  Rational eps(1, 2);
  for (int k = 1; k <= 512; ++k, eps /= Rational(2)) {
    std::vector<Rational> carved(mkt->size(), Rational(0));
    std::vector<Rational> rest(mkt->size(), Rational(0));
    for (std::size_t i = 0; i < mkt->size(); ++i) {
      if (mkt->value(i) == low) {
        carved[i] = c.mass(i);
      } else {
        carved[i] = c.mass(i) * eps;
        rest[i] = c.mass(i) - carved[i];
      }
    }
    Coalition cbar(mkt, std::move(carved));
    Coalition crest(mkt, std::move(rest));
    if (is_optimal_price(cbar, low) && !crest.is_empty() &&
        is_optimal_price(crest, p))
      return {std::move(cbar), std::move(crest), low};
  }
  throw Error("no dyadic carve-out found for an inefficient segment");
}

}  // namespace

std::optional<Witness> inefficiency_witness(const Segmentation& s) {
  const MarketPtr& mkt = s.market();
  // Anchor: the lowest-price, then lowest-index, inefficient segment.
  std::size_t anchor = s.size();
  for (std::size_t a = 0; a < s.size(); ++a) {
    const Segment& seg = s.segment(a);
    if (min_supported_value(seg.coalition()) < seg.price()) {
      if (anchor == s.size() || seg.price() < s.segment(anchor).price()) anchor = a;
    }
  }
  if (anchor == s.size()) return std::nullopt;

  const Segment& old_seg = s.segment(anchor);
  CarveOut carve = carve_inefficient_segment(old_seg.coalition(), old_seg.price());

  std::vector<Segment> out;
  std::vector<std::size_t> target_of(s.size());  // non-anchor rows map here
  for (std::size_t a = 0; a < s.size(); ++a) {
    if (a == anchor) {
      target_of[a] = out.size();
      out.emplace_back(carve.carved, carve.low_price);
      out.emplace_back(carve.rest, old_seg.price());
    } else {
      target_of[a] = out.size();
      out.push_back(s.segment(a));
    }
  }
  Segmentation alt(std::move(out));

  const std::size_t n = mkt->size();
  TransportPlan::Flow flow(
      s.size(), std::vector<std::vector<Rational>>(alt.size(),
                                                   std::vector<Rational>(n, Rational(0))));
  for (std::size_t a = 0; a < s.size(); ++a) {
    if (a == anchor) {
      const std::size_t carved_at = target_of[a];
      for (std::size_t i = 0; i < n; ++i) {
        flow[a][carved_at][i] = carve.carved.mass(i);
        flow[a][carved_at + 1][i] = carve.rest.mass(i);
      }
    } else {
      for (std::size_t i = 0; i < n; ++i)
        flow[a][target_of[a]][i] = s.segment(a).coalition().mass(i);
    }
  }
  TransportPlan plan(s, std::move(alt), std::move(flow));
  Segmentation alternative = plan.target();
  return Witness{std::move(alternative), std::move(plan)};
}

Witness nonsaturation_witness(const Segmentation& s) {
  if (!is_efficient(s))
    throw NotApplicableError("nonsaturation witness requires an efficient segmentation");
  const Segmentation canon = canonicalize(s);
  const MarketPtr& mkt = s.market();

  // First ordered pair (low, high) of canonical segments violating the
  // saturation condition; canonical order is ascending in price.
  std::size_t low_idx = canon.size(), high_idx = canon.size();
  for (std::size_t i = 0; i < canon.size() && low_idx == canon.size(); ++i) {
    const Rational& p = canon.segment(i).price();
    const std::vector<Rational> opt = optimal_prices(canon.segment(i).coalition());
    for (std::size_t j = i + 1; j < canon.size(); ++j) {
      const Rational ceiling = min_supported_value(canon.segment(j).coalition());
      bool found = false;
      for (const Rational& cand : opt)
        if (p < cand && !(ceiling < cand)) { found = true; break; }
      if (!found) {
        low_idx = i;
        high_idx = j;
        break;
      }
    }
  }
  if (low_idx == canon.size())
    throw NotApplicableError("segmentation is saturated; no witness exists");

  const Segment& low_seg = canon.segment(low_idx);
  const Segment& high_seg = canon.segment(high_idx);
  const Rational& p = low_seg.price();
  const Rational u = min_supported_value(high_seg.coalition());
  const std::size_t u_at = mkt->index_of(u);

  // Revenue-tie threshold: mass of value-u consumers that can join the low
  // segment before some price in (p, u] catches up with p.
  Rational t_max(0);
  bool have_t = false;
  const Rational base = revenue(low_seg.coalition(), p);
  for (std::size_t i = 0; i < mkt->size(); ++i) {
    const Rational& q = mkt->value(i);
    if (!(p < q) || u < q) continue;
    const Rational bound = (base - revenue(low_seg.coalition(), q)) / (q - p);
    if (!have_t || bound < t_max) {
      t_max = bound;
      have_t = true;
    }
  }
  const Rational moved =
      Rational::min(t_max, high_seg.coalition().mass(u_at)) / Rational(2);

  Coalition enlarged = low_seg.coalition().plus(Coalition::single(mkt, u_at, moved));
  Coalition residual = high_seg.coalition().minus(Coalition::single(mkt, u_at, moved));
  const Rational residual_price = optimal_prices(residual).front();

  std::vector<Segment> out;
  for (std::size_t j = 0; j < canon.size(); ++j) {
    if (j == low_idx)
      out.emplace_back(enlarged, p);
    else if (j == high_idx)
      out.emplace_back(residual, residual_price);
    else
      out.push_back(canon.segment(j));
  }
  Segmentation alt(std::move(out));

  // Plan from the raw segmentation: each raw segment maps onto the canonical
  // segment of its price; donors (raw segments priced u) send proportional
  // shares of their value-u mass into the enlarged low segment.
  const Rational donor_pool = high_seg.coalition().mass(u_at);
  const std::size_t n = mkt->size();
  TransportPlan::Flow flow(
      s.size(), std::vector<std::vector<Rational>>(alt.size(),
                                                   std::vector<Rational>(n, Rational(0))));
  for (std::size_t a = 0; a < s.size(); ++a) {
    const Segment& raw = s.segment(a);
    std::size_t cidx = canon.size();
    for (std::size_t j = 0; j < canon.size(); ++j)
      if (canon.segment(j).price() == raw.price()) { cidx = j; break; }
    if (cidx == high_idx) {
      for (std::size_t i = 0; i < n; ++i) {
        if (i == u_at) {
          const Rational share = moved * raw.coalition().mass(i) / donor_pool;
          flow[a][low_idx][i] = share;
          flow[a][high_idx][i] = raw.coalition().mass(i) - share;
        } else {
          flow[a][high_idx][i] = raw.coalition().mass(i);
        }
      }
    } else {
      for (std::size_t i = 0; i < n; ++i)
        flow[a][cidx][i] = raw.coalition().mass(i);
    }
  }
  TransportPlan plan(s, std::move(alt), std::move(flow));
  Segmentation alternative = plan.target();
  return Witness{std::move(alternative), std::move(plan)};
}

}  // namespace segstab
