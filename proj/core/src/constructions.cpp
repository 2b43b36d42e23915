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

#include "segstab/constructions.hpp"

#include <memory>
#include <utility>

namespace segstab {

std::pair<Segmentation, MerTrace> mer_segmentation(const Market& market) {
  auto mkt = std::make_shared<const Market>(market);
  const std::size_t n = mkt->size();
  std::vector<Rational> residual = mkt->masses();
  MerTrace trace;
  std::vector<Segment> segments;

  auto supported = [&]() {
    std::vector<std::size_t> s;
    for (std::size_t i = 0; i < n; ++i)
      if (residual[i].is_positive()) s.push_back(i);
    return s;
  };

  for (std::vector<std::size_t> supp = supported(); !supp.empty(); supp = supported()) {
    // lambda = min_j residual(w_j) / (1/w_j - 1/w_{j+1}), where w_{j+1} is the
    // next supported value and 1/w_{m+1} = 0 past the top.
    Rational lambda(0);
    bool have = false;
    std::vector<Rational> weight(supp.size());  // 1/w_j - 1/w_{j+1}
    for (std::size_t j = 0; j < supp.size(); ++j) {
      const Rational inv_here = Rational(1) / mkt->value(supp[j]);
      const Rational inv_next =
          j + 1 < supp.size() ? Rational(1) / mkt->value(supp[j + 1]) : Rational(0);
      weight[j] = inv_here - inv_next;
      const Rational cand = residual[supp[j]] / weight[j];
      if (!have || cand < lambda) {
        lambda = cand;
        have = true;
      }
    }

    std::vector<Rational> step_mass(n, Rational(0));
    std::vector<std::size_t> exhausted;
    for (std::size_t j = 0; j < supp.size(); ++j) {
      step_mass[supp[j]] = lambda * weight[j];
      if (step_mass[supp[j]] == residual[supp[j]]) exhausted.push_back(supp[j]);
    }
    Coalition coalition(mkt, step_mass);
    const Rational price = mkt->value(supp.front());
    for (std::size_t j = 0; j < supp.size(); ++j) residual[supp[j]] -= step_mass[supp[j]];
    Coalition residual_after(mkt, residual);

    segments.emplace_back(coalition, price);
    trace.steps.push_back(
        {lambda, std::move(exhausted), std::move(coalition), price, std::move(residual_after)});
  }
  return {Segmentation(std::move(segments)), std::move(trace)};
}

Segmentation greedy_stable_segmentation(const Market& market) {
  auto mkt = std::make_shared<const Market>(market);
  const std::size_t n = mkt->size();
  std::vector<Rational> residual = mkt->masses();
  std::vector<Segment> segments;

  std::size_t lowest = 0;
  while (lowest < n) {
    while (lowest < n && !residual[lowest].is_positive()) ++lowest;
    if (lowest == n) break;

    // Seed with all remaining lowest-value mass, then absorb successive
    // values until a second price ties the seed price in revenue.
    std::vector<Rational> acc(n, Rational(0));
    acc[lowest] = residual[lowest];
    residual[lowest] = Rational(0);
    const Rational seed_price = mkt->value(lowest);
    Rational seed_revenue = seed_price * acc[lowest];
    std::vector<std::size_t> present{lowest};
    bool closed = false;

    for (std::size_t next = lowest + 1; next < n && !closed; ++next) {
      if (!residual[next].is_positive()) continue;
      // While absorbing mass t of value w = value(next), the seed revenue is
      // seed_revenue + seed_price * t and the revenue of a present candidate
      // q >= value threshold grows by q * t. Solve each tie exactly.
      Rational best_t(0);
      bool have_t = false;
      auto consider = [&](const Rational& q, const Rational& rev_q_now) {
        // seed_revenue + p t = rev_q_now + q t, q > p
        const Rational t = (seed_revenue - rev_q_now) / (q - seed_price);
        if (t.is_negative()) return;
        if (!have_t || t < best_t) {
          best_t = t;
          have_t = true;
        }
      };
      for (const std::size_t idx : present) {
        if (idx == lowest) continue;
        Rational rev_now(0);
        for (const std::size_t other : present)
          if (other >= idx) rev_now += acc[other];
        consider(mkt->value(idx), mkt->value(idx) * rev_now);
      }
      consider(mkt->value(next), Rational(0));

      if (have_t && !(residual[next] < best_t)) {
        acc[next] = best_t;
        residual[next] -= best_t;
        segments.emplace_back(Coalition(mkt, acc), seed_price);
        closed = true;
      } else {
        acc[next] = residual[next];
        residual[next] = Rational(0);
        seed_revenue += seed_price * acc[next];
        present.push_back(next);
      }
    }
    if (!closed) {
      // Ran out of values: the final segment takes all the rest; its optimal
      // price may be unique.
      segments.emplace_back(Coalition(mkt, acc), seed_price);
    }
  }
  return Segmentation(std::move(segments));
}

Segmentation two_value_stable(const Market& market) {
  if (market.size() != 2)
    throw WrongArityError("two-value construction needs exactly two values, got " +
                          std::to_string(market.size()));
  auto mkt = std::make_shared<const Market>(market);
  Coalition full = Coalition::full(mkt);
  const Rational& v1 = mkt->value(0);
  const Rational& v2 = mkt->value(1);
  if (is_optimal_price(full, v1)) return trivial_segmentation(mkt, v1);

  const Rational x = v1 * mkt->mass(0) / (v2 - v1);
  Coalition low(mkt, {mkt->mass(0), x});
  Coalition high(mkt, {Rational(0), mkt->mass(1) - x});
  return Segmentation({Segment(std::move(low), v1), Segment(std::move(high), v2)});
}

}  // namespace segstab
