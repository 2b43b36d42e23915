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

#ifndef SEGSTAB_TESTS_HELPERS_HPP
#define SEGSTAB_TESTS_HELPERS_HPP

#include <memory>
#include <random>
#include <vector>

#include "segstab/constructions.hpp"
#include "segstab/cooperative.hpp"
#include "segstab/oracle.hpp"
#include "segstab/stability.hpp"

namespace segstab::testing {

inline Rational R(long num, long den = 1) { return Rational(num, den); }

inline MarketPtr make_market(std::vector<Rational> values, std::vector<Rational> masses) {
  return std::make_shared<const Market>(std::move(values), std::move(masses));
}

// Four values 1..4 with masses 1/2, 1/4, 1/8, 1/8.
inline MarketPtr halving_market() {
  return make_market({R(1), R(2), R(3), R(4)}, {R(1, 2), R(1, 4), R(1, 8), R(1, 8)});
}

// S = {(C1,1),(C2,1),(C3,4)}: C1 = {1:1/4, 2:1/4}, C2 = {1:1/4, 3:1/8},
// C3 = {4:1/8}. Efficient and saturated as given, unstable once canonical.
inline Segmentation halving_segmentation(const MarketPtr& m) {
  return Segmentation({
      Segment(Coalition(m, {R(1, 4), R(1, 4), R(0), R(0)}), R(1)),
      Segment(Coalition(m, {R(1, 4), R(0), R(1, 8), R(0)}), R(1)),
      Segment(Coalition(m, {R(0), R(0), R(0), R(1, 8)}), R(4)),
  });
}

// Three values 1,2,3 with masses 1/3, 1/6, 1/2.
inline MarketPtr equal_revenue_market() {
  return make_market({R(1), R(2), R(3)}, {R(1, 3), R(1, 6), R(1, 2)});
}

// The surplus-maximal but unstable split of the equal-revenue market:
// C1 = {1:1/3, 3:1/6} at 1, C2 = {2:1/6, 3:1/3} at 2.
inline Segmentation max_cs_not_stable_segmentation(const MarketPtr& m) {
  return Segmentation({
      Segment(Coalition(m, {R(1, 3), R(0), R(1, 6)}), R(1)),
      Segment(Coalition(m, {R(0), R(1, 6), R(1, 3)}), R(2)),
  });
}

// Three values 1,2,3 with mass 1/3 each.
inline MarketPtr uniform3_market() {
  return make_market({R(1), R(2), R(3)}, {R(1, 3), R(1, 3), R(1, 3)});
}

// The stable segmentation {({1,2},1), ({3},3)}.
inline Segmentation uniform3_stable_segmentation(const MarketPtr& m) {
  return Segmentation({
      Segment(Coalition(m, {R(1, 3), R(1, 3), R(0)}), R(1)),
      Segment(Coalition(m, {R(0), R(0), R(1, 3)}), R(3)),
  });
}

// Three values 1,2,3 with masses 6/21, 4/21, 11/21.
inline MarketPtr weakblock_market() {
  return make_market({R(1), R(2), R(3)}, {R(6, 21), R(4, 21), R(11, 21)});
}

// S = {(C1,1),(C2,2)}: C1 = {1:6/21, 3:3/21}, C2 = {2:4/21, 3:8/21}.
inline Segmentation weakblock_s(const MarketPtr& m) {
  return Segmentation({
      Segment(Coalition(m, {R(6, 21), R(0), R(3, 21)}), R(1)),
      Segment(Coalition(m, {R(0), R(4, 21), R(8, 21)}), R(2)),
  });
}

// S' = {(C1',1),(C2',3)}: C1' = {1:6/21, 2:1/21, 3:3/21}, C2' = {2:3/21, 3:8/21}.
inline Segmentation weakblock_s_prime(const MarketPtr& m) {
  return Segmentation({
      Segment(Coalition(m, {R(6, 21), R(1, 21), R(3, 21)}), R(1)),
      Segment(Coalition(m, {R(0), R(3, 21), R(8, 21)}), R(3)),
  });
}

// S'' = {(C1'',1),(C2'',2),(C2''',2)}: C1'' = C1, C2'' = {2:1/21, 3:2/21},
// C2''' = {2:3/21, 3:6/21}. Surplus-equivalent to S.
inline Segmentation weakblock_s_split(const MarketPtr& m) {
  return Segmentation({
      Segment(Coalition(m, {R(6, 21), R(0), R(3, 21)}), R(1)),
      Segment(Coalition(m, {R(0), R(1, 21), R(2, 21)}), R(2)),
      Segment(Coalition(m, {R(0), R(3, 21), R(6, 21)}), R(2)),
  });
}

// Interval-induced plan from S to S' on the weak-blocking market: C1 sits
// inside C1'; C2's
// value-2 consumers split 1/21 into C1' and 3/21 into C2'; its value-3
// consumers all land in C2'.
inline TransportPlan weakblock_plan_s_to_s_prime(const Segmentation& s,
                                                const Segmentation& s_prime) {
  TransportPlan::Flow flow(2, std::vector<std::vector<Rational>>(
                                  2, std::vector<Rational>(3, R(0))));
  flow[0][0][0] = R(6, 21);
  flow[0][0][2] = R(3, 21);
  flow[1][0][1] = R(1, 21);
  flow[1][1][1] = R(3, 21);
  flow[1][1][2] = R(8, 21);
  return TransportPlan(s, s_prime, std::move(flow));
}

// Interval-induced plan from S'' to S': C1'' maps into C1'; C2''s value-2
// consumers go to C1', its value-3 consumers to C2'; C2''' maps into C2'.
inline TransportPlan weakblock_plan_split_to_s_prime(const Segmentation& s2,
                                                 const Segmentation& s_prime) {
  TransportPlan::Flow flow(3, std::vector<std::vector<Rational>>(
                                  2, std::vector<Rational>(3, R(0))));
  flow[0][0][0] = R(6, 21);
  flow[0][0][2] = R(3, 21);
  flow[1][0][1] = R(1, 21);
  flow[1][1][2] = R(2, 21);
  flow[2][1][1] = R(3, 21);
  flow[2][1][2] = R(6, 21);
  return TransportPlan(s2, s_prime, std::move(flow));
}

// --- deterministic random generators for property suites ---

struct Rng {
  std::mt19937 gen;
  explicit Rng(unsigned seed) : gen(seed) {}

  long pick(long lo, long hi) {
    std::uniform_int_distribution<long> d(lo, hi);
    return d(gen);
  }

  Rational rational(long max_num, long max_den) {
    return Rational(pick(1, max_num), pick(1, max_den));
  }

  // Random market: n values with denominators <= max_den, strictly increasing.
  MarketPtr market(std::size_t max_values = 6, long max_den = 60) {
    const std::size_t n = static_cast<std::size_t>(pick(1, static_cast<long>(max_values)));
    std::vector<Rational> values;
    Rational v(0);
    for (std::size_t i = 0; i < n; ++i) {
      v += rational(6, max_den);
      values.push_back(v);
    }
    std::vector<Rational> masses;
    for (std::size_t i = 0; i < n; ++i) masses.push_back(rational(6, max_den));
    return make_market(std::move(values), std::move(masses));
  }

  // Random atomized market with at most max_atoms atoms over small values.
  AtomizedMarket atomized(std::size_t max_atoms = 6, std::size_t exact_values = 0) {
    const std::size_t atoms = static_cast<std::size_t>(pick(1, static_cast<long>(max_atoms)));
    std::vector<Rational> pool;
    const std::size_t n_values =
        exact_values > 0 ? exact_values
                         : static_cast<std::size_t>(pick(1, 4));
    std::vector<Rational> values;
    Rational v(0);
    for (std::size_t i = 0; i < n_values; ++i) {
      v += rational(4, 8);
      values.push_back(v);
    }
    for (std::size_t t = 0; t < atoms; ++t)
      pool.push_back(values[static_cast<std::size_t>(
          pick(0, static_cast<long>(n_values) - 1))]);
    // Every chosen value needs at least one atom only if it appears; the
    // derived market keeps just the values that do.
    return AtomizedMarket::from_atoms(std::move(pool), rational(3, 8));
  }

  // Random valid atom segmentation: random partition, random optimal price.
  AtomSegmentation atom_segmentation(const AtomizedMarket& am) {
    const std::size_t n = am.atom_count();
    std::vector<std::size_t> rgs(n, 0);
    std::size_t blocks = 1;
    for (std::size_t t = 1; t < n; ++t) {
      rgs[t] = static_cast<std::size_t>(pick(0, static_cast<long>(blocks)));
      if (rgs[t] == blocks) ++blocks;
    }
    std::vector<std::vector<std::size_t>> members(blocks);
    for (std::size_t t = 0; t < n; ++t) members[rgs[t]].push_back(t);
    std::vector<Rational> prices;
    for (const auto& block : members) {
      const auto opts = optimal_prices(atoms_coalition(am, block));
      prices.push_back(opts[static_cast<std::size_t>(
          pick(0, static_cast<long>(opts.size()) - 1))]);
    }
    return AtomSegmentation(am, std::move(rgs), std::move(prices));
  }
};

}  // namespace segstab::testing

#endif  // SEGSTAB_TESTS_HELPERS_HPP
