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

// Acceptance suite: one check block per criterion, one pass/fail line each.
// Everything is exact rational arithmetic; there are no tolerances to tune.

#include <chrono>
#include <functional>
#include <iostream>
#include <string>
#include <vector>

#include "helpers.hpp"

using namespace segstab;
using namespace segstab::testing;

namespace {

int g_failures = 0;

void run_criterion(int number, const std::string& label,
                   const std::function<bool(std::string&)>& body) {
  std::string detail;
  bool ok = false;
  const auto start = std::chrono::steady_clock::now();
  try {
    ok = body(detail);
  } catch (const std::exception& e) {
    detail = std::string("exception: ") + e.what();
  }
  const auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
                           std::chrono::steady_clock::now() - start)
                           .count();
  std::cout << (ok ? "[PASS]" : "[FAIL]") << " criterion " << number << ": " << label
            << " (" << elapsed << " ms)";
  if (!ok && !detail.empty()) std::cout << " -- " << detail;
  std::cout << std::endl;
  if (!ok) ++g_failures;
}

bool require(bool cond, const std::string& what, std::string& detail) {
  if (!cond && detail.empty()) detail = what;
  return cond;
}

}  // namespace

int main() {
  run_criterion(1, "halving fixture: optimal price sets, raw vs canonical saturation",
                [](std::string& detail) {
    const MarketPtr m = halving_market();
    const Segmentation s = halving_segmentation(m);
    bool ok = true;
    ok &= require(optimal_prices(s.segment(0).coalition()) ==
                      std::vector<Rational>{R(1), R(2)},
                  "optimal_prices(C1) != {1,2}", detail);
    ok &= require(optimal_prices(s.segment(1).coalition()) ==
                      std::vector<Rational>{R(1), R(3)},
                  "optimal_prices(C2) != {1,3}", detail);
    ok &= require(is_saturated(s), "raw S not saturated", detail);
    ok &= require(!is_saturated(canonicalize(s)), "canonical S saturated", detail);
    ok &= require(!is_stable(s), "S stable", detail);
    return ok;
  });

  run_criterion(2, "MER recursion on the equal-revenue market", [](std::string& detail) {
    const MarketPtr m = equal_revenue_market();
    const auto [seg, trace] = mer_segmentation(*m);
    bool ok = require(trace.steps.size() == 3, "wrong step count", detail);
    if (!ok) return false;
    ok &= require(trace.steps[0].lambda == R(2, 3), "lambda_1 != 2/3", detail);
    ok &= require(trace.steps[0].coalition.masses() ==
                      std::vector<Rational>{R(3, 9), R(1, 9), R(2, 9)},
                  "step-1 masses wrong", detail);
    ok &= require(trace.steps[1].coalition.masses() ==
                      std::vector<Rational>{R(0), R(1, 18), R(2, 18)},
                  "step-2 masses wrong", detail);
    ok &= require(is_stable(seg), "MER not stable", detail);
    return ok;
  });

  run_criterion(3, "uniform market: surplus of the stable fixture vs its MER", [](std::string& detail) {
    const MarketPtr m = uniform3_market();
    const Segmentation s = uniform3_stable_segmentation(m);
    const auto [mer, trace] = mer_segmentation(*m);
    const Segmentation canon = canonicalize(mer);
    bool ok = true;
    ok &= require(average_consumer_surplus(s) == R(1, 3), "ACS(S) != 1/3", detail);
    ok &= require(average_consumer_surplus(canon) == R(2, 3), "ACS(MER) != 2/3", detail);
    ok &= require(canon.size() == 2 &&
                      canon.segment(1).coalition().masses() ==
                          std::vector<Rational>{R(0), R(2, 9), R(1, 9)},
                  "canonical MER price-2 coalition wrong", detail);
    return ok;
  });

  run_criterion(4, "surplus-maximal segmentation: efficient, unsaturated, unstable",
                [](std::string& detail) {
    const MarketPtr m = equal_revenue_market();
    const Segmentation s = max_cs_not_stable_segmentation(m);
    bool ok = true;
    ok &= require(is_efficient(s), "not efficient", detail);
    ok &= require(!is_saturated(s), "saturated", detail);
    ok &= require(!is_stable(s), "stable", detail);
    return ok;
  });

  run_criterion(5, "weak-blocking fixture: blocking vs weak blocking through interval plans",
                [](std::string& detail) {
    const MarketPtr m = weakblock_market();
    const Segmentation s = weakblock_s(m);
    const Segmentation sp = weakblock_s_prime(m);
    const Segmentation s2 = weakblock_s_split(m);
    const DeviationScenario s_to_sp{weakblock_plan_s_to_s_prime(s, sp)};
    const DeviationScenario s2_to_sp{weakblock_plan_split_to_s_prime(s2, sp)};
    bool ok = true;
    ok &= require(!blocks(s_to_sp), "S blocks S'", detail);
    ok &= require(weakly_blocks(s_to_sp), "S does not weakly block S'", detail);
    ok &= require(blocks(s2_to_sp), "S'' does not block S'", detail);
    return ok;
  });

  run_criterion(6, "core characterization over 100+ random markets (n <= 5)",
                [](std::string& detail) {
    Rng rng(60606);
    int seen = 0, nonempty = 0;
    while (seen < 120) {
      const MarketPtr m = rng.market(5, 24);
      ++seen;
      const CoreDescription cd = core_description(*m);
      const bool v1_optimal = is_optimal_price(Coalition::full(m), m->value(0));
      if (!require(cd.empty() == !v1_optimal, "emptiness mismatch", detail)) return false;
      if (cd.empty()) continue;
      ++nonempty;
      const Segmentation trivial = trivial_segmentation(m, *cd.trivial_price);
      if (!require(is_stable(trivial), "trivial-at-v1 not stable", detail)) return false;
      if (!require(core_equals_stable_check(*m), "constructions disagree", detail))
        return false;
      if (!require(in_core(trivial), "trivial not in core", detail)) return false;
    }
    return require(seen >= 100 && nonempty >= 10, "not enough samples", detail);
  });

  run_criterion(7, "oracle directional agreement on 50+ atomized markets",
                [](std::string& detail) {
    Rng rng(70707);
    int markets = 0, stable_checked = 0, witnesses_checked = 0;
    while (markets < 50) {
      const AtomizedMarket am = rng.atomized(6);
      ++markets;
      const auto all = enumerate_segmentations(am);
      for (const AtomSegmentation& s : all) {
        const Segmentation lifted = lift(am, s);
        if (is_stable(lifted)) {
          ++stable_checked;
          for (const AtomSegmentation& other : all) {
            if (atom_surplus_equivalent(am, s, other)) continue;
            if (!require(atom_blocks(am, s, other),
                         "stable grid segmentation fails to block", detail))
              return false;
          }
        } else {
          ++witnesses_checked;
          std::optional<Witness> w = inefficiency_witness(lifted);
          if (!w) w = nonsaturation_witness(lifted);
          const RefinedInstance refined = lower_witness(am, s, *w);
          if (!require(!atom_blocks(refined.grid, refined.original, refined.witness),
                       "witness blocked on refined grid", detail))
            return false;
        }
      }
    }
    return require(stable_checked > 0 && witnesses_checked > 0, "degenerate sample",
                   detail);
  });

  run_criterion(8, "two-value triple equivalence on 50+ atomized markets",
                [](std::string& detail) {
    Rng rng(80808);
    int markets = 0, representable = 0;
    while (markets < 50) {
      AtomizedMarket am = rng.atomized(6, 2);
      if (markets % 3 == 0) {
        // Deliberately representable instance: values 1 and w, value-1 count
        // a multiple of (w - 1), so the tie point sits on the grid.
        const long w = rng.pick(2, 3);
        std::vector<Rational> atoms;
        const long low_count = (w - 1) * rng.pick(1, 2);
        for (long k = 0; k < low_count && atoms.size() < 4; ++k) atoms.push_back(R(1));
        while (atoms.size() < 5) atoms.push_back(R(w));
        am = AtomizedMarket::from_atoms(atoms, R(1, 4));
      }
      if (am.market()->size() != 2) continue;
      ++markets;
      const auto all = enumerate_segmentations(am);
      Rational best(0);
      for (const AtomSegmentation& s : all)
        best = Rational::max(best, atom_total_surplus(am, s));
      std::vector<const AtomSegmentation*> members;
      for (const AtomSegmentation& s : all) {
        const bool stable_here = atom_stable(am, s, all);
        const bool maximal = atom_total_surplus(am, s) == best;
        bool undominated = true;
        for (const AtomSegmentation& other : all)
          if (atom_pareto_dominates(am, other, s)) {
            undominated = false;
            break;
          }
        if (!require(stable_here == maximal, "stable != ACS-maximal", detail))
          return false;
        if (!require(stable_here == undominated, "stable != Pareto-undominated", detail))
          return false;
        if (stable_here) members.push_back(&s);
      }
      if (members.empty()) return require(false, "no stable member", detail);
      const Market& mk = *am.market();
      const bool tie_on_grid =
          is_optimal_price(Coalition::full(am.market()), mk.value(0)) ||
          (mk.value(0) * mk.mass(0) / (mk.value(1) - mk.value(0)) / am.atom_mass())
                  .denominator() == 1;
      if (tie_on_grid) {
        ++representable;
        for (std::size_t x = 1; x < members.size(); ++x)
          if (!require(weak_surplus_equivalent(lift(am, *members[0]),
                                               lift(am, *members[x])),
                       "members not weak-surplus-equivalent", detail))
            return false;
      }
    }
    return require(representable >= 10, "too few tie-representable grids", detail);
  });

  run_criterion(9, "farsighted chains round-trip on 100 blocked/blocker pairs",
                [](std::string& detail) {
    Rng rng(90909);
    int pairs = 0;
    while (pairs < 100) {
      const AtomizedMarket am = rng.atomized(6);
      const Segmentation blocked = lift(am, rng.atom_segmentation(am));
      const Segmentation blocker = lift(am, rng.atom_segmentation(am));
      const bool acs_positive = average_consumer_surplus(blocker).is_positive();
      if (!require(harsanyi_blocks(blocker, blocked) == acs_positive,
                   "harsanyi_blocks disagrees with ACS > 0", detail))
        return false;
      if (!acs_positive) continue;
      ++pairs;
      const BlockingChain chain = build_rv_chain(blocked, blocker, ChainVariant::Weak);
      if (!require(chain.terminal() == blocker, "chain misses the blocker", detail))
        return false;
      if (!require(check_chain(chain, ChainVariant::Weak), "chain rejected", detail))
        return false;
    }
    return true;
  });

  run_criterion(10, "property fuzz over 1000+ random markets", [](std::string& detail) {
    Rng rng(101010);
    for (int round = 0; round < 1000; ++round) {
      const MarketPtr m = rng.market(6, 60);
      const std::size_t n = m->size();

      std::vector<Rational> ma(n), mb(n);
      for (std::size_t i = 0; i < n; ++i) {
        ma[i] = Rational(rng.pick(0, 5), rng.pick(1, 60));
        mb[i] = Rational(rng.pick(0, 5), rng.pick(1, 60));
      }
      const Coalition a(m, ma), b(m, mb);
      const Coalition sum = a.plus(b);
      for (std::size_t i = 0; i < n; ++i) {
        const Rational& p = m->value(i);
        if (!require(revenue(sum, p) == revenue(a, p) + revenue(b, p),
                     "revenue additivity", detail))
          return false;
      }
      if (!a.is_empty() && !b.is_empty()) {
        for (const Rational& p : optimal_prices(a))
          if (is_optimal_price(b, p) &&
              !require(is_optimal_price(sum, p), "optimal-price union", detail))
            return false;
        const Rational alpha(rng.pick(1, 9), rng.pick(1, 9));
        if (!require(optimal_prices(a.scaled(alpha)) == optimal_prices(a),
                     "scale invariance", detail))
          return false;
      }

      const auto [mer, trace] = mer_segmentation(*m);
      for (const MerStep& step : trace.steps) {
        Rational cumulative(0);
        for (std::size_t i = n; i-- > 0;) {
          cumulative += step.coalition.mass(i);
          if (step.coalition.mass(i).is_positive() &&
              !require(m->value(i) * cumulative == step.lambda,
                       "MER equal-revenue identity", detail))
            return false;
        }
      }
      if (!require(is_stable(mer), "MER unstable", detail)) return false;

      const Segmentation greedy = greedy_stable_segmentation(*m);
      if (!require(is_stable(greedy), "greedy output unstable", detail)) return false;
      if (!require(canonicalize(greedy) == greedy, "greedy output not canonical", detail))
        return false;

      const Segmentation canon = canonicalize(mer);
      if (!require(canonicalize(canon) == canon, "canonicalize not idempotent", detail))
        return false;
    }
    return true;
  });

  std::cout << (g_failures == 0 ? "acceptance: all criteria passed"
                                : "acceptance: " + std::to_string(g_failures) +
                                      " criteria failed")
            << std::endl;
  return g_failures == 0 ? 0 : 1;
}
