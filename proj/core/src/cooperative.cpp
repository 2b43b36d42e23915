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

#include "segstab/cooperative.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <utility>

#include "segstab/constructions.hpp"
#include "segstab/stability.hpp"

namespace segstab {

CoreDescription core_description(const Market& market) {
  auto mkt = std::make_shared<const Market>(market);
  Coalition full = Coalition::full(mkt);
  const Rational& v1 = mkt->value(0);
  if (is_optimal_price(full, v1)) return CoreDescription{v1};
  return CoreDescription{std::nullopt};
}

bool in_core(const Segmentation& s) {
  const CoreDescription cd = core_description(*s.market());
  if (cd.empty()) return false;
  return weak_surplus_equivalent(s, trivial_segmentation(s.market(), *cd.trivial_price));
}

bool core_equals_stable_check(const Market& market) {
  const CoreDescription cd = core_description(market);
  if (cd.empty()) throw EmptyCoreError();
  auto mkt = std::make_shared<const Market>(market);
  const Segmentation trivial = trivial_segmentation(mkt, *cd.trivial_price);
  if (!is_stable(trivial)) return false;
  const auto [mer, trace] = mer_segmentation(market);
  if (!weak_surplus_equivalent(mer, trivial)) return false;
  return weak_surplus_equivalent(greedy_stable_segmentation(market), trivial);
}

StableSetReport stable_set_check(const Segmentation& s,
                                 const std::vector<StableSetCandidate>& candidates) {
  StableSetReport report;
  report.all_non_equivalent_weakly_blocked = true;
  for (const StableSetCandidate& cand : candidates) {
    StableSetReport::Entry entry{};
    entry.equivalent = weak_surplus_equivalent(s, cand.segmentation);
    entry.weakly_blocked = false;
    if (!entry.equivalent) {
      entry.weakly_blocked = weakly_blocks(DeviationScenario{cand.plan_from_s});
      if (!entry.weakly_blocked) report.all_non_equivalent_weakly_blocked = false;
    }
    report.entries.push_back(entry);
  }
  return report;
}

bool harsanyi_blocks(const Segmentation& s, const Segmentation& other) {
  if (!same_market(s.market(), other.market()))
    throw ValidationError("blocking check across different markets");
  return average_consumer_surplus(s).is_positive();
}

bool strong_blocks_some_equivalent(const Segmentation& s, const Segmentation& other) {
  if (!same_market(s.market(), other.market()))
    throw ValidationError("blocking check across different markets");
  const SurplusProfile ps = surplus_profile(s);
  const SurplusProfile po = surplus_profile(other);
  for (std::size_t i = 0; i < s.market()->size(); ++i) {
    const auto ds = ps.surplus_distribution(i);
    const auto dt = po.surplus_distribution(i);
    std::vector<Rational> levels;
    for (const auto& [level, mass] : ds) levels.push_back(level);
    for (const auto& [level, mass] : dt) levels.push_back(level);
    auto tail = [](const std::map<Rational, Rational>& d, const Rational& at) {
      Rational t(0);
      for (auto it = d.lower_bound(at); it != d.end(); ++it) t += it->second;
      return t;
    };
    for (const Rational& level : levels)
      if (tail(dt, level) < tail(ds, level)) return true;
  }
  return false;
}

namespace {

// A labeled piece of the evolving segmentation while a chain is built.
// tag >= 0: the blocker segment with that index, placed or reserved verbatim.
// tag == kFragment: a single-value fragment at zero surplus.
// tag == kSeed: the strong variant's step-1 seed coalition.
constexpr int kFragment = -1;
constexpr int kSeed = -2;

struct Part {
  int tag;
  Segment segment;
};

std::vector<Segment> to_segments(const std::vector<Part>& parts) {
  std::vector<Segment> out;
  out.reserve(parts.size());
  for (const Part& p : parts) out.push_back(p.segment);
  return out;
}

TransportPlan::Flow zero_flow(std::size_t rows, std::size_t cols, std::size_t n) {
  return TransportPlan::Flow(
      rows, std::vector<std::vector<Rational>>(cols, std::vector<Rational>(n, Rational(0))));
}

struct ChainWork {
  MarketPtr mkt;
  Segmentation blocker;
  std::vector<Part> parts;  // current segmentation, in list order
  std::vector<ChainStep> steps;
  Segmentation current;

  ChainWork(const Segmentation& blocked, Segmentation blocker_in)
      : mkt(blocked.market()), blocker(std::move(blocker_in)), current(blocked) {
    for (const Segment& seg : blocked.segments()) parts.push_back({kFragment, seg});
    // Raw blocked segments are not fragments yet; the tag only matters once
    // they are pure, which atomization establishes before anything reads it.
  }

  void commit(std::vector<Part> next, std::size_t moving, TransportPlan::Flow flow) {
    Segmentation next_seg{to_segments(next)};
    TransportPlan plan(current, next_seg, std::move(flow));
    steps.push_back({next_seg, moving, std::move(plan)});
    parts = std::move(next);
    current = std::move(next_seg);
  }

  // Split every multi-value segment into its pure pieces, one step each.
  // The moving coalition is the piece at the old segment's price.
  void atomize() {
    for (;;) {
      std::size_t idx = parts.size();
      for (std::size_t a = 0; a < parts.size(); ++a)
        if (parts[a].segment.coalition().support().size() > 1) {
          idx = a;
          break;
        }
      if (idx == parts.size()) return;

      const Segment victim = parts[idx].segment;
      const std::vector<std::size_t> supp = victim.coalition().support();
      std::vector<Part> next;
      std::vector<std::size_t> old_to_new(parts.size());
      std::size_t moving = 0;
      for (std::size_t a = 0; a < parts.size(); ++a) {
        if (a != idx) {
          old_to_new[a] = next.size();
          next.push_back(parts[a]);
          continue;
        }
        old_to_new[a] = next.size();
        for (const std::size_t i : supp) {
          if (mkt->value(i) == victim.price()) moving = next.size();
          next.push_back({kFragment,
                          Segment(Coalition::single(mkt, i, victim.coalition().mass(i)),
                                  mkt->value(i))});
        }
      }
      TransportPlan::Flow flow = zero_flow(parts.size(), next.size(), mkt->size());
      for (std::size_t a = 0; a < parts.size(); ++a) {
        if (a != idx) {
          for (std::size_t i = 0; i < mkt->size(); ++i)
            flow[a][old_to_new[a]][i] = parts[a].segment.coalition().mass(i);
        } else {
          for (std::size_t t = 0; t < supp.size(); ++t)
            flow[a][old_to_new[a] + t][supp[t]] = victim.coalition().mass(supp[t]);
        }
      }
      commit(std::move(next), moving, std::move(flow));
    }
  }

  // Tag pure fragments that already equal blocker segments so placements
  // never touch them; first-fit over a multiset.
  void reserve_matching_fragments() {
    std::vector<bool> taken(blocker.size(), false);
    for (Part& p : parts) {
      if (p.tag != kFragment) continue;
      for (std::size_t bi = 0; bi < blocker.size(); ++bi) {
        if (taken[bi]) continue;
        if (blocker.segment(bi) == p.segment) {
          p.tag = static_cast<int>(bi);
          taken[bi] = true;
          break;
        }
      }
    }
  }

  bool blocker_index_done(std::size_t bi) const {
    for (const Part& p : parts)
      if (p.tag == static_cast<int>(bi)) return true;
    return false;
  }

  // Pull the blocker segment `bi` out of the fragment pool (and, when
  // present, the seed part) and re-assemble the list as
  // [blocker segments done so far, by index] ++ [surviving fragments].
  void place(std::size_t bi, bool drain_seed_fully_at,
             std::size_t seed_priority_value /* only if drain_seed */) {
    const Segment& target = blocker.segment(bi);
    const Coalition& need = target.coalition();
    const std::size_t n = mkt->size();

    // Pool of unreserved fragment mass per value.
    std::vector<Rational> pool(n, Rational(0));
    for (const Part& p : parts)
      if (p.tag == kFragment)
        for (std::size_t i = 0; i < n; ++i) pool[i] += p.segment.coalition().mass(i);

    // Seed contribution per value, if a seed part exists. A seed may only be
    // present in the step that drains it; dissolving it untouched would break
    // the persistence clause.
    std::vector<Rational> from_seed(n, Rational(0));
    std::size_t seed_at = parts.size();
    for (std::size_t a = 0; a < parts.size(); ++a)
      if (parts[a].tag == kSeed) seed_at = a;
    if (seed_at != parts.size() && !drain_seed_fully_at)
      throw Error("internal: placement step left a seed coalition behind");
    if (seed_at != parts.size() && drain_seed_fully_at) {
      const Coalition& seed = parts[seed_at].segment.coalition();
      for (std::size_t i = 0; i < n; ++i) {
        if (!seed.mass(i).is_positive() || !need.mass(i).is_positive()) continue;
        if (i == seed_priority_value)
          from_seed[i] = seed.mass(i);  // earmarked: no leakage allowed
        else
          from_seed[i] = Rational::min(seed.mass(i), need.mass(i));
      }
    }

    // Assemble the next list: done blocker segments by index, then fragments.
    std::vector<Part> next;
    std::vector<std::size_t> placed_pos_of(blocker.size(), parts.size());
    for (std::size_t b = 0; b < blocker.size(); ++b) {
      if (b == bi || blocker_index_done(b)) {
        placed_pos_of[b] = next.size();
        next.push_back({static_cast<int>(b), blocker.segment(b)});
      }
    }
    const std::size_t moving = placed_pos_of[bi];

    // Surviving fragments: shrink proportionally; the seed's leftovers turn
    // into fresh fragments per value.
    std::vector<std::size_t> frag_new_pos(parts.size(), next.size());
    std::vector<Rational> frag_contrib(parts.size(), Rational(0));
    for (std::size_t a = 0; a < parts.size(); ++a) {
      const Part& p = parts[a];
      if (p.tag != kFragment) continue;
      const std::size_t v = p.segment.coalition().support().front();
      Rational remaining = need.mass(v) - from_seed[v];
      if (remaining.is_negative()) remaining = Rational(0);
      Rational contrib(0);
      if (remaining.is_positive())
        contrib = remaining * p.segment.coalition().mass(v) / pool[v];
      frag_contrib[a] = contrib;
      const Rational left = p.segment.coalition().mass(v) - contrib;
      if (left.is_positive()) {
        frag_new_pos[a] = next.size();
        next.push_back({kFragment, Segment(Coalition::single(mkt, v, left), mkt->value(v))});
      }
    }
    // The seed's undrained mass becomes fresh fragments, one per value.
    struct SeedLeftover {
      std::size_t value_index;
      Rational mass;
      std::size_t position;
    };
    std::vector<SeedLeftover> seed_leftovers;
    if (seed_at != parts.size()) {
      const Coalition& seed = parts[seed_at].segment.coalition();
      for (std::size_t i = 0; i < n; ++i) {
        const Rational left = seed.mass(i) - from_seed[i];
        if (left.is_positive()) {
          seed_leftovers.push_back({i, left, next.size()});
          next.push_back({kFragment, Segment(Coalition::single(mkt, i, left), mkt->value(i))});
        }
      }
    }

    TransportPlan::Flow flow = zero_flow(parts.size(), next.size(), n);
    for (std::size_t a = 0; a < parts.size(); ++a) {
      const Part& p = parts[a];
      if (p.tag >= 0) {
        const std::size_t pos = placed_pos_of[static_cast<std::size_t>(p.tag)];
        for (std::size_t i = 0; i < n; ++i) flow[a][pos][i] = p.segment.coalition().mass(i);
      } else if (p.tag == kFragment) {
        const std::size_t v = p.segment.coalition().support().front();
        if (frag_contrib[a].is_positive()) flow[a][moving][v] = frag_contrib[a];
        const Rational left = p.segment.coalition().mass(v) - frag_contrib[a];
        if (left.is_positive()) flow[a][frag_new_pos[a]][v] = left;
      } else {  // seed
        for (std::size_t i = 0; i < n; ++i)
          if (from_seed[i].is_positive()) flow[a][moving][i] = from_seed[i];
        for (const SeedLeftover& sl : seed_leftovers)
          flow[a][sl.position][sl.value_index] = sl.mass;
      }
    }

    commit(std::move(next), moving, std::move(flow));
  }
};

bool segment_has_positive_surplus(const Segment& seg, const Market& mkt) {
  for (std::size_t i = 0; i < mkt.size(); ++i)
    if (seg.coalition().mass(i).is_positive() && seg.price() < mkt.value(i)) return true;
  return false;
}

BlockingChain build_weak_chain(const Segmentation& blocked, const Segmentation& blocker) {
  if (!average_consumer_surplus(blocker).is_positive())
    throw NotBlockingError("weak farsighted blocking needs ACS(blocker) > 0");
  ChainWork work(blocked, blocker);
  work.atomize();
  work.reserve_matching_fragments();
  for (std::size_t bi = 0; bi < blocker.size(); ++bi) {
    if (work.blocker_index_done(bi)) continue;
    work.place(bi, false, 0);
  }
  return BlockingChain{blocked, std::move(work.steps)};
}

BlockingChain build_strong_chain(const Segmentation& blocked, const Segmentation& blocker) {
  if (!strong_blocks_some_equivalent(blocker, blocked))
    throw NotBlockingError(
        "strong farsighted blocking needs a positive mass strictly preferring the blocker");
  const MarketPtr& mkt = blocked.market();
  const std::size_t n = mkt->size();
  const TransportPlan coupling = TransportPlan::proportional(blocked, blocker);

  // Anchor: the lowest-price (then lowest-index) blocker segment holding a
  // strictly preferring transport cell; within it the lowest value, then the
  // lowest source index.
  std::vector<std::size_t> by_price(blocker.size());
  for (std::size_t b = 0; b < blocker.size(); ++b) by_price[b] = b;
  std::sort(by_price.begin(), by_price.end(), [&](std::size_t x, std::size_t y) {
    if (blocker.segment(x).price() != blocker.segment(y).price())
      return blocker.segment(x).price() < blocker.segment(y).price();
    return x < y;
  });
  std::size_t anchor = blocker.size(), src = blocked.size(), value_at = n;
  for (const std::size_t b : by_price) {
    for (std::size_t i = 0; i < n && anchor == blocker.size(); ++i) {
      for (std::size_t a = 0; a < blocked.size(); ++a) {
        if (!coupling.flow(a, b, i).is_positive()) continue;
        const Rational there = consumer_surplus(mkt->value(i), blocker.segment(b).price());
        const Rational here = consumer_surplus(mkt->value(i), blocked.segment(a).price());
        if (here < there) {
          anchor = b;
          src = a;
          value_at = i;
          break;
        }
      }
    }
    if (anchor != blocker.size()) break;
  }
  if (anchor == blocker.size())
    throw NotBlockingError("no strictly preferring transport cell found");

  const Rational half_cell = coupling.flow(src, anchor, value_at) / Rational(2);

  // Blocked segments that equal a zero-surplus blocker segment stay put for
  // the whole chain; everything else dissolves at step 1. The strict-cell
  // donor is never reserved.
  std::vector<int> reserved(blocked.size(), kFragment);
  {
    std::vector<bool> taken(blocker.size(), false);
    for (std::size_t a = 0; a < blocked.size(); ++a) {
      if (a == src) continue;
      for (std::size_t b = 0; b < blocker.size(); ++b) {
        if (taken[b] || b == anchor) continue;
        if (segment_has_positive_surplus(blocker.segment(b), *mkt)) continue;
        if (blocker.segment(b) == blocked.segment(a)) {
          reserved[a] = static_cast<int>(b);
          taken[b] = true;
          break;
        }
      }
    }
  }

  // Seed sliver size: small enough that (i) the strict value prices the seed
  // optimally, (ii) slivers never crowd the anchor's demand at the strict
  // value, (iii) donors can spare the mass.
  std::vector<std::size_t> low_of(blocked.size(), 0);
  Rational eta = half_cell / Rational(static_cast<long>(blocked.size()));
  for (std::size_t a = 0; a < blocked.size(); ++a) {
    if (reserved[a] != kFragment) continue;
    low_of[a] = blocked.segment(a).coalition().support().front();
    eta = Rational::min(eta, blocked.segment(a).coalition().mass(low_of[a]) / Rational(2));
  }
  auto seed_masses = [&](const Rational& sliver) {
    std::vector<Rational> m(n, Rational(0));
    m[value_at] += half_cell;
    for (std::size_t a = 0; a < blocked.size(); ++a)
      if (reserved[a] == kFragment) m[low_of[a]] += sliver;
    return m;
  };
  bool ok = false;
  for (int k = 0; k < 512 && !ok; ++k) {
    Coalition seed(mkt, seed_masses(eta));
    if (is_optimal_price(seed, mkt->value(value_at))) {
      ok = true;
      break;
    }
    eta /= Rational(2);
  }
  if (!ok) throw Error("no sliver size makes the strict value optimal for the seed");

  ChainWork work(blocked, blocker);

  // Step 1: dissolve the unreserved segments into the seed plus pure
  // fragments. Every dissolved segment donates its sliver (and the anchor
  // cell's half), so every changed segment meets the moving coalition;
  // reserved segments persist verbatim.
  {
    Coalition seed(mkt, seed_masses(eta));
    std::vector<Part> next;
    next.push_back({kSeed, Segment(seed, mkt->value(value_at))});
    std::vector<std::vector<Rational>> donated(
        blocked.size(), std::vector<Rational>(n, Rational(0)));
    for (std::size_t a = 0; a < blocked.size(); ++a) {
      if (reserved[a] != kFragment) continue;
      donated[a][low_of[a]] += eta;
      if (a == src) donated[a][value_at] += half_cell;
    }
    std::vector<std::size_t> kept_pos(blocked.size(), 0);
    std::vector<std::vector<std::size_t>> frag_pos(
        blocked.size(), std::vector<std::size_t>(n, 0));
    for (std::size_t a = 0; a < blocked.size(); ++a) {
      if (reserved[a] != kFragment) {
        kept_pos[a] = next.size();
        next.push_back({reserved[a], blocked.segment(a)});
        continue;
      }
      for (std::size_t i = 0; i < n; ++i) {
        const Rational left = blocked.segment(a).coalition().mass(i) - donated[a][i];
        if (left.is_negative())
          throw Error("seed drained more than a segment holds");
        if (left.is_positive()) {
          frag_pos[a][i] = next.size();
          next.push_back({kFragment, Segment(Coalition::single(mkt, i, left), mkt->value(i))});
        }
      }
    }
    TransportPlan::Flow flow = zero_flow(blocked.size(), next.size(), n);
    for (std::size_t a = 0; a < blocked.size(); ++a) {
      if (reserved[a] != kFragment) {
        for (std::size_t i = 0; i < n; ++i)
          flow[a][kept_pos[a]][i] = blocked.segment(a).coalition().mass(i);
        continue;
      }
      for (std::size_t i = 0; i < n; ++i) {
        if (donated[a][i].is_positive()) flow[a][0][i] = donated[a][i];
        const Rational left = blocked.segment(a).coalition().mass(i) - donated[a][i];
        if (left.is_positive()) flow[a][frag_pos[a][i]][i] = left;
      }
    }
    work.commit(std::move(next), 0, std::move(flow));
  }

  // Step 2: place the anchor segment, draining the seed (its strict-value
  // holdings in full, everything else as far as the anchor needs it).
  work.place(anchor, true, value_at);

  // Remaining steps: place every other blocker segment that has positive
  // surplus; zero-surplus segments stay behind as fragments, leaving a
  // weak-surplus-equivalent terminal.
  std::vector<std::size_t> order;
  for (std::size_t b = 0; b < blocker.size(); ++b)
    if (b != anchor && segment_has_positive_surplus(blocker.segment(b), *mkt))
      order.push_back(b);
  std::sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
    if (blocker.segment(x).price() != blocker.segment(y).price())
      return blocker.segment(x).price() < blocker.segment(y).price();
    return x < y;
  });
  for (const std::size_t bi : order) work.place(bi, false, 0);

  return BlockingChain{blocked, std::move(work.steps)};
}

}  // namespace

BlockingChain build_rv_chain(const Segmentation& blocked, const Segmentation& blocker,
                             ChainVariant variant) {
  if (!same_market(blocked.market(), blocker.market()))
    throw ValidationError("blocking chain across different markets");
  return variant == ChainVariant::Weak ? build_weak_chain(blocked, blocker)
                                       : build_strong_chain(blocked, blocker);
}

bool check_chain(const BlockingChain& chain, ChainVariant variant) {
  const std::vector<ChainStep>& steps = chain.steps;
  if (steps.empty()) return false;  // nothing moves, nothing is certified

  const Segmentation* prev = &chain.initial;
  for (std::size_t t = 0; t < steps.size(); ++t) {
    const ChainStep& step = steps[t];
    if (!(step.plan_from_previous.source() == *prev))
      throw MalformedChainError("plan source does not match the previous segmentation", t);
    if (!(step.plan_from_previous.target() == step.segmentation))
      throw MalformedChainError("plan target does not match the step segmentation", t);
    if (step.moving_segment >= step.segmentation.size())
      throw MalformedChainError("moving segment index out of range", t);
    prev = &step.segmentation;
  }

  const Market& mkt = *chain.initial.market();
  const std::size_t n = mkt.size();
  const Segmentation& terminal = chain.terminal();

  // RV persistence: an old segment with no flow into the moving coalition
  // must reappear verbatim, carried by an identity flow.
  prev = &chain.initial;
  for (std::size_t t = 0; t < steps.size(); ++t) {
    const ChainStep& step = steps[t];
    const TransportPlan& plan = step.plan_from_previous;
    for (std::size_t a = 0; a < prev->size(); ++a) {
      bool touches = false;
      for (std::size_t i = 0; i < n && !touches; ++i)
        if (plan.flow(a, step.moving_segment, i).is_positive()) touches = true;
      if (touches) continue;
      bool persists = false;
      for (std::size_t b = 0; b < step.segmentation.size() && !persists; ++b) {
        if (!(step.segmentation.segment(b).price() == prev->segment(a).price())) continue;
        if (!(step.segmentation.segment(b).coalition() == prev->segment(a).coalition()))
          continue;
        bool identity = true;
        for (std::size_t i = 0; i < n && identity; ++i)
          if (!(plan.flow(a, b, i) == prev->segment(a).coalition().mass(i))) identity = false;
        persists = identity;
      }
      if (!persists) return false;
    }
    prev = &step.segmentation;
  }

  // Farsighted payoff clause, tracked through composed plans: a member of the
  // moving coalition reaches a terminal segment with positive mass iff every
  // hop of some path carries positive flow (proportional splitting never
  // cancels mass).
  auto reachable_terminals = [&](std::size_t start_step, std::size_t seg,
                                 std::size_t value_index) {
    std::vector<bool> cur(steps[start_step].segmentation.size(), false);
    cur[seg] = true;
    for (std::size_t t = start_step + 1; t < steps.size(); ++t) {
      const TransportPlan& plan = steps[t].plan_from_previous;
      std::vector<bool> nxt(steps[t].segmentation.size(), false);
      for (std::size_t a = 0; a < cur.size(); ++a) {
        if (!cur[a]) continue;
        for (std::size_t b = 0; b < nxt.size(); ++b)
          if (plan.flow(a, b, value_index).is_positive()) nxt[b] = true;
      }
      cur = std::move(nxt);
    }
    return cur;
  };

  bool any_strict_overall = false;
  prev = &chain.initial;
  for (std::size_t t = 0; t < steps.size(); ++t) {
    const ChainStep& step = steps[t];
    const TransportPlan& plan = step.plan_from_previous;
    bool step_strict = false;
    for (std::size_t i = 0; i < n; ++i) {
      bool column_positive = false;
      for (std::size_t a = 0; a < prev->size() && !column_positive; ++a)
        if (plan.flow(a, step.moving_segment, i).is_positive()) column_positive = true;
      if (!column_positive) continue;
      const std::vector<bool> ends = reachable_terminals(t, step.moving_segment, i);
      for (std::size_t a = 0; a < prev->size(); ++a) {
        if (!plan.flow(a, step.moving_segment, i).is_positive()) continue;
        const Rational before = consumer_surplus(mkt.value(i), prev->segment(a).price());
        for (std::size_t z = 0; z < ends.size(); ++z) {
          if (!ends[z]) continue;
          const Rational after = consumer_surplus(mkt.value(i), terminal.segment(z).price());
          if (after < before) return false;
          if (before < after) step_strict = true;
        }
      }
    }
    if (step_strict) any_strict_overall = true;
    if (variant == ChainVariant::Strong && !step_strict) return false;
    prev = &step.segmentation;
  }
  return variant == ChainVariant::Strong || any_strict_overall;
}

}  // namespace segstab
