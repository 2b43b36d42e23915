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

#include "segstab/oracle.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <numeric>
#include <utility>

namespace segstab {

AtomizedMarket AtomizedMarket::from_market(const Market& market, std::size_t cap) {
  Rational unit = market.mass(0);
  for (std::size_t i = 1; i < market.size(); ++i)
    unit = Rational::gcd(unit, market.mass(i));
  std::vector<std::size_t> atom_value;
  for (std::size_t i = 0; i < market.size(); ++i) {
    const Rational count = market.mass(i) / unit;  // exact integer by gcd
    mpz_class c = count.numerator();
    for (mpz_class k = 0; k < c; ++k) {
      atom_value.push_back(i);
      if (atom_value.size() > cap)
        throw CapExceededError("atomization needs more than " + std::to_string(cap) +
                               " atoms");
    }
  }
  return AtomizedMarket(std::make_shared<const Market>(market), std::move(unit),
                        std::move(atom_value));
}

AtomizedMarket AtomizedMarket::from_atoms(std::vector<Rational> atom_values,
                                          Rational atom_mass) {
  if (atom_values.empty()) throw ValidationError("atomized market needs atoms");
  if (!atom_mass.is_positive())
    throw ValidationError("atom mass must be strictly positive");
  std::sort(atom_values.begin(), atom_values.end());
  std::vector<Rational> values;
  std::vector<Rational> masses;
  std::vector<std::size_t> atom_value;
  for (const Rational& v : atom_values) {
    if (values.empty() || values.back() < v) {
      values.push_back(v);
      masses.push_back(atom_mass);
    } else {
      masses.back() += atom_mass;
    }
    atom_value.push_back(values.size() - 1);
  }
  auto market = std::make_shared<const Market>(std::move(values), std::move(masses));
  return AtomizedMarket(std::move(market), std::move(atom_mass), std::move(atom_value));
}

Coalition atoms_coalition(const AtomizedMarket& am, const std::vector<std::size_t>& atoms) {
  std::vector<Rational> mass(am.market()->size(), Rational(0));
  for (const std::size_t t : atoms) mass[am.value_index(t)] += am.atom_mass();
  return Coalition(am.market(), std::move(mass));
}

namespace {

std::vector<std::vector<std::size_t>> blocks_of(const std::vector<std::size_t>& assignment,
                                                std::size_t block_count) {
  std::vector<std::vector<std::size_t>> blocks(block_count);
  for (std::size_t t = 0; t < assignment.size(); ++t) blocks[assignment[t]].push_back(t);
  return blocks;
}

}  // namespace

AtomSegmentation::AtomSegmentation(const AtomizedMarket& am,
                                   std::vector<std::size_t> assignment,
                                   std::vector<Rational> prices)
    : assignment_(std::move(assignment)), prices_(std::move(prices)) {
  if (assignment_.size() != am.atom_count())
    throw ValidationError("atom assignment length mismatch");
  for (const std::size_t b : assignment_)
    if (b >= prices_.size())
      throw ValidationError("atom assigned to a block without a price");
  const auto blocks = blocks_of(assignment_, prices_.size());
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    if (blocks[b].empty()) throw ValidationError("empty block in atom segmentation");
    if (!is_optimal_price(atoms_coalition(am, blocks[b]), prices_[b]))
      throw InvalidSegmentError("block price " + prices_[b].str() +
                                " is not optimal for its atoms");
  }
}

Rational atom_surplus(const AtomizedMarket& am, const AtomSegmentation& s, std::size_t atom) {
  return consumer_surplus(am.value_of(atom), s.price_of_block(s.block_of(atom)));
}

std::vector<AtomSegmentation> enumerate_segmentations(const AtomizedMarket& am,
                                                      std::size_t cap) {
  const std::size_t n = am.atom_count();
  if (n > cap)
    throw CapExceededError("enumeration over " + std::to_string(n) +
                           " atoms exceeds the cap of " + std::to_string(cap));
  std::vector<AtomSegmentation> out;
  std::vector<std::size_t> rgs(n, 0);  // restricted growth string
  for (;;) {
    const std::size_t block_count =
        n == 0 ? 0 : 1 + *std::max_element(rgs.begin(), rgs.end());
    const auto blocks = blocks_of(rgs, block_count);
    std::vector<std::vector<Rational>> choices;
    choices.reserve(block_count);
    for (const auto& block : blocks)
      choices.push_back(optimal_prices(atoms_coalition(am, block)));
    // Odometer over per-block optimal prices, ascending within each block.
    std::vector<std::size_t> pick(block_count, 0);
    for (;;) {
      std::vector<Rational> prices;
      prices.reserve(block_count);
      for (std::size_t b = 0; b < block_count; ++b) prices.push_back(choices[b][pick[b]]);
      out.emplace_back(am, rgs, std::move(prices));
      std::size_t digit = 0;
      while (digit < block_count && ++pick[digit] == choices[digit].size()) {
        pick[digit] = 0;
        ++digit;
      }
      if (digit == block_count) break;
    }
    // Next restricted growth string in lexicographic order.
    bool advanced = false;
    for (std::size_t pos = n; pos-- > 1;) {
      std::size_t prefix_max = 0;
      for (std::size_t j = 0; j < pos; ++j) prefix_max = std::max(prefix_max, rgs[j]);
      if (rgs[pos] <= prefix_max) {
        ++rgs[pos];
        std::fill(rgs.begin() + pos + 1, rgs.end(), 0);
        advanced = true;
        break;
      }
    }
    if (!advanced) break;
  }
  return out;
}

bool atom_objection(const AtomizedMarket& am, const std::vector<std::size_t>& coalition,
                    const Rational& price, const AtomSegmentation& s) {
  if (coalition.empty()) throw EmptyCoalitionError();
  if (!is_optimal_price(atoms_coalition(am, coalition), price))
    throw InvalidSegmentError("objection price " + price.str() +
                              " is not optimal for the objecting atoms");
  bool any_strict = false;
  for (const std::size_t t : coalition) {
    const Rational own = consumer_surplus(am.value_of(t), price);
    const Rational have = atom_surplus(am, s, t);
    if (own < have) return false;
    if (have < own) any_strict = true;
  }
  return any_strict;
}

bool atom_blocks(const AtomizedMarket& am, const AtomSegmentation& blocker,
                 const AtomSegmentation& blocked) {
  const auto blocks = blocks_of(blocker.assignment(), blocker.block_count());
  for (std::size_t b = 0; b < blocks.size(); ++b)
    if (atom_objection(am, blocks[b], blocker.price_of_block(b), blocked)) return true;
  return false;
}

bool atom_weakly_blocks(const AtomizedMarket& am, const AtomSegmentation& blocker,
                        const AtomSegmentation& blocked) {
  const auto blocks = blocks_of(blocker.assignment(), blocker.block_count());
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    const std::vector<Rational> opt = optimal_prices(atoms_coalition(am, blocks[b]));
    bool some_strict = false, some_optimal_weak = false;
    for (const std::size_t t : blocks[b]) {
      const Rational own = consumer_surplus(am.value_of(t), blocker.price_of_block(b));
      const Rational have = atom_surplus(am, blocked, t);
      if (have < own) some_strict = true;
      if (!(own < have) &&
          std::find(opt.begin(), opt.end(), am.value_of(t)) != opt.end())
        some_optimal_weak = true;
    }
    if (some_strict && some_optimal_weak) return true;
  }
  return false;
}

bool atom_pareto_dominates(const AtomizedMarket& am, const AtomSegmentation& a,
                           const AtomSegmentation& b) {
  bool any_strict = false;
  for (std::size_t t = 0; t < am.atom_count(); ++t) {
    const Rational sa = atom_surplus(am, a, t);
    const Rational sb = atom_surplus(am, b, t);
    if (sa < sb) return false;
    if (sb < sa) any_strict = true;
  }
  return any_strict;
}

bool atom_surplus_equivalent(const AtomizedMarket& am, const AtomSegmentation& a,
                             const AtomSegmentation& b) {
  for (std::size_t t = 0; t < am.atom_count(); ++t)
    if (!(atom_surplus(am, a, t) == atom_surplus(am, b, t))) return false;
  return true;
}

bool atom_surplus_distributions_equal(const AtomizedMarket& am, const AtomSegmentation& a,
                                      const AtomSegmentation& b) {
  const std::size_t n_values = am.market()->size();
  std::vector<std::vector<Rational>> da(n_values), db(n_values);
  for (std::size_t t = 0; t < am.atom_count(); ++t) {
    da[am.value_index(t)].push_back(atom_surplus(am, a, t));
    db[am.value_index(t)].push_back(atom_surplus(am, b, t));
  }
  for (std::size_t v = 0; v < n_values; ++v) {
    std::sort(da[v].begin(), da[v].end());
    std::sort(db[v].begin(), db[v].end());
    if (!(da[v] == db[v])) return false;
  }
  return true;
}

bool atom_stable(const AtomizedMarket& am, const AtomSegmentation& s,
                 const std::vector<AtomSegmentation>& alternatives) {
  for (const AtomSegmentation& alt : alternatives) {
    if (atom_surplus_equivalent(am, s, alt)) continue;
    if (!atom_blocks(am, s, alt)) return false;
  }
  return true;
}

bool atom_fragmentation_proof(const AtomizedMarket& am, const AtomSegmentation& s) {
  const auto blocks = blocks_of(s.assignment(), s.block_count());
  for (const auto& block : blocks) {
    const std::size_t m = block.size();
    for (std::size_t mask = 1; mask < (std::size_t{1} << m); ++mask) {
      std::vector<std::size_t> subset;
      for (std::size_t j = 0; j < m; ++j)
        if (mask & (std::size_t{1} << j)) subset.push_back(block[j]);
      for (const Rational& p : optimal_prices(atoms_coalition(am, subset)))
        if (atom_objection(am, subset, p, s)) return false;
    }
  }
  return true;
}

bool fragmentation_objection_on_refined_grid(const AtomizedMarket& am,
                                             const AtomSegmentation& s) {
  const Market& mkt = *am.market();
  const auto blocks = blocks_of(s.assignment(), s.block_count());
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    const Coalition c = atoms_coalition(am, blocks[b]);
    const Rational u = min_supported_value(c);
    if (u == s.price_of_block(b)) continue;  // efficient block

    // Objecting coalition: every value-u consumer of the block plus x of its
    // top value w, where x keeps price u optimal: u (m_u + x) >= w x.
    const std::size_t u_at = mkt.index_of(u);
    const std::size_t w_at = c.support().back();
    const Rational w = mkt.value(w_at);
    const Rational x =
        Rational::min(u * c.mass(u_at) / (w - u), c.mass(w_at)) / Rational(2);

    const Rational unit = Rational::gcd(am.atom_mass(), x);
    const unsigned long split = (am.atom_mass() / unit).numerator().get_ui();
    std::vector<Rational> refined_values;
    std::vector<std::size_t> refined_parent_block;
    for (std::size_t t = 0; t < am.atom_count(); ++t)
      for (unsigned long k = 0; k < split; ++k) {
        refined_values.push_back(am.value_of(t));
        refined_parent_block.push_back(s.block_of(t));
      }
    const AtomizedMarket grid = AtomizedMarket::from_atoms(refined_values, unit);
    const AtomSegmentation refined(grid, refined_parent_block, s.prices());

    std::vector<std::size_t> objectors;
    unsigned long w_needed = (x / unit).numerator().get_ui();
    for (std::size_t t = 0; t < grid.atom_count(); ++t) {
      if (refined_parent_block[t] != b) continue;
      if (grid.value_index(t) == u_at) objectors.push_back(t);
      if (grid.value_index(t) == w_at && w_needed > 0) {
        objectors.push_back(t);
        --w_needed;
      }
    }
    return atom_objection(grid, objectors, u, refined);
  }
  return false;
}

Rational atom_total_surplus(const AtomizedMarket& am, const AtomSegmentation& s) {
  Rational total(0);
  for (std::size_t t = 0; t < am.atom_count(); ++t)
    total += atom_surplus(am, s, t) * am.atom_mass();
  return total;
}

Segmentation lift(const AtomizedMarket& am, const AtomSegmentation& s) {
  const auto blocks = blocks_of(s.assignment(), s.block_count());
  std::vector<Segment> segments;
  segments.reserve(blocks.size());
  for (std::size_t b = 0; b < blocks.size(); ++b)
    segments.emplace_back(atoms_coalition(am, blocks[b]), s.price_of_block(b));
  return Segmentation(std::move(segments));
}

bool exists_coupling_all_weakly_better(const AtomizedMarket& am, const AtomSegmentation& a,
                                       const AtomSegmentation& b) {
  // Atoms of one value class are exchangeable; try every per-class bijection
  // between a-side and b-side atoms.
  const std::size_t n_values = am.market()->size();
  std::vector<std::vector<std::size_t>> classes(n_values);
  for (std::size_t t = 0; t < am.atom_count(); ++t)
    classes[am.value_index(t)].push_back(t);

  std::vector<std::size_t> order;
  for (std::size_t v = 0; v < n_values; ++v)
    if (!classes[v].empty()) order.push_back(v);

  auto feasible_class = [&](std::size_t v, const std::vector<std::size_t>& perm) {
    for (std::size_t j = 0; j < classes[v].size(); ++j) {
      if (atom_surplus(am, a, classes[v][j]) < atom_surplus(am, b, perm[j])) return false;
    }
    return true;
  };
  // Classes are independent, so no backtracking across classes is needed;
  // exhaustive search within each class keeps this a literal oracle.
  for (const std::size_t v : order) {
    std::vector<std::size_t> perm = classes[v];
    std::sort(perm.begin(), perm.end());
    bool ok = false;
    do {
      if (feasible_class(v, perm)) {
        ok = true;
        break;
      }
    } while (std::next_permutation(perm.begin(), perm.end()));
    if (!ok) return false;
  }
  return true;
}

RefinedInstance lower_witness(const AtomizedMarket& am, const AtomSegmentation& s,
                              const Witness& witness) {
  const TransportPlan& plan = witness.plan;
  if (!(plan.source() == lift(am, s)))
    throw ValidationError("witness plan does not start at the lifted segmentation");
  const std::size_t n = am.market()->size();

  Rational unit = am.atom_mass();
  for (std::size_t a = 0; a < plan.source().size(); ++a)
    for (std::size_t b = 0; b < plan.target().size(); ++b)
      for (std::size_t i = 0; i < n; ++i)
        if (plan.flow(a, b, i).is_positive())
          unit = Rational::gcd(unit, plan.flow(a, b, i));

  const Rational per_atom = am.atom_mass() / unit;  // integer by gcd
  const unsigned long split = per_atom.numerator().get_ui();

  std::vector<Rational> refined_values;
  std::vector<std::size_t> refined_block;  // original block of each sub-atom
  refined_values.reserve(am.atom_count() * split);
  for (std::size_t t = 0; t < am.atom_count(); ++t)
    for (unsigned long k = 0; k < split; ++k) {
      refined_values.push_back(am.value_of(t));
      refined_block.push_back(s.block_of(t));
    }
  AtomizedMarket grid = AtomizedMarket::from_atoms(refined_values, unit);
  // from_atoms sorts by value; atoms here are appended in value order already
  // because the parent atoms are, so indices line up.

  AtomSegmentation original(grid, refined_block, s.prices());

  // Witness assignment: per (source block, value), split the sub-atom pool
  // across target segments following the plan, in ascending target order.
  std::vector<std::size_t> witness_block(grid.atom_count());
  std::vector<std::vector<std::size_t>> pools(plan.source().size() * n);
  for (std::size_t t = 0; t < grid.atom_count(); ++t) {
    const std::size_t a = refined_block[t];
    const std::size_t i = grid.value_index(t);
    pools[a * n + i].push_back(t);
  }
  for (std::size_t a = 0; a < plan.source().size(); ++a)
    for (std::size_t i = 0; i < n; ++i) {
      auto& pool = pools[a * n + i];
      std::size_t cursor = 0;
      for (std::size_t b = 0; b < plan.target().size(); ++b) {
        const Rational& f = plan.flow(a, b, i);
        if (!f.is_positive()) continue;
        const unsigned long count = (f / unit).numerator().get_ui();
        for (unsigned long k = 0; k < count; ++k) witness_block[pool.at(cursor++)] = b;
      }
      if (cursor != pool.size())
        throw ValidationError("witness plan does not exhaust a sub-atom pool");
    }
  std::vector<Rational> witness_prices;
  witness_prices.reserve(plan.target().size());
  for (const Segment& seg : plan.target().segments()) witness_prices.push_back(seg.price());
  AtomSegmentation lowered(grid, std::move(witness_block), std::move(witness_prices));

  return RefinedInstance{std::move(grid), std::move(original), std::move(lowered)};
}

}  // namespace segstab
