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

#ifndef SEGSTAB_ORACLE_HPP
#define SEGSTAB_ORACLE_HPP

#include <cstddef>
#include <vector>

#include "segstab/stability.hpp"

namespace segstab {

inline constexpr std::size_t kDefaultAtomCap = 8;

/// Finite stand-in for the continuum: equal-mass atoms carrying values.
/// "Positive measure" becomes "at least one atom"; atoms restore the consumer
/// identity that mass vectors abstract away.
class AtomizedMarket {
 public:
  /// Coarsest exact atomization (unit = gcd of the market masses).
  /// Throws CapExceededError when it needs more than `cap` atoms.
  static AtomizedMarket from_market(const Market& market, std::size_t cap = kDefaultAtomCap);

  /// Atoms listed explicitly, all of mass `atom_mass`; the market is derived.
  static AtomizedMarket from_atoms(std::vector<Rational> atom_values, Rational atom_mass);

  std::size_t atom_count() const { return atom_value_.size(); }
  const Rational& atom_mass() const { return unit_; }
  /// Market value index of atom t; atoms are sorted by value.
  std::size_t value_index(std::size_t t) const { return atom_value_.at(t); }
  const Rational& value_of(std::size_t t) const {
    return market_->value(atom_value_.at(t));
  }
  const MarketPtr& market() const { return market_; }

 private:
  AtomizedMarket(MarketPtr market, Rational unit, std::vector<std::size_t> atom_value)
      : market_(std::move(market)), unit_(std::move(unit)), atom_value_(std::move(atom_value)) {}
  MarketPtr market_;
  Rational unit_;
  std::vector<std::size_t> atom_value_;
};

/// Assignment of atoms to blocks plus one optimal price per block.
/// Block ids are contiguous from 0 in order of first appearance.
class AtomSegmentation {
 public:
  AtomSegmentation(const AtomizedMarket& am, std::vector<std::size_t> assignment,
                   std::vector<Rational> prices);

  std::size_t block_count() const { return prices_.size(); }
  std::size_t block_of(std::size_t atom) const { return assignment_.at(atom); }
  const Rational& price_of_block(std::size_t block) const { return prices_.at(block); }
  const std::vector<std::size_t>& assignment() const { return assignment_; }
  const std::vector<Rational>& prices() const { return prices_; }

  friend bool operator==(const AtomSegmentation& a, const AtomSegmentation& b) {
    return a.assignment_ == b.assignment_ && a.prices_ == b.prices_;
  }

 private:
  std::vector<std::size_t> assignment_;
  std::vector<Rational> prices_;
};

/// The per-value mass vector of an atom subset.
Coalition atoms_coalition(const AtomizedMarket& am, const std::vector<std::size_t>& atoms);

Rational atom_surplus(const AtomizedMarket& am, const AtomSegmentation& s, std::size_t atom);

/// Every set partition of the atoms crossed with every optimal-price choice
/// per block, in deterministic order (restricted growth strings, then
/// ascending price odometer). Throws CapExceededError past `cap` atoms.
std::vector<AtomSegmentation> enumerate_segmentations(const AtomizedMarket& am,
                                                      std::size_t cap = kDefaultAtomCap);

/// Literal definitional checks with atoms as consumers.
bool atom_objection(const AtomizedMarket& am, const std::vector<std::size_t>& coalition,
                    const Rational& price, const AtomSegmentation& s);
bool atom_blocks(const AtomizedMarket& am, const AtomSegmentation& blocker,
                 const AtomSegmentation& blocked);
bool atom_weakly_blocks(const AtomizedMarket& am, const AtomSegmentation& blocker,
                        const AtomSegmentation& blocked);
bool atom_pareto_dominates(const AtomizedMarket& am, const AtomSegmentation& a,
                           const AtomSegmentation& b);
bool atom_surplus_equivalent(const AtomizedMarket& am, const AtomSegmentation& a,
                             const AtomSegmentation& b);

/// Identity-free comparison: per value class, the multisets of atom
/// surpluses coincide. Weaker than atom_surplus_equivalent.
bool atom_surplus_distributions_equal(const AtomizedMarket& am, const AtomSegmentation& a,
                                      const AtomSegmentation& b);

/// Definitional stability against a supplied enumeration: blocks every
/// alternative under which some atom's surplus differs.
bool atom_stable(const AtomizedMarket& am, const AtomSegmentation& s,
                 const std::vector<AtomSegmentation>& alternatives);

/// No subset of any single block objects (subset price must be optimal for
/// the subset). Efficiency of the lift implies this; the converse can fail
/// on coarse grids where the only objections need sub-atom masses.
bool atom_fragmentation_proof(const AtomizedMarket& am, const AtomSegmentation& s);

/// For a segmentation whose lift is inefficient: realize the within-block
/// objection from the efficiency characterization on a grid just fine enough
/// to carry it (all lowest-value consumers of an inefficient block plus half
/// the feasible mass of its top value, priced at the lowest value), and
/// report whether it objects there. Returns false when the lift is efficient.
bool fragmentation_objection_on_refined_grid(const AtomizedMarket& am,
                                             const AtomSegmentation& s);

Rational atom_total_surplus(const AtomizedMarket& am, const AtomSegmentation& s);

/// The mass-vector segmentation an atom segmentation induces.
Segmentation lift(const AtomizedMarket& am, const AtomSegmentation& s);

/// Brute-force coupling oracle: is there a within-value-class re-matching of
/// atoms under which every atom weakly prefers `a` to `b`? Exhaustive over
/// per-class permutations; validates the FOSD-based reductions.
bool exists_coupling_all_weakly_better(const AtomizedMarket& am, const AtomSegmentation& a,
                                       const AtomSegmentation& b);

/// A continuum witness lowered onto a grid fine enough to carry its plan
/// exactly: the original atoms split into sub-atoms, the witness assignment
/// read off the plan cell by cell.
struct RefinedInstance {
  AtomizedMarket grid;
  AtomSegmentation original;
  AtomSegmentation witness;
};

RefinedInstance lower_witness(const AtomizedMarket& am, const AtomSegmentation& s,
                              const Witness& witness);

}  // namespace segstab

#endif  // SEGSTAB_ORACLE_HPP
