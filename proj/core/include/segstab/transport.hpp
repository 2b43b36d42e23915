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

#ifndef SEGSTAB_TRANSPORT_HPP
#define SEGSTAB_TRANSPORT_HPP

#include <cstddef>
#include <vector>

#include "segstab/segmentation.hpp"

namespace segstab {

/// Mass flow between two segmentations of one market:
/// flow(a, b, i) = mass of value v_i consumers sitting in segment a of the
/// source and segment b of the target. Row marginals recover the source
/// coalitions, column marginals the target coalitions. This is where consumer
/// identity lives; all cross-segmentation comparisons read surpluses through
/// a plan.
class TransportPlan {
 public:
  using Flow = std::vector<std::vector<std::vector<Rational>>>;  // [a][b][i]

  TransportPlan(Segmentation source, Segmentation target, Flow flow);

  /// The canonical coupling: within each value class, split proportionally,
  /// flow(a,b,i) = src_a(i) * tgt_b(i) / f(v_i).
  static TransportPlan proportional(Segmentation source, Segmentation target);

  /// Source and target are the same segmentation; mass stays put.
  static TransportPlan identity(Segmentation s);

  const Segmentation& source() const { return source_; }
  const Segmentation& target() const { return target_; }
  const Rational& flow(std::size_t a, std::size_t b, std::size_t i) const {
    return flow_.at(a).at(b).at(i);
  }

  /// Total mass moving from source segment a into target segment b.
  Rational cell_mass(std::size_t a, std::size_t b) const;

  /// Same flows read in the opposite direction.
  TransportPlan reversed() const;

 private:
  Segmentation source_;
  Segmentation target_;
  Flow flow_;
};

/// A directed comparison: the plan's source is the segmentation whose
/// segments may object; the target is the segmentation being objected to.
struct DeviationScenario {
  TransportPlan plan;
};

enum class ObjectionDirection { SourceObjectsToTarget };

/// Segment `source_index` of the scenario's source objects to the target:
/// through the plan every consumer of the segment weakly prefers the
/// segment's price, and a positive mass strictly prefers it.
bool objects_to(const DeviationScenario& scenario, std::size_t source_index,
                ObjectionDirection direction = ObjectionDirection::SourceObjectsToTarget);

/// Source blocks target: some source segment objects to the target.
bool blocks(const DeviationScenario& scenario);

/// Weak objection: some consumer of the segment strictly prefers it, and some
/// consumer whose value is an optimal price of the segment weakly prefers it.
bool weakly_objects_to(const DeviationScenario& scenario, std::size_t source_index);

bool weakly_blocks(const DeviationScenario& scenario);

/// Pointwise Pareto dominance of `s` over `other` through an explicit plan
/// (plan source = s, plan target = other).
bool pareto_dominates(const Segmentation& s, const Segmentation& other,
                      const TransportPlan& plan);

/// Plan-free Pareto dominance: within each value class consumers are
/// exchangeable, so a coupling under which everyone weakly prefers `s` exists
/// iff s's per-value surplus distribution first-order stochastically
/// dominates other's; strictness needs the distributions to differ somewhere.
bool pareto_dominates(const Segmentation& s, const Segmentation& other);

}  // namespace segstab

#endif  // SEGSTAB_TRANSPORT_HPP
