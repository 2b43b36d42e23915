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

#ifndef SEGSTAB_COOPERATIVE_HPP
#define SEGSTAB_COOPERATIVE_HPP

#include <optional>
#include <vector>

#include "segstab/transport.hpp"

namespace segstab {

/// The core is either empty or, when the lowest value prices the whole
/// market optimally, the weak-surplus class of the trivial segmentation.
struct CoreDescription {
  std::optional<Rational> trivial_price;
  bool empty() const { return !trivial_price.has_value(); }
};

CoreDescription core_description(const Market& market);

/// Decided through the characterization: nonempty core and weak surplus
/// equivalence with the trivial segmentation at v1.
bool in_core(const Segmentation& s);

/// For markets with a nonempty core: the trivial segmentation at v1 is
/// stable and the constructive outputs collapse onto it.
/// Throws EmptyCoreError when the core is empty.
bool core_equals_stable_check(const Market& market);

struct StableSetCandidate {
  Segmentation segmentation;
  TransportPlan plan_from_s;  // source = the set's representative, target = candidate
};

struct StableSetReport {
  struct Entry {
    bool equivalent;      // weak-surplus-equivalent to the representative
    bool weakly_blocked;  // meaningful only when !equivalent
  };
  std::vector<Entry> entries;
  bool all_non_equivalent_weakly_blocked;
};

/// Checks the stable-set characterization against a supplied corpus: every
/// candidate that is not weak-surplus-equivalent to s must be weakly blocked
/// by s through its plan.
StableSetReport stable_set_check(const Segmentation& s,
                                 const std::vector<StableSetCandidate>& candidates);

/// Farsighted (Harsanyi = RV) blocking collapses to ACS(s) > 0.
bool harsanyi_blocks(const Segmentation& s, const Segmentation& other);

/// Robustly over all couplings, a positive mass is strictly better off in s
/// than in other: some value class has strictly more mass above some surplus
/// level in s.
bool strong_blocks_some_equivalent(const Segmentation& s, const Segmentation& other);

enum class ChainVariant { Weak, Strong };

/// One hop of a farsighted blocking chain. The moving coalition is the
/// segment `moving_segment` of `segmentation`; `plan_from_previous` connects
/// the previous segmentation in the chain to this one.
struct ChainStep {
  Segmentation segmentation;
  std::size_t moving_segment;
  TransportPlan plan_from_previous;
};

/// A sequence S^0 = blocked, S^1, ..., S^n = terminal with a moving segment
/// per hop. RV semantics: segments of S^{i-1} that do not meet the moving
/// coalition persist verbatim into S^i.
struct BlockingChain {
  Segmentation initial;
  std::vector<ChainStep> steps;
  const Segmentation& terminal() const {
    return steps.empty() ? initial : steps.back().segmentation;
  }
};

/// Constructs an RV blocking chain from `blocked` to `blocker` (weak variant;
/// the terminal equals the blocker) or to a weak-surplus-equivalent stand-in
/// (strong variant). Throws NotBlockingError when the variant's blocking
/// criterion fails: ACS(blocker) > 0 for Weak, strong_blocks_some_equivalent
/// for Strong.
BlockingChain build_rv_chain(const Segmentation& blocked, const Segmentation& blocker,
                             ChainVariant variant);

/// Verifies a chain: marginal-consistent plans, RV persistence of untouched
/// segments, the farsighted weak-preference clause of every moving coalition
/// against the terminal (through composed plans), and the strictness clause
/// (some step for Weak, every step for Strong). Structural breakage throws
/// MalformedChainError; semantic violations return false.
bool check_chain(const BlockingChain& chain, ChainVariant variant);

}  // namespace segstab

#endif  // SEGSTAB_COOPERATIVE_HPP
