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

#ifndef SEGSTAB_STABILITY_HPP
#define SEGSTAB_STABILITY_HPP

#include <optional>

#include "segstab/transport.hpp"

namespace segstab {

/// Every segment prices at its lowest supported value, so every consumer buys.
bool is_efficient(const Segmentation& s);

/// For every ordered pair of segments (C,p), (C',p') with p < p', some price
/// optimal for C lies in (p, min supported value of C']. Checked on the given
/// segmentation as-is; stability requires it of the canonical form.
bool is_saturated(const Segmentation& s);

/// Canonical form is efficient and saturated.
bool is_stable(const Segmentation& s);

/// Equivalent to efficiency; the definitional immune-to-inside-objections
/// form is exercised only at oracle scale.
bool is_fragmentation_proof(const Segmentation& s);

/// An alternative segmentation together with a plan from the original to it.
struct Witness {
  Segmentation alternative;
  TransportPlan plan;  // source = the segmentation handed in, target = alternative
};

/// For an inefficient segmentation: a Pareto-dominating alternative that
/// splits the first inefficient segment, carving out all its below-price
/// consumers plus a dyadic fraction of each other supported value at the
/// lowest supported value's price. Returns nullopt when efficient.
std::optional<Witness> inefficiency_witness(const Segmentation& s);

/// For an efficient segmentation whose canonical form is unsaturated: an
/// alternative the segmentation fails to block and is not weak-surplus-
/// equivalent to, built by moving half the feasible mass of the higher
/// segment's lowest value into the unsaturated lower segment.
/// Throws NotApplicableError if s is inefficient or already stable.
Witness nonsaturation_witness(const Segmentation& s);

}  // namespace segstab

#endif  // SEGSTAB_STABILITY_HPP
