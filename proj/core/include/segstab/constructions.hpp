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

#ifndef SEGSTAB_CONSTRUCTIONS_HPP
#define SEGSTAB_CONSTRUCTIONS_HPP

#include <utility>
#include <vector>

#include "segstab/segmentation.hpp"

namespace segstab {

/// One step of the maximal equal-revenue recursion: the step revenue level,
/// which residual values were exhausted exactly, the step coalition and its
/// price, and what remained afterwards.
struct MerStep {
  Rational lambda;
  std::vector<std::size_t> exhausted_values;  // market value indices
  Coalition coalition;
  Rational price;
  Coalition residual_after;
};

struct MerTrace {
  std::vector<MerStep> steps;
};

/// The maximal equal-revenue segmentation: recursively peel off the largest
/// equal-revenue coalition covering all remaining values; the step price is
/// the lowest remaining value. Output is raw (same-price segments possible);
/// canonicalize to compare against merged forms. Always stable.
std::pair<Segmentation, MerTrace> mer_segmentation(const Market& market);

/// Alternative stable construction: keep absorbing the lowest remaining value
/// into the open segment until a second price ties in revenue, then close it
/// and recurse. Output is canonical, efficient and saturated; the final
/// segment may have a unique optimal price.
Segmentation greedy_stable_segmentation(const Market& market);

/// Closed form for two-value markets: the trivial segmentation at v1 when v1
/// is optimal market-wide, else all of v1 plus x = v1 f(v1)/(v2 - v1) of v2
/// at price v1 and the remaining v2 mass at v2. Stable and ACS-maximal.
/// Throws WrongArityError unless the market has exactly two values.
Segmentation two_value_stable(const Market& market);

}  // namespace segstab

#endif  // SEGSTAB_CONSTRUCTIONS_HPP
