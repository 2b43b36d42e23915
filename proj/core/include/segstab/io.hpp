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

#ifndef SEGSTAB_IO_HPP
#define SEGSTAB_IO_HPP

#include <iosfwd>
#include <string>
#include <vector>

#include "segstab/transport.hpp"

namespace segstab {

// Market files: one `<value> <mass>` record per line, tokens integers or
// `p/q` fractions, `#` comments, blank lines ignored. Unsorted input is
// sorted; zero-mass records are dropped with a warning; duplicate values are
// rejected.
struct MarketLoadResult {
  Market market;
  std::vector<std::string> warnings;
};

MarketLoadResult load_market(std::istream& in);

// Segmentation files: repeated `segment <price>` headers, each followed by
// `<value> <mass>` lines over a previously loaded market; the partition
// condition and price optimality are validated exactly.
Segmentation load_segmentation(std::istream& in, MarketPtr market);

void write_market(std::ostream& out, const Market& market);
void write_segmentation(std::ostream& out, const Segmentation& s);

/// One `flow <source-index> <target-index> <value> <mass>` line per positive
/// cell; used when reports carry a witness plan.
void write_transport_plan(std::ostream& out, const TransportPlan& plan);

}  // namespace segstab

#endif  // SEGSTAB_IO_HPP
