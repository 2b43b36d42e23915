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

#include "segstab/transport.hpp"

#include <utility>

namespace segstab {

TransportPlan::TransportPlan(Segmentation source, Segmentation target, Flow flow)
    : source_(std::move(source)), target_(std::move(target)), flow_(std::move(flow)) {
  if (!same_market(source_.market(), target_.market()))
    throw ValidationError("transport plan across different markets");
  const std::size_t k = source_.size(), l = target_.size();
  const std::size_t n = source_.market()->size();
  if (flow_.size() != k) throw ValidationError("transport plan row count mismatch");
  for (std::size_t a = 0; a < k; ++a) {
    if (flow_[a].size() != l)
      throw ValidationError("transport plan column count mismatch");
    for (std::size_t b = 0; b < l; ++b) {
      if (flow_[a][b].size() != n)
        throw ValidationError("transport plan value axis mismatch");
      for (const Rational& f : flow_[a][b])
        if (f.is_negative())
          throw NegativeMassError("transport plan flow must be non-negative");
    }
  }
  for (std::size_t a = 0; a < k; ++a)
    for (std::size_t i = 0; i < n; ++i) {
      Rational row(0);
      for (std::size_t b = 0; b < l; ++b) row += flow_[a][b][i];
      if (!(row == source_.segment(a).coalition().mass(i)))
        throw ValidationError("transport plan row marginal mismatch");
    }
  for (std::size_t b = 0; b < l; ++b)
    for (std::size_t i = 0; i < n; ++i) {
      Rational col(0);
      for (std::size_t a = 0; a < k; ++a) col += flow_[a][b][i];
      if (!(col == target_.segment(b).coalition().mass(i)))
        throw ValidationError("transport plan column marginal mismatch");
    }
}

TransportPlan TransportPlan::proportional(Segmentation source, Segmentation target) {
  const Market& mkt = *source.market();
  const std::size_t k = source.size(), l = target.size(), n = mkt.size();
  Flow flow(k, std::vector<std::vector<Rational>>(l, std::vector<Rational>(n, Rational(0))));
  for (std::size_t i = 0; i < n; ++i) {
    const Rational& total = mkt.mass(i);
    for (std::size_t a = 0; a < k; ++a) {
      const Rational& src = source.segment(a).coalition().mass(i);
      if (!src.is_positive()) continue;
      for (std::size_t b = 0; b < l; ++b) {
        const Rational& tgt = target.segment(b).coalition().mass(i);
        if (!tgt.is_positive()) continue;
        flow[a][b][i] = src * tgt / total;
      }
    }
  }
  return TransportPlan(std::move(source), std::move(target), std::move(flow));
}

TransportPlan TransportPlan::identity(Segmentation s) {
  const std::size_t k = s.size(), n = s.market()->size();
  Flow flow(k, std::vector<std::vector<Rational>>(k, std::vector<Rational>(n, Rational(0))));
  for (std::size_t a = 0; a < k; ++a)
    for (std::size_t i = 0; i < n; ++i)
      flow[a][a][i] = s.segment(a).coalition().mass(i);
  Segmentation copy = s;
  return TransportPlan(std::move(copy), std::move(s), std::move(flow));
}

Rational TransportPlan::cell_mass(std::size_t a, std::size_t b) const {
  Rational t(0);
  for (const Rational& f : flow_.at(a).at(b)) t += f;
  return t;
}

TransportPlan TransportPlan::reversed() const {
  const std::size_t k = source_.size(), l = target_.size();
  const std::size_t n = source_.market()->size();
  Flow flow(l, std::vector<std::vector<Rational>>(k, std::vector<Rational>(n, Rational(0))));
  for (std::size_t a = 0; a < k; ++a)
    for (std::size_t b = 0; b < l; ++b)
      for (std::size_t i = 0; i < n; ++i) flow[b][a][i] = flow_[a][b][i];
  return TransportPlan(target_, source_, std::move(flow));
}

bool objects_to(const DeviationScenario& scenario, std::size_t source_index,
                ObjectionDirection) {
  const TransportPlan& plan = scenario.plan;
  if (source_index >= plan.source().size())
    throw IndexOutOfRangeError("no source segment with index " +
                               std::to_string(source_index));
  const Market& mkt = *plan.source().market();
  const Rational& p = plan.source().segment(source_index).price();
  bool any_strict = false;
  for (std::size_t b = 0; b < plan.target().size(); ++b) {
    const Rational& q = plan.target().segment(b).price();
    for (std::size_t i = 0; i < mkt.size(); ++i) {
      if (!plan.flow(source_index, b, i).is_positive()) continue;
      const Rational own = consumer_surplus(mkt.value(i), p);
      const Rational there = consumer_surplus(mkt.value(i), q);
      if (own < there) return false;
      if (there < own) any_strict = true;
    }
  }
  return any_strict;
}

bool blocks(const DeviationScenario& scenario) {
  for (std::size_t a = 0; a < scenario.plan.source().size(); ++a)
    if (objects_to(scenario, a)) return true;
  return false;
}

bool weakly_objects_to(const DeviationScenario& scenario, std::size_t source_index) {
  const TransportPlan& plan = scenario.plan;
  if (source_index >= plan.source().size())
    throw IndexOutOfRangeError("no source segment with index " +
                               std::to_string(source_index));
  const Market& mkt = *plan.source().market();
  const Segment& seg = plan.source().segment(source_index);
  const std::vector<Rational> opt = optimal_prices(seg.coalition());
  auto value_is_optimal = [&](const Rational& v) {
    for (const Rational& o : opt)
      if (o == v) return true;
    return false;
  };
  bool some_strictly_prefer = false;
  bool some_optimal_value_weakly_prefers = false;
  for (std::size_t b = 0; b < plan.target().size(); ++b) {
    const Rational& q = plan.target().segment(b).price();
    for (std::size_t i = 0; i < mkt.size(); ++i) {
      if (!plan.flow(source_index, b, i).is_positive()) continue;
      const Rational own = consumer_surplus(mkt.value(i), seg.price());
      const Rational there = consumer_surplus(mkt.value(i), q);
      if (there < own) some_strictly_prefer = true;
      if (!(own < there) && value_is_optimal(mkt.value(i)))
        some_optimal_value_weakly_prefers = true;
    }
  }
  return some_strictly_prefer && some_optimal_value_weakly_prefers;
}

bool weakly_blocks(const DeviationScenario& scenario) {
  for (std::size_t a = 0; a < scenario.plan.source().size(); ++a)
    if (weakly_objects_to(scenario, a)) return true;
  return false;
}

bool pareto_dominates(const Segmentation& s, const Segmentation& other,
                      const TransportPlan& plan) {
  if (!(plan.source() == s) || !(plan.target() == other))
    throw ValidationError("pareto check plan does not match its segmentations");
  const Market& mkt = *s.market();
  bool any_strict = false;
  for (std::size_t a = 0; a < s.size(); ++a) {
    const Rational& p = s.segment(a).price();
    for (std::size_t b = 0; b < other.size(); ++b) {
      const Rational& q = other.segment(b).price();
      for (std::size_t i = 0; i < mkt.size(); ++i) {
        if (!plan.flow(a, b, i).is_positive()) continue;
        const Rational here = consumer_surplus(mkt.value(i), p);
        const Rational there = consumer_surplus(mkt.value(i), q);
        if (here < there) return false;
        if (there < here) any_strict = true;
      }
    }
  }
  return any_strict;
}

bool pareto_dominates(const Segmentation& s, const Segmentation& other) {
  if (!same_market(s.market(), other.market()))
    throw ValidationError("pareto check across different markets");
  const SurplusProfile ps = surplus_profile(s);
  const SurplusProfile po = surplus_profile(other);
  bool differ = false;
  for (std::size_t i = 0; i < s.market()->size(); ++i) {
    const auto ds = ps.surplus_distribution(i);
    const auto dt = po.surplus_distribution(i);
    if (ds != dt) differ = true;
    // FOSD: tail mass of s at every threshold weakly exceeds other's.
    // Walk both distributions from the top.
    auto is = ds.rbegin();
    auto io = dt.rbegin();
    Rational tail_s(0), tail_o(0);
    while (io != dt.rend()) {
      const Rational& level = io->first;
      while (is != ds.rend() && !(is->first < level)) {
        tail_s += is->second;
        ++is;
      }
      tail_o += io->second;
      if (tail_s < tail_o) return false;
      ++io;
    }
  }
  return differ;
}

}  // namespace segstab
