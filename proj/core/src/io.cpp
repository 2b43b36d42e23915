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

#include "segstab/io.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <sstream>
#include <utility>

namespace segstab {

namespace {

std::vector<std::string> tokenize(const std::string& raw) {
  std::string line = raw;
  if (const auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
  std::istringstream ss(line);
  std::vector<std::string> tokens;
  std::string tok;
  while (ss >> tok) tokens.push_back(tok);
  return tokens;
}

Rational parse_rational(const std::string& tok, std::size_t line) {
  try {
    return Rational::from_string(tok);
  } catch (const std::invalid_argument& e) {
    throw ParseError("bad rational '" + tok + "': " + e.what(), line);
  }
}

}  // namespace

MarketLoadResult load_market(std::istream& in) {
  std::vector<std::pair<Rational, Rational>> records;
  std::vector<std::string> warnings;
  std::string raw;
  std::size_t line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    const auto tokens = tokenize(raw);
    if (tokens.empty()) continue;
    if (tokens.size() != 2)
      throw ParseError("expected '<value> <mass>', got " +
                           std::to_string(tokens.size()) + " tokens",
                       line_no);
    Rational value = parse_rational(tokens[0], line_no);
    Rational mass = parse_rational(tokens[1], line_no);
    if (!value.is_positive())
      throw ValidationError("line " + std::to_string(line_no) +
                            ": market values must be strictly positive");
    if (mass.is_negative())
      throw ValidationError("line " + std::to_string(line_no) +
                            ": masses must be non-negative");
    if (mass.is_zero()) {
      warnings.push_back("line " + std::to_string(line_no) + ": dropped value " +
                         value.str() + " with zero mass");
      continue;
    }
    for (const auto& [v, m] : records)
      if (v == value)
        throw ValidationError("line " + std::to_string(line_no) +
                              ": duplicate value " + value.str());
    records.emplace_back(std::move(value), std::move(mass));
  }
  if (records.empty()) throw ValidationError("market file defines no values");
  std::sort(records.begin(), records.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  std::vector<Rational> values, masses;
  values.reserve(records.size());
  masses.reserve(records.size());
  for (auto& [v, m] : records) {
    values.push_back(std::move(v));
    masses.push_back(std::move(m));
  }
  return MarketLoadResult{Market(std::move(values), std::move(masses)),
                          std::move(warnings)};
}

Segmentation load_segmentation(std::istream& in, MarketPtr market) {
  std::vector<Segment> segments;
  std::vector<Rational> mass;
  Rational price(0);
  bool open = false;
  std::size_t line_no = 0;
  std::size_t header_line = 0;

  auto close_segment = [&]() {
    if (!open) return;
    try {
      segments.emplace_back(Coalition(market, mass), price);
    } catch (const Error& e) {
      throw ValidationError("segment starting at line " +
                            std::to_string(header_line) + ": " + e.what());
    }
  };

  std::string raw;
  while (std::getline(in, raw)) {
    ++line_no;
    const auto tokens = tokenize(raw);
    if (tokens.empty()) continue;
    if (tokens[0] == "segment") {
      if (tokens.size() != 2)
        throw ParseError("expected 'segment <price>'", line_no);
      close_segment();
      price = parse_rational(tokens[1], line_no);
      mass.assign(market->size(), Rational(0));
      open = true;
      header_line = line_no;
      continue;
    }
    if (!open)
      throw ParseError("record before the first 'segment' header", line_no);
    if (tokens.size() != 2)
      throw ParseError("expected '<value> <mass>'", line_no);
    const Rational value = parse_rational(tokens[0], line_no);
    const Rational m = parse_rational(tokens[1], line_no);
    std::size_t idx;
    try {
      idx = market->index_of(value);
    } catch (const Error&) {
      throw ValidationError("line " + std::to_string(line_no) + ": value " +
                            value.str() + " is not in the market");
    }
    if (m.is_negative())
      throw ValidationError("line " + std::to_string(line_no) +
                            ": masses must be non-negative");
    if (mass[idx].is_positive())
      throw ValidationError("line " + std::to_string(line_no) +
                            ": duplicate value " + value.str() + " in segment");
    mass[idx] = m;
  }
  close_segment();
  if (segments.empty())
    throw ValidationError("segmentation file defines no segments");
  return Segmentation(std::move(segments));
}

void write_market(std::ostream& out, const Market& market) {
  for (std::size_t i = 0; i < market.size(); ++i)
    out << market.value(i).str() << ' ' << market.mass(i).str() << '\n';
}

void write_segmentation(std::ostream& out, const Segmentation& s) {
  const Market& mkt = *s.market();
  for (const Segment& seg : s.segments()) {
    out << "segment " << seg.price().str() << '\n';
    for (std::size_t i = 0; i < mkt.size(); ++i)
      if (seg.coalition().mass(i).is_positive())
        out << mkt.value(i).str() << ' ' << seg.coalition().mass(i).str() << '\n';
  }
}

void write_transport_plan(std::ostream& out, const TransportPlan& plan) {
  const std::size_t n = plan.source().market()->size();
  for (std::size_t a = 0; a < plan.source().size(); ++a)
    for (std::size_t b = 0; b < plan.target().size(); ++b)
      for (std::size_t i = 0; i < n; ++i)
        if (plan.flow(a, b, i).is_positive())
          out << "flow " << a << ' ' << b << ' '
              << plan.source().market()->value(i).str() << ' '
              << plan.flow(a, b, i).str() << '\n';
}

}  // namespace segstab
