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

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "segstab/constructions.hpp"
#include "segstab/cooperative.hpp"
#include "segstab/io.hpp"
#include "segstab/oracle.hpp"
#include "segstab/stability.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitParse = 2;
constexpr int kExitValidation = 3;
constexpr int kExitCap = 4;
constexpr int kExitArity = 5;
constexpr int kExitVerifyFailed = 6;

using namespace segstab;

struct Options {
  std::string market_file;
  std::string segmentation_file;
  std::string method;
  std::string output_file;
  std::string format = "human";
  bool canonical = false;
  bool trace = false;
  std::size_t atoms = 0;  // 0: default / env
};

MarketPtr read_market(const std::string& path, std::ostream& diag) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open market file '" + path + "'", 0);
  MarketLoadResult result = load_market(in);
  for (const std::string& w : result.warnings) diag << "warning: " << w << "\n";
  return std::make_shared<const Market>(std::move(result.market));
}

Segmentation read_segmentation(const std::string& path, MarketPtr market) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open segmentation file '" + path + "'", 0);
  return load_segmentation(in, std::move(market));
}

bool machine(const Options& opt) { return opt.format == "machine"; }

void print_segmentation_block(std::ostream& out, const std::string& prefix,
                              const Segmentation& s, bool with_optimal) {
  const Market& mkt = *s.market();
  out << prefix << ".segments " << s.size() << "\n";
  for (std::size_t j = 0; j < s.size(); ++j) {
    const Segment& seg = s.segment(j);
    out << prefix << "." << j << ".price " << seg.price() << "\n";
    if (with_optimal) {
      out << prefix << "." << j << ".optimal_prices";
      for (const Rational& p : optimal_prices(seg.coalition())) out << ' ' << p;
      out << "\n";
    }
    for (std::size_t i = 0; i < mkt.size(); ++i)
      if (seg.coalition().mass(i).is_positive())
        out << prefix << "." << j << ".mass." << mkt.value(i) << ' '
            << seg.coalition().mass(i) << "\n";
  }
}

void print_segmentation_human(std::ostream& out, const std::string& label,
                              const Segmentation& s, bool with_optimal) {
  const Market& mkt = *s.market();
  out << label << " (" << s.size() << " segment" << (s.size() == 1 ? "" : "s") << "):\n";
  for (std::size_t j = 0; j < s.size(); ++j) {
    const Segment& seg = s.segment(j);
    out << "  [" << j << "] price " << seg.price() << "  masses:";
    for (std::size_t i = 0; i < mkt.size(); ++i)
      if (seg.coalition().mass(i).is_positive())
        out << ' ' << mkt.value(i) << ':' << seg.coalition().mass(i);
    if (with_optimal) {
      out << "  optimal prices:";
      for (const Rational& p : optimal_prices(seg.coalition())) out << ' ' << p;
    }
    out << "\n";
  }
}

int cmd_analyze(const Options& opt) {
  MarketPtr market = read_market(opt.market_file, std::cerr);
  Segmentation given = read_segmentation(opt.segmentation_file, market);
  const Segmentation s = opt.canonical ? canonicalize(given) : given;

  const Segmentation canon = canonicalize(s);
  const bool efficient = is_efficient(s);
  const bool saturated_raw = is_saturated(s);
  const bool saturated_canon = is_saturated(canon);
  const bool stable = is_stable(s);
  const Rational acs = average_consumer_surplus(s);
  const Rational rev = seller_revenue(s);
  std::string failing = "none";
  if (!stable) failing = !is_efficient(canon) ? "efficiency" : "saturation (canonical)";

  std::optional<Witness> witness;
  if (!stable) {
    if (!efficient)
      witness = inefficiency_witness(s);
    else
      witness = nonsaturation_witness(s);
  }

  std::ostream& out = std::cout;
  if (machine(opt)) {
    out << "command analyze\n";
    print_segmentation_block(out, "segment", s, true);
    print_segmentation_block(out, "canonical", canon, false);
    out << "efficient " << (efficient ? "true" : "false") << "\n";
    out << "saturated.raw " << (saturated_raw ? "true" : "false") << "\n";
    out << "saturated.canonical " << (saturated_canon ? "true" : "false") << "\n";
    out << "stable " << (stable ? "true" : "false") << "\n";
    out << "failing_condition " << failing << "\n";
    out << "acs " << acs << "\n";
    out << "seller_revenue " << rev << "\n";
    out << "witness.present " << (witness ? "true" : "false") << "\n";
    if (witness) {
      print_segmentation_block(out, "witness", witness->alternative, false);
      std::ostringstream plan;
      write_transport_plan(plan, witness->plan);
      std::istringstream lines(plan.str());
      std::string line;
      while (std::getline(lines, line)) out << "witness." << line << "\n";
    }
  } else {
    print_segmentation_human(out, "segmentation", s, true);
    print_segmentation_human(out, "canonical form", canon, false);
    out << "efficient: " << (efficient ? "yes" : "no") << "\n";
    out << "saturated (as given): " << (saturated_raw ? "yes" : "no") << "\n";
    out << "saturated (canonical): " << (saturated_canon ? "yes" : "no") << "\n";
    out << "stable: " << (stable ? "yes" : "no") << "\n";
    if (!stable) out << "failing condition: " << failing << "\n";
    out << "average consumer surplus: " << acs << "\n";
    out << "seller revenue: " << rev << "\n";
    if (witness) {
      print_segmentation_human(out, "witness (defeats stability)", witness->alternative, false);
      out << "witness plan:\n";
      std::ostringstream plan;
      write_transport_plan(plan, witness->plan);
      std::istringstream lines(plan.str());
      std::string line;
      while (std::getline(lines, line)) out << "  " << line << "\n";
    }
  }
  return kExitOk;
}

int cmd_construct(const Options& opt) {
  MarketPtr market = read_market(opt.market_file, std::cerr);
  Segmentation result = [&]() {
    if (opt.method == "mer") return mer_segmentation(*market).first;
    if (opt.method == "greedy") return greedy_stable_segmentation(*market);
    return two_value_stable(*market);  // "two-value"
  }();

  std::ostringstream body;
  if (opt.trace && opt.method == "mer") {
    const MerTrace trace = mer_segmentation(*market).second;
    for (std::size_t j = 0; j < trace.steps.size(); ++j) {
      const MerStep& st = trace.steps[j];
      body << "# trace: step " << j << " lambda " << st.lambda << " price " << st.price
           << " exhausted";
      for (const std::size_t i : st.exhausted_values) body << ' ' << market->value(i);
      body << "\n";
    }
  }
  write_segmentation(body, result);

  if (opt.output_file.empty()) {
    std::cout << body.str();
  } else {
    std::ofstream out(opt.output_file);
    if (!out) throw ParseError("cannot open output file '" + opt.output_file + "'", 0);
    out << body.str();
    std::cout << "wrote " << opt.output_file << "\n";
  }
  return kExitOk;
}

int cmd_core(const Options& opt) {
  MarketPtr market = read_market(opt.market_file, std::cerr);
  const CoreDescription cd = core_description(*market);
  const std::vector<Rational> opt_prices = optimal_prices(Coalition::full(market));

  if (machine(opt)) {
    std::cout << "command core\n";
    std::cout << "market.optimal_prices";
    for (const Rational& p : opt_prices) std::cout << ' ' << p;
    std::cout << "\n";
    std::cout << "core " << (cd.empty() ? "empty" : "trivial") << "\n";
    if (!cd.empty()) std::cout << "core.price " << *cd.trivial_price << "\n";
  } else {
    if (cd.empty()) {
      std::cout << "core: empty (market optimal price"
                << (opt_prices.size() == 1 ? "" : "s");
      for (const Rational& p : opt_prices) std::cout << ' ' << p;
      std::cout << " != " << market->value(0) << ")\n";
    } else {
      std::cout << "core: trivial at price " << *cd.trivial_price << "\n";
    }
  }
  return kExitOk;
}

std::size_t oracle_cap(const Options& opt) {
  if (opt.atoms > 0) return opt.atoms;
  if (const char* env = std::getenv("SEGSTAB_ORACLE_CAP")) {
    const long v = std::strtol(env, nullptr, 10);
    if (v > 0) return static_cast<std::size_t>(v);
  }
  return kDefaultAtomCap;
}

int cmd_verify(const Options& opt) {
  MarketPtr market = read_market(opt.market_file, std::cerr);
  const std::size_t cap = oracle_cap(opt);
  const AtomizedMarket am = AtomizedMarket::from_market(*market, cap);
  const std::vector<AtomSegmentation> all = enumerate_segmentations(am, cap);

  std::size_t checks = 0, violations = 0;
  auto expect = [&](bool ok, const std::string& what) {
    ++checks;
    if (!ok) {
      ++violations;
      std::cout << "violation: " << what << "\n";
    }
  };

  std::vector<char> stable_flags(all.size());
  std::vector<Segmentation> lifted;
  lifted.reserve(all.size());
  for (std::size_t x = 0; x < all.size(); ++x) {
    lifted.push_back(lift(am, all[x]));
    stable_flags[x] = is_stable(lifted.back()) ? 1 : 0;
  }

  // Stable segmentations block every non-equivalent enumerated alternative.
  for (std::size_t x = 0; x < all.size(); ++x) {
    if (!stable_flags[x]) continue;
    for (std::size_t y = 0; y < all.size(); ++y) {
      if (atom_surplus_equivalent(am, all[x], all[y])) continue;
      expect(atom_blocks(am, all[x], all[y]),
             "stable segmentation fails to block alternative #" + std::to_string(y));
    }
  }

  // Unstable segmentations: the constructed witness, lowered onto the
  // refined grid, escapes blocking.
  for (std::size_t x = 0; x < all.size(); ++x) {
    if (stable_flags[x]) continue;
    std::optional<Witness> w = inefficiency_witness(lifted[x]);
    if (!w) w = nonsaturation_witness(lifted[x]);
    const RefinedInstance refined = lower_witness(am, all[x], *w);
    expect(!atom_blocks(refined.grid, refined.original, refined.witness),
           "unstable segmentation #" + std::to_string(x) + " blocks its witness");
  }

  // Fragmentation-proofness vs efficiency: efficient lifts are immune to
  // within-block objections; inefficient ones are objected to on a grid fine
  // enough to carry the carve-out.
  for (std::size_t x = 0; x < all.size(); ++x) {
    if (is_efficient(lifted[x]))
      expect(atom_fragmentation_proof(am, all[x]),
             "efficient segmentation #" + std::to_string(x) + " has an inside objection");
    else
      expect(fragmentation_objection_on_refined_grid(am, all[x]),
             "no refined inside objection against inefficient #" + std::to_string(x));
  }

  // FOSD-based Pareto dominance against the exhaustive coupling oracle,
  // on a deterministic sample when the enumeration is large.
  const std::size_t stride = all.size() > 120 ? all.size() / 120 + 1 : 1;
  for (std::size_t x = 0; x < all.size(); x += stride)
    for (std::size_t y = 0; y < all.size(); y += stride) {
      const bool fosd = pareto_dominates(lifted[x], lifted[y]);
      const bool coupled = exists_coupling_all_weakly_better(am, all[x], all[y]) &&
                           !atom_surplus_distributions_equal(am, all[x], all[y]);
      expect(fosd == coupled, "FOSD pareto disagrees with coupling search on (" +
                                  std::to_string(x) + "," + std::to_string(y) + ")");
      if (atom_pareto_dominates(am, all[x], all[y]))
        expect(fosd, "identity domination without FOSD domination on (" +
                         std::to_string(x) + "," + std::to_string(y) + ")");
    }

  // Two-value markets: stable = ACS-maximal = Pareto-undominated.
  if (market->size() == 2) {
    Rational best(0);
    for (std::size_t x = 0; x < all.size(); ++x)
      best = Rational::max(best, atom_total_surplus(am, all[x]));
    for (std::size_t x = 0; x < all.size(); ++x) {
      const bool stable_here = atom_stable(am, all[x], all);
      const bool maximal = atom_total_surplus(am, all[x]) == best;
      bool undominated = true;
      for (std::size_t y = 0; y < all.size() && undominated; ++y)
        if (atom_pareto_dominates(am, all[y], all[x])) undominated = false;
      expect(stable_here == maximal,
             "two-value: stable vs ACS-maximal mismatch on #" + std::to_string(x));
      expect(stable_here == undominated,
             "two-value: stable vs Pareto-undominated mismatch on #" + std::to_string(x));
    }
  }

  std::cout << "atoms " << am.atom_count() << "\n";
  std::cout << "segmentations " << all.size() << "\n";
  std::cout << "checks " << checks << "\n";
  std::cout << "violations " << violations << "\n";
  return violations == 0 ? kExitOk : kExitVerifyFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact-arithmetic analysis of stable market segmentations"};
  app.require_subcommand(1);
  Options opt;

  auto add_format = [&](CLI::App* cmd) {
    cmd->add_option("--format", opt.format, "Report format")
        ->check(CLI::IsMember({"human", "machine"}));
  };

  CLI::App* analyze =
      app.add_subcommand("analyze", "Analyze a segmentation of a market");
  analyze->add_option("market", opt.market_file, "Market file")->required();
  analyze->add_option("segmentation", opt.segmentation_file, "Segmentation file")
      ->required();
  analyze->add_flag("--canonical", opt.canonical, "Canonicalize before analyzing");
  add_format(analyze);

  CLI::App* construct =
      app.add_subcommand("construct", "Construct a stable segmentation");
  construct->add_option("market", opt.market_file, "Market file")->required();
  construct->add_option("--method", opt.method, "Construction")
      ->required()
      ->check(CLI::IsMember({"mer", "greedy", "two-value"}));
  construct->add_flag("--trace", opt.trace, "Emit the recursion trace as comments");
  construct->add_option("--output,-o", opt.output_file, "Write to a file");
  add_format(construct);

  CLI::App* core = app.add_subcommand("core", "Describe the core of a market");
  core->add_option("market", opt.market_file, "Market file")->required();
  add_format(core);

  CLI::App* verify =
      app.add_subcommand("verify", "Run the brute-force oracle agreement suite");
  verify->add_option("market", opt.market_file, "Market file")->required();
  verify->add_option("--atoms", opt.atoms, "Atom cap for the enumeration");
  add_format(verify);

  try {
    app.parse(argc, argv);
    if (analyze->parsed()) return cmd_analyze(opt);
    if (construct->parsed()) return cmd_construct(opt);
    if (core->parsed()) return cmd_core(opt);
    if (verify->parsed()) return cmd_verify(opt);
    return kExitUsage;
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  } catch (const ParseError& e) {
    std::cerr << "parse error";
    if (e.line() > 0) std::cerr << " (line " << e.line() << ")";
    std::cerr << ": " << e.what() << "\n";
    return kExitParse;
  } catch (const CapExceededError& e) {
    std::cerr << "cap exceeded: " << e.what() << "\n";
    return kExitCap;
  } catch (const WrongArityError& e) {
    std::cerr << "wrong arity: " << e.what() << "\n";
    return kExitArity;
  } catch (const Error& e) {
    std::cerr << "validation error: " << e.what() << "\n";
    return kExitValidation;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}
