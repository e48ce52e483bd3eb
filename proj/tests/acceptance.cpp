// Copyright 2026 The Loopforge Authors
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

// Acceptance runner: one PASS/FAIL/SKIP line per criterion.
//
//   acceptance [--long] [--only 1,5,7]
//
// Criteria 3 and 10 are long-running and are skipped without --long.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <set>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "loopforge/audit.hpp"
#include "loopforge/classes.hpp"
#include "loopforge/classify.hpp"
#include "loopforge/extension.hpp"
#include "loopforge/fixtures.hpp"
#include "loopforge/isomorphism.hpp"
#include "loopforge/search.hpp"
#include "loopforge/structure.hpp"
#include "oracles.hpp"

namespace lf = loopforge;

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

struct Criterion {
  int id;
  std::string title;
  bool long_running;
  double limit_seconds;
  std::function<Outcome()> run;
};

lf::ElementSet range(lf::Elem lo, lf::Elem hi) {
  lf::ElementSet s;
  for (lf::Elem x = lo; x <= hi; ++x) s.push_back(x);
  return s;
}

Outcome order27() {
  auto r = lf::classify_order27();
  std::ostringstream d;
  d << r.classes.size() << " classes, " << r.aip_classes << " with AIP, cases I/II/III = "
    << r.case_counts["I"] << "/" << r.case_counts["II"] << "/" << r.case_counts["III"];
  const bool ok = r.classes.size() == 8 && r.aip_classes == 4 && r.case_counts["I"] == 2 &&
                  r.case_counts["II"] == 2 && r.case_counts["III"] == 4;
  return {ok, d.str()};
}

Outcome order16_trio() {
  const auto r = lf::classify_order16();
  bool ok = r.trio.size() == 3 && r.trio_pairwise_nonisomorphic;
  for (const auto& t : r.trio) ok = ok && t.pacc && t.nonassociative && !t.extra;
  for (const auto& t : r.trio) {
    bool pa = true;
    for (lf::Elem c = 0; c < 16; ++c) pa = pa && oracle::power_associative_elem(t.table, c);
    ok = ok && pa && oracle::lcc(t.table) && oracle::rcc(t.table) &&
         !oracle::associative(t.table);
  }
  ok = ok && r.q_classes == 2 && r.parity_rule_holds;
  std::ostringstream d;
  d << "trio nonassociative PACC non-extra, pairwise nonisomorphic: "
    << (r.trio_pairwise_nonisomorphic ? "yes" : "no") << "; Q_{r,s} classes " << r.q_classes
    << ", parity rule " << (r.parity_rule_holds ? "holds" : "fails");
  return {ok, d.str()};
}

Outcome extra_census() {
  lf::Order16Options opt;
  opt.census = true;
  opt.budget_seconds = 1800.0;
  const auto r = lf::classify_order16(opt);
  std::ostringstream d;
  d << "status " << lf::to_string(r.census_status) << ", " << r.extra_classes.size()
    << " extra classes in " << r.census_seconds << " s, total PACC classes " << r.total_classes;
  bool ok = r.census_status == lf::SearchStatus::complete && r.extra_classes.size() == 5 &&
            r.total_classes == 8;

  // Independent check: search all nonassociative PACC loops of order 16 and
  // match each class against the trio and the extra census.
  std::vector<lf::LoopTable> known;
  for (const auto& t : r.trio) known.push_back(t.table);
  for (const auto& t : r.extra_classes) known.push_back(t.table);
  lf::SearchSpec s;
  s.order = 16;
  s.laws = {lf::Law::lcc, lf::Law::rcc, lf::Law::pa};
  s.nonassociative_only = true;
  s.up_to_iso = true;
  s.budget_seconds = 1800.0 - r.census_seconds;
  const auto found = lf::search(s);
  int matched = 0;
  for (const auto& q : found.loops)
    for (const auto& k : known)
      if (lf::are_isomorphic(q, k)) {
        ++matched;
        break;
      }
  d << "; PACC search " << lf::to_string(found.status) << ", " << found.loops.size()
    << " classes, " << matched << " matched, " << found.seconds << " s";
  ok = ok && found.status == lf::SearchStatus::complete && found.loops.size() == 8 &&
       matched == 8;
  return {ok, d.str()};
}

Outcome order8_empty() {
  lf::SearchSpec s;
  s.order = 8;
  s.laws = {lf::Law::lcc, lf::Law::rcc, lf::Law::pa};
  s.nonassociative_only = true;
  s.budget_seconds = 600.0;
  const auto r = lf::search(s);
  std::ostringstream d;
  d << "status " << lf::to_string(r.status) << ", " << r.count << " loops, " << r.nodes
    << " nodes";
  return {r.status == lf::SearchStatus::complete && r.count == 0, d.str()};
}

Outcome cc16_facts() {
  const auto q = lf::cc16_loop();
  const auto c = lf::classify_elements(q);
  const auto w = c.wip_set;
  const lf::Elem cube = q(q(4, 4), 4);
  const bool four_not_in_w = std::find(w.begin(), w.end(), cube) == w.end();
  const bool ok =
      lf::center(q).elements() == lf::ElementSet{0, 1} &&
      lf::nucleus(q).elements() == range(0, 3) && w == range(0, 3) && c.extra_set == range(0, 7) &&
      c.moufang_set == range(0, 7) && c.pseudo_set == lf::ElementSet{0, 1, 2, 3, 8, 9, 10, 11} &&
      c.pa_set == range(0, 11) && !c.pa_set_is_subloop &&
      oracle::closure(q, c.pa_set) != c.pa_set && oracle::extra_elem(q, 4) &&
      oracle::power_associative_elem(q, 4) && !oracle::wip_elem(q, 4) && cube == 4 && four_not_in_w;
  return {ok, ok ? "Z, N, W, Ex, M, P and PA sets exact; 4 is extra, PA, not WIP, 4^3 = 4"
                 : "mismatch in element classes"};
}

Outcome audit_sweep() {
  const auto loops = lf::corpus();
  int failures = 0, checks = 0;
  std::string first;
  for (const auto& q : loops) {
    const auto r = lf::audit(q);
    failures += r.failures();
    checks += r.count(lf::CheckStatus::pass) + r.failures();
    if (first.empty())
      for (const auto& c : r.checks)
        if (c.status == lf::CheckStatus::fail) {
          first = q.name() + ": " + c.name + " " + c.detail;
          break;
        }
  }
  std::ostringstream d;
  d << loops.size() << " loops, " << checks << " evaluated checks, " << failures << " failures";
  if (!first.empty()) d << "; first: " << first;
  return {loops.size() >= 270 && failures == 0, d.str()};
}

Outcome extension_criterion() {
  const auto g = lf::FinAbGroup::cyclic(6);
  int agree = 0, pa = 0;
  for (long long u = 0; u < 6; ++u)
    for (long long v = 0; v < 6; ++v) {
      const bool brute = oracle::rank2_window_power_associative(u, v, 6);
      const bool formula = (3 * u - 3 * v) % 6 == 0 && (6 * u) % 6 == 0 && (6 * v) % 6 == 0;
      agree += brute == formula && brute == lf::rank2_pacc_criterion(g, {u}, {v});
      pa += brute;
    }
  std::ostringstream d;
  d << agree << "/36 cases agree, " << pa << " power-associative";
  return {agree == 36, d.str()};
}

Outcome polynomial_forms() {
  const auto r = lf::verify_polynomial_forms();
  int good = 0;
  for (const auto& c : r.checks) good += c.isomorphic && c.generator_map_extends;
  std::ostringstream d;
  d << good << "/" << r.checks.size() << " isomorphisms hold";
  return {r.checks.size() == 17 && r.all_hold(), d.str()};
}

Outcome aip_criterion() {
  int agree = 0, total = 0, aip = 0;
  for (const auto& p : lf::all_family27_params()) {
    const auto q = lf::family27(p);
    bool brute = true;
    for (lf::Elem x = 0; x < 27 && brute; ++x)
      for (lf::Elem y = 0; y < 27 && brute; ++y)
        brute = oracle::rho(q, q(x, y)) == q(oracle::rho(q, x), oracle::rho(q, y));
    const bool lib = lf::has_aip(q);
    agree += lib == brute && brute == lf::check_aip_criterion(p);
    aip += brute;
    ++total;
  }
  std::ostringstream d;
  d << agree << "/" << total << " tuples agree, " << aip << " with AIP";
  return {total == 243 && agree == 243, d.str()};
}

Outcome order27_search() {
  lf::SearchSpec s;
  s.order = 27;
  s.laws = {lf::Law::lcc, lf::Law::rcc, lf::Law::pa};
  s.nonassociative_only = true;
  s.up_to_iso = true;
  s.budget_seconds = 1800.0;
  const auto found = lf::search(s);
  const auto known = lf::classify_order27();
  int matched = 0;
  for (const auto& q : found.loops)
    for (const auto& c : known.classes)
      if (lf::are_isomorphic(q, c.representative)) {
        ++matched;
        break;
      }
  const bool consistent = matched == static_cast<int>(found.loops.size());
  std::ostringstream d;
  d << "status " << lf::to_string(found.status) << ", " << found.loops.size()
    << " classes found, " << matched << " match the constructed classes";
  if (found.status != lf::SearchStatus::complete) {
    d << "; budget exhausted, no contradiction found";
    return {consistent, d.str()};
  }
  return {consistent && found.loops.size() == known.classes.size(), d.str()};
}

std::set<int> parse_only(std::string_view list) {
  std::set<int> out;
  std::string item;
  std::istringstream in{std::string(list)};
  while (std::getline(in, item, ',')) out.insert(std::stoi(item));
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  bool run_long = false;
  std::set<int> only;
  for (int k = 1; k < argc; ++k) {
    const std::string_view a = argv[k];
    if (a == "--long") {
      run_long = true;
    } else if (a == "--only" && k + 1 < argc) {
      only = parse_only(argv[++k]);
    } else {
      std::fprintf(stderr, "usage: acceptance [--long] [--only LIST]\n");
      return 2;
    }
  }

  const std::vector<Criterion> criteria = {
      {1, "order-27 classification", false, 30, order27},
      {2, "order-16 non-extra trio and Q_{r,s} parity rule", false, 30, order16_trio},
      {3, "order-16 nonassociative extra census and PACC total", true, 1800, extra_census},
      {4, "order-8 nonassociative PACC search is empty", false, 600, order8_empty},
      {5, "order-16 CC example: element classes", false, 1, cc16_facts},
      {6, "invariant audit over the corpus", false, 300, audit_sweep},
      {7, "rank-two extension criterion on the integer window", false, 10,
       extension_criterion},
      {8, "polynomial-form isomorphisms", false, 30, polynomial_forms},
      {9, "AIP parameter criterion over the order-27 family", false, 30, aip_criterion},
      {10, "order-27 search against the constructed classes", true, 1800, order27_search},
  };

  int failed = 0;
  for (const auto& c : criteria) {
    if (!only.empty() && !only.count(c.id)) continue;
    if (c.long_running && !run_long) {
      std::printf("SKIP %2d %s (long; run with --long)\n", c.id, c.title.c_str());
      continue;
    }
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    // The long criteria enforce their budget inside the search; allow for
    // the setup around it.
    const double slack = c.long_running ? 60.0 : 0.0;
    if (secs > c.limit_seconds + slack) {
      o.pass = false;
      o.detail += "; over the time limit";
    }
    failed += !o.pass;
    std::printf("%s %2d %s: %s [%.2f s, limit %.0f s]\n", o.pass ? "PASS" : "FAIL", c.id,
                c.title.c_str(), o.detail.c_str(), secs, c.limit_seconds);
    std::fflush(stdout);
  }
  return failed == 0 ? 0 : 1;
}
