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

#include <functional>
#include <map>
#include <set>

#include <gtest/gtest.h>

#include "loopforge/classes.hpp"
#include "loopforge/extension.hpp"
#include "loopforge/fixtures.hpp"
#include "loopforge/isomorphism.hpp"
#include "loopforge/search.hpp"
#include "oracles.hpp"

namespace loopforge {
namespace {

using Pred = std::function<bool(const LoopTable&)>;

bool every_elem(const LoopTable& q, bool (*p)(const LoopTable&, Elem)) {
  for (Elem c = 0; c < q.order(); ++c)
    if (!p(q, c)) return false;
  return true;
}

bool flexible(const LoopTable& q) {
  for (Elem x = 0; x < q.order(); ++x)
    for (Elem y = 0; y < q.order(); ++y)
      if (q(x, q(y, x)) != q(q(x, y), x)) return false;
  return true;
}

// Loop-level predicates from the raw definitions.
const std::map<Law, Pred>& oracles() {
  static const std::map<Law, Pred> m = {
      {Law::lcc, [](const LoopTable& q) { return oracle::lcc(q); }},
      {Law::rcc, [](const LoopTable& q) { return oracle::rcc(q); }},
      {Law::pa, [](const LoopTable& q) { return every_elem(q, oracle::power_associative_elem); }},
      {Law::extra, [](const LoopTable& q) { return every_elem(q, oracle::extra_elem); }},
      {Law::moufang, [](const LoopTable& q) { return every_elem(q, oracle::moufang_elem); }},
      {Law::wip, [](const LoopTable& q) { return every_elem(q, oracle::wip_elem); }},
      {Law::flexible, flexible},
  };
  return m;
}

const std::vector<LoopTable>& all_loops(int n) {
  static std::map<int, std::vector<LoopTable>> cache;
  auto& v = cache[n];
  if (v.empty()) v = oracle::reduced_latin_squares(n);
  return v;
}

std::vector<LoopTable> filtered(int n, const std::vector<Law>& laws, bool nonassoc) {
  std::vector<LoopTable> out;
  for (const auto& q : all_loops(n)) {
    bool ok = !nonassoc || !oracle::associative(q);
    for (const Law l : laws) ok = ok && oracles().at(l)(q);
    if (ok) out.push_back(q);
  }
  return out;
}

SearchResult run(int n, std::vector<Law> laws, bool up_to_iso, bool symmetry,
                 bool nonassoc = false, int jobs = 1) {
  SearchSpec s;
  s.order = n;
  s.laws = std::move(laws);
  s.all_loops = s.laws.empty();
  s.up_to_iso = up_to_iso;
  s.symmetry_breaking = symmetry;
  s.nonassociative_only = nonassoc;
  s.jobs = jobs;
  return search(s);
}

TEST(LawParsing, NamesAndAliases) {
  EXPECT_EQ(parse_laws("cc"), (std::vector<Law>{Law::lcc, Law::rcc}));
  EXPECT_EQ(parse_laws("pa,flex"), (std::vector<Law>{Law::pa, Law::flexible}));
  EXPECT_EQ(parse_law("moufang"), Law::moufang);
  EXPECT_FALSE(parse_law("alternative").has_value());
  EXPECT_THROW(parse_laws("cc,bogus"), std::invalid_argument);
  for (const Law l : {Law::lcc, Law::rcc, Law::pa, Law::extra, Law::moufang, Law::wip,
                      Law::flexible})
    EXPECT_EQ(parse_law(to_string(l)), l);
}

TEST(LawParsing, SatisfiesLawMatchesRawDefinitions) {
  for (const auto& q : all_loops(5))
    for (const auto& [law, pred] : oracles()) EXPECT_EQ(satisfies_law(q, law), pred(q));
  for (const auto& q : {cc16_loop(), pacc16_loop(), family16(1, 1), poly2_4()})
    for (const auto& [law, pred] : oracles()) EXPECT_EQ(satisfies_law(q, law), pred(q));
}

TEST(Validate, RejectsBadSpecs) {
  SearchSpec s;
  s.order = 0;
  EXPECT_THROW(validate(s), std::invalid_argument);
  s.order = 65;
  s.laws = {Law::lcc};
  EXPECT_THROW(validate(s), std::invalid_argument);
  s.order = 5;
  s.laws.clear();
  EXPECT_THROW(validate(s), std::invalid_argument);
  s.all_loops = true;
  EXPECT_NO_THROW(validate(s));
  s.jobs = 0;
  EXPECT_THROW(validate(s), std::invalid_argument);
  s.jobs = 1;
  s.budget_seconds = 0;
  EXPECT_THROW(validate(s), std::invalid_argument);
}

TEST(Search, CountsAllLoopsWithoutSymmetryBreaking) {
  for (int n = 1; n <= 6; ++n) {
    const auto r = run(n, {}, false, false);
    EXPECT_EQ(r.status, SearchStatus::complete);
    EXPECT_EQ(r.count, static_cast<long long>(all_loops(n).size())) << n;
  }
}

TEST(Search, FindsEveryClassWithSymmetryBreaking) {
  for (int n = 1; n <= 6; ++n) {
    const auto r = run(n, {}, true, true);
    EXPECT_EQ(r.loops.size(), dedupe(all_loops(n)).representatives.size()) << n;
  }
}

TEST(Search, LawFiltersMatchBruteForce) {
  const std::vector<std::vector<Law>> law_sets = {
      {Law::lcc},     {Law::rcc},   {Law::lcc, Law::rcc}, {Law::pa},
      {Law::extra},   {Law::moufang}, {Law::wip},         {Law::flexible},
      {Law::lcc, Law::pa}};
  for (int n = 4; n <= 6; ++n)
    for (const auto& laws : law_sets) {
      const auto expect = filtered(n, laws, false);
      const auto labeled = run(n, laws, false, false);
      EXPECT_EQ(labeled.count, static_cast<long long>(expect.size()))
          << "n=" << n << " first law " << to_string(laws.front());
      const auto classes = run(n, laws, true, true);
      EXPECT_EQ(classes.loops.size(), dedupe(expect).representatives.size())
          << "n=" << n << " first law " << to_string(laws.front());
      for (const auto& q : classes.loops)
        for (const Law l : laws) EXPECT_TRUE(oracles().at(l)(q));
    }
}

TEST(Search, NonassociativeFilter) {
  const auto expect = filtered(6, {Law::flexible}, true);
  const auto r = run(6, {Law::flexible}, false, false, true);
  EXPECT_EQ(r.count, static_cast<long long>(expect.size()));
  for (const auto& q : r.loops) EXPECT_FALSE(oracle::associative(q));
}

TEST(Search, ResultIndependentOfJobs) {
  const auto a = run(6, {}, true, true, false, 1);
  const auto b = run(6, {}, true, true, false, 4);
  ASSERT_EQ(a.loops.size(), b.loops.size());
  for (std::size_t k = 0; k < a.loops.size(); ++k) EXPECT_EQ(a.loops[k], b.loops[k]);
  const auto c = run(6, {}, false, false, false, 3);
  EXPECT_EQ(c.count, static_cast<long long>(all_loops(6).size()));
}

TEST(Search, ImpliedConstraintsDoNotChangeResults) {
  EXPECT_EQ(implied_laws({Law::extra}), (std::vector<Law>{Law::lcc, Law::rcc}));
  EXPECT_TRUE(implied_laws({Law::moufang, Law::pa}).empty());
  for (int n = 4; n <= 12; ++n) {
    SearchSpec s;
    s.order = n;
    s.laws = {Law::extra};
    s.up_to_iso = true;
    SearchSpec plain = s;
    plain.implied_constraints = false;
    const auto a = search(s), b = search(plain);
    ASSERT_EQ(a.loops.size(), b.loops.size()) << n;
    for (std::size_t k = 0; k < a.loops.size(); ++k) EXPECT_EQ(a.loops[k], b.loops[k]) << n;
    if (n <= 7) {
      s.up_to_iso = plain.up_to_iso = false;
      s.symmetry_breaking = plain.symmetry_breaking = false;
      EXPECT_EQ(search(s).count, search(plain).count) << n;
    }
  }
}

TEST(Search, OrderEightCcPaLoopsAreGroups) {
  const auto r = run(8, {Law::lcc, Law::rcc, Law::pa}, true, true, true);
  EXPECT_EQ(r.status, SearchStatus::complete);
  EXPECT_EQ(r.loops.size(), 0u);
  // The groups of order 8 are all found when associative ones are kept.
  EXPECT_EQ(run(8, {Law::lcc, Law::rcc, Law::pa}, true, true).loops.size(), 5u);
}

TEST(Search, OrderTwelveCcPaLoopsAreGroups) {
  const auto r = run(12, {Law::lcc, Law::rcc, Law::pa}, true, true);
  EXPECT_EQ(r.status, SearchStatus::complete);
  EXPECT_EQ(r.loops.size(), 5u);
  for (const auto& q : r.loops) EXPECT_TRUE(oracle::associative(q));
}

TEST(Search, LimitAndBudget) {
  SearchSpec s;
  s.order = 6;
  s.all_loops = true;
  s.limit = 5;
  const auto r = search(s);
  EXPECT_EQ(r.status, SearchStatus::limit_reached);
  EXPECT_EQ(r.count, 5);

  SearchSpec t;
  t.order = 16;
  t.laws = {Law::extra};
  t.budget_seconds = 0.2;
  t.count_only = true;
  const auto u = search(t);
  EXPECT_EQ(u.status, SearchStatus::timeout);
  EXPECT_LT(u.seconds, 5.0);
}

TEST(IncrementalLawCheck, DetectsCorruptedCellOfCcSixteenLoop) {
  const auto q = cc16_loop();
  auto t = PartialTable::from_table(q);
  for (Elem x = 0; x < 16; x += 5)
    for (Elem y = 0; y < 16; y += 3) {
      EXPECT_TRUE(incremental_law_check(t, Law::lcc, x, y));
      EXPECT_TRUE(incremental_law_check(t, Law::rcc, x, y));
    }
  // Element 12 is not power-associative, so its own instance fails.
  EXPECT_FALSE(incremental_law_check(t, Law::pa, 12, 12));
  EXPECT_TRUE(incremental_law_check(t, Law::pa, 4, 4));

  const Elem row = 5, col = 9;
  const Elem old = t.at(row, col);
  t.cells[static_cast<std::size_t>(row * 16 + col)] = (old + 1) % 16;
  EXPECT_FALSE(incremental_law_check(t, Law::lcc, row, col));
  EXPECT_FALSE(incremental_law_check(t, Law::rcc, row, col));
}

TEST(IncrementalLawCheck, UndeterminedInstancesAreSkipped) {
  auto t = PartialTable::with_identity(6);
  t.cells[1 * 6 + 1] = 2;
  for (const Law l : {Law::lcc, Law::rcc, Law::extra, Law::moufang, Law::flexible})
    EXPECT_TRUE(incremental_law_check(t, l, 1, 1));
  EXPECT_THROW(incremental_law_check(t, Law::lcc, 6, 0), std::out_of_range);
}

}  // namespace
}  // namespace loopforge
