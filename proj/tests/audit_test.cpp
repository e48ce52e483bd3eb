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

#include <set>

#include <gtest/gtest.h>

#include "loopforge/audit.hpp"
#include "loopforge/extension.hpp"
#include "loopforge/fixtures.hpp"
#include "oracles.hpp"

namespace loopforge {
namespace {

std::string failures_of(const AuditReport& r) {
  std::string out;
  for (const auto& c : r.checks)
    if (c.status == CheckStatus::fail) out += c.name + ": " + c.detail + "\n";
  return out;
}

TEST(Audit, FixturesHaveNoFailures) {
  for (const auto& q : {cc16_loop(), pacc16_loop(), family16(0, 0), family16(1, 1),
                        family27(1, 0, 2, 1, 0), poly2_4(), quaternion8(), dihedral8()}) {
    const auto r = audit(q);
    EXPECT_EQ(r.failures(), 0) << q.name() << "\n" << failures_of(r);
    EXPECT_GT(r.count(CheckStatus::pass), 0) << q.name();
  }
}

TEST(Audit, HypothesesMatchRawDefinitions) {
  for (const auto& q : {cc16_loop(), pacc16_loop(), family27(2, 2, 2, 2, 2), cyclic(6)}) {
    const auto r = audit(q);
    bool pa = true;
    for (Elem c = 0; c < q.order(); ++c) pa = pa && oracle::power_associative_elem(q, c);
    const bool cc = oracle::lcc(q) && oracle::rcc(q);
    EXPECT_EQ(r.cc, cc) << q.name();
    EXPECT_EQ(r.pacc, cc && pa) << q.name();
    EXPECT_EQ(r.associative, oracle::associative(q)) << q.name();
  }
}

TEST(Audit, ScopedChecksAreSkippedOutsideTheirHypotheses) {
  // The smallest non-CC loops have order 5.
  int non_cc = 0;
  for (const auto& q : oracle::reduced_latin_squares(5)) {
    if (oracle::lcc(q) && oracle::rcc(q)) continue;
    ++non_cc;
    const auto r = audit(q);
    EXPECT_EQ(r.failures(), 0) << failures_of(r);
    for (const auto& c : r.checks)
      if (c.scope != "any") EXPECT_EQ(c.status, CheckStatus::not_applicable) << c.name;
  }
  EXPECT_GT(non_cc, 0);
}

TEST(Audit, CcSixteenLoopIsCcButNotPacc) {
  const auto r = audit(cc16_loop());
  EXPECT_TRUE(r.cc);
  EXPECT_FALSE(r.pacc);
  for (const auto& c : r.checks) {
    if (c.scope == "cc") EXPECT_NE(c.status, CheckStatus::not_applicable) << c.name;
    if (c.scope == "pacc") EXPECT_EQ(c.status, CheckStatus::not_applicable) << c.name;
  }
}

TEST(Audit, CheckNamesAreUniqueAndScoped) {
  const auto r = audit(family27(0, 1, 2, 0, 1));
  std::set<std::string> names;
  for (const auto& c : r.checks) {
    EXPECT_TRUE(names.insert(c.name).second) << c.name;
    EXPECT_TRUE(c.scope == "any" || c.scope == "cc" || c.scope == "pacc") << c.name;
    EXPECT_EQ(c.detail.empty(), c.status != CheckStatus::fail) << c.name;
  }
  EXPECT_EQ(r.count(CheckStatus::pass) + r.count(CheckStatus::fail) +
                r.count(CheckStatus::not_applicable),
            static_cast<int>(r.checks.size()));
}

}  // namespace
}  // namespace loopforge
