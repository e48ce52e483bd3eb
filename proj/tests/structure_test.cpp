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

#include <algorithm>

#include <gtest/gtest.h>

#include "loopforge/classes.hpp"
#include "loopforge/extension.hpp"
#include "loopforge/fixtures.hpp"
#include "loopforge/structure.hpp"
#include "oracles.hpp"

namespace loopforge {
namespace {

std::vector<LoopTable> sample() {
  std::vector<LoopTable> out = {cc16_loop(),  pacc16_loop(),      family16(0, 0),
                                family16(3, 1), family27(1, 1, 0, 2, 0), dihedral8(),
                                quaternion8(),  direct_product(cyclic(3), elem2(2))};
  for (std::uint64_t seed = 1; seed <= 3; ++seed)
    out.push_back(oracle::random_relabel(cc16_loop(), seed));
  return out;
}

TEST(Nuclei, MatchDefinitions) {
  for (const auto& q : sample()) {
    const auto nu = nuclei(q);
    EXPECT_EQ(nu.left.elements(), oracle::left_nucleus(q));
    EXPECT_EQ(nu.middle.elements(), oracle::middle_nucleus(q));
    EXPECT_EQ(nu.right.elements(), oracle::right_nucleus(q));
    EXPECT_EQ(nu.nucleus.elements(), oracle::nucleus(q));
    EXPECT_EQ(nucleus(q), nu.nucleus);
    EXPECT_EQ(center(q).elements(), oracle::center(q));
  }
}

TEST(Nuclei, MatchDefinitionsOnAllOrderFiveLoops) {
  for (const auto& q : oracle::reduced_latin_squares(5)) {
    EXPECT_EQ(nucleus(q).elements(), oracle::nucleus(q));
    EXPECT_EQ(center(q).elements(), oracle::center(q));
  }
}

TEST(Subloops, GenerationMatchesClosure) {
  for (const auto& q : sample())
    for (Elem a = 1; a < q.order(); a += 3)
      for (Elem b = 2; b < q.order(); b += 5) {
        const Elem gens[2] = {a, b};
        EXPECT_EQ(generate_subloop(q, gens).elements(), oracle::closure(q, {a, b}));
      }
}

TEST(Subloops, NormalityMatchesCosetDefinition) {
  for (const auto& q : sample()) {
    std::vector<Subloop> subs = {nucleus(q), center(q), associator_subloop(q)};
    for (Elem a = 1; a < q.order(); a += 2) {
      const Elem g[1] = {a};
      subs.push_back(generate_subloop(q, g));
    }
    for (const auto& h : subs)
      EXPECT_EQ(is_normal(q, h), oracle::normal_subloop(q, h.elements()))
          << q.name() << " " << h.order();
  }
}

TEST(Subloops, AssociatorSubloopContainsEveryAssociator) {
  for (const auto& q : sample()) {
    const auto a = associator_subloop(q);
    oracle::Set gens;
    for (Elem x = 0; x < q.order(); ++x)
      for (Elem y = 0; y < q.order(); ++y)
        for (Elem z = 0; z < q.order(); ++z) gens.push_back(associator(q, x, y, z));
    std::sort(gens.begin(), gens.end());
    gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
    EXPECT_EQ(a.elements(), oracle::closure(q, gens));
  }
}

TEST(Quotients, CosetProductIsWellDefined) {
  for (const auto& q : sample()) {
    const auto n = nucleus(q);
    if (!is_normal(q, n)) continue;
    const auto label = coset_labels(q, n);
    const auto qn = quotient(q, n);
    EXPECT_EQ(qn.order() * n.order(), q.order());
    for (Elem x = 0; x < q.order(); ++x)
      for (Elem y = 0; y < q.order(); ++y)
        EXPECT_EQ(qn(label[static_cast<std::size_t>(x)], label[static_cast<std::size_t>(y)]),
                  label[static_cast<std::size_t>(q(x, y))]);
  }
}

TEST(Quotients, NonNormalSubloopIsRejected) {
  const auto d = dihedral8();
  for (Elem a = 1; a < 8; ++a) {
    const Elem g[1] = {a};
    const auto h = generate_subloop(d, g);
    if (oracle::normal_subloop(d, h.elements())) continue;
    EXPECT_THROW(quotient(d, h), std::invalid_argument);
    return;
  }
  FAIL() << "dihedral group of order 8 has a non-normal subgroup";
}

TEST(Quotients, CcLoopsModNucleusAreAbelianGroups) {
  for (const auto& q : sample()) {
    if (!is_cc(q)) continue;
    const auto r = structure_report(q);
    EXPECT_TRUE(r.nucleus_normal) << q.name();
    ASSERT_TRUE(r.quotient_mod_nucleus.has_value());
    EXPECT_TRUE(oracle::associative(*r.quotient_mod_nucleus));
    EXPECT_TRUE(r.quotient_is_abelian_group);
  }
}

TEST(PermutationGroups, MultiplicationGroupOrders) {
  // For a group G, Mlt(G) has order |G|^2 / |Z(G)| and Inn(G) is G / Z(G).
  const auto d = dihedral8();
  EXPECT_EQ(mlt_group(d).order, 32u);
  EXPECT_EQ(inn_group(d).order, 4u);
  EXPECT_EQ(mlt_group(cyclic(7)).order, 7u);
  EXPECT_TRUE(mlt_group(cyclic(7)).abelian);
  for (const auto& q : {cc16_loop(), family27(0, 1, 1, 0, 0), quaternion8()})
    EXPECT_EQ(mlt_group(q).order, oracle::mlt_order(q)) << q.name();
}

TEST(PermutationGroups, CapIsEnforced) {
  const Perm gens[2] = {Perm({1, 2, 3, 4, 5, 0}), Perm({1, 0, 2, 3, 4, 5})};
  EXPECT_EQ(perm_group_closure(6, gens, 1000).size(), 720u);
  EXPECT_THROW(perm_group_closure(6, gens, 100), CapExceeded);
}

TEST(PermutationGroups, RightAndLeftInnerMapsGenerateTheSameGroupInCcLoops) {
  for (const auto& q : {cc16_loop(), family16(1, 2), family27(2, 0, 1, 1, 1)}) {
    const auto r = inner_mapping_report(q);
    EXPECT_TRUE(r.rinn_equals_linn) << q.name();
    EXPECT_EQ(r.rinn.order, r.linn.order);
  }
}

TEST(Exponent, MatchesElementOrders) {
  EXPECT_EQ(exponent(cyclic(12)), 12);
  EXPECT_EQ(exponent(direct_product(cyclic(4), cyclic(6))), 12);
  EXPECT_EQ(exponent(elem2(3)), 2);
  EXPECT_THROW(exponent(cc16_loop()), AmbiguousPower);
}

TEST(SubloopTable, IsALoop) {
  const auto q = pacc16_loop();
  const auto t = subloop_table(q, nucleus(q));
  EXPECT_EQ(t.order(), 4);
  EXPECT_TRUE(oracle::associative(t));
}

}  // namespace
}  // namespace loopforge
