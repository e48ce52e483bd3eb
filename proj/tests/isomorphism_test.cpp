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
#include <numeric>
#include <random>

#include <gtest/gtest.h>

#include "loopforge/extension.hpp"
#include "loopforge/fixtures.hpp"
#include "loopforge/isomorphism.hpp"
#include "oracles.hpp"

namespace loopforge {
namespace {

constexpr std::uint64_t kSeed = 20260418;

Perm random_perm(int n, std::mt19937_64& rng, bool fix_zero) {
  std::vector<Elem> p(static_cast<std::size_t>(n));
  std::iota(p.begin(), p.end(), 0);
  std::shuffle(p.begin() + (fix_zero ? 1 : 0), p.end(), rng);
  return Perm(p);
}

bool witness_is_valid(const LoopTable& a, const LoopTable& b, const Perm& p) {
  for (Elem x = 0; x < a.order(); ++x)
    for (Elem y = 0; y < a.order(); ++y)
      if (p(a(x, y)) != b(p(x), p(y))) return false;
  return true;
}

TEST(Relabel, RoundTripsWithSeededPermutations) {
  std::mt19937_64 rng(kSeed);
  for (const auto& q : {cc16_loop(), pacc16_loop(), family27(1, 2, 0, 1, 2), dihedral8()})
    for (int trial = 0; trial < 5; ++trial) {
      const Perm p = random_perm(q.order(), rng, true);
      const auto r = relabel(q, p);
      EXPECT_TRUE(witness_is_valid(q, r, p));
      EXPECT_EQ(relabel(r, p.inverse()), q);
    }
}

TEST(Relabel, MovingTheIdentityRenormalizes) {
  std::mt19937_64 rng(kSeed + 1);
  const auto q = pacc16_loop();
  for (int trial = 0; trial < 5; ++trial) {
    const auto r = relabel(q, random_perm(q.order(), rng, false));
    for (Elem x = 0; x < r.order(); ++x) EXPECT_EQ(r(0, x), x);
    EXPECT_TRUE(are_isomorphic(q, r).has_value());
  }
}

TEST(AreIsomorphic, FindsValidWitnessForRelabeledCopies) {
  std::uint64_t seed = kSeed;
  for (const auto& q : corpus()) {
    if (q.order() > 27 || q.order() < 4) continue;
    const auto r = oracle::random_relabel(q, ++seed);
    const auto w = are_isomorphic(q, r);
    ASSERT_TRUE(w.has_value()) << q.name();
    EXPECT_TRUE(witness_is_valid(q, r, *w)) << q.name();
    EXPECT_TRUE(is_isomorphism(q, r, *w));
    EXPECT_EQ(iso_invariants(q), iso_invariants(r));
  }
}

TEST(AreIsomorphic, SeparatesKnownNonisomorphicPairs) {
  EXPECT_FALSE(are_isomorphic(cyclic(4), elem2(2)));
  EXPECT_FALSE(are_isomorphic(dihedral8(), quaternion8()));
  EXPECT_FALSE(are_isomorphic(family16(0, 0), family16(1, 1)));
  EXPECT_FALSE(are_isomorphic(cyclic(4), cyclic(5)));
}

TEST(AreIsomorphic, AgreesWithExhaustiveSearchOnOrderFive) {
  const auto all = oracle::reduced_latin_squares(5);
  for (std::size_t i = 0; i < all.size(); i += 7)
    for (std::size_t j = 0; j < all.size(); j += 3)
      EXPECT_EQ(are_isomorphic(all[i], all[j]).has_value(),
                oracle::brute_isomorphism(all[i], all[j]).has_value());
}

TEST(Dedupe, CountsMatchExhaustiveSearch) {
  for (int n = 1; n <= 5; ++n) {
    const auto all = oracle::reduced_latin_squares(n);
    const auto d = dedupe(all);
    EXPECT_EQ(static_cast<int>(d.representatives.size()), oracle::brute_class_count(all)) << n;
    for (std::size_t i = 0; i < all.size(); ++i)
      EXPECT_TRUE(are_isomorphic(all[i], d.representatives[static_cast<std::size_t>(
                                             d.class_of[i])]));
  }
}

TEST(Dedupe, IndependentOfInputOrder) {
  auto all = oracle::reduced_latin_squares(5);
  const auto a = dedupe(all);
  std::mt19937_64 rng(kSeed);
  std::shuffle(all.begin(), all.end(), rng);
  const auto b = dedupe(all);
  ASSERT_EQ(a.representatives.size(), b.representatives.size());
  for (std::size_t k = 0; k < a.representatives.size(); ++k)
    EXPECT_EQ(a.representatives[k], b.representatives[k]);
}

TEST(IsoClassifier, ReportsNewClassesOnce) {
  IsoClassifier c;
  EXPECT_EQ(c.add(family16(0, 0)), std::make_pair(0, true));
  EXPECT_EQ(c.add(family16(1, 1)), std::make_pair(1, true));
  EXPECT_EQ(c.add(family16(2, 0)), std::make_pair(0, false));
  EXPECT_EQ(c.add(oracle::random_relabel(family16(1, 1), kSeed)), std::make_pair(1, false));
  EXPECT_EQ(c.size(), 2);
  const auto reps = c.sorted_representatives();
  EXPECT_TRUE(std::is_sorted(reps.begin(), reps.end(), [](const auto& x, const auto& y) {
    return x.serialize() < y.serialize();
  }));
}

TEST(ExtendGeneratorMap, ExtendsOnlyHomomorphicAssignments) {
  const auto z12 = cyclic(12);
  const auto p = extend_generator_map(z12, z12, {1}, {5});
  ASSERT_TRUE(p.has_value());
  EXPECT_EQ((*p)(2), 10);
  EXPECT_FALSE(extend_generator_map(z12, z12, {1}, {2}).has_value());
  EXPECT_FALSE(extend_generator_map(z12, cyclic(12), {2}, {2}).has_value());
}

TEST(GreedyGenerators, GenerateTheLoop) {
  for (const auto& q : {cc16_loop(), pacc16_loop(), family27(0, 0, 0, 0, 1)}) {
    const auto g = greedy_generators(q);
    EXPECT_EQ(oracle::closure(q, g).size(), static_cast<std::size_t>(q.order()));
  }
}

}  // namespace
}  // namespace loopforge
