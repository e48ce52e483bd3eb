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

#pragma once

#include <array>
#include <compare>
#include <map>
#include <utility>
#include <optional>
#include <vector>

#include "loopforge/table.hpp"

namespace loopforge {

/// Per-element isomorphism invariant.
using ElementProfile = std::array<int, 8>;

/// Isomorphism invariants of a whole loop. Equal for isomorphic loops.
struct IsoInvariants {
  int n = 0;
  int nucleus = 0;
  int center = 0;
  int square_zero = 0;  ///< |{x : x*x == 0}|
  int wip = 0;
  int moufang = 0;
  int pseudo = 0;
  int extra = 0;
  std::vector<ElementProfile> profile;  ///< sorted multiset of element profiles

  friend auto operator<=>(const IsoInvariants&, const IsoInvariants&) = default;
  friend bool operator==(const IsoInvariants&, const IsoInvariants&) = default;
};

/// Profile of every element: closure size of <x>, commuting count, x*x == 0,
/// left-normed cycle length, nuclear flags, number of square roots, and the
/// closure size of <x*x>.
std::vector<ElementProfile> element_profiles(const LoopTable& q);

IsoInvariants iso_invariants(const LoopTable& q);

/// True iff p is a bijection with p(xy) == p(x)p(y), viewed from a into b.
bool is_isomorphism(const LoopTable& a, const LoopTable& b, const Perm& p);

/// A witness p with p(x*y) == p(x)*p(y), mapping elements of a to elements
/// of b, or nothing when the loops are not isomorphic.
std::optional<Perm> are_isomorphic(const LoopTable& a, const LoopTable& b);

/// Extends gens[i] -> images[i] to a map from <gens> in a into b by closing
/// under products. Returns the map when it is a well-defined isomorphism
/// onto b, nothing otherwise.
std::optional<Perm> extend_generator_map(const LoopTable& a, const LoopTable& b,
                                         const std::vector<Elem>& gens,
                                         const std::vector<Elem>& images);

/// The copy of q with every element x renamed p(x). If p moves 0 the result
/// is renormalized so that the identity is 0 again.
LoopTable relabel(const LoopTable& q, const Perm& p);

/// Greedy small generating set: each pick maximizes the generated subloop.
std::vector<Elem> greedy_generators(const LoopTable& q);

struct DedupeResult {
  /// One loop per class: the member with the smallest serialization, sorted
  /// by serialization.
  std::vector<LoopTable> representatives;
  /// For every input loop, the index of its class in `representatives`.
  std::vector<int> class_of;
};

/// Incremental isomorphism classification of loops of one order. Each class
/// keeps the member with the smallest serialization seen so far.
class IsoClassifier {
 public:
  /// Returns the class index of q and whether q opened a new class.
  std::pair<int, bool> add(const LoopTable& q);

  int size() const noexcept { return static_cast<int>(reps_.size()); }
  const LoopTable& representative(int k) const { return reps_[static_cast<std::size_t>(k)]; }
  /// Representatives sorted by serialization.
  std::vector<LoopTable> sorted_representatives() const;

 private:
  std::map<IsoInvariants, std::vector<int>> buckets_;
  std::vector<LoopTable> reps_;
};

/// Partitions loops of one order into isomorphism classes. The result does
/// not depend on the input order.
DedupeResult dedupe(const std::vector<LoopTable>& loops);

}  // namespace loopforge
