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

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "loopforge/classes.hpp"
#include "loopforge/table.hpp"

namespace loopforge {

/// A subset of a loop's elements, stored sorted together with a membership
/// mask. Produced by the functions below, which guarantee closure.
class Subloop {
 public:
  Subloop() = default;
  Subloop(int parent_order, ElementSet elements);

  const ElementSet& elements() const noexcept { return elements_; }
  int order() const noexcept { return static_cast<int>(elements_.size()); }
  int parent_order() const noexcept { return static_cast<int>(mask_.size()); }
  bool contains(Elem x) const { return mask_[static_cast<std::size_t>(x)] != 0; }

  friend bool operator==(const Subloop& a, const Subloop& b) {
    return a.elements_ == b.elements_;
  }

 private:
  ElementSet elements_;
  std::vector<std::uint8_t> mask_;
};

/// Least subloop containing `gens` (0 is always included). Closes under the
/// product and both inverses, which is sufficient in any finite loop.
Subloop generate_subloop(const LoopTable& q, std::span<const Elem> gens);

struct Nuclei {
  Subloop left;    ///< (a,x,y) == 0 for all x, y
  Subloop middle;  ///< (x,a,y) == 0
  Subloop right;   ///< (x,y,a) == 0
  Subloop nucleus;
};

Nuclei nuclei(const LoopTable& q);
Subloop nucleus(const LoopTable& q);
/// Nuclear elements commuting with every element.
Subloop center(const LoopTable& q);
/// Subloop generated by all associators.
Subloop associator_subloop(const LoopTable& q);

/// Invariance under every T_x, R(x,y), L(x,y). `h` must be closed.
bool is_normal(const LoopTable& q, const Subloop& h);

/// Coset index of every element, with cosets numbered by increasing minimal
/// representative (the subloop itself is coset 0).
std::vector<int> coset_labels(const LoopTable& q, const Subloop& h);

/// Cayley table on the cosets of a normal subloop, cosets ordered as in
/// coset_labels. Throws std::invalid_argument when h is not normal.
LoopTable quotient(const LoopTable& q, const Subloop& h);

/// Subloop as a loop in its own right, elements renumbered in sorted order.
LoopTable subloop_table(const LoopTable& q, const Subloop& h);

/// Least k with x^k == 0 for every x; requires every element to generate a
/// group (throws AmbiguousPower otherwise).
int exponent(const LoopTable& q);

/// Raised when a permutation-group closure would exceed its cap.
class CapExceeded : public LoopError {
 public:
  CapExceeded(const std::string& what, std::size_t partial)
      : LoopError(what), partial_(partial) {}
  std::size_t partial() const noexcept { return partial_; }

 private:
  std::size_t partial_;
};

/// Elements of the permutation group generated by `gens` on n points,
/// sorted. Throws CapExceeded after `cap` elements.
std::vector<Perm> perm_group_closure(int n, std::span<const Perm> gens, std::size_t cap);

/// True iff every pair of listed permutations commutes.
bool pairwise_commute(std::span<const Perm> perms);

struct GroupSummary {
  std::size_t order = 0;
  bool abelian = false;
};

constexpr std::size_t kDefaultGroupCap = 1'000'000;

GroupSummary mlt_group(const LoopTable& q, std::size_t cap = kDefaultGroupCap);
GroupSummary inn_group(const LoopTable& q, std::size_t cap = kDefaultGroupCap);

struct InnerMappingReport {
  GroupSummary rinn;
  GroupSummary linn;
  bool rinn_equals_linn = false;
};

/// Groups generated by the R(x,y) and by the L(x,y), compared as sets.
InnerMappingReport inner_mapping_report(const LoopTable& q,
                                        std::size_t cap = kDefaultGroupCap);

struct StructureReport {
  Nuclei nuclei;
  Subloop center;
  Subloop associator_subloop;
  bool nucleus_normal = false;
  std::optional<GroupSummary> inn;  ///< empty when the cap was hit
  std::optional<GroupSummary> mlt;
  std::optional<LoopTable> quotient_mod_nucleus;  ///< when N is normal
  std::optional<int> exponent_mod_nucleus;        ///< when Q/N is a group
  bool quotient_is_abelian_group = false;
};

StructureReport structure_report(const LoopTable& q, std::size_t cap = kDefaultGroupCap);

}  // namespace loopforge
