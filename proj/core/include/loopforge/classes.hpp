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

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "loopforge/table.hpp"

namespace loopforge {

/// Sorted list of distinct elements.
using ElementSet = std::vector<Elem>;

bool is_lcc(const LoopTable& q);  ///< z(yx) == ((zy)/z)(zx) for all x,y,z
bool is_rcc(const LoopTable& q);  ///< (xy)z == (xz)(z\(yz)) for all x,y,z
bool is_cc(const LoopTable& q);
bool is_associative(const LoopTable& q);
bool is_commutative(const LoopTable& q);

/// On a CC-loop this is c(cc) == (cc)c; otherwise <c> is closed and tested
/// for associativity.
bool is_power_associative_elem(const LoopTable& q, Elem c);
bool is_power_associative(const LoopTable& q);

// Raw quantified identities, valid in any loop.

/// c * rho(x*c) == rho(x) and lam(c*x) * c == lam(x) for all x.
bool satisfies_wip_identity(const LoopTable& q, Elem c);
/// c((xy)c) == (cx)(yc) == (c(xy))c for all x, y.
bool satisfies_moufang_identity(const LoopTable& q, Elem c);
/// z((cx)z) == (zc)(xz) and (z(xc))z == (zx)(cz) for all z, x.
bool satisfies_pseudomoufang_identity(const LoopTable& q, Elem c);
/// c(x(yc)) == ((cx)y)c for all x, y.
bool satisfies_extra_identity(const LoopTable& q, Elem c);

bool is_wip_elem(const LoopTable& q, Elem c);
/// On CC input: the E-map of c is the identity. Otherwise the raw identity.
bool is_moufang_elem(const LoopTable& q, Elem c);
/// On CC input: c is fixed by every E-map. Otherwise the raw identities.
bool is_pseudomoufang_elem(const LoopTable& q, Elem c);
bool is_extra_elem(const LoopTable& q, Elem c);
/// c(bc) == (cb)c for all b.
bool is_flexible_elem(const LoopTable& q, Elem c);

/// Outcome of evaluating the nine flexible/alternative/inverse/Moufang-type
/// conditions at an element a against every b.
struct AlternativeLawsReport {
  bool consistent = true;    ///< all nine agreed for every b
  bool holds = true;         ///< common value, conjoined over b
  std::string disagreement;  ///< first disagreeing pair, when inconsistent
};

/// Requires a CC-loop for the agreement to be guaranteed; on other loops a
/// disagreement is reported rather than thrown.
AlternativeLawsReport alternative_laws_check(const LoopTable& q, Elem a);

/// Whether inversion is an automorphism. Throws std::invalid_argument when q
/// is not power-associative.
bool has_aip(const LoopTable& q);

/// Every <a,b> is a group.
bool is_diassociative(const LoopTable& q);

struct LoopFlags {
  bool lcc = false;
  bool rcc = false;
  bool cc = false;
  bool power_associative = false;
  bool wip = false;
  bool moufang = false;
  bool extra = false;
  bool diassociative = false;
  std::optional<bool> aip;  ///< empty when q is not power-associative
  bool group = false;
  bool abelian_group = false;
};

struct ElementClassReport {
  ElementSet pa_set;
  ElementSet wip_set;
  ElementSet moufang_set;
  ElementSet pseudo_set;
  ElementSet extra_set;
  ElementSet square_nuclear_set;  ///< {a : a*a in N(q)}
  bool pa_set_is_subloop = false;
  bool moufang_set_is_subloop = false;
  LoopFlags flags;
};

ElementClassReport classify_elements(const LoopTable& q);

/// Outcome of a loop-level law check. The counterexample is an element for
/// the element-wise laws (pa, wip, moufang, extra, flex), a triple (x, y, z)
/// for lcc and rcc, and a pair for aip and diassoc.
struct LawCheck {
  std::string law;
  bool holds = false;
  std::vector<Elem> counterexample;
};

/// Names accepted by check_law, in canonical order.
const std::vector<std::string>& law_names();

/// Checks one named law ("cc" checks lcc, then rcc). aip compares the right
/// inverse of xy with the product of right inverses directly, so it is
/// defined on every loop. Throws std::invalid_argument for unknown names.
LawCheck check_law(const LoopTable& q, std::string_view law);

/// True iff the sorted set is closed under product (hence a subloop, since
/// the loop is finite).
bool is_product_closed(const LoopTable& q, const ElementSet& s);

}  // namespace loopforge
