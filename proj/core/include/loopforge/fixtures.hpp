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

#include <string>
#include <vector>

#include "loopforge/table.hpp"

namespace loopforge {

LoopTable cyclic(int n);
/// Elementary abelian group of order 2^k, product is bitwise xor.
LoopTable elem2(int k);
/// Symmetries of the square; r^k s^e has index k + 4e.
LoopTable dihedral8();
/// Quaternion group; index 4*sign + unit with units ordered 1, i, j, k.
LoopTable quaternion8();
/// Element (a,b) has index a * |B| + b.
LoopTable direct_product(const LoopTable& a, const LoopTable& b);

/// Order-16 CC-loop whose extra elements are not all WIP.
LoopTable cc16_loop();

/// Order-16 nonassociative, non-extra PACC-loop with nucleus an elementary
/// abelian group of order 4. Rows in the order
/// 1, c, u, v, a, ca, ua, va, b, cb, ub, vb, ab, cab, uab, vab.
LoopTable pacc16_loop();
/// Names of pacc16_loop() elements, by index.
const std::vector<std::string>& pacc16_names();

/// Loop on Z4 x Z2 x Z2, element (x1,x2,x3) at index (2*x1 + x2)*2 + x3, with
/// first coordinate x1+y1 + r x2y2 + s x3y3 + 2x2x3y3 + 2x2y2y3 + x3y2^2.
LoopTable poly16(int r, int s);

/// Loop on Z2^4, element (x1,..,x4) at index ((2x1 + x2)*2 + x3)*2 + x4, with
/// coordinates x1+y1 + x3y2 + x3y3y4 + x4y2^2 + x3x4(y3+y4), x2+y2 + x4y3^2,
/// x3+y3, x4+y4.
LoopTable poly2_4();

/// Builds a loop from a family description such as "cyclic:12", "elem2:3",
/// "dihedral8", "quaternion8", "product:cyclic:3,dihedral8", "q16:1,1",
/// "fam27:1,0,1,0,1", "cc16", "pacc16", "poly16:0,0", "poly2_4".
/// Throws std::invalid_argument on unknown or malformed descriptions.
LoopTable make_fixture(const std::string& description);

/// The audit corpus: cc16_loop, pacc16_loop, all Q_{r,s}, all
/// 243 order-27 family members, the polynomial forms, and small groups and
/// direct products.
std::vector<LoopTable> corpus();

}  // namespace loopforge
