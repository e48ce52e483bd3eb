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

#include <functional>
#include <string>
#include <vector>

#include "loopforge/table.hpp"

namespace loopforge {

/// Coordinates of an element of a finite abelian group, one per factor.
using GVec = std::vector<long long>;

/// Z_{m1} x ... x Z_{mk}. An empty list of moduli is the trivial group.
class FinAbGroup {
 public:
  FinAbGroup() = default;
  explicit FinAbGroup(std::vector<int> moduli);

  static FinAbGroup cyclic(int m) { return FinAbGroup({m}); }

  const std::vector<int>& moduli() const noexcept { return moduli_; }
  int rank() const noexcept { return static_cast<int>(moduli_.size()); }
  int order() const noexcept { return order_; }

  GVec zero() const { return GVec(moduli_.size(), 0); }
  /// Componentwise reduction into [0, m).
  GVec reduce(GVec a) const;
  GVec add(const GVec& a, const GVec& b) const;
  GVec sub(const GVec& a, const GVec& b) const;
  GVec scale(const GVec& a, long long k) const;
  bool is_zero(const GVec& a) const;

  /// Mixed-radix index, first factor most significant.
  int index(const GVec& a) const;
  GVec element(int index) const;

 private:
  std::vector<int> moduli_;
  int order_ = 1;
};

/// A map f : A x A -> G.
struct Cocycle {
  FinAbGroup domain;
  FinAbGroup codomain;
  std::function<GVec(const GVec&, const GVec&)> f;

  GVec operator()(const GVec& a, const GVec& b) const {
    return codomain.reduce(f(domain.reduce(a), domain.reduce(b)));
  }
};

/// f(0,a) == f(a,0) == 0 for all a.
bool is_normalized(const Cocycle& f);

/// The loop on A x G with (a,x)(b,y) = (a+b, x+y+f(a,b)). Element (a,x) has
/// index A.index(a) * |G| + G.index(x). Throws std::invalid_argument when f
/// is not normalized.
LoopTable extend(const Cocycle& f, std::string name = {});

/// f(a,b) + f(a+b,c) - f(b,c) - f(a,b+c).
GVec assoc_form(const Cocycle& f, const GVec& a, const GVec& b, const GVec& c);

/// Normalized and assoc_form invariant under every permutation of its
/// arguments.
bool is_cc_good(const Cocycle& f);
/// CC-good and assoc_form(a,a,a) == 0 for all a.
bool is_pacc_good(const Cocycle& f);

/// Integer coefficients of u, v, z in a cocycle value, before reduction.
struct Coefficients {
  long long u = 0;
  long long v = 0;
  long long z = 0;
  friend bool operator==(const Coefficients&, const Coefficients&) = default;
};

/// Rank-two cocycle on Z x Z: f(ia+jb, ka+lb) has coefficients
/// u: j(k-1)k/2 + ilk, v: -k(j-1)j/2 - ijl, z: jk.
Coefficients star2_exponents(long long i, long long j, long long k, long long l);

/// Exponent-3 specialization: u: -jk^2 + ilk + jk, v: kj^2 - ijl - jk, z: jk.
Coefficients star3_exponents(long long i, long long j, long long k, long long l);

/// Whether u, v in G satisfy 3u == 3v and 6u == 6v == 0.
bool rank2_pacc_criterion(const FinAbGroup& g, const GVec& u, const GVec& v);

/// Parameters of the order-27 family. Each lies in Z_3.
struct Family27Params {
  int theta = 0;  ///< commutator exponent: ba = ab * n^theta
  int alpha = 0;  ///< cube of a
  int beta = 0;   ///< cube of b
  int gamma = 0;  ///< coefficient u
  int delta = 0;  ///< coefficient v
  friend bool operator==(const Family27Params&, const Family27Params&) = default;
};

/// All 243 parameter tuples in lexicographic order.
std::vector<Family27Params> all_family27_params();

/// Order-27 loop on triples (i,j,x), index (3i+j)*3+x, with product
/// ((i+k)%3, (j+l)%3, x+y+star3 + carry(i+k)*alpha + carry(j+l)*beta).
/// Throws std::invalid_argument on out-of-range parameters.
LoopTable family27(const Family27Params& p);
LoopTable family27(int theta, int alpha, int beta, int gamma, int delta);

/// delta == gamma + theta (mod 3).
bool check_aip_criterion(const Family27Params& p);

/// Order-4|G| loop on triples (i,j,x), i,j in {0,1}, index (2i+j)*|G|+x,
/// with f = (2ikl + 2ijl - jk^2 - kj^2 - jk) z and carries t, w. Requires
/// 4z == 0.
LoopTable family16g(const FinAbGroup& g, const GVec& z, const GVec& t, const GVec& w,
                    std::string name = {});

/// family16g over Z_4 with z = 1, t = r, w = s.
LoopTable family16(int r, int s);

}  // namespace loopforge
