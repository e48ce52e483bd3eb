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

#include "loopforge/extension.hpp"

#include <algorithm>
#include <array>

namespace loopforge {

namespace {

long long mod(long long a, long long m) {
  const long long r = a % m;
  return r < 0 ? r + m : r;
}

}  // namespace

FinAbGroup::FinAbGroup(std::vector<int> moduli) : moduli_(std::move(moduli)) {
  for (const int m : moduli_) {
    if (m < 1) throw std::invalid_argument("group moduli must be positive");
    order_ *= m;
  }
}

GVec FinAbGroup::reduce(GVec a) const {
  if (a.size() != moduli_.size()) throw std::invalid_argument("group element has wrong rank");
  for (std::size_t i = 0; i < a.size(); ++i) a[i] = mod(a[i], moduli_[i]);
  return a;
}

GVec FinAbGroup::add(const GVec& a, const GVec& b) const {
  GVec r(a);
  for (std::size_t i = 0; i < r.size(); ++i) r[i] += b.at(i);
  return reduce(std::move(r));
}

GVec FinAbGroup::sub(const GVec& a, const GVec& b) const {
  GVec r(a);
  for (std::size_t i = 0; i < r.size(); ++i) r[i] -= b.at(i);
  return reduce(std::move(r));
}

GVec FinAbGroup::scale(const GVec& a, long long k) const {
  GVec r = reduce(a);
  for (std::size_t i = 0; i < r.size(); ++i) r[i] = mod(mod(k, moduli_[i]) * r[i], moduli_[i]);
  return r;
}

bool FinAbGroup::is_zero(const GVec& a) const {
  const GVec r = reduce(a);
  return std::all_of(r.begin(), r.end(), [](long long v) { return v == 0; });
}

int FinAbGroup::index(const GVec& a) const {
  const GVec r = reduce(a);
  long long idx = 0;
  for (std::size_t i = 0; i < r.size(); ++i) idx = idx * moduli_[i] + r[i];
  return static_cast<int>(idx);
}

GVec FinAbGroup::element(int index) const {
  if (index < 0 || index >= order_) throw std::out_of_range("group index out of range");
  GVec r(moduli_.size());
  for (std::size_t i = moduli_.size(); i-- > 0;) {
    r[i] = index % moduli_[i];
    index /= moduli_[i];
  }
  return r;
}

bool is_normalized(const Cocycle& f) {
  const GVec zero = f.domain.zero();
  for (int i = 0; i < f.domain.order(); ++i) {
    const GVec a = f.domain.element(i);
    if (!f.codomain.is_zero(f(zero, a)) || !f.codomain.is_zero(f(a, zero))) return false;
  }
  return true;
}

LoopTable extend(const Cocycle& f, std::string name) {
  if (!is_normalized(f)) throw std::invalid_argument("cocycle is not normalized");
  const auto& A = f.domain;
  const auto& G = f.codomain;
  const int gn = G.order();
  const int n = A.order() * gn;
  if (n > LoopTable::kMaxOrder) throw std::invalid_argument("extension too large");
  std::vector<GVec> as, gs;
  for (int i = 0; i < A.order(); ++i) as.push_back(A.element(i));
  for (int i = 0; i < gn; ++i) gs.push_back(G.element(i));
  std::vector<GVec> fv(static_cast<std::size_t>(A.order()) * A.order());
  for (int a = 0; a < A.order(); ++a)
    for (int b = 0; b < A.order(); ++b) fv[a * A.order() + b] = f(as[a], as[b]);
  return LoopTable::from_function(
      n,
      [&](Elem p, Elem q) {
        const int a = p / gn, x = p % gn, b = q / gn, y = q % gn;
        const GVec g = G.add(G.add(gs[x], gs[y]), fv[a * A.order() + b]);
        return A.index(A.add(as[a], as[b])) * gn + G.index(g);
      },
      std::move(name));
}

GVec assoc_form(const Cocycle& f, const GVec& a, const GVec& b, const GVec& c) {
  const auto& A = f.domain;
  const auto& G = f.codomain;
  const GVec plus = G.add(f(a, b), f(A.add(a, b), c));
  const GVec minus = G.add(f(b, c), f(a, A.add(b, c)));
  return G.sub(plus, minus);
}

namespace {

bool cc_good_impl(const Cocycle& f, bool require_pa) {
  if (!is_normalized(f)) return false;
  const auto& A = f.domain;
  const int m = A.order();
  std::vector<GVec> as;
  for (int i = 0; i < m; ++i) as.push_back(A.element(i));
  // Transpositions of the first two and last two arguments generate S_3.
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b)
      for (int c = 0; c < m; ++c) {
        const GVec v = f.codomain.reduce(assoc_form(f, as[a], as[b], as[c]));
        if (v != f.codomain.reduce(assoc_form(f, as[b], as[a], as[c]))) return false;
        if (v != f.codomain.reduce(assoc_form(f, as[a], as[c], as[b]))) return false;
      }
  if (require_pa)
    for (int a = 0; a < m; ++a)
      if (!f.codomain.is_zero(assoc_form(f, as[a], as[a], as[a]))) return false;
  return true;
}

}  // namespace

bool is_cc_good(const Cocycle& f) { return cc_good_impl(f, false); }
bool is_pacc_good(const Cocycle& f) { return cc_good_impl(f, true); }

Coefficients star2_exponents(long long i, long long j, long long k, long long l) {
  return {j * (k - 1) * k / 2 + i * l * k, -k * (j - 1) * j / 2 - i * j * l, j * k};
}

Coefficients star3_exponents(long long i, long long j, long long k, long long l) {
  return {-j * k * k + i * l * k + j * k, k * j * j - i * j * l - j * k, j * k};
}

bool rank2_pacc_criterion(const FinAbGroup& g, const GVec& u, const GVec& v) {
  return g.scale(u, 3) == g.scale(v, 3) && g.is_zero(g.scale(u, 6)) &&
         g.is_zero(g.scale(v, 6));
}

std::vector<Family27Params> all_family27_params() {
  std::vector<Family27Params> out;
  for (int th = 0; th < 3; ++th)
    for (int al = 0; al < 3; ++al)
      for (int be = 0; be < 3; ++be)
        for (int ga = 0; ga < 3; ++ga)
          for (int de = 0; de < 3; ++de) out.push_back({th, al, be, ga, de});
  return out;
}

LoopTable family27(const Family27Params& p) {
  for (const int v : {p.theta, p.alpha, p.beta, p.gamma, p.delta})
    if (v < 0 || v > 2) throw std::invalid_argument("family27 parameters must lie in 0..2");
  const std::string name = "fam27:" + std::to_string(p.theta) + "," + std::to_string(p.alpha) +
                           "," + std::to_string(p.beta) + "," + std::to_string(p.gamma) + "," +
                           std::to_string(p.delta);
  return LoopTable::from_function(
      27,
      [&](Elem e1, Elem e2) {
        const int i = e1 / 9, j = (e1 / 3) % 3, x = e1 % 3;
        const int k = e2 / 9, l = (e2 / 3) % 3, y = e2 % 3;
        const auto c = star3_exponents(i, j, k, l);
        const long long g = x + y + c.u * p.gamma + c.v * p.delta + c.z * p.theta +
                            ((i + k) / 3) * p.alpha + ((j + l) / 3) * p.beta;
        return (((i + k) % 3) * 3 + (j + l) % 3) * 3 + static_cast<int>(mod(g, 3));
      },
      name);
}

LoopTable family27(int theta, int alpha, int beta, int gamma, int delta) {
  return family27(Family27Params{theta, alpha, beta, gamma, delta});
}

bool check_aip_criterion(const Family27Params& p) {
  return mod(p.delta - p.gamma - p.theta, 3) == 0;
}

LoopTable family16g(const FinAbGroup& g, const GVec& z, const GVec& t, const GVec& w,
                    std::string name) {
  if (!g.is_zero(g.scale(z, 4))) throw std::invalid_argument("family16g needs 4z == 0");
  const int gn = g.order();
  if (4 * gn > LoopTable::kMaxOrder) throw std::invalid_argument("family16g: G too large");
  std::vector<GVec> gs;
  for (int x = 0; x < gn; ++x) gs.push_back(g.element(x));
  return LoopTable::from_function(
      4 * gn,
      [&](Elem e1, Elem e2) {
        const int i = e1 / gn / 2, j = (e1 / gn) % 2, x = e1 % gn;
        const int k = e2 / gn / 2, l = (e2 / gn) % 2, y = e2 % gn;
        const long long cz = 2 * i * k * l + 2 * i * j * l - j * k * k - k * j * j - j * k;
        GVec s = g.add(gs[x], gs[y]);
        s = g.add(s, g.scale(z, cz));
        s = g.add(s, g.scale(t, (i + k) / 2));
        s = g.add(s, g.scale(w, (j + l) / 2));
        return (((i + k) % 2) * 2 + (j + l) % 2) * gn + g.index(s);
      },
      std::move(name));
}

LoopTable family16(int r, int s) {
  if (r < 0 || r > 3 || s < 0 || s > 3)
    throw std::invalid_argument("family16 parameters must lie in 0..3");
  return family16g(FinAbGroup::cyclic(4), {1}, {r}, {s},
                   "q16:" + std::to_string(r) + "," + std::to_string(s));
}

}  // namespace loopforge
