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

#include "loopforge/table.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace loopforge {

namespace {

std::string cell_name(int x, int y) {
  return "(" + std::to_string(x) + "," + std::to_string(y) + ")";
}

}  // namespace

// ---------------------------------------------------------------- Perm

Perm::Perm(std::vector<Elem> images) {
  const auto n = images.size();
  if (n > static_cast<std::size_t>(LoopTable::kMaxOrder))
    throw std::invalid_argument("permutation too large");
  std::vector<bool> seen(n, false);
  images_.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    const Elem v = images[i];
    if (v < 0 || static_cast<std::size_t>(v) >= n || seen[v])
      throw std::invalid_argument("not a permutation");
    seen[v] = true;
    images_[i] = static_cast<std::uint8_t>(v);
  }
}

Perm Perm::identity(int n) {
  std::vector<std::uint8_t> img(static_cast<std::size_t>(n));
  std::iota(img.begin(), img.end(), std::uint8_t{0});
  return Perm(std::move(img), Unchecked{});
}

std::vector<Elem> Perm::to_vector() const {
  return {images_.begin(), images_.end()};
}

Perm Perm::inverse() const {
  std::vector<std::uint8_t> inv(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i)
    inv[images_[i]] = static_cast<std::uint8_t>(i);
  return Perm(std::move(inv), Unchecked{});
}

Perm Perm::pow(long long k) const {
  Perm base = k < 0 ? inverse() : *this;
  unsigned long long e = k < 0 ? -static_cast<unsigned long long>(k)
                               : static_cast<unsigned long long>(k);
  Perm acc = identity(size());
  while (e > 0) {
    if (e & 1U) acc = acc * base;
    base = base * base;
    e >>= 1U;
  }
  return acc;
}

bool Perm::is_identity() const noexcept {
  for (std::size_t i = 0; i < images_.size(); ++i)
    if (images_[i] != i) return false;
  return true;
}

Perm operator*(const Perm& a, const Perm& b) {
  if (a.size() != b.size()) throw std::invalid_argument("permutation size mismatch");
  std::vector<std::uint8_t> out(a.images_.size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = b.images_[a.images_[i]];
  return Perm(std::move(out), Perm::Unchecked{});
}

// ---------------------------------------------------------------- LoopTable

LoopTable::LoopTable(int n, std::vector<Elem> cells, std::string name)
    : n_(n), name_(std::move(name)) {
  if (n < 1 || n > kMaxOrder)
    throw InvalidTable("order must be in 1.." + std::to_string(kMaxOrder));
  if (cells.size() != static_cast<std::size_t>(n) * n)
    throw InvalidTable("expected " + std::to_string(n * n) + " cells");
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      const Elem v = cells[x * n + y];
      if (v < 0 || v >= n)
        throw InvalidTable("entry " + cell_name(x, y) + " out of range");
    }
  // Latin property.
  std::vector<int> seen(static_cast<std::size_t>(n), -1);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      const Elem v = cells[x * n + y];
      if (seen[v] == x)
        throw InvalidTable("row " + std::to_string(x) + " repeats " + std::to_string(v));
      seen[v] = x;
    }
  std::fill(seen.begin(), seen.end(), -1);
  for (int y = 0; y < n; ++y)
    for (int x = 0; x < n; ++x) {
      const Elem v = cells[x * n + y];
      if (seen[v] == y)
        throw InvalidTable("column " + std::to_string(y) + " repeats " + std::to_string(v));
      seen[v] = y;
    }

  Elem e = -1;
  for (Elem c = 0; c < n && e < 0; ++c) {
    bool ok = true;
    for (Elem y = 0; y < n && ok; ++y) ok = cells[c * n + y] == y && cells[y * n + c] == y;
    if (ok) e = c;
  }
  if (e < 0) throw InvalidTable("no two-sided identity element");

  // Relabel by the transposition (0 e) so that the identity is 0.
  auto swap_label = [e](Elem x) { return x == 0 ? e : (x == e ? 0 : x); };
  original_.resize(static_cast<std::size_t>(n));
  for (Elem i = 0; i < n; ++i) original_[i] = swap_label(i);

  cells_.resize(static_cast<std::size_t>(n) * n);
  for (Elem x = 0; x < n; ++x)
    for (Elem y = 0; y < n; ++y)
      cells_[swap_label(x) * n + swap_label(y)] =
          static_cast<std::uint8_t>(swap_label(cells[x * n + y]));

  ldiv_.resize(cells_.size());
  rdiv_.resize(cells_.size());
  for (Elem x = 0; x < n; ++x)
    for (Elem y = 0; y < n; ++y) {
      const Elem z = cells_[x * n + y];
      ldiv_[x * n + z] = static_cast<std::uint8_t>(y);
      rdiv_[z * n + y] = static_cast<std::uint8_t>(x);
    }
}

LoopTable LoopTable::from_rows(const std::vector<std::vector<Elem>>& rows,
                               std::string name) {
  const int n = static_cast<int>(rows.size());
  std::vector<Elem> cells;
  cells.reserve(static_cast<std::size_t>(n) * n);
  for (int x = 0; x < n; ++x) {
    if (static_cast<int>(rows[x].size()) != n)
      throw InvalidTable("row " + std::to_string(x) + " has " +
                         std::to_string(rows[x].size()) + " entries, expected " +
                         std::to_string(n));
    cells.insert(cells.end(), rows[x].begin(), rows[x].end());
  }
  return LoopTable(n, std::move(cells), std::move(name));
}

LoopTable LoopTable::with_name(std::string name) const {
  LoopTable copy = *this;
  copy.name_ = std::move(name);
  return copy;
}

Elem LoopTable::mul(Elem x, Elem y) const {
  if (x < 0 || x >= n_ || y < 0 || y >= n_)
    throw std::out_of_range("element index out of range");
  return (*this)(x, y);
}

std::vector<std::vector<Elem>> LoopTable::rows() const {
  std::vector<std::vector<Elem>> out(static_cast<std::size_t>(n_));
  for (Elem x = 0; x < n_; ++x) out[x].assign(row(x).begin(), row(x).end());
  return out;
}

void check_elem(const LoopTable& q, Elem x) {
  if (x < 0 || x >= q.order())
    throw std::out_of_range("element " + std::to_string(x) + " out of range for order " +
                            std::to_string(q.order()));
}

// ---------------------------------------------------------------- mappings

Perm right_mult(const LoopTable& q, Elem x) {
  check_elem(q, x);
  std::vector<Elem> img(static_cast<std::size_t>(q.order()));
  for (Elem y = 0; y < q.order(); ++y) img[y] = q(y, x);
  return Perm(std::move(img));
}

Perm left_mult(const LoopTable& q, Elem x) {
  check_elem(q, x);
  std::vector<Elem> img(static_cast<std::size_t>(q.order()));
  for (Elem y = 0; y < q.order(); ++y) img[y] = q(x, y);
  return Perm(std::move(img));
}

Perm t_map(const LoopTable& q, Elem x) {
  check_elem(q, x);
  std::vector<Elem> img(static_cast<std::size_t>(q.order()));
  for (Elem y = 0; y < q.order(); ++y) img[y] = q.ldiv(x, q(y, x));
  return Perm(std::move(img));
}

Perm e_map(const LoopTable& q, Elem x) {
  check_elem(q, x);
  const Elem xr = q.rho(x);
  std::vector<Elem> img(static_cast<std::size_t>(q.order()));
  for (Elem y = 0; y < q.order(); ++y) img[y] = q(q(y, x), xr);
  return Perm(std::move(img));
}

Perm right_inner(const LoopTable& q, Elem x, Elem y) {
  check_elem(q, x);
  check_elem(q, y);
  const Elem xy = q(x, y);
  std::vector<Elem> img(static_cast<std::size_t>(q.order()));
  for (Elem z = 0; z < q.order(); ++z) img[z] = q.rdiv(q(q(z, x), y), xy);
  return Perm(std::move(img));
}

Perm left_inner(const LoopTable& q, Elem x, Elem y) {
  check_elem(q, x);
  check_elem(q, y);
  const Elem yx = q(y, x);
  std::vector<Elem> img(static_cast<std::size_t>(q.order()));
  for (Elem z = 0; z < q.order(); ++z) img[z] = q.ldiv(yx, q(y, q(x, z)));
  return Perm(std::move(img));
}

Elem commutator(const LoopTable& q, Elem x, Elem y) {
  check_elem(q, x);
  check_elem(q, y);
  return q.ldiv(q(y, x), q(x, y));
}

Elem associator(const LoopTable& q, Elem x, Elem y, Elem z) {
  check_elem(q, x);
  check_elem(q, y);
  check_elem(q, z);
  return q.ldiv(q(x, q(y, z)), q(q(x, y), z));
}

// ---------------------------------------------------------------- powers

std::vector<Elem> cyclic_closure(const LoopTable& q, Elem x) {
  check_elem(q, x);
  std::vector<bool> in(static_cast<std::size_t>(q.order()), false);
  std::vector<Elem> members{x};
  in[x] = true;
  for (std::size_t i = 0; i < members.size(); ++i)
    for (std::size_t j = 0; j <= i; ++j) {
      for (const Elem p : {q(members[i], members[j]), q(members[j], members[i])}) {
        if (!in[p]) {
          in[p] = true;
          members.push_back(p);
        }
      }
    }
  std::sort(members.begin(), members.end());
  return members;
}

bool cyclic_subloop_is_group(const LoopTable& q, Elem x) {
  const auto s = cyclic_closure(q, x);
  for (const Elem a : s)
    for (const Elem b : s) {
      const Elem ab = q(a, b);
      for (const Elem c : s)
        if (q(ab, c) != q(a, q(b, c))) return false;
    }
  return true;
}

Power left_power(const LoopTable& q, Elem x, long long k) {
  check_elem(q, x);
  const bool canonical = cyclic_subloop_is_group(q, x);
  const Elem base = k < 0 ? q.rho(x) : x;
  unsigned long long e = k < 0 ? -static_cast<unsigned long long>(k)
                               : static_cast<unsigned long long>(k);
  // The left-normed powers walk the cycle of R_base through 0.
  std::vector<Elem> cycle{0};
  for (Elem cur = q(0, base); cur != 0; cur = q(cur, base)) cycle.push_back(cur);
  return {cycle[e % cycle.size()], canonical};
}

Elem pow(const LoopTable& q, Elem x, long long k) {
  check_elem(q, x);
  if (k == 0) return 0;
  if (k == 1) return x;
  if (k == 2) return q(x, x);
  if (cyclic_subloop_is_group(q, x)) return left_power(q, x, k).value;
  if (k == -1 && q.rho(x) == q.lam(x)) return q.rho(x);
  throw AmbiguousPower("element " + std::to_string(x) +
                       " is not power-associative; power " + std::to_string(k) +
                       " is ambiguous");
}

int element_order(const LoopTable& q, Elem x) {
  check_elem(q, x);
  if (!cyclic_subloop_is_group(q, x))
    throw AmbiguousPower("element " + std::to_string(x) + " is not power-associative");
  int m = 1;
  for (Elem cur = x; cur != 0; cur = q(cur, x)) ++m;
  return m;
}

}  // namespace loopforge
