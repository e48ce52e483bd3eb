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

#include "oracles.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <set>
#include <stdexcept>

namespace oracle {

Elem ldiv(const LoopTable& q, Elem x, Elem z) {
  for (Elem w = 0; w < q.order(); ++w)
    if (q(x, w) == z) return w;
  throw std::logic_error("not a loop");
}

Elem rdiv(const LoopTable& q, Elem z, Elem y) {
  for (Elem w = 0; w < q.order(); ++w)
    if (q(w, y) == z) return w;
  throw std::logic_error("not a loop");
}

bool associative(const LoopTable& q) {
  const int n = q.order();
  for (Elem x = 0; x < n; ++x)
    for (Elem y = 0; y < n; ++y)
      for (Elem z = 0; z < n; ++z)
        if (q(q(x, y), z) != q(x, q(y, z))) return false;
  return true;
}

bool lcc(const LoopTable& q) {
  const int n = q.order();
  for (Elem x = 0; x < n; ++x)
    for (Elem y = 0; y < n; ++y)
      for (Elem z = 0; z < n; ++z)
        if (q(z, q(y, x)) != q(rdiv(q, q(z, y), z), q(z, x))) return false;
  return true;
}

bool rcc(const LoopTable& q) {
  const int n = q.order();
  for (Elem x = 0; x < n; ++x)
    for (Elem y = 0; y < n; ++y)
      for (Elem z = 0; z < n; ++z)
        if (q(q(x, y), z) != q(q(x, z), ldiv(q, z, q(y, z)))) return false;
  return true;
}

namespace {

template <class Pred>
Set select(const LoopTable& q, Pred&& keep) {
  Set out;
  for (Elem a = 0; a < q.order(); ++a)
    if (keep(a)) out.push_back(a);
  return out;
}

bool all_pairs(const LoopTable& q, auto&& pred) {
  for (Elem x = 0; x < q.order(); ++x)
    for (Elem y = 0; y < q.order(); ++y)
      if (!pred(x, y)) return false;
  return true;
}

}  // namespace

Set left_nucleus(const LoopTable& q) {
  return select(q, [&](Elem a) {
    return all_pairs(q, [&](Elem x, Elem y) { return q(q(a, x), y) == q(a, q(x, y)); });
  });
}

Set middle_nucleus(const LoopTable& q) {
  return select(q, [&](Elem a) {
    return all_pairs(q, [&](Elem x, Elem y) { return q(q(x, a), y) == q(x, q(a, y)); });
  });
}

Set right_nucleus(const LoopTable& q) {
  return select(q, [&](Elem a) {
    return all_pairs(q, [&](Elem x, Elem y) { return q(q(x, y), a) == q(x, q(y, a)); });
  });
}

Set nucleus(const LoopTable& q) {
  const Set l = left_nucleus(q), m = middle_nucleus(q), r = right_nucleus(q);
  Set lm, out;
  std::set_intersection(l.begin(), l.end(), m.begin(), m.end(), std::back_inserter(lm));
  std::set_intersection(lm.begin(), lm.end(), r.begin(), r.end(), std::back_inserter(out));
  return out;
}

Set center(const LoopTable& q) {
  const Set nuc = nucleus(q);
  Set out;
  for (const Elem a : nuc) {
    bool commutes = true;
    for (Elem x = 0; x < q.order(); ++x) commutes = commutes && q(a, x) == q(x, a);
    if (commutes) out.push_back(a);
  }
  return out;
}

Set closure(const LoopTable& q, const Set& gens) {
  std::set<Elem> s(gens.begin(), gens.end());
  s.insert(0);
  for (bool grew = true; grew;) {
    grew = false;
    const Set cur(s.begin(), s.end());
    for (const Elem x : cur)
      for (const Elem y : cur) grew = s.insert(q(x, y)).second || grew;
  }
  return {s.begin(), s.end()};
}

bool closed_associative(const LoopTable& q, const Set& s) {
  for (const Elem x : s)
    for (const Elem y : s)
      for (const Elem z : s)
        if (q(q(x, y), z) != q(x, q(y, z))) return false;
  return true;
}

bool power_associative_elem(const LoopTable& q, Elem c) {
  return closed_associative(q, closure(q, {c}));
}

bool wip_elem(const LoopTable& q, Elem c) {
  for (Elem x = 0; x < q.order(); ++x) {
    if (q(c, rho(q, q(x, c))) != rho(q, x)) return false;
    if (q(lam(q, q(c, x)), c) != lam(q, x)) return false;
  }
  return true;
}

bool moufang_elem(const LoopTable& q, Elem c) {
  return all_pairs(q, [&](Elem x, Elem y) {
    const Elem rhs = q(q(c, x), q(y, c));
    return q(c, q(q(x, y), c)) == rhs && q(q(c, q(x, y)), c) == rhs;
  });
}

bool pseudomoufang_elem(const LoopTable& q, Elem c) {
  return all_pairs(q, [&](Elem z, Elem x) {
    return q(z, q(q(c, x), z)) == q(q(z, c), q(x, z)) &&
           q(q(z, q(x, c)), z) == q(q(z, x), q(c, z));
  });
}

bool extra_elem(const LoopTable& q, Elem c) {
  return all_pairs(
      q, [&](Elem x, Elem y) { return q(c, q(x, q(y, c))) == q(q(q(c, x), y), c); });
}

bool normal_subloop(const LoopTable& q, const Set& h) {
  const int n = q.order();
  const auto image = [&](auto&& f) {
    std::set<Elem> s;
    for (const Elem a : h) s.insert(f(a));
    return s;
  };
  for (Elem x = 0; x < n; ++x) {
    if (image([&](Elem a) { return q(x, a); }) != image([&](Elem a) { return q(a, x); }))
      return false;
    for (Elem y = 0; y < n; ++y) {
      if (image([&](Elem a) { return q(q(x, a), y); }) !=
          image([&](Elem a) { return q(x, q(a, y)); }))
        return false;
      if (image([&](Elem a) { return q(x, q(y, a)); }) !=
          image([&](Elem a) { return q(q(x, y), a); }))
        return false;
    }
  }
  return true;
}

std::size_t group_order(const std::vector<std::vector<Elem>>& gens) {
  if (gens.empty()) return 1;
  const std::size_t n = gens.front().size();
  std::vector<Elem> id(n);
  std::iota(id.begin(), id.end(), 0);
  std::set<std::vector<Elem>> seen{id};
  std::vector<std::vector<Elem>> queue{id};
  for (std::size_t i = 0; i < queue.size(); ++i) {
    for (const auto& g : gens) {
      std::vector<Elem> next(n);
      for (std::size_t x = 0; x < n; ++x) next[x] = g[static_cast<std::size_t>(queue[i][x])];
      if (seen.insert(next).second) queue.push_back(std::move(next));
    }
  }
  return seen.size();
}

std::size_t mlt_order(const LoopTable& q) {
  std::vector<std::vector<Elem>> gens;
  for (Elem a = 0; a < q.order(); ++a) {
    std::vector<Elem> r(static_cast<std::size_t>(q.order())), l(r.size());
    for (Elem x = 0; x < q.order(); ++x) {
      r[static_cast<std::size_t>(x)] = q(x, a);
      l[static_cast<std::size_t>(x)] = q(a, x);
    }
    gens.push_back(r);
    gens.push_back(l);
  }
  return group_order(gens);
}

namespace {

void fill(int n, std::vector<Elem>& cells, int pos, std::vector<LoopTable>& out) {
  if (pos == n * n) {
    out.emplace_back(n, cells);
    return;
  }
  const int r = pos / n, c = pos % n;
  if (r == 0 || c == 0) {
    cells[static_cast<std::size_t>(pos)] = r == 0 ? c : r;
    fill(n, cells, pos + 1, out);
    return;
  }
  for (Elem v = 0; v < n; ++v) {
    bool ok = true;
    for (int j = 0; j < c && ok; ++j) ok = cells[static_cast<std::size_t>(r * n + j)] != v;
    for (int i = 0; i < r && ok; ++i) ok = cells[static_cast<std::size_t>(i * n + c)] != v;
    if (!ok) continue;
    cells[static_cast<std::size_t>(pos)] = v;
    fill(n, cells, pos + 1, out);
  }
}

}  // namespace

std::vector<LoopTable> reduced_latin_squares(int n) {
  std::vector<Elem> cells(static_cast<std::size_t>(n) * n, 0);
  std::vector<LoopTable> out;
  fill(n, cells, 0, out);
  return out;
}

std::optional<std::vector<Elem>> brute_isomorphism(const LoopTable& a, const LoopTable& b) {
  const int n = a.order();
  if (b.order() != n) return std::nullopt;
  std::vector<Elem> p(static_cast<std::size_t>(n));
  std::iota(p.begin(), p.end(), 0);
  do {
    bool ok = true;
    for (Elem x = 0; x < n && ok; ++x)
      for (Elem y = 0; y < n && ok; ++y)
        ok = p[static_cast<std::size_t>(a(x, y))] ==
             b(p[static_cast<std::size_t>(x)], p[static_cast<std::size_t>(y)]);
    if (ok) return p;
  } while (std::next_permutation(p.begin() + 1, p.end()));
  return std::nullopt;
}

int brute_class_count(const std::vector<LoopTable>& loops) {
  std::vector<LoopTable> reps;
  for (const auto& q : loops) {
    bool fresh = true;
    for (const auto& r : reps)
      if (brute_isomorphism(q, r)) {
        fresh = false;
        break;
      }
    if (fresh) reps.push_back(q);
  }
  return static_cast<int>(reps.size());
}

LoopTable random_relabel(const LoopTable& q, std::uint64_t seed) {
  const int n = q.order();
  std::vector<Elem> p(static_cast<std::size_t>(n));
  std::iota(p.begin(), p.end(), 0);
  std::mt19937_64 rng(seed);
  std::shuffle(p.begin() + 1, p.end(), rng);
  std::vector<Elem> cells(static_cast<std::size_t>(n) * n);
  for (Elem x = 0; x < n; ++x)
    for (Elem y = 0; y < n; ++y)
      cells[static_cast<std::size_t>(p[static_cast<std::size_t>(x)] * n +
                                     p[static_cast<std::size_t>(y)])] =
          p[static_cast<std::size_t>(q(x, y))];
  return LoopTable(n, std::move(cells));
}

long long rank2_cocycle(long long i, long long j, long long k, long long l, long long u,
                        long long v, long long z, long long m) {
  const long long cu = j * (k - 1) * k / 2 + i * l * k;
  const long long cv = -k * (j - 1) * j / 2 - i * j * l;
  const long long cz = j * k;
  const long long r = (cu * u + cv * v + cz * z) % m;
  return r < 0 ? r + m : r;
}

bool rank2_window_power_associative(long long u, long long v, long long m, long long window,
                                    long long max_power) {
  const long long z = 1;
  const auto mod = [m](long long x) { return ((x % m) + m) % m; };
  for (long long i = -window; i <= window; ++i)
    for (long long j = -window; j <= window; ++j) {
      // values[k]: G-components of x^k over all bracketings, split as k = p + q.
      std::vector<std::set<long long>> values(static_cast<std::size_t>(max_power + 1));
      values[1] = {0};
      for (long long k = 2; k <= max_power; ++k)
        for (long long p = 1; p < k; ++p)
          for (const long long gp : values[static_cast<std::size_t>(p)])
            for (const long long gq : values[static_cast<std::size_t>(k - p)])
              values[static_cast<std::size_t>(k)].insert(
                  mod(gp + gq + rank2_cocycle(p * i, p * j, (k - p) * i, (k - p) * j, u, v, z, m)));
      for (const auto& s : values)
        if (s.size() > 1) return false;
    }
  return true;
}

}  // namespace oracle
