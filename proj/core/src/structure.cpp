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

#include "loopforge/structure.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <unordered_set>

namespace loopforge {

Subloop::Subloop(int parent_order, ElementSet elements)
    : elements_(std::move(elements)), mask_(static_cast<std::size_t>(parent_order), 0) {
  std::sort(elements_.begin(), elements_.end());
  elements_.erase(std::unique(elements_.begin(), elements_.end()), elements_.end());
  for (const Elem x : elements_) mask_[static_cast<std::size_t>(x)] = 1;
}

Subloop generate_subloop(const LoopTable& q, std::span<const Elem> gens) {
  const int n = q.order();
  std::vector<std::uint8_t> in(static_cast<std::size_t>(n), 0);
  std::vector<Elem> members;
  auto add = [&](Elem x) {
    if (!in[x]) {
      in[x] = 1;
      members.push_back(x);
    }
  };
  add(0);
  for (const Elem g : gens) {
    check_elem(q, g);
    add(g);
  }
  for (std::size_t i = 0; i < members.size(); ++i) {
    const Elem x = members[i];
    add(q.rho(x));
    add(q.lam(x));
    for (std::size_t j = 0; j <= i; ++j) {
      add(q(x, members[j]));
      add(q(members[j], x));
    }
  }
  return Subloop(n, std::move(members));
}

Nuclei nuclei(const LoopTable& q) {
  const int n = q.order();
  std::vector<std::uint8_t> l(n, 1), m(n, 1), r(n, 1);
  for (Elem x = 0; x < n; ++x)
    for (Elem y = 0; y < n; ++y) {
      const Elem xy = q(x, y);
      for (Elem z = 0; z < n; ++z) {
        if (q(xy, z) != q(x, q(y, z))) {
          l[x] = 0;
          m[y] = 0;
          r[z] = 0;
        }
      }
    }
  ElementSet ls, ms, rs, ns;
  for (Elem a = 0; a < n; ++a) {
    if (l[a]) ls.push_back(a);
    if (m[a]) ms.push_back(a);
    if (r[a]) rs.push_back(a);
    if (l[a] && m[a] && r[a]) ns.push_back(a);
  }
  return {Subloop(n, ls), Subloop(n, ms), Subloop(n, rs), Subloop(n, ns)};
}

Subloop nucleus(const LoopTable& q) { return nuclei(q).nucleus; }

Subloop center(const LoopTable& q) {
  const auto nuc = nucleus(q);
  ElementSet z;
  for (const Elem a : nuc.elements()) {
    bool central = true;
    for (Elem x = 0; x < q.order() && central; ++x) central = q(a, x) == q(x, a);
    if (central) z.push_back(a);
  }
  return Subloop(q.order(), std::move(z));
}

Subloop associator_subloop(const LoopTable& q) {
  const int n = q.order();
  std::vector<std::uint8_t> seen(n, 0);
  ElementSet gens;
  for (Elem x = 0; x < n; ++x)
    for (Elem y = 0; y < n; ++y)
      for (Elem z = 0; z < n; ++z) {
        const Elem a = q.ldiv(q(x, q(y, z)), q(q(x, y), z));
        if (!seen[a]) {
          seen[a] = 1;
          gens.push_back(a);
        }
      }
  return generate_subloop(q, gens);
}

bool is_normal(const LoopTable& q, const Subloop& h) {
  const int n = q.order();
  for (Elem x = 0; x < n; ++x) {
    for (const Elem a : h.elements())
      if (!h.contains(q.ldiv(x, q(a, x)))) return false;
    for (Elem y = 0; y < n; ++y) {
      const Elem xy = q(x, y);
      const Elem yx = q(y, x);
      for (const Elem a : h.elements()) {
        if (!h.contains(q.rdiv(q(q(a, x), y), xy))) return false;
        if (!h.contains(q.ldiv(yx, q(y, q(x, a))))) return false;
      }
    }
  }
  return true;
}

std::vector<int> coset_labels(const LoopTable& q, const Subloop& h) {
  const int n = q.order();
  std::vector<int> label(static_cast<std::size_t>(n), -1);
  int next = 0;
  for (Elem x = 0; x < n; ++x) {
    if (label[x] >= 0) continue;
    for (const Elem a : h.elements()) label[q(x, a)] = next;
    ++next;
  }
  return label;
}

LoopTable quotient(const LoopTable& q, const Subloop& h) {
  if (!is_normal(q, h)) throw std::invalid_argument("quotient by a non-normal subloop");
  const auto label = coset_labels(q, h);
  const int m = q.order() / h.order();
  std::vector<Elem> rep(static_cast<std::size_t>(m), -1);
  for (Elem x = 0; x < q.order(); ++x)
    if (rep[label[x]] < 0) rep[label[x]] = x;
  return LoopTable::from_function(m, [&](Elem i, Elem j) { return label[q(rep[i], rep[j])]; });
}

LoopTable subloop_table(const LoopTable& q, const Subloop& h) {
  const auto& el = h.elements();
  std::vector<int> index(static_cast<std::size_t>(q.order()), -1);
  for (std::size_t i = 0; i < el.size(); ++i) index[el[i]] = static_cast<int>(i);
  return LoopTable::from_function(h.order(), [&](Elem i, Elem j) {
    const int v = index[q(el[i], el[j])];
    if (v < 0) throw std::invalid_argument("set is not closed under the product");
    return v;
  });
}

int exponent(const LoopTable& q) {
  int e = 1;
  for (Elem x = 0; x < q.order(); ++x) e = std::lcm(e, element_order(q, x));
  return e;
}

std::vector<Perm> perm_group_closure(int n, std::span<const Perm> gens, std::size_t cap) {
  std::unordered_set<std::string> seen;
  std::vector<Perm> out{Perm::identity(n)};
  seen.insert(out.front().key());
  for (std::size_t i = 0; i < out.size(); ++i) {
    for (const auto& g : gens) {
      Perm p = out[i] * g;
      if (seen.insert(p.key()).second) {
        if (out.size() >= cap)
          throw CapExceeded("permutation group exceeds cap of " + std::to_string(cap),
                            out.size());
        out.push_back(std::move(p));
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool pairwise_commute(std::span<const Perm> perms) {
  for (std::size_t i = 0; i < perms.size(); ++i)
    for (std::size_t j = 0; j < i; ++j)
      if (perms[i] * perms[j] != perms[j] * perms[i]) return false;
  return true;
}

namespace {

std::vector<Perm> unique_perms(std::vector<Perm> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

GroupSummary summarize(int n, const std::vector<Perm>& gens, std::size_t cap) {
  GroupSummary s;
  s.order = perm_group_closure(n, gens, cap).size();
  s.abelian = pairwise_commute(gens);
  return s;
}

std::vector<Perm> rinn_gens(const LoopTable& q) {
  std::vector<Perm> g;
  for (Elem x = 1; x < q.order(); ++x)
    for (Elem y = 1; y < q.order(); ++y) g.push_back(right_inner(q, x, y));
  return unique_perms(std::move(g));
}

std::vector<Perm> linn_gens(const LoopTable& q) {
  std::vector<Perm> g;
  for (Elem x = 1; x < q.order(); ++x)
    for (Elem y = 1; y < q.order(); ++y) g.push_back(left_inner(q, x, y));
  return unique_perms(std::move(g));
}

}  // namespace

GroupSummary mlt_group(const LoopTable& q, std::size_t cap) {
  std::vector<Perm> g;
  for (Elem x = 1; x < q.order(); ++x) {
    g.push_back(right_mult(q, x));
    g.push_back(left_mult(q, x));
  }
  return summarize(q.order(), unique_perms(std::move(g)), cap);
}

GroupSummary inn_group(const LoopTable& q, std::size_t cap) {
  auto g = rinn_gens(q);
  const auto l = linn_gens(q);
  g.insert(g.end(), l.begin(), l.end());
  for (Elem x = 1; x < q.order(); ++x) g.push_back(t_map(q, x));
  return summarize(q.order(), unique_perms(std::move(g)), cap);
}

InnerMappingReport inner_mapping_report(const LoopTable& q, std::size_t cap) {
  const auto rg = rinn_gens(q);
  const auto lg = linn_gens(q);
  const auto rset = perm_group_closure(q.order(), rg, cap);
  const auto lset = perm_group_closure(q.order(), lg, cap);
  InnerMappingReport r;
  r.rinn = {rset.size(), pairwise_commute(rg)};
  r.linn = {lset.size(), pairwise_commute(lg)};
  r.rinn_equals_linn = rset == lset;
  return r;
}

StructureReport structure_report(const LoopTable& q, std::size_t cap) {
  StructureReport r;
  r.nuclei = nuclei(q);
  r.center = center(q);
  r.associator_subloop = associator_subloop(q);
  try {
    r.inn = inn_group(q, cap);
  } catch (const CapExceeded&) {
  }
  try {
    r.mlt = mlt_group(q, cap);
  } catch (const CapExceeded&) {
  }
  r.nucleus_normal = is_normal(q, r.nuclei.nucleus);
  if (r.nucleus_normal) {
    auto qn = quotient(q, r.nuclei.nucleus);
    if (is_associative(qn)) {
      r.quotient_is_abelian_group = is_commutative(qn);
      r.exponent_mod_nucleus = exponent(qn);
    }
    r.quotient_mod_nucleus = std::move(qn);
  }
  return r;
}

}  // namespace loopforge
