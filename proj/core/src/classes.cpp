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

#include "loopforge/classes.hpp"

#include <algorithm>

#include "loopforge/structure.hpp"

namespace loopforge {

namespace {

bool moufang_fast(const LoopTable& q, Elem c) { return e_map(q, c).is_identity(); }

bool pseudomoufang_fast(const LoopTable& q, Elem c) {
  for (Elem x = 0; x < q.order(); ++x)
    if (q(q(c, x), q.rho(x)) != c) return false;
  return true;
}

bool pa_elem(const LoopTable& q, Elem c, bool cc) {
  if (cc) {
    const Elem c2 = q(c, c);
    return q(c, c2) == q(c2, c);
  }
  return cyclic_subloop_is_group(q, c);
}

}  // namespace

bool is_lcc(const LoopTable& q) {
  const int n = q.order();
  for (Elem z = 0; z < n; ++z)
    for (Elem y = 0; y < n; ++y) {
      const Elem w = q.rdiv(q(z, y), z);
      for (Elem x = 0; x < n; ++x)
        if (q(z, q(y, x)) != q(w, q(z, x))) return false;
    }
  return true;
}

bool is_rcc(const LoopTable& q) {
  const int n = q.order();
  for (Elem z = 0; z < n; ++z)
    for (Elem y = 0; y < n; ++y) {
      const Elem w = q.ldiv(z, q(y, z));
      for (Elem x = 0; x < n; ++x)
        if (q(q(x, y), z) != q(q(x, z), w)) return false;
    }
  return true;
}

bool is_cc(const LoopTable& q) { return is_rcc(q) && is_lcc(q); }

bool is_associative(const LoopTable& q) {
  const int n = q.order();
  for (Elem x = 0; x < n; ++x)
    for (Elem y = 0; y < n; ++y) {
      const Elem xy = q(x, y);
      for (Elem z = 0; z < n; ++z)
        if (q(xy, z) != q(x, q(y, z))) return false;
    }
  return true;
}

bool is_commutative(const LoopTable& q) {
  for (Elem x = 0; x < q.order(); ++x)
    for (Elem y = 0; y < x; ++y)
      if (q(x, y) != q(y, x)) return false;
  return true;
}

bool is_power_associative_elem(const LoopTable& q, Elem c) {
  check_elem(q, c);
  return pa_elem(q, c, is_cc(q));
}

bool is_power_associative(const LoopTable& q) {
  const bool cc = is_cc(q);
  for (Elem c = 0; c < q.order(); ++c)
    if (!pa_elem(q, c, cc)) return false;
  return true;
}

bool satisfies_wip_identity(const LoopTable& q, Elem c) {
  check_elem(q, c);
  for (Elem x = 0; x < q.order(); ++x) {
    if (q(c, q.rho(q(x, c))) != q.rho(x)) return false;
    if (q(q.lam(q(c, x)), c) != q.lam(x)) return false;
  }
  return true;
}

bool satisfies_moufang_identity(const LoopTable& q, Elem c) {
  check_elem(q, c);
  const int n = q.order();
  for (Elem x = 0; x < n; ++x) {
    const Elem cx = q(c, x);
    for (Elem y = 0; y < n; ++y) {
      const Elem xy = q(x, y);
      const Elem rhs = q(cx, q(y, c));
      if (q(c, q(xy, c)) != rhs || q(q(c, xy), c) != rhs) return false;
    }
  }
  return true;
}

bool satisfies_pseudomoufang_identity(const LoopTable& q, Elem c) {
  check_elem(q, c);
  const int n = q.order();
  for (Elem z = 0; z < n; ++z)
    for (Elem x = 0; x < n; ++x) {
      if (q(z, q(q(c, x), z)) != q(q(z, c), q(x, z))) return false;
      if (q(q(z, q(x, c)), z) != q(q(z, x), q(c, z))) return false;
    }
  return true;
}

bool satisfies_extra_identity(const LoopTable& q, Elem c) {
  check_elem(q, c);
  const int n = q.order();
  for (Elem x = 0; x < n; ++x) {
    const Elem cx = q(c, x);
    for (Elem y = 0; y < n; ++y)
      if (q(c, q(x, q(y, c))) != q(q(cx, y), c)) return false;
  }
  return true;
}

bool is_wip_elem(const LoopTable& q, Elem c) { return satisfies_wip_identity(q, c); }

bool is_moufang_elem(const LoopTable& q, Elem c) {
  check_elem(q, c);
  return is_cc(q) ? moufang_fast(q, c) : satisfies_moufang_identity(q, c);
}

bool is_pseudomoufang_elem(const LoopTable& q, Elem c) {
  check_elem(q, c);
  return is_cc(q) ? pseudomoufang_fast(q, c) : satisfies_pseudomoufang_identity(q, c);
}

bool is_extra_elem(const LoopTable& q, Elem c) { return satisfies_extra_identity(q, c); }

bool is_flexible_elem(const LoopTable& q, Elem c) {
  check_elem(q, c);
  for (Elem b = 0; b < q.order(); ++b)
    if (q(c, q(b, c)) != q(q(c, b), c)) return false;
  return true;
}

AlternativeLawsReport alternative_laws_check(const LoopTable& q, Elem a) {
  check_elem(q, a);
  static constexpr const char* kNames[9] = {"Flex", "LAlt", "RAlt", "LIP", "RIP",
                                            "Mfg1", "Mfg2", "F1",   "F2"};
  const int n = q.order();
  const Elem aa = q(a, a);
  AlternativeLawsReport report;
  for (Elem b = 0; b < n; ++b) {
    const Elem ab = q(a, b);
    const Elem ba = q(b, a);
    bool v[9] = {
        q(a, ba) == q(ab, a),
        q(a, ab) == q(aa, b),
        q(ba, a) == q(b, aa),
        q(q.lam(a), ab) == b,
        q(ba, q.rho(a)) == b,
        true, true, true, true,
    };
    for (Elem x = 0; x < n; ++x) {
      v[5] = v[5] && q(ab, q(x, a)) == q(a, q(q(b, x), a));
      v[6] = v[6] && q(q(a, x), ba) == q(q(a, q(x, b)), a);
      v[7] = v[7] && q(ab, q(a, x)) == q(a, q(ba, x));
      v[8] = v[8] && q(q(x, a), ba) == q(q(x, ab), a);
    }
    for (int i = 1; i < 9; ++i) {
      if (v[i] != v[0] && report.consistent) {
        report.consistent = false;
        report.disagreement = std::string(kNames[0]) + " vs " + kNames[i] + " at b=" +
                              std::to_string(b);
      }
    }
    report.holds = report.holds && v[0];
  }
  return report;
}

bool has_aip(const LoopTable& q) {
  if (!is_power_associative(q))
    throw std::invalid_argument("automorphic inverse property needs a power-associative loop");
  const int n = q.order();
  for (Elem x = 0; x < n; ++x)
    for (Elem y = 0; y < n; ++y)
      if (q.rho(q(x, y)) != q(q.rho(x), q.rho(y))) return false;
  return true;
}

bool is_product_closed(const LoopTable& q, const ElementSet& s) {
  std::vector<bool> in(static_cast<std::size_t>(q.order()), false);
  for (const Elem x : s) in[x] = true;
  for (const Elem x : s)
    for (const Elem y : s)
      if (!in[q(x, y)]) return false;
  return true;
}

bool is_diassociative(const LoopTable& q) {
  const int n = q.order();
  // Pairs whose subloop was already verified as a group need no recheck.
  std::vector<bool> covered(static_cast<std::size_t>(n) * n, false);
  for (Elem a = 0; a < n; ++a)
    for (Elem b = a; b < n; ++b) {
      if (covered[a * n + b]) continue;
      const Elem gens[2] = {a, b};
      const auto sub = generate_subloop(q, gens);
      const auto& s = sub.elements();
      for (const Elem x : s)
        for (const Elem y : s) {
          const Elem xy = q(x, y);
          for (const Elem z : s)
            if (q(xy, z) != q(x, q(y, z))) return false;
        }
      for (const Elem x : s)
        for (const Elem y : s) covered[x * n + y] = true;
    }
  return true;
}

ElementClassReport classify_elements(const LoopTable& q) {
  const int n = q.order();
  ElementClassReport r;
  auto& f = r.flags;
  f.lcc = is_lcc(q);
  f.rcc = is_rcc(q);
  f.cc = f.lcc && f.rcc;
  const auto nuc = nucleus(q);

  for (Elem c = 0; c < n; ++c) {
    if (pa_elem(q, c, f.cc)) r.pa_set.push_back(c);
    if (satisfies_wip_identity(q, c)) r.wip_set.push_back(c);
    if (f.cc ? moufang_fast(q, c) : satisfies_moufang_identity(q, c))
      r.moufang_set.push_back(c);
    if (f.cc ? pseudomoufang_fast(q, c) : satisfies_pseudomoufang_identity(q, c))
      r.pseudo_set.push_back(c);
    if (satisfies_extra_identity(q, c)) r.extra_set.push_back(c);
    if (nuc.contains(q(c, c))) r.square_nuclear_set.push_back(c);
  }
  r.pa_set_is_subloop = is_product_closed(q, r.pa_set);
  r.moufang_set_is_subloop = is_product_closed(q, r.moufang_set);

  f.power_associative = static_cast<int>(r.pa_set.size()) == n;
  f.wip = static_cast<int>(r.wip_set.size()) == n;
  f.moufang = static_cast<int>(r.moufang_set.size()) == n;
  f.extra = static_cast<int>(r.extra_set.size()) == n;
  f.group = nuc.order() == n;
  f.abelian_group = f.group && is_commutative(q);
  f.diassociative = f.group || (f.power_associative && is_diassociative(q));
  if (f.power_associative) f.aip = has_aip(q);
  return r;
}

const std::vector<std::string>& law_names() {
  static const std::vector<std::string> names = {"lcc",   "rcc",     "cc",    "pa",   "wip",
                                                 "moufang", "extra", "flex", "aip", "diassoc"};
  return names;
}

namespace {

LawCheck lcc_check(const LoopTable& q) {
  const int n = q.order();
  for (Elem z = 0; z < n; ++z)
    for (Elem y = 0; y < n; ++y) {
      const Elem w = q.rdiv(q(z, y), z);
      for (Elem x = 0; x < n; ++x)
        if (q(z, q(y, x)) != q(w, q(z, x))) return {"lcc", false, {x, y, z}};
    }
  return {"lcc", true, {}};
}

LawCheck rcc_check(const LoopTable& q) {
  const int n = q.order();
  for (Elem z = 0; z < n; ++z)
    for (Elem y = 0; y < n; ++y) {
      const Elem w = q.ldiv(z, q(y, z));
      for (Elem x = 0; x < n; ++x)
        if (q(q(x, y), z) != q(q(x, z), w)) return {"rcc", false, {x, y, z}};
    }
  return {"rcc", true, {}};
}

template <class Pred>
LawCheck element_check(const LoopTable& q, std::string law, Pred&& pred) {
  for (Elem c = 0; c < q.order(); ++c)
    if (!pred(c)) return {std::move(law), false, {c}};
  return {std::move(law), true, {}};
}

}  // namespace

LawCheck check_law(const LoopTable& q, std::string_view law) {
  const int n = q.order();
  if (law == "lcc") return lcc_check(q);
  if (law == "rcc") return rcc_check(q);
  if (law == "cc") {
    auto r = lcc_check(q);
    if (r.holds) r = rcc_check(q);
    r.law = "cc";
    return r;
  }
  if (law == "pa") {
    const bool cc = is_cc(q);
    return element_check(q, "pa", [&](Elem c) { return pa_elem(q, c, cc); });
  }
  if (law == "wip")
    return element_check(q, "wip", [&](Elem c) { return satisfies_wip_identity(q, c); });
  if (law == "moufang")
    return element_check(q, "moufang", [&](Elem c) { return is_moufang_elem(q, c); });
  if (law == "extra")
    return element_check(q, "extra", [&](Elem c) { return satisfies_extra_identity(q, c); });
  if (law == "flex")
    return element_check(q, "flex", [&](Elem c) { return is_flexible_elem(q, c); });
  if (law == "aip") {
    for (Elem x = 0; x < n; ++x)
      for (Elem y = 0; y < n; ++y)
        if (q.rho(q(x, y)) != q(q.rho(x), q.rho(y))) return {"aip", false, {x, y}};
    return {"aip", true, {}};
  }
  if (law == "diassoc") {
    for (Elem a = 0; a < n; ++a)
      for (Elem b = a; b < n; ++b) {
        const Elem gens[2] = {a, b};
        const auto& s = generate_subloop(q, gens).elements();
        for (const Elem x : s)
          for (const Elem y : s)
            for (const Elem z : s)
              if (q(q(x, y), z) != q(x, q(y, z))) return {"diassoc", false, {a, b}};
      }
    return {"diassoc", true, {}};
  }
  throw std::invalid_argument("unknown law '" + std::string(law) + "'");
}

}  // namespace loopforge
