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

#include "loopforge/audit.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <optional>
#include <sstream>

#include "loopforge/classes.hpp"
#include "loopforge/structure.hpp"

namespace loopforge {

std::string_view to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::pass:
      return "pass";
    case CheckStatus::fail:
      return "fail";
    case CheckStatus::not_applicable:
      return "not_applicable";
  }
  return "?";
}

int AuditReport::count(CheckStatus s) const {
  return static_cast<int>(std::count_if(checks.begin(), checks.end(),
                                        [s](const AuditCheck& c) { return c.status == s; }));
}

namespace {

using Outcome = std::optional<std::string>;

template <class... Ts>
std::string describe(const Ts&... parts) {
  std::ostringstream os;
  (os << ... << parts);
  return os.str();
}

long long floor_mod(long long a, long long m) {
  const long long r = a % m;
  return r < 0 ? r + m : r;
}

class Auditor {
 public:
  explicit Auditor(const LoopTable& q) : q_(q), n_(q.order()) {
    report_.loop_name = q.name();
    report_.order = n_;
    lcc_ = is_lcc(q);
    rcc_ = is_rcc(q);
    cc_ = lcc_ && rcc_;
    cls_ = classify_elements(q);
    pa_ = cls_.flags.power_associative;
    pacc_ = cc_ && pa_;
    nuc_ = nuclei(q);
    z_ = center(q);
    a_ = associator_subloop(q);
    report_.cc = cc_;
    report_.pacc = pacc_;
    report_.associative = nuc_.nucleus.order() == n_;
    report_.wip = cls_.flags.wip;
    report_.moufang_set_is_subloop = cls_.moufang_set_is_subloop;

    w_ = mask(cls_.wip_set);
    m_ = mask(cls_.moufang_set);
    p_ = mask(cls_.pseudo_set);
    ex_ = mask(cls_.extra_set);
    s_ = mask(cls_.square_nuclear_set);
    pa_mask_ = mask(cls_.pa_set);

    for (Elem x = 0; x < n_; ++x) {
      e_.push_back(e_map(q, x));
      r_.push_back(right_mult(q, x));
      l_.push_back(left_mult(q, x));
      t_.push_back(t_map(q, x));
      std::vector<Elem> cycle{0};
      for (Elem cur = x; cur != 0; cur = q(cur, x)) cycle.push_back(cur);
      cycles_.push_back(std::move(cycle));
    }
  }

  AuditReport run() {
    general_checks();
    cc_checks();
    wip_checks();
    special_element_checks();
    pacc_checks();
    generating_pair_checks();
    order_checks();
    return std::move(report_);
  }

 private:
  // ------------------------------------------------------------ helpers

  std::vector<std::uint8_t> mask(const ElementSet& s) const {
    std::vector<std::uint8_t> m(static_cast<std::size_t>(n_), 0);
    for (const Elem x : s) m[x] = 1;
    return m;
  }

  Elem as(Elem x, Elem y, Elem z) const { return q_.ldiv(q_(x, q_(y, z)), q_(q_(x, y), z)); }
  Elem cm(Elem x, Elem y) const { return q_.ldiv(q_(y, x), q_(x, y)); }
  /// Inverse inside a subgroup (associators, nuclear or central elements).
  Elem inv(Elem x) const { return q_.rho(x); }
  /// x^k for a power-associative x.
  Elem pw(Elem x, long long k) const {
    const auto& c = cycles_[x];
    return c[floor_mod(k, static_cast<long long>(c.size()))];
  }
  int ord(Elem x) const { return static_cast<int>(cycles_[x].size()); }
  Elem tmap(Elem a, Elem u) const { return t_[u](a); }
  Elem mul(std::initializer_list<Elem> xs) const {
    Elem acc = 0;
    for (const Elem x : xs) acc = q_(acc, x);
    return acc;
  }

  bool is_group(const Subloop& s) {
    auto it = group_memo_.find(s.elements());
    if (it != group_memo_.end()) return it->second;
    bool ok = true;
    const auto& e = s.elements();
    for (std::size_t i = 0; i < e.size() && ok; ++i)
      for (std::size_t j = 0; j < e.size() && ok; ++j) {
        const Elem xy = q_(e[i], e[j]);
        for (const Elem z : e)
          if (q_(xy, z) != q_(e[i], q_(e[j], z))) {
            ok = false;
            break;
          }
      }
    group_memo_.emplace(e, ok);
    return ok;
  }

  Subloop gen(std::initializer_list<Elem> gens) const {
    const std::vector<Elem> g(gens);
    return generate_subloop(q_, g);
  }

  bool subset(const Subloop& s, const std::vector<std::uint8_t>& m) const {
    for (const Elem x : s.elements())
      if (!m[x]) return false;
    return true;
  }

  bool is_elementary_abelian(const LoopTable& g, int p) const {
    if (!is_associative(g) || !is_commutative(g)) return false;
    for (Elem x = 0; x < g.order(); ++x)
      if (element_order(g, x) != 1 && element_order(g, x) != p) return false;
    return true;
  }

  bool is_normal_subloop(const ElementSet& s) const {
    if (!is_product_closed(q_, s)) return false;
    return is_normal(q_, Subloop(n_, s));
  }

  void check(std::string name, std::string scope, bool applicable,
             const std::function<Outcome()>& fn) {
    AuditCheck c{std::move(name), std::move(scope), CheckStatus::not_applicable, {}};
    if (applicable) {
      auto r = fn();
      c.status = r ? CheckStatus::fail : CheckStatus::pass;
      if (r) c.detail = std::move(*r);
    }
    report_.checks.push_back(std::move(c));
  }

  // ------------------------------------------------------------ any loop

  void general_checks() {
    check("divisions_invert_product", "any", true, [&]() -> Outcome {
      for (Elem x = 0; x < n_; ++x)
        for (Elem y = 0; y < n_; ++y) {
          if (q_(q_.rdiv(x, y), y) != x) return describe("rdiv z=", x, " y=", y);
          if (q_(x, q_.ldiv(x, y)) != y) return describe("ldiv x=", x, " z=", y);
        }
      return {};
    });
    check("inverses_are_dual", "any", true, [&]() -> Outcome {
      for (Elem x = 0; x < n_; ++x)
        if (q_.lam(q_.rho(x)) != x || q_.rho(q_.lam(x)) != x) return describe("x=", x);
      return {};
    });
    check("power_exponent_laws", "any", true, [&]() -> Outcome {
      for (const Elem x : cls_.pa_set) {
        const long long w = 2LL * n_;
        for (long long i = -w; i <= w; ++i)
          for (long long j = -w; j <= w; ++j)
            if (pw(x, i + j) != q_(pw(x, i), pw(x, j)))
              return describe("x=", x, " i=", i, " j=", j);
      }
      return {};
    });
    check("cc_iff_symmetric_associators_and_nuclear_commutators", "any", true,
          [&]() -> Outcome {
            bool sym = true;
            for (Elem x = 0; x < n_ && sym; ++x)
              for (Elem y = 0; y < n_ && sym; ++y)
                for (Elem z = 0; z < n_ && sym; ++z) {
                  const Elem a = as(x, y, z);
                  sym = a == as(y, x, z) && a == as(x, z, y);
                }
            bool nuclear = true;
            for (Elem x = 0; x < n_ && nuclear; ++x)
              for (Elem y = 0; y < n_ && nuclear; ++y)
                nuclear = nuc_.nucleus.contains(cm(x, y));
            if ((sym && nuclear) != cc_)
              return describe("cc=", cc_, " symmetric=", sym, " nuclear=", nuclear);
            return {};
          });
    check("rcc_lcc_associator_forms", "any", true, [&]() -> Outcome {
      bool rform = true, lform = true;
      for (Elem x = 0; x < n_; ++x)
        for (Elem y = 0; y < n_; ++y)
          for (Elem z = 0; z < n_; ++z) {
            const Elem a = as(x, y, z);
            if (a != as(x, z, tmap(y, z))) rform = false;
            // y T_x^{-1} is the w with x \ (w x) == y, i.e. (x y) / x.
            if (a != as(q_.rdiv(q_(x, y), x), x, z)) lform = false;
          }
      if (rform != rcc_ || lform != lcc_)
        return describe("rcc=", rcc_, " form=", rform, " lcc=", lcc_, " form=", lform);
      return {};
    });
    check("nuclear_commutators_iff_commutative_quotient", "any", true, [&]() -> Outcome {
      bool nuclear = true;
      for (Elem x = 0; x < n_ && nuclear; ++x)
        for (Elem y = 0; y < n_ && nuclear; ++y) nuclear = nuc_.nucleus.contains(cm(x, y));
      const bool normal = is_normal(q_, nuc_.nucleus);
      const bool comm = normal && is_commutative(quotient(q_, nuc_.nucleus));
      if (nuclear != comm) return describe("nuclear=", nuclear, " quotient_commutative=", comm);
      if (nuclear)
        for (Elem x = 0; x < n_; ++x)
          for (Elem y = 0; y < n_; ++y)
            if (tmap(x, y) != q_(x, cm(x, y))) return describe("T identity x=", x, " y=", y);
      return {};
    });
    const bool a_nuclear = subset(a_, mask(nuc_.nucleus.elements()));
    check("associator_conjugation_formulas", "any", a_nuclear, [&]() -> Outcome {
      if (!is_normal(q_, a_)) return describe("associator subloop not normal");
      for (Elem x = 0; x < n_; ++x)
        for (Elem y = 0; y < n_; ++y)
          for (Elem z = 0; z < n_; ++z) {
            const Elem a = as(x, y, z);
            for (Elem u = 0; u < n_; ++u) {
              const Elem rhs = mul({inv(as(x, q_(y, z), u)), inv(as(y, z, u)),
                                    as(x, y, q_(z, u)), as(q_(x, y), z, u)});
              if (tmap(a, u) != rhs) return describe("x=", x, " y=", y, " z=", z, " u=", u);
              if (cm(a, u) != q_(inv(a), rhs))
                return describe("commutator x=", x, " y=", y, " z=", z, " u=", u);
            }
          }
      return {};
    });
    const bool n_normal = is_normal(q_, nuc_.nucleus);
    const bool qn_group = n_normal && is_associative(quotient(q_, nuc_.nucleus));
    check("group_quotient_associator_rules", "any", qn_group, [&]() -> Outcome {
      for (Elem x = 0; x < n_; ++x)
        for (Elem y = 0; y < n_; ++y)
          for (Elem z = 0; z < n_; ++z) {
            const Elem a = as(x, y, z);
            for (const Elem u : nuc_.nucleus.elements())
              if (as(q_(u, x), y, z) != a || as(x, q_(u, y), z) != a ||
                  as(x, y, q_(u, z)) != a)
                return describe("x=", x, " y=", y, " z=", z, " u=", u);
            if (as(q_.rho(x), y, z) != as(q_.lam(x), y, z))
              return describe("inverse x=", x, " y=", y, " z=", z);
          }
      for (const Elem a : a_.elements()) {
        if (!nuc_.nucleus.contains(a)) return describe("associator ", a, " not nuclear");
        for (const Elem u : nuc_.nucleus.elements())
          if (q_(a, u) != q_(u, a)) return describe("associator ", a, " vs nuclear ", u);
      }
      return {};
    });
    check("normal_above_nucleus", "any", qn_group && is_commutative(quotient(q_, nuc_.nucleus)),
          [&]() -> Outcome {
            std::vector<ElementSet> candidates{cls_.wip_set, cls_.pseudo_set, cls_.extra_set,
                                               cls_.square_nuclear_set, cls_.moufang_set};
            for (Elem x = 0; x < n_; ++x) {
              auto g = nuc_.nucleus.elements();
              g.push_back(x);
              candidates.push_back(generate_subloop(q_, g).elements());
            }
            for (const auto& s : candidates) {
              if (!is_product_closed(q_, s)) continue;
              if (!std::includes(s.begin(), s.end(), nuc_.nucleus.elements().begin(),
                                 nuc_.nucleus.elements().end()))
                continue;
              if (!is_normal(q_, Subloop(n_, s)))
                return describe("subloop of order ", s.size(), " not normal");
            }
            return {};
          });
    check("extra_loop_is_cc_moufang_diassociative", "any", cls_.flags.extra, [&]() -> Outcome {
      if (!cc_) return describe("extra loop is not CC");
      if (!cls_.flags.moufang) return describe("extra loop is not Moufang");
      if (!cls_.flags.diassociative) return describe("extra loop is not diassociative");
      return {};
    });
  }

  // ------------------------------------------------------------ CC loops

  void cc_checks() {
    check("power_associativity_characterizations", "cc", cc_, [&]() -> Outcome {
      for (Elem c = 0; c < n_; ++c) {
        const bool group = cyclic_subloop_is_group(q_, c);
        const bool inverses = q_.rho(c) == q_.lam(c);
        const Elem c2 = q_(c, c);
        const bool cube = q_(c, c2) == q_(c2, c);
        if (group != inverses || group != cube)
          return describe("c=", c, " group=", group, " rho==lam=", inverses, " cube=", cube);
      }
      return {};
    });
    check("nucleus_quotient_abelian_group", "cc", cc_, [&]() -> Outcome {
      if (!is_normal(q_, nuc_.nucleus)) return describe("nucleus not normal");
      const auto qn = quotient(q_, nuc_.nucleus);
      if (!is_associative(qn) || !is_commutative(qn)) return describe("Q/N not an abelian group");
      return {};
    });
    check("inner_mappings_are_automorphisms", "cc", cc_, [&]() -> Outcome {
      for (Elem x = 0; x < n_; ++x)
        for (Elem y = 0; y < n_; ++y) {
          const Perm r = right_inner(q_, x, y);
          const Perm l = left_inner(q_, x, y);
          for (Elem u = 0; u < n_; ++u)
            for (Elem v = 0; v < n_; ++v) {
              if (r(q_(u, v)) != q_(r(u), r(v))) return describe("R x=", x, " y=", y);
              if (l(q_(u, v)) != q_(l(u), l(v))) return describe("L x=", x, " y=", y);
            }
        }
      return {};
    });
    check("inner_mappings_from_t_maps", "cc", cc_, [&]() -> Outcome {
      for (Elem x = 0; x < n_; ++x)
        for (Elem y = 0; y < n_; ++y) {
          if (right_inner(q_, x, y) != t_[x] * t_[y] * t_[q_(x, y)].inverse())
            return describe("R x=", x, " y=", y);
          if (left_inner(q_, x, y) != t_[x].inverse() * t_[y].inverse() * t_[q_(y, x)])
            return describe("L x=", x, " y=", y);
        }
      return {};
    });
    check("inner_mapping_group_generated_by_t_maps", "cc", cc_, [&]() -> Outcome {
      const auto inn = inn_group(q_);
      std::vector<Perm> ts(t_.begin() + 1, t_.end());
      const auto closure = perm_group_closure(n_, ts, kDefaultGroupCap);
      if (closure.size() != inn.order)
        return describe("|<T>|=", closure.size(), " |Inn|=", inn.order);
      return {};
    });
    check("inner_mappings_via_associators", "cc", cc_, [&]() -> Outcome {
      std::vector<Perm> rs;
      for (Elem x = 0; x < n_; ++x)
        for (Elem y = 0; y < n_; ++y) {
          const Perm r = right_inner(q_, x, y);
          const Perm l = left_inner(q_, x, y);
          for (Elem z = 0; z < n_; ++z) {
            if (l(z) != q_(z, inv(as(z, x, y)))) return describe("L x=", x, " y=", y, " z=", z);
            if (r(z) != q_(z, as(z, q_.lam(x), q_.lam(y))))
              return describe("R x=", x, " y=", y, " z=", z);
          }
          if (r.inverse() != left_inner(q_, q_.lam(x), q_.lam(y)))
            return describe("R inverse x=", x, " y=", y);
          if (r != right_inner(q_, y, x)) return describe("R symmetric x=", x, " y=", y);
          rs.push_back(r);
        }
      std::sort(rs.begin(), rs.end());
      rs.erase(std::unique(rs.begin(), rs.end()), rs.end());
      if (!pairwise_commute(rs)) return describe("right inner mappings do not commute");
      const auto im = inner_mapping_report(q_);
      if (!im.rinn_equals_linn) return describe("RInn != LInn");
      return {};
    });
    check("e_map_identities", "cc", cc_, [&]() -> Outcome {
      for (Elem x = 0; x < n_; ++x) {
        const Perm& e = e_[x];
        for (Elem u = 0; u < n_; ++u) {
          for (Elem v = 0; v < n_; ++v)
            if (e(q_(u, v)) != q_(e(u), e(v))) return describe("not automorphic x=", x);
          if (e(u) != q_(u, as(u, q_.lam(x), x))) return describe("associator form x=", x);
        }
        if (e != right_inner(q_, q_.lam(x), x)) return describe("R form x=", x);
        if (e != left_inner(q_, x, q_.lam(x)).inverse()) return describe("L form x=", x);
        if (e != left_inner(q_, q_.rho(x), x).inverse()) return describe("L rho form x=", x);
        if (e != r_[x] * l_[x] * r_[x].inverse() * l_[x].inverse())
          return describe("commutator form x=", x);
      }
      return {};
    });
    check("e_map_power_identities", "cc", cc_, [&]() -> Outcome {
      for (const Elem x : cls_.pa_set) {
        const Perm& e = e_[x];
        if (e * l_[x] != l_[x] * e || e * r_[x] != r_[x] * e)
          return describe("E does not commute with translations x=", x);
        for (long long k = -4; k <= 4; ++k) {
          const Elem xk = pw(x, k);
          if (e_[xk] != e.pow(k * k)) return describe("E power x=", x, " k=", k);
          const long long tri = (k - 1) * k / 2;
          if (r_[xk] != r_[x].pow(k) * e.pow(tri)) return describe("R power x=", x, " k=", k);
          if (l_[xk] != l_[x].pow(k) * e.pow(-tri)) return describe("L power x=", x, " k=", k);
          for (long long m = -3; m <= 3; ++m)
            if (r_[x].pow(k) * l_[x].pow(m) != l_[x].pow(m) * r_[x].pow(k) * e.pow(m * k))
              return describe("RL exchange x=", x, " k=", k, " m=", m);
        }
      }
      return {};
    });
    check("associator_product_rules", "cc", cc_, [&]() -> Outcome {
      for (Elem x = 0; x < n_; ++x)
        for (Elem y = 0; y < n_; ++y)
          for (Elem z = 0; z < n_; ++z)
            for (Elem u = 0; u < n_; ++u) {
              const Elem lhs = as(q_(x, y), z, u);
              const Elem axu = as(x, z, u);
              const Elem ayu = as(y, z, u);
              if (lhs != q_(tmap(axu, y), ayu) || lhs != q_(axu, tmap(ayu, x)))
                return describe("product x=", x, " y=", y, " z=", z, " u=", u);
              if (cm(axu, y) != cm(ayu, x))
                return describe("commutator x=", x, " y=", y, " z=", z, " u=", u);
              if ((lhs == 0) != (axu == as(q_.rho(y), z, u)))
                return describe("vanishing x=", x, " y=", y, " z=", z, " u=", u);
            }
      for (Elem x = 0; x < n_; ++x)
        for (Elem z = 0; z < n_; ++z)
          for (Elem u = 0; u < n_; ++u)
            if (tmap(as(q_.rho(x), z, u), x) != inv(as(x, z, u)))
              return describe("inverse x=", x, " z=", z, " u=", u);
      for (Elem x = 0; x < n_; ++x)
        for (Elem y = 0; y < n_; ++y) {
          ElementSet s;
          for (Elem u = 0; u < n_; ++u)
            if (as(u, x, y) == 0) s.push_back(u);
          if (!is_product_closed(q_, s)) return describe("annihilator x=", x, " y=", y);
        }
      return {};
    });
    check("division_shortcuts", "cc", cc_, [&]() -> Outcome {
      for (Elem x = 0; x < n_; ++x) {
        const Elem xr = q_.rho(x), xl = q_.lam(x);
        for (Elem y = 0; y < n_; ++y) {
          const Elem ld = q_.ldiv(x, y), rd = q_.rdiv(y, x);
          if (ld != q_(xr, q_(q_(y, x), xr)) || ld != q_(q_(q_(xl, y), xl), x))
            return describe("ldiv x=", x, " y=", y);
          if (rd != q_(x, q_(xr, q_(y, xr))) || rd != q_(q_(xl, q_(x, y)), xl))
            return describe("rdiv x=", x, " y=", y);
        }
      }
      return {};
    });
    check("nucleus_in_wip_and_pseudomoufang", "cc", cc_, [&]() -> Outcome {
      for (const Elem a : nuc_.nucleus.elements())
        if (!w_[a] || !p_[a]) return describe("a=", a);
      for (const Elem a : cls_.extra_set)
        if (!m_[a]) return describe("extra not Moufang a=", a);
      return {};
    });
    check("cc_diassociative_iff_extra", "cc", cc_, [&]() -> Outcome {
      const bool di = is_diassociative(q_);
      if (di != cls_.flags.extra)
        return describe("diassociative=", di, " extra=", cls_.flags.extra);
      return {};
    });
  }

  // ------------------------------------------------------------ WIP elements

  void wip_checks() {
    check("wip_equivalent_forms", "cc", cc_, [&]() -> Outcome {
      for (Elem c = 0; c < n_; ++c) {
        const Elem cr = q_.rho(c), cl = q_.lam(c);
        bool v[7] = {static_cast<bool>(w_[c]), true, true, true, true, true, true};
        for (Elem x = 0; x < n_; ++x) {
          const Elem xr = q_.rho(x);
          v[1] = v[1] && q_(x, q_.rho(q_(c, x))) == cr;
          v[2] = v[2] && q_(q_.lam(q_(x, c)), x) == cl;
          v[3] = v[3] && q_(q_(c, e_[c](x)), xr) == c;
          v[4] = v[4] && q_(q_(x, e_[x](c)), cr) == x;
          v[5] = v[5] && as(c, x, xr) == as(xr, c, cr);
          v[6] = v[6] && as(x, c, cr) == as(cr, x, xr);
        }
        for (int i = 1; i < 7; ++i)
          if (v[i] != v[0]) return describe("c=", c, " form ", i + 1, " disagrees");
      }
      return {};
    });
    check("wip_fixed_point_symmetry", "cc", cc_, [&]() -> Outcome {
      for (const Elem c : cls_.wip_set)
        for (Elem x = 0; x < n_; ++x)
          if ((e_[c](x) == x) != (e_[x](c) == c)) return describe("c=", c, " x=", x);
      return {};
    });
    check("wip_closed_under_cyclic_subloop", "cc", cc_, [&]() -> Outcome {
      for (const Elem c : cls_.wip_set)
        for (const Elem y : cyclic_closure(q_, c))
          if (!w_[y]) return describe("c=", c, " y=", y);
      return {};
    });
    check("wip_normal_subloop", "cc", cc_, [&]() -> Outcome {
      if (!is_normal_subloop(cls_.wip_set)) return describe("|W|=", cls_.wip_set.size());
      return {};
    });
    check("wip_squares_associate", "cc", cc_, [&]() -> Outcome {
      for (const Elem a : cls_.wip_set) {
        const Elem a2 = q_(a, a);
        const auto ca = cyclic_closure(q_, a);
        for (Elem b = 0; b < n_; ++b) {
          const auto ab = gen({a, b});
          const Elem b2 = q_(b, b);
          for (const Elem x : ab.elements())
            for (const Elem y : ab.elements()) {
              if (as(a2, x, y) != 0) return describe("a=", a, " b=", b, " x=", x, " y=", y);
              if (pa_mask_[b] && as(b2, x, y) != 0)
                return describe("pa b: a=", a, " b=", b, " x=", x, " y=", y);
            }
          for (const Elem u : ca)
            for (const Elem v : ca)
              if (as(b2, u, v) != 0) return describe("a=", a, " b=", b, " u=", u, " v=", v);
        }
      }
      return {};
    });
    check("wip_two_generated_over_nucleus", "cc", cc_, [&]() -> Outcome {
      const auto& nuc = nuc_.nucleus.elements();
      for (const Elem a : cls_.wip_set)
        for (Elem b = 0; b < n_; ++b) {
          auto g = nuc;
          g.push_back(a);
          g.push_back(b);
          if (generate_subloop(q_, g).order() != n_) continue;
          if (!nuc_.nucleus.contains(q_(a, a))) return describe("a^2 a=", a, " b=", b);
          if (!pa_mask_[b]) continue;
          if (!nuc_.nucleus.contains(q_(b, b))) return describe("b^2 a=", a, " b=", b);
          if (!is_group(gen({q_(a, a), b}))) return describe("<a^2,b> a=", a, " b=", b);
          if (!pa_mask_[a]) continue;
          if (!is_group(gen({a, q_(b, b)}))) return describe("<a,b^2> a=", a, " b=", b);
          const Elem u = as(a, a, b);
          if (u != as(a, b, b)) return describe("(a,a,b)!=(a,b,b) a=", a, " b=", b);
          if (gen({u}) != a_) return describe("A not generated a=", a, " b=", b);
          if (a_.order() > 2) return describe("|A|>2 a=", a, " b=", b);
          if (!pacc_) return describe("not PACC a=", a, " b=", b);
          if (!subset(a_, mask(z_.elements()))) return describe("A not central a=", a, " b=", b);
        }
      return {};
    });
  }

  // ------------------------------------------------------------ special elements

  void special_element_checks() {
    check("alternative_laws_agree", "cc", cc_, [&]() -> Outcome {
      for (Elem a = 0; a < n_; ++a) {
        const auto r = alternative_laws_check(q_, a);
        if (!r.consistent) return describe("a=", a, " ", r.disagreement);
      }
      return {};
    });
    check("moufang_pseudomoufang_characterizations", "cc", cc_, [&]() -> Outcome {
      for (Elem c = 0; c < n_; ++c) {
        const bool e_id = e_[c].is_identity();
        const bool raw_m = satisfies_moufang_identity(q_, c);
        bool assoc_m = true, fixed = true, assoc_p = true;
        for (Elem x = 0; x < n_; ++x) {
          assoc_m = assoc_m && as(x, c, q_.rho(c)) == 0;
          fixed = fixed && e_[x](c) == c;
          assoc_p = assoc_p && as(c, x, q_.rho(x)) == 0;
        }
        const bool raw_p = satisfies_pseudomoufang_identity(q_, c);
        if (e_id != raw_m || e_id != assoc_m) return describe("Moufang c=", c);
        if (fixed != raw_p || fixed != assoc_p) return describe("pseudoMoufang c=", c);
      }
      return {};
    });
    check("moufang_and_pseudomoufang_generate_groups", "cc", cc_, [&]() -> Outcome {
      for (const Elem a : cls_.moufang_set) {
        if (!p_[a]) continue;
        for (const Elem b : cls_.pa_set)
          if (!is_group(gen({a, b}))) return describe("a=", a, " b=", b);
      }
      return {};
    });
    check("moufang_nuclear_cosets", "cc", cc_, [&]() -> Outcome {
      for (const Elem a : cls_.moufang_set)
        for (const Elem c : cyclic_closure(q_, a))
          for (const Elem u : nuc_.nucleus.elements())
            if (!m_[q_(c, u)]) return describe("a=", a, " c=", c, " u=", u);
      return {};
    });
    check("pseudomoufang_normal_subloop", "cc", cc_, [&]() -> Outcome {
      if (!is_normal_subloop(cls_.pseudo_set)) return describe("|P|=", cls_.pseudo_set.size());
      return {};
    });
    check("moufang_product_criteria", "cc", cc_, [&]() -> Outcome {
      for (const Elem a : cls_.moufang_set)
        for (const Elem b : cls_.moufang_set) {
          const bool v1 = m_[q_(a, b)];
          const bool v2 = m_[q_(b, a)];
          bool v3 = true, v4 = true;
          for (Elem x = 0; x < n_; ++x) {
            const Elem s = as(x, a, b);
            v3 = v3 && s == as(x, q_.rho(a), b);
            v4 = v4 && s == as(x, a, q_.rho(b));
          }
          if (v1 != v2 || v1 != v3 || v1 != v4) return describe("a=", a, " b=", b);
        }
      return {};
    });
    check("extra_characterizations", "cc", cc_, [&]() -> Outcome {
      for (Elem c = 0; c < n_; ++c) {
        bool v[6] = {static_cast<bool>(ex_[c]), true, true, true, true,
                     m_[c] && nuc_.nucleus.contains(q_(c, c))};
        for (Elem x = 0; x < n_; ++x)
          for (Elem y = 0; y < n_; ++y) {
            const Elem cx = q_(c, x), xc = q_(x, c), yc = q_(y, c);
            v[1] = v[1] && q_(c, q_(x, q_(c, y))) == q_(q_(cx, c), y);
            v[2] = v[2] && q_(q_(yc, x), c) == q_(y, q_(c, xc));
            v[3] = v[3] && q_(c, q_(x, q_(c, y))) == q_(q_(c, xc), y);
            v[4] = v[4] && q_(q_(yc, x), c) == q_(y, q_(cx, c));
          }
        for (int i = 1; i < 6; ++i)
          if (v[i] != v[0]) return describe("c=", c, " form ", i + 1, " disagrees");
      }
      return {};
    });
    check("extra_times_moufang_is_moufang", "cc", cc_, [&]() -> Outcome {
      for (const Elem a : cls_.extra_set)
        for (const Elem b : cls_.moufang_set)
          if (!m_[q_(a, b)] || !m_[q_(b, a)]) return describe("a=", a, " b=", b);
      return {};
    });
    check("square_nuclear_normal_subloop", "cc", cc_, [&]() -> Outcome {
      if (!is_normal_subloop(cls_.square_nuclear_set))
        return describe("|S|=", cls_.square_nuclear_set.size());
      return {};
    });
    check("extra_normal_subloop", "cc", cc_, [&]() -> Outcome {
      if (!is_normal_subloop(cls_.extra_set)) return describe("|Ex|=", cls_.extra_set.size());
      return {};
    });
    check("pseudomoufang_division_forms", "cc", cc_, [&]() -> Outcome {
      for (Elem c = 0; c < n_; ++c) {
        bool v2 = true, v3 = true;
        for (Elem x = 0; x < n_; ++x)
          for (Elem y = 0; y < n_; ++y) {
            const Elem cx = q_(c, x), xc = q_(x, c);
            v2 = v2 && cx == q_(q_(cx, q_(y, q_.rho(x))), q_(x, q_.rho(y)));
            v3 = v3 && xc == q_(q_(q_.lam(y), x), q_(q_(q_.lam(x), y), xc));
          }
        if (v2 != static_cast<bool>(p_[c]) || v3 != static_cast<bool>(p_[c]))
          return describe("c=", c);
      }
      return {};
    });
    check("two_of_wip_moufang_pseudomoufang", "cc", cc_, [&]() -> Outcome {
      for (Elem c = 0; c < n_; ++c) {
        const int k = w_[c] + m_[c] + p_[c];
        if (k >= 2 && (k != 3 || !ex_[c])) return describe("c=", c);
      }
      return {};
    });
    check("wip_squares_extra", "cc", cc_, [&]() -> Outcome {
      for (const Elem c : cls_.wip_set) {
        const Elem c2 = q_(c, c);
        if (!ex_[c2]) return describe("c=", c, " square not extra");
        if (!nuc_.nucleus.contains(q_(c2, c2))) return describe("c=", c, " fourth not nuclear");
      }
      return {};
    });
  }

  // ------------------------------------------------------------ PACC loops

  void pacc_checks() {
    check("e_map_sixth_power_identity", "pacc", pacc_, [&]() -> Outcome {
      for (Elem x = 0; x < n_; ++x)
        if (!e_[x].pow(6).is_identity()) return describe("x=", x);
      return {};
    });
    check("cubes_are_wip", "pacc", pacc_, [&]() -> Outcome {
      for (Elem c = 0; c < n_; ++c)
        if (!w_[pw(c, 3)]) return describe("c=", c);
      return {};
    });
    check("sixth_powers_extra", "pacc", pacc_, [&]() -> Outcome {
      for (Elem c = 0; c < n_; ++c)
        if (!ex_[pw(c, 6)]) return describe("c=", c);
      return {};
    });
    check("twelfth_powers_nuclear", "pacc", pacc_, [&]() -> Outcome {
      for (Elem c = 0; c < n_; ++c) {
        if (!nuc_.nucleus.contains(pw(c, 12))) return describe("c=", c);
        if (std::gcd(ord(c), 6) == 1 && !nuc_.nucleus.contains(c))
          return describe("order prime to 6 c=", c);
      }
      return {};
    });
    check("quotient_exponent_bounds", "pacc", pacc_, [&]() -> Outcome {
      const struct {
        const ElementSet* set;
        int bound;
        const char* what;
      } cases[] = {{&cls_.wip_set, 3, "W"},
                   {&cls_.extra_set, 6, "Ex"},
                   {&nuc_.nucleus.elements(), 12, "N"}};
      for (const auto& c : cases) {
        const Subloop h(n_, *c.set);
        if (!is_product_closed(q_, *c.set) || !is_normal(q_, h))
          return describe(c.what, " not normal");
        const auto qq = quotient(q_, h);
        if (!is_associative(qq) || !is_commutative(qq))
          return describe("Q/", c.what, " not abelian");
        if (c.bound % exponent(qq) != 0) return describe("Q/", c.what, " exponent ", exponent(qq));
      }
      if (!is_elementary_abelian(quotient(q_, Subloop(n_, cls_.wip_set)), 3))
        return describe("Q/W not elementary abelian");
      return {};
    });
    check("coprime_nuclear_power_implies_wip", "pacc", pacc_, [&]() -> Outcome {
      for (Elem a = 0; a < n_; ++a)
        for (int r = 1; r <= ord(a); ++r)
          if (r % 3 != 0 && nuc_.nucleus.contains(pw(a, r)) && !w_[a])
            return describe("a=", a, " r=", r);
      return {};
    });
    check("cube_square_subgroups", "pacc", pacc_, [&]() -> Outcome {
      for (Elem a = 0; a < n_; ++a)
        for (Elem b = 0; b < n_; ++b) {
          if (!is_group(gen({pw(a, 3), pw(b, 2)}))) return describe("<a^3,b^2> a=", a, " b=", b);
          if (!is_group(gen({pw(a, 6), b}))) return describe("<a^6,b> a=", a, " b=", b);
        }
      return {};
    });
    check("pseudomoufang_equals_extra_within_wip", "pacc", pacc_, [&]() -> Outcome {
      if (cls_.pseudo_set != cls_.extra_set) return describe("P != Ex");
      for (const Elem c : cls_.extra_set)
        if (!w_[c]) return describe("extra not WIP c=", c);
      return {};
    });
    check("extra_elements_generate_groups", "pacc", pacc_, [&]() -> Outcome {
      for (const Elem a : cls_.extra_set)
        for (Elem b = 0; b < n_; ++b)
          if (!is_group(gen({a, b}))) return describe("a=", a, " b=", b);
      return {};
    });
    check("wip_loop_square_conditions", "pacc", pacc_, [&]() -> Outcome {
      bool v[6] = {cls_.flags.wip, true, true, true, true, true};
      for (Elem x = 0; x < n_; ++x) {
        const Elem x2 = q_(x, x);
        v[1] = v[1] && nuc_.nucleus.contains(x2);
        v[2] = v[2] && ex_[x2];
        v[3] = v[3] && m_[x2];
        v[4] = v[4] && p_[x2];
        v[5] = v[5] && w_[x2];
      }
      for (int i = 1; i < 6; ++i)
        if (v[i] != v[0]) return describe("condition ", i + 1, " disagrees");
      return {};
    });
    check("cyclic_over_nucleus_is_group", "pacc", pacc_, [&]() -> Outcome {
      for (Elem x = 0; x < n_; ++x) {
        auto g = nuc_.nucleus.elements();
        g.push_back(x);
        if (generate_subloop(q_, g).order() == n_ && !report_.associative)
          return describe("x=", x);
      }
      return {};
    });
    check("central_boolean_conditions", "pacc", pacc_, [&]() -> Outcome {
      const auto zt = subloop_table(q_, z_);
      const bool z_boolean = is_elementary_abelian(zt, 2);
      if (z_boolean && subset(a_, mask(z_.elements())) && !cls_.flags.wip)
        return describe("Z boolean, A central, not WIP");
      if (z_boolean && nuc_.nucleus == z_ && !cls_.flags.extra)
        return describe("N = Z boolean, not extra");
      return {};
    });
    const bool index4 = pacc_ && n_ == 4 * nuc_.nucleus.order();
    check("nucleus_index_four_structure", "pacc", index4, [&]() -> Outcome {
      const auto qn = quotient(q_, nuc_.nucleus);
      if (!is_elementary_abelian(qn, 2)) return describe("Q/N not elementary abelian");
      if (!cls_.flags.wip) return describe("not WIP");
      if (nuc_.nucleus.order() % 4 != 0) return describe("|N|=", nuc_.nucleus.order());
      if (a_.order() != 2 || !subset(a_, mask(z_.elements()))) return describe("|A|=", a_.order());
      const auto label = coset_labels(q_, nuc_.nucleus);
      for (Elem a = 0; a < n_; ++a)
        for (Elem b = 0; b < n_; ++b) {
          if (label[a] == 0 || label[b] == 0 || label[a] == label[b]) continue;
          const Elem u = as(a, a, b);
          if (u == 0 || u != as(a, b, b) || !a_.contains(u)) return describe("a=", a, " b=", b);
        }
      return {};
    });
    check("coprime_e_map_powers", "pacc", pacc_, [&]() -> Outcome {
      for (int k = 1; k <= 12; ++k) {
        if (std::gcd(k, a_.order()) != 1) continue;
        for (Elem a = 0; a < n_; ++a) {
          if (e_[a].pow(k).is_identity() && !e_[a].is_identity())
            return describe("a=", a, " k=", k);
          if (e_[pw(a, k)].is_identity() && !e_[a].is_identity())
            return describe("power a=", a, " k=", k);
        }
      }
      return {};
    });
    check("coprime_associator_order_gives_group", "pacc", pacc_, [&]() -> Outcome {
      if (std::gcd(a_.order(), n_ / nuc_.nucleus.order()) == 1 && !report_.associative)
        return describe("|A|=", a_.order(), " |Q/N|=", n_ / nuc_.nucleus.order());
      if (a_.order() % 3 != 0 && !cls_.flags.wip) return describe("3 does not divide |A|, not WIP");
      return {};
    });
  }

  // ------------------------------------------------------------ generating pairs

  void generating_pair_checks() {
    struct Pair {
      Elem a, b, u, v;
    };
    std::vector<Pair> pairs;
    if (pacc_ && !report_.associative) {
      for (Elem a = 1; a < n_ && pairs.size() < 3; ++a)
        for (Elem b = a + 1; b < n_ && pairs.size() < 3; ++b) {
          if (gen({a, b}).order() != n_) continue;
          const Elem u = q_.ldiv(b, e_[a](b));
          const Elem v = q_.ldiv(a, e_[b](a));
          if (z_.contains(u) && z_.contains(v)) pairs.push_back({a, b, u, v});
        }
    }
    check("central_generating_pair_identities", "pacc", !pairs.empty(), [&]() -> Outcome {
      for (const auto& [a, b, u, v] : pairs) {
        if (pw(u, 3) != pw(v, 3) || pw(u, 6) != 0 || pw(v, 6) != 0)
          return describe("u,v orders a=", a, " b=", b);
        if (!nuc_.nucleus.contains(pw(a, 6)) || !nuc_.nucleus.contains(pw(b, 6)))
          return describe("sixth powers a=", a, " b=", b);
        if (gen({u, v}) != a_ || !subset(a_, mask(z_.elements())))
          return describe("associator subloop a=", a, " b=", b);
        auto ab = [&](long long i, long long j) { return q_(pw(a, i), pw(b, j)); };
        auto uv = [&](long long s, long long t) { return q_(pw(u, s), pw(v, t)); };
        for (int i = -2; i <= 2; ++i)
          for (int j = -2; j <= 2; ++j)
            for (int k = -2; k <= 2; ++k)
              for (int l = -2; l <= 2; ++l)
                for (int m = -2; m <= 2; ++m)
                  for (int o = -2; o <= 2; ++o) {
                    const Elem lhs = as(ab(i, j), ab(k, l), ab(m, o));
                    const Elem rhs = uv(-i * k * o - i * l * m - j * k * m,
                                        -i * l * o - j * k * o - j * l * m);
                    if (lhs != rhs)
                      return describe("associator a=", a, " b=", b, " exps=", i, ",", j, ",", k,
                                      ",", l, ",", m, ",", o);
                  }
      }
      return {};
    });
    std::vector<std::pair<Pair, Elem>> with_z;
    for (const auto& p : pairs) {
      const Elem z = cm(p.b, p.a);
      if (z_.contains(z)) with_z.push_back({p, z});
    }
    check("central_commutator_product_formulas", "pacc", !with_z.empty(), [&]() -> Outcome {
      for (const auto& [p, z] : with_z) {
        const auto [a, b, u, v] = p;
        auto cz = [&](long long e1, long long e2, long long e3) {
          return mul({pw(z, e1), pw(u, e2), pw(v, e3)});
        };
        for (long long i = -3; i <= 3; ++i)
          for (long long j = -3; j <= 3; ++j) {
            const Elem lhs = q_(pw(b, i), pw(a, j));
            const Elem rhs = q_(q_(pw(a, j), pw(b, i)),
                                cz(i * j, i * (j - 1) * j / 2, -j * (i - 1) * i / 2));
            if (lhs != rhs) return describe("swap a=", a, " b=", b, " i=", i, " j=", j);
            for (long long k = -3; k <= 3; ++k)
              for (long long l = -3; l <= 3; ++l) {
                const Elem prod = q_(q_(pw(a, i), pw(b, j)), q_(pw(a, k), pw(b, l)));
                const Elem expect = q_(
                    q_(pw(a, i + k), pw(b, j + l)),
                    cz(j * k, i * l * k + j * (k - 1) * k / 2, -i * j * l - k * (j - 1) * j / 2));
                if (prod != expect)
                  return describe("product a=", a, " b=", b, " i=", i, " j=", j, " k=", k,
                                  " l=", l);
              }
          }
        if (z_.contains(pw(a, 3))) {
          if (pw(u, 3) != 0 || pw(v, 3) != 0 || pw(z, 3) != 0 || !z_.contains(pw(b, 3)))
            return describe("central cube a=", a, " b=", b);
        }
        if (z_.contains(pw(a, 2)) && z_.contains(pw(b, 2))) {
          if (u != v || u != pw(z, 2) || pw(u, 2) != 0 || pw(z, 4) != 0)
            return describe("central squares a=", a, " b=", b);
        }
      }
      return {};
    });
  }

  // ------------------------------------------------------------ orders

  void order_checks() {
    check("nonassociative_order_divisibility", "pacc", pacc_ && !report_.associative,
          [&]() -> Outcome {
            if (cls_.flags.wip && n_ % 16 != 0) return describe("WIP with order ", n_);
            if (!cls_.flags.wip && n_ % 27 != 0) return describe("non-WIP with order ", n_);
            return {};
          });
    const bool two_power = n_ > 1 && (n_ & (n_ - 1)) == 0;
    check("two_power_order_structure", "pacc", pacc_ && two_power, [&]() -> Outcome {
      const int z = z_.order();
      if (z < 2 || (z & (z - 1)) != 0) return describe("|Z|=", z);
      if (!cls_.flags.wip) return describe("not WIP");
      if (!is_elementary_abelian(quotient(q_, nuc_.nucleus), 2))
        return describe("Q/N not elementary abelian");
      return {};
    });
  }

  const LoopTable& q_;
  int n_;
  bool lcc_ = false, rcc_ = false, cc_ = false, pa_ = false, pacc_ = false;
  ElementClassReport cls_;
  Nuclei nuc_;
  Subloop z_, a_;
  std::vector<std::uint8_t> w_, m_, p_, ex_, s_, pa_mask_;
  std::vector<Perm> e_, r_, l_, t_;
  std::vector<std::vector<Elem>> cycles_;
  std::map<ElementSet, bool> group_memo_;
  AuditReport report_;
};

}  // namespace

AuditReport audit(const LoopTable& q) { return Auditor(q).run(); }

}  // namespace loopforge
