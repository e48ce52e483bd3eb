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

#include "loopforge/isomorphism.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "loopforge/classes.hpp"
#include "loopforge/structure.hpp"

namespace loopforge {

std::vector<ElementProfile> element_profiles(const LoopTable& q) {
  const int n = q.order();
  const auto nuc = nuclei(q);
  std::vector<int> closure_size(static_cast<std::size_t>(n));
  for (Elem x = 0; x < n; ++x)
    closure_size[x] = static_cast<int>(cyclic_closure(q, x).size());
  std::vector<int> roots(static_cast<std::size_t>(n), 0);
  for (Elem x = 0; x < n; ++x) ++roots[q(x, x)];

  std::vector<ElementProfile> out(static_cast<std::size_t>(n));
  for (Elem x = 0; x < n; ++x) {
    int commuting = 0;
    for (Elem y = 0; y < n; ++y) commuting += q(x, y) == q(y, x);
    int cycle = 1;
    for (Elem cur = x; cur != 0; cur = q(cur, x)) ++cycle;
    const int nuclear = (nuc.left.contains(x) ? 1 : 0) | (nuc.middle.contains(x) ? 2 : 0) |
                        (nuc.right.contains(x) ? 4 : 0);
    out[x] = {closure_size[x], commuting,         q(x, x) == 0 ? 1 : 0,
              cycle,           nuclear,           roots[x],
              closure_size[q(x, x)], q.rho(x) == q.lam(x) ? 1 : 0};
  }
  return out;
}

IsoInvariants iso_invariants(const LoopTable& q) {
  IsoInvariants inv;
  inv.n = q.order();
  inv.profile = element_profiles(q);
  for (const auto& p : inv.profile) inv.square_zero += p[2];
  std::sort(inv.profile.begin(), inv.profile.end());
  inv.nucleus = nucleus(q).order();
  inv.center = center(q).order();
  const auto cls = classify_elements(q);
  inv.wip = static_cast<int>(cls.wip_set.size());
  inv.moufang = static_cast<int>(cls.moufang_set.size());
  inv.pseudo = static_cast<int>(cls.pseudo_set.size());
  inv.extra = static_cast<int>(cls.extra_set.size());
  return inv;
}

bool is_isomorphism(const LoopTable& a, const LoopTable& b, const Perm& p) {
  const int n = a.order();
  if (b.order() != n || p.size() != n) return false;
  for (Elem x = 0; x < n; ++x)
    for (Elem y = 0; y < n; ++y)
      if (p(a(x, y)) != b(p(x), p(y))) return false;
  return true;
}

std::vector<Elem> greedy_generators(const LoopTable& q) {
  std::vector<Elem> gens;
  int reached = 1;
  while (reached < q.order()) {
    Elem best = -1;
    int best_size = reached;
    for (Elem x = 1; x < q.order(); ++x) {
      auto trial = gens;
      trial.push_back(x);
      const int size = generate_subloop(q, trial).order();
      if (size > best_size) {
        best_size = size;
        best = x;
      }
    }
    gens.push_back(best);
    reached = best_size;
  }
  return gens;
}

namespace {

class IsoSearch {
 public:
  IsoSearch(const LoopTable& a, const LoopTable& b)
      : a_(a), b_(b), pa_(element_profiles(a)), pb_(element_profiles(b)) {}

  std::optional<Perm> run() {
    gens_ = greedy_generators(a_);
    const int n = a_.order();
    std::vector<Elem> fwd(n, -1), bwd(n, -1);
    fwd[0] = 0;
    bwd[0] = 0;
    std::vector<Elem> mapped{0};
    if (!descend(0, fwd, bwd, mapped)) return std::nullopt;
    Perm p(result_);
    if (!is_isomorphism(a_, b_, p)) return std::nullopt;
    return p;
  }

 private:
  bool assign(Elem x, Elem y, std::vector<Elem>& fwd, std::vector<Elem>& bwd,
              std::vector<Elem>& mapped) const {
    if (fwd[x] >= 0) return fwd[x] == y;
    if (bwd[y] >= 0 || pa_[x] != pb_[y]) return false;
    fwd[x] = y;
    bwd[y] = x;
    mapped.push_back(x);
    return true;
  }

  // Extends the partial map by closing under products; false on conflict.
  bool close(std::size_t from, std::vector<Elem>& fwd, std::vector<Elem>& bwd,
             std::vector<Elem>& mapped) const {
    for (std::size_t i = from; i < mapped.size(); ++i) {
      const Elem x = mapped[i];
      for (std::size_t j = 0; j <= i; ++j) {
        const Elem y = mapped[j];
        if (!assign(a_(x, y), b_(fwd[x], fwd[y]), fwd, bwd, mapped)) return false;
        if (!assign(a_(y, x), b_(fwd[y], fwd[x]), fwd, bwd, mapped)) return false;
      }
    }
    return true;
  }

  bool descend(std::size_t level, const std::vector<Elem>& fwd0, const std::vector<Elem>& bwd0,
               const std::vector<Elem>& mapped0) {
    if (level == gens_.size()) {
      result_ = fwd0;
      return true;
    }
    const Elem g = gens_[level];
    if (fwd0[g] >= 0) return descend(level + 1, fwd0, bwd0, mapped0);
    for (Elem y = 1; y < b_.order(); ++y) {
      if (bwd0[y] >= 0 || pa_[g] != pb_[y]) continue;
      auto fwd = fwd0;
      auto bwd = bwd0;
      auto mapped = mapped0;
      assign(g, y, fwd, bwd, mapped);
      if (close(0, fwd, bwd, mapped) && descend(level + 1, fwd, bwd, mapped)) return true;
    }
    return false;
  }

  const LoopTable& a_;
  const LoopTable& b_;
  std::vector<ElementProfile> pa_, pb_;
  std::vector<Elem> gens_;
  std::vector<Elem> result_;
};

}  // namespace

std::optional<Perm> are_isomorphic(const LoopTable& a, const LoopTable& b) {
  if (a.order() != b.order()) return std::nullopt;
  if (a == b) return Perm::identity(a.order());
  if (iso_invariants(a) != iso_invariants(b)) return std::nullopt;
  return IsoSearch(a, b).run();
}

LoopTable relabel(const LoopTable& q, const Perm& p) {
  const int n = q.order();
  if (p.size() != n) throw std::invalid_argument("relabel: permutation size mismatch");
  std::vector<Elem> cells(static_cast<std::size_t>(n) * n);
  for (Elem x = 0; x < n; ++x)
    for (Elem y = 0; y < n; ++y) cells[p(x) * n + p(y)] = p(q(x, y));
  return LoopTable(n, std::move(cells), q.name());
}

std::optional<Perm> extend_generator_map(const LoopTable& a, const LoopTable& b,
                                         const std::vector<Elem>& gens,
                                         const std::vector<Elem>& images) {
  const int n = a.order();
  if (b.order() != n || gens.size() != images.size()) return std::nullopt;
  std::vector<Elem> fwd(n, -1), bwd(n, -1);
  std::vector<Elem> mapped;
  auto assign = [&](Elem x, Elem y) {
    if (fwd[x] >= 0) return fwd[x] == y;
    if (bwd[y] >= 0) return false;
    fwd[x] = y;
    bwd[y] = x;
    mapped.push_back(x);
    return true;
  };
  if (!assign(0, 0)) return std::nullopt;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    check_elem(a, gens[i]);
    check_elem(b, images[i]);
    if (!assign(gens[i], images[i])) return std::nullopt;
  }
  for (std::size_t i = 0; i < mapped.size(); ++i)
    for (std::size_t j = 0; j <= i; ++j) {
      const Elem x = mapped[i], y = mapped[j];
      if (!assign(a(x, y), b(fwd[x], fwd[y])) || !assign(a(y, x), b(fwd[y], fwd[x])))
        return std::nullopt;
    }
  if (static_cast<int>(mapped.size()) != n) return std::nullopt;
  Perm p(fwd);
  if (!is_isomorphism(a, b, p)) return std::nullopt;
  return p;
}

std::pair<int, bool> IsoClassifier::add(const LoopTable& q) {
  if (!reps_.empty() && reps_.front().order() != q.order())
    throw std::invalid_argument("IsoClassifier: mixed orders");
  auto& bucket = buckets_[iso_invariants(q)];
  for (const int k : bucket) {
    auto& rep = reps_[static_cast<std::size_t>(k)];
    if (are_isomorphic(rep, q)) {
      if (q.serialize() < rep.serialize()) rep = q;
      return {k, false};
    }
  }
  reps_.push_back(q);
  bucket.push_back(size() - 1);
  return {size() - 1, true};
}

std::vector<LoopTable> IsoClassifier::sorted_representatives() const {
  std::vector<LoopTable> out = reps_;
  std::sort(out.begin(), out.end(),
            [](const LoopTable& x, const LoopTable& y) { return x.serialize() < y.serialize(); });
  return out;
}

DedupeResult dedupe(const std::vector<LoopTable>& loops) {
  IsoClassifier classifier;
  std::vector<int> raw(loops.size());
  for (std::size_t i = 0; i < loops.size(); ++i) raw[i] = classifier.add(loops[i]).first;
  // Renumber classes in serialization order of their representatives.
  std::vector<int> order(static_cast<std::size_t>(classifier.size()));
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int x, int y) {
    return classifier.representative(x).serialize() < classifier.representative(y).serialize();
  });
  std::vector<int> rank(order.size());
  DedupeResult out;
  for (std::size_t k = 0; k < order.size(); ++k) {
    rank[static_cast<std::size_t>(order[k])] = static_cast<int>(k);
    out.representatives.push_back(classifier.representative(order[k]));
  }
  for (const int c : raw) out.class_of.push_back(rank[static_cast<std::size_t>(c)]);
  return out;
}

}  // namespace loopforge
