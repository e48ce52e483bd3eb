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

#include "loopforge/search.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <chrono>
#include <cstdint>
#include <mutex>
#include <stdexcept>
#include <thread>

#include "loopforge/classes.hpp"
#include "loopforge/isomorphism.hpp"

namespace loopforge {

std::string_view to_string(Law law) {
  switch (law) {
    case Law::lcc:
      return "lcc";
    case Law::rcc:
      return "rcc";
    case Law::pa:
      return "pa";
    case Law::extra:
      return "extra";
    case Law::moufang:
      return "moufang";
    case Law::wip:
      return "wip";
    case Law::flexible:
      return "flexible";
  }
  return "?";
}

std::optional<Law> parse_law(std::string_view name) {
  for (const Law l : {Law::lcc, Law::rcc, Law::pa, Law::extra, Law::moufang, Law::wip,
                      Law::flexible})
    if (name == to_string(l)) return l;
  if (name == "flex") return Law::flexible;
  return std::nullopt;
}

std::vector<Law> parse_laws(std::string_view list) {
  std::vector<Law> out;
  auto add = [&](Law l) {
    if (std::find(out.begin(), out.end(), l) == out.end()) out.push_back(l);
  };
  while (!list.empty()) {
    const auto comma = list.find(',');
    const auto item = list.substr(0, comma);
    list = comma == std::string_view::npos ? std::string_view{} : list.substr(comma + 1);
    if (item.empty()) continue;
    if (item == "cc") {
      add(Law::lcc);
      add(Law::rcc);
    } else if (const auto l = parse_law(item)) {
      add(*l);
    } else {
      throw std::invalid_argument("unknown law: " + std::string(item));
    }
  }
  return out;
}

bool satisfies_law(const LoopTable& q, Law law) {
  const int n = q.order();
  auto all = [&](auto pred) {
    for (Elem c = 0; c < n; ++c)
      if (!pred(q, c)) return false;
    return true;
  };
  switch (law) {
    case Law::lcc:
      return is_lcc(q);
    case Law::rcc:
      return is_rcc(q);
    case Law::pa:
      return is_power_associative(q);
    case Law::extra:
      return all(satisfies_extra_identity);
    case Law::moufang:
      return all(satisfies_moufang_identity);
    case Law::wip:
      return all(satisfies_wip_identity);
    case Law::flexible:
      return all(is_flexible_elem);
  }
  return false;
}

std::string_view to_string(SearchStatus s) {
  switch (s) {
    case SearchStatus::complete:
      return "complete";
    case SearchStatus::limit_reached:
      return "limit_reached";
    case SearchStatus::timeout:
      return "timeout";
  }
  return "?";
}

std::vector<Law> implied_laws(const std::vector<Law>& laws) {
  std::vector<Law> out;
  if (std::find(laws.begin(), laws.end(), Law::extra) != laws.end()) out = {Law::lcc, Law::rcc};
  return out;
}

void validate(const SearchSpec& spec) {
  if (spec.order < 1) throw std::invalid_argument("search order must be positive");
  if (spec.order > kMaxSearchOrder)
    throw std::invalid_argument("search order exceeds " + std::to_string(kMaxSearchOrder));
  if (spec.laws.empty() && !spec.all_loops)
    throw std::invalid_argument("empty law set requires all_loops");
  if (spec.laws.empty() && spec.order > 6)
    throw std::invalid_argument("unconstrained search is limited to order 6");
  if (spec.jobs < 1) throw std::invalid_argument("jobs must be positive");
  if (spec.limit && *spec.limit < 1) throw std::invalid_argument("limit must be positive");
  if (!(spec.budget_seconds > 0)) throw std::invalid_argument("budget must be positive");
}

PartialTable PartialTable::with_identity(int n) {
  PartialTable t{n, std::vector<Elem>(static_cast<std::size_t>(n) * n, -1)};
  for (Elem x = 0; x < n; ++x) {
    t.at(0, x) = x;
    t.at(x, 0) = x;
  }
  return t;
}

PartialTable PartialTable::from_table(const LoopTable& q) {
  PartialTable t{q.order(), std::vector<Elem>(static_cast<std::size_t>(q.order()) * q.order())};
  for (Elem x = 0; x < q.order(); ++x)
    for (Elem y = 0; y < q.order(); ++y) t.at(x, y) = q(x, y);
  return t;
}

namespace {

// ---------------------------------------------------------------- terms

struct Node {
  enum Kind : std::uint8_t { var, zero, mul, ldiv, rdiv };
  Kind kind = var;
  int a = 0;
  int b = 0;
};

struct Equation {
  std::vector<Node> nodes;
  int lhs = 0;
  int rhs = 0;
  int vars = 0;
};

class Terms {
 public:
  int var(int i) {
    vars_ = std::max(vars_, i + 1);
    return push({Node::var, i, 0});
  }
  int zero() { return push({Node::zero, 0, 0}); }
  int mul(int x, int y) { return push({Node::mul, x, y}); }
  int ldiv(int x, int y) { return push({Node::ldiv, x, y}); }
  int rdiv(int x, int y) { return push({Node::rdiv, x, y}); }
  int rho(int x) { return ldiv(x, zero()); }
  int lam(int x) { return rdiv(zero(), x); }

  Equation equate(int lhs, int rhs) const { return {nodes_, lhs, rhs, vars_}; }

 private:
  int push(Node n) {
    nodes_.push_back(n);
    return static_cast<int>(nodes_.size()) - 1;
  }
  std::vector<Node> nodes_;
  int vars_ = 0;
};

std::vector<Equation> equations(Law law) {
  Terms t;
  const int x = t.var(0), y = t.var(1), z = t.var(2);
  switch (law) {
    case Law::lcc:
      return {t.equate(t.mul(z, t.mul(y, x)), t.mul(t.rdiv(t.mul(z, y), z), t.mul(z, x)))};
    case Law::rcc:
      return {t.equate(t.mul(t.mul(x, y), z), t.mul(t.mul(x, z), t.ldiv(z, t.mul(y, z))))};
    case Law::pa: {
      Terms u;
      const int c = u.var(0);
      return {u.equate(u.mul(c, u.mul(c, c)), u.mul(u.mul(c, c), c))};
    }
    case Law::extra:
      return {t.equate(t.mul(z, t.mul(x, t.mul(y, z))), t.mul(t.mul(t.mul(z, x), y), z))};
    case Law::moufang: {
      const int mid = t.mul(t.mul(z, x), t.mul(y, z));
      return {t.equate(t.mul(z, t.mul(t.mul(x, y), z)), mid),
              t.equate(mid, t.mul(t.mul(z, t.mul(x, y)), z))};
    }
    case Law::wip: {
      Terms u;
      const int c = u.var(0), v = u.var(1);
      return {u.equate(u.mul(c, u.rho(u.mul(v, c))), u.rho(v)),
              u.equate(u.mul(u.lam(u.mul(c, v)), c), u.lam(v))};
    }
    case Law::flexible: {
      Terms u;
      const int c = u.var(0), v = u.var(1);
      return {u.equate(u.mul(c, u.mul(v, c)), u.mul(u.mul(c, v), c))};
    }
  }
  return {};
}

// ---------------------------------------------------------------- evaluation

// Keys name the facts an evaluation can wait on: a cell value, the position
// of a value within a row, or within a column.
struct CellView {
  int n = 0;
  const std::int8_t* val = nullptr;     // cell -> value or -1
  const std::int8_t* rowpos = nullptr;  // row*n + value -> column or -1
  const std::int8_t* colpos = nullptr;  // value*n + column -> row or -1
};

struct NoTouch {
  void operator()(int) const {}
};

// Value of the subterm, or -(key + 1) for the first unknown fact it needs.
template <class Touch>
int eval(const Equation& eq, int node, const std::uint8_t* vars, const CellView& c,
         Touch& touch) {
  const Node& nd = eq.nodes[static_cast<std::size_t>(node)];
  if (nd.kind == Node::var) return vars[nd.a];
  if (nd.kind == Node::zero) return 0;
  const int x = eval(eq, nd.a, vars, c, touch);
  if (x < 0) return x;
  const int y = eval(eq, nd.b, vars, c, touch);
  if (y < 0) return y;
  const int n = c.n;
  const int n2 = n * n;
  switch (nd.kind) {
    case Node::mul: {
      const int v = c.val[x * n + y];
      if (v < 0) return -(x * n + y + 1);
      touch(x * n + y);
      return v;
    }
    case Node::ldiv: {
      const int w = c.rowpos[x * n + y];
      if (w < 0) return -(n2 + x * n + y + 1);
      touch(x * n + w);
      return w;
    }
    default: {
      const int w = c.colpos[x * n + y];
      if (w < 0) return -(2 * n2 + x * n + y + 1);
      touch(w * n + y);
      return w;
    }
  }
}

// ---------------------------------------------------------------- control

struct Control {
  std::chrono::steady_clock::time_point start;
  std::chrono::steady_clock::time_point deadline;
  std::atomic<bool> stop{false};
  std::atomic<bool> timed_out{false};
  std::atomic<bool> limit_hit{false};
  std::atomic<long long> found{0};
  std::optional<long long> limit;
};

struct Sink {
  const SearchSpec* spec = nullptr;
  Control* control = nullptr;
  IsoClassifier classes;
  std::vector<LoopTable> tables;
  long long count = 0;
  long long rejected = 0;

  void emit(int n, const std::int8_t* val) {
    std::vector<Elem> cells(val, val + static_cast<std::ptrdiff_t>(n) * n);
    LoopTable q(n, std::move(cells));
    for (const Law l : spec->laws)
      if (!satisfies_law(q, l)) {
        ++rejected;
        return;
      }
    if (spec->nonassociative_only && is_associative(q)) return;
    if (spec->up_to_iso) {
      if (!classes.add(q).second) return;
    } else {
      ++count;
      if (!spec->count_only) tables.push_back(std::move(q));
    }
    const long long total = ++control->found;
    if (spec->limit && total >= *spec->limit) {
      control->limit_hit = true;
      control->stop = true;
    }
  }
};

// ---------------------------------------------------------------- solver

using Decision = std::pair<int, int>;  // cell, value

class Solver {
 public:
  Solver(int n, std::vector<Equation> eqs, bool symmetry)
      : n_(n), n2_(n * n), eqs_(std::move(eqs)), symmetry_(symmetry) {
    val_.assign(static_cast<std::size_t>(n2_), -1);
    rowpos_.assign(static_cast<std::size_t>(n2_), -1);
    colpos_.assign(static_cast<std::size_t>(n2_), -1);
    const std::uint64_t full = n == 64 ? ~0ULL : (1ULL << n) - 1;
    dom_.assign(static_cast<std::size_t>(n2_), full);
    mention_.assign(static_cast<std::size_t>(n), 0);
    lists_.resize(static_cast<std::size_t>(3 * n2_));
    for (std::size_t e = 0; e < eqs_.size(); ++e) {
      const int k = eqs_[e].vars;
      long long count = 1;
      for (int i = 0; i < k; ++i) count *= n;
      for (long long t = 0; t < count; ++t) {
        long long r = t;
        for (int i = 0; i < k; ++i) {
          vars_.push_back(static_cast<std::uint8_t>(r % n));
          r /= n;
        }
        for (int i = k; i < 3; ++i) vars_.push_back(0);
        inst_eq_.push_back(static_cast<int>(e));
      }
    }
    wkey_.assign(inst_eq_.size() * 2, -1);
    wpos_.assign(inst_eq_.size() * 2, -1);
  }

  // Fills the identity row and column and propagates. False if unsatisfiable.
  bool init() {
    for (Elem x = 0; x < n_; ++x)
      if (!assign(x, x) || !assign(x * n_, x)) return false;
    notify_.clear();
    for (int w = 0; w < static_cast<int>(wkey_.size()); ++w) {
      const int r = side_eval(w);
      move_watch(w, r >= 0 ? -1 : -r - 1, false);
    }
    for (int i = 0; i < static_cast<int>(inst_eq_.size()); ++i)
      if (!settle(2 * i)) return false;
    if (!propagate()) return false;
    std::fill(mention_.begin(), mention_.end(), 0);
    counting_ = true;
    trail_.clear();
    return true;
  }

  bool apply(const Decision& d) { return assign(d.first, d.second) && propagate(); }

  std::size_t mark() const { return trail_.size(); }

  void undo(std::size_t mark) {
    while (trail_.size() > mark) {
      const TrailEntry e = trail_.back();
      trail_.pop_back();
      switch (e.kind) {
        case TrailEntry::domain:
          dom_[e.idx] = e.old;
          break;
        case TrailEntry::assign: {
          const int cell = e.idx;
          const int v = val_[cell];
          const int a = cell / n_, b = cell % n_;
          rowpos_[a * n_ + v] = -1;
          colpos_[v * n_ + b] = -1;
          if (counting_) {
            --mention_[a];
            --mention_[b];
            --mention_[v];
          }
          --assigned_;
          val_[cell] = -1;
          dom_[cell] = e.old;
          break;
        }
        case TrailEntry::watch:
          move_watch(e.idx, static_cast<int>(e.old), false);
          break;
      }
    }
    pending_.clear();
    notify_.clear();
  }

  bool complete() const { return assigned_ == n2_; }
  const std::int8_t* cells() const { return val_.data(); }
  int order() const { return n_; }

  // Branching cell: the first empty cell in the order (max(i, j), i, j), so
  // the table grows as nested square blocks and laws close early.
  int choose() const {
    for (int m = 1; m < n_; ++m)
      for (int i = 0; i <= m; ++i)
        for (int j = 0; j <= m; ++j)
          if ((i == m || j == m) && val_[i * n_ + j] < 0) return i * n_ + j;
    return -1;
  }

  // Candidate values for the cell, keeping one of the interchangeable
  // values that appear nowhere in the partial table.
  std::vector<int> candidates(int cell) const {
    std::vector<int> out;
    const int a = cell / n_, b = cell % n_;
    bool fresh_taken = false;
    for (std::uint64_t m = dom_[cell]; m; m &= m - 1) {
      const int v = std::countr_zero(m);
      if (symmetry_ && v != 0 && v != a && v != b && mention_[v] == 0) {
        if (fresh_taken) continue;
        fresh_taken = true;
      }
      out.push_back(v);
    }
    return out;
  }

  long long nodes = 0;

 private:
  struct TrailEntry {
    enum Kind : std::uint8_t { domain, assign, watch };
    Kind kind;
    int idx;
    std::uint64_t old;
  };

  CellView view() const { return {n_, val_.data(), rowpos_.data(), colpos_.data()}; }

  const Equation& eq_of(int inst) const { return eqs_[inst_eq_[inst]]; }
  const std::uint8_t* vars_of(int inst) const { return vars_.data() + 3 * inst; }

  int eval_node(int inst, int node) const {
    NoTouch none;
    return eval(eq_of(inst), node, vars_of(inst), view(), none);
  }
  int root(int w) const {
    const Equation& eq = eq_of(w >> 1);
    return (w & 1) ? eq.rhs : eq.lhs;
  }
  int side_eval(int w) const { return eval_node(w >> 1, root(w)); }

  void move_watch(int w, int key, bool record) {
    const int old = wkey_[w];
    if (old == key) return;
    if (old >= 0) {
      auto& list = lists_[old];
      const int p = wpos_[w];
      const int last = list.back();
      list[p] = last;
      wpos_[last] = p;
      list.pop_back();
    }
    if (key >= 0) {
      wpos_[w] = static_cast<int>(lists_[key].size());
      lists_[key].push_back(w);
    }
    wkey_[w] = key;
    if (record) trail_.push_back({TrailEntry::watch, w, static_cast<std::uint64_t>(old)});
  }

  bool require(int cell, int v) {
    if (val_[cell] >= 0) return val_[cell] == v;
    if (!(dom_[cell] >> v & 1)) return false;
    pending_.push_back({cell, v});
    return true;
  }

  // Pushes the assignments that make the subterm evaluate to target.
  bool force(int inst, int node, int target) {
    const Equation& eq = eq_of(inst);
    const Node& nd = eq.nodes[static_cast<std::size_t>(node)];
    if (nd.kind == Node::var) return vars_of(inst)[nd.a] == target;
    if (nd.kind == Node::zero) return target == 0;
    const int x = eval_node(inst, nd.a);
    const int y = eval_node(inst, nd.b);
    switch (nd.kind) {
      case Node::mul:
        if (x >= 0 && y >= 0) return require(x * n_ + y, target);
        if (x >= 0) {
          const int w = rowpos_[x * n_ + target];
          return w < 0 || force(inst, nd.b, w);
        }
        if (y >= 0) {
          const int w = colpos_[target * n_ + y];
          return w < 0 || force(inst, nd.a, w);
        }
        return true;
      case Node::ldiv:  // x \ y == target  <=>  x * target == y
        if (x >= 0) {
          if (y >= 0) return require(x * n_ + target, y);
          const int c = val_[x * n_ + target];
          return c < 0 || force(inst, nd.b, c);
        }
        if (y >= 0) {
          const int w = colpos_[y * n_ + target];
          return w < 0 || force(inst, nd.a, w);
        }
        return true;
      default:  // x / y == target  <=>  target * y == x
        if (y >= 0) {
          if (x >= 0) return require(target * n_ + y, x);
          const int c = val_[target * n_ + y];
          return c < 0 || force(inst, nd.a, c);
        }
        if (x >= 0) {
          const int w = rowpos_[target * n_ + x];
          return w < 0 || force(inst, nd.b, w);
        }
        return true;
    }
  }

  // Re-examines a side after the fact it waited on became known.
  bool settle(int w) {
    const int inst = w >> 1;
    const int other = w ^ 1;
    const int r = side_eval(w);
    if (r >= 0) {
      move_watch(w, -1, true);
      const int o = side_eval(other);
      if (o >= 0) return o == r;
      return force(inst, root(other), r);
    }
    move_watch(w, -r - 1, true);
    const int o = side_eval(other);
    if (o >= 0) return force(inst, root(w), o);
    return true;
  }

  bool remove_value(int cell, int v, bool check_column) {
    trail_.push_back({TrailEntry::domain, cell, dom_[cell]});
    dom_[cell] &= ~(1ULL << v);
    const std::uint64_t d = dom_[cell];
    if (!d) return false;
    if ((d & (d - 1)) == 0) pending_.push_back({cell, std::countr_zero(d)});
    const int a = cell / n_, b = cell % n_;
    // The value may now have a single place left in the other line.
    int count = 0, where = -1;
    if (check_column) {
      if (colpos_[v * n_ + b] >= 0) return true;
      for (int i = 0; i < n_ && count < 2; ++i) {
        const int c = i * n_ + b;
        if (val_[c] < 0 && (dom_[c] >> v & 1)) {
          ++count;
          where = c;
        }
      }
    } else {
      if (rowpos_[a * n_ + v] >= 0) return true;
      for (int j = 0; j < n_ && count < 2; ++j) {
        const int c = a * n_ + j;
        if (val_[c] < 0 && (dom_[c] >> v & 1)) {
          ++count;
          where = c;
        }
      }
    }
    if (count == 0) return false;
    if (count == 1) pending_.push_back({where, v});
    return true;
  }

  bool assign(int cell, int v) {
    if (val_[cell] >= 0) return val_[cell] == v;
    if (!(dom_[cell] >> v & 1)) return false;
    trail_.push_back({TrailEntry::assign, cell, dom_[cell]});
    const int a = cell / n_, b = cell % n_;
    val_[cell] = static_cast<std::int8_t>(v);
    dom_[cell] = 1ULL << v;
    rowpos_[a * n_ + v] = static_cast<std::int8_t>(b);
    colpos_[v * n_ + b] = static_cast<std::int8_t>(a);
    if (counting_) {
      ++mention_[a];
      ++mention_[b];
      ++mention_[v];
    }
    ++assigned_;
    notify_.push_back(cell);
    for (int j = 0; j < n_; ++j) {
      const int c = a * n_ + j;
      if (j != b && val_[c] < 0 && (dom_[c] >> v & 1) && !remove_value(c, v, true)) return false;
    }
    for (int i = 0; i < n_; ++i) {
      const int c = i * n_ + b;
      if (i != a && val_[c] < 0 && (dom_[c] >> v & 1) && !remove_value(c, v, false)) return false;
    }
    return true;
  }

  bool process_key(int key) {
    auto& list = lists_[key];
    std::size_t i = 0;
    while (i < list.size()) {
      const int w = list[i];
      if (!settle(w)) return false;
      if (wkey_[w] == key) ++i;
    }
    return true;
  }

  bool propagate() {
    for (;;) {
      if (!pending_.empty()) {
        const Decision d = pending_.back();
        pending_.pop_back();
        if (!assign(d.first, d.second)) {
          pending_.clear();
          notify_.clear();
          return false;
        }
        continue;
      }
      if (!notify_.empty()) {
        const int cell = notify_.back();
        notify_.pop_back();
        const int v = val_[cell];
        const int a = cell / n_, b = cell % n_;
        if (!process_key(cell) || !process_key(n2_ + a * n_ + v) ||
            !process_key(2 * n2_ + v * n_ + b)) {
          pending_.clear();
          notify_.clear();
          return false;
        }
        continue;
      }
      return true;
    }
  }

  int n_;
  int n2_;
  std::vector<Equation> eqs_;
  bool symmetry_;
  bool counting_ = false;
  int assigned_ = 0;
  std::vector<std::int8_t> val_, rowpos_, colpos_;
  std::vector<std::uint64_t> dom_;
  std::vector<int> mention_;
  std::vector<std::uint8_t> vars_;
  std::vector<int> inst_eq_;
  std::vector<int> wkey_, wpos_;
  std::vector<std::vector<int>> lists_;
  std::vector<TrailEntry> trail_;
  std::vector<Decision> pending_;
  std::vector<int> notify_;
};

bool over_budget(Solver& s, Control& ctl) {
  if (ctl.stop) return true;
  if ((++s.nodes & 1023) == 0 && std::chrono::steady_clock::now() > ctl.deadline) {
    ctl.timed_out = true;
    ctl.stop = true;
  }
  return ctl.stop;
}

void dfs(Solver& s, Sink& sink, Control& ctl) {
  if (over_budget(s, ctl)) return;
  if (s.complete()) {
    sink.emit(s.order(), s.cells());
    return;
  }
  const int cell = s.choose();
  for (const int v : s.candidates(cell)) {
    const auto m = s.mark();
    if (s.apply({cell, v})) dfs(s, sink, ctl);
    s.undo(m);
    if (ctl.stop) return;
  }
}

// Expands the search tree breadth-first into independent subtrees.
std::vector<std::vector<Decision>> split(Solver& s, Sink& sink, Control& ctl, int want) {
  std::vector<std::vector<Decision>> frontier{{}};
  for (int depth = 0; depth < 6 && static_cast<int>(frontier.size()) < want; ++depth) {
    std::vector<std::vector<Decision>> next;
    for (const auto& path : frontier) {
      const auto m = s.mark();
      for (const auto& d : path) s.apply(d);
      if (s.complete()) {
        sink.emit(s.order(), s.cells());
      } else {
        const int cell = s.choose();
        for (const int v : s.candidates(cell)) {
          const auto m2 = s.mark();
          if (s.apply({cell, v})) {
            auto child = path;
            child.push_back({cell, v});
            next.push_back(std::move(child));
          }
          s.undo(m2);
        }
      }
      s.undo(m);
      if (ctl.stop) return {};
    }
    frontier = std::move(next);
  }
  return frontier;
}

}  // namespace

SearchResult search(const SearchSpec& spec) {
  validate(spec);
  const int n = spec.order;
  Control ctl;
  ctl.start = std::chrono::steady_clock::now();
  ctl.deadline = ctl.start + std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                                 std::chrono::duration<double>(spec.budget_seconds));
  ctl.limit = spec.limit;

  std::vector<Law> laws = spec.laws;
  if (spec.implied_constraints)
    for (const Law l : implied_laws(spec.laws))
      if (std::find(laws.begin(), laws.end(), l) == laws.end()) laws.push_back(l);
  std::vector<Equation> eqs;
  for (const Law l : laws)
    for (auto& e : equations(l)) eqs.push_back(std::move(e));

  Solver base(n, std::move(eqs), spec.symmetry_breaking);
  std::vector<Sink> sinks(static_cast<std::size_t>(spec.jobs) + 1);
  for (auto& s : sinks) {
    s.spec = &spec;
    s.control = &ctl;
  }
  long long nodes = 0;
  if (base.init()) {
    if (spec.jobs == 1) {
      dfs(base, sinks[0], ctl);
      nodes = base.nodes;
    } else {
      const auto paths = split(base, sinks[0], ctl, 8 * spec.jobs);
      std::atomic<std::size_t> next{0};
      std::mutex nodes_mutex;
      std::vector<std::thread> workers;
      for (int j = 0; j < spec.jobs; ++j)
        workers.emplace_back([&, j] {
          Solver s = base;
          s.nodes = 0;
          for (std::size_t i; !ctl.stop && (i = next++) < paths.size();) {
            const auto m = s.mark();
            bool ok = true;
            for (const auto& d : paths[i]) ok = ok && s.apply(d);
            if (ok) dfs(s, sinks[static_cast<std::size_t>(j) + 1], ctl);
            s.undo(m);
          }
          std::lock_guard lock(nodes_mutex);
          nodes += s.nodes;
        });
      for (auto& w : workers) w.join();
      nodes += base.nodes;
    }
  }

  SearchResult out;
  out.nodes = nodes;
  if (spec.up_to_iso) {
    IsoClassifier merged;
    for (const auto& s : sinks)
      for (int k = 0; k < s.classes.size(); ++k) merged.add(s.classes.representative(k));
    out.count = merged.size();
    if (!spec.count_only) out.loops = merged.sorted_representatives();
  } else {
    for (auto& s : sinks) {
      out.count += s.count;
      for (auto& t : s.tables) out.loops.push_back(std::move(t));
    }
    std::sort(out.loops.begin(), out.loops.end(), [](const LoopTable& a, const LoopTable& b) {
      return a.serialize() < b.serialize();
    });
  }
  for (const auto& s : sinks) out.rejected += s.rejected;
  if (ctl.timed_out)
    out.status = SearchStatus::timeout;
  else if (ctl.limit_hit)
    out.status = SearchStatus::limit_reached;
  out.seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - ctl.start).count();
  return out;
}

bool incremental_law_check(const PartialTable& t, Law law, Elem row, Elem col) {
  const int n = t.n;
  if (n < 1 || n > kMaxSearchOrder || static_cast<int>(t.cells.size()) != n * n)
    throw std::invalid_argument("malformed partial table");
  if (row < 0 || row >= n || col < 0 || col >= n)
    throw std::out_of_range("cell outside the table");
  std::vector<std::int8_t> val(t.cells.size(), -1), rowpos(t.cells.size(), -1),
      colpos(t.cells.size(), -1);
  for (Elem x = 0; x < n; ++x)
    for (Elem y = 0; y < n; ++y) {
      const Elem v = t.at(x, y);
      if (v < 0) continue;
      if (v >= n) throw std::invalid_argument("partial table entry out of range");
      val[x * n + y] = static_cast<std::int8_t>(v);
      rowpos[x * n + v] = static_cast<std::int8_t>(y);
      colpos[v * n + y] = static_cast<std::int8_t>(x);
    }
  const CellView view{n, val.data(), rowpos.data(), colpos.data()};
  const int target = row * n + col;
  for (const auto& eq : equations(law)) {
    long long count = 1;
    for (int i = 0; i < eq.vars; ++i) count *= n;
    std::uint8_t vars[3] = {0, 0, 0};
    for (long long k = 0; k < count; ++k) {
      long long r = k;
      for (int i = 0; i < eq.vars; ++i) {
        vars[i] = static_cast<std::uint8_t>(r % n);
        r /= n;
      }
      bool touched = false;
      auto touch = [&](int cell) { touched = touched || cell == target; };
      const int l = eval(eq, eq.lhs, vars, view, touch);
      if (l < 0) continue;
      const int rr = eval(eq, eq.rhs, vars, view, touch);
      if (rr >= 0 && touched && l != rr) return false;
    }
  }
  return true;
}

}  // namespace loopforge
