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

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "loopforge/table.hpp"

namespace loopforge {

enum class Law { lcc, rcc, pa, extra, moufang, wip, flexible };

std::string_view to_string(Law law);
/// Accepts the lowercase names above plus "flex"; "cc" is not a single law.
std::optional<Law> parse_law(std::string_view name);
/// Parses a comma-separated list; "cc" expands to lcc,rcc. Throws
/// std::invalid_argument on unknown names.
std::vector<Law> parse_laws(std::string_view list);

/// Laws that every loop satisfying `laws` also satisfies, used as extra
/// pruning: extra loops are conjugacy closed, so extra adds lcc and rcc.
std::vector<Law> implied_laws(const std::vector<Law>& laws);

/// Full check of one law on a complete table.
bool satisfies_law(const LoopTable& q, Law law);

struct SearchSpec {
  int order = 1;
  std::vector<Law> laws;
  /// Required to search with an empty law set; only allowed for order <= 6.
  bool all_loops = false;
  bool nonassociative_only = false;
  bool up_to_iso = false;
  bool count_only = false;
  std::optional<long long> limit;
  double budget_seconds = 600.0;
  int jobs = 1;
  /// Try one representative of the values not yet mentioned in the partial
  /// table. Turning it off enumerates every loop with identity 0.
  bool symmetry_breaking = true;
  /// Also propagate laws implied by the requested ones (see implied_laws).
  /// Solutions are still checked against the requested laws only.
  bool implied_constraints = true;
};

inline constexpr int kMaxSearchOrder = 64;

/// Throws std::invalid_argument when the spec is unusable.
void validate(const SearchSpec& spec);

enum class SearchStatus { complete, limit_reached, timeout };

std::string_view to_string(SearchStatus s);

struct SearchResult {
  SearchStatus status = SearchStatus::complete;
  /// Tables found, sorted by serialization. With up_to_iso, one per class.
  /// Empty when count_only.
  std::vector<LoopTable> loops;
  /// Number of tables (or classes, with up_to_iso) found.
  long long count = 0;
  long long nodes = 0;
  /// Complete tables the incremental checks let through but the full law
  /// checks rejected. Always zero unless propagation is broken.
  long long rejected = 0;
  double seconds = 0.0;
};

/// Exhaustive search for loops of the given order satisfying every law.
/// Never reports a wrong count: on timeout the status says so and the
/// results found so far are returned.
SearchResult search(const SearchSpec& spec);

/// A partially filled table; -1 marks an empty cell.
struct PartialTable {
  int n = 0;
  std::vector<Elem> cells;

  /// Row 0 and column 0 filled with the identity pattern, the rest empty.
  static PartialTable with_identity(int n);
  static PartialTable from_table(const LoopTable& q);
  Elem at(Elem x, Elem y) const { return cells[static_cast<std::size_t>(x * n + y)]; }
  Elem& at(Elem x, Elem y) { return cells[static_cast<std::size_t>(x * n + y)]; }
};

/// False iff some instance of the law that is fully determined by the
/// partial table and reads cell (row, col) is violated.
bool incremental_law_check(const PartialTable& t, Law law, Elem row, Elem col);

}  // namespace loopforge
