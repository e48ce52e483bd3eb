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

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "loopforge/extension.hpp"
#include "loopforge/search.hpp"
#include "loopforge/table.hpp"

namespace loopforge {

/// One isomorphism class of nonassociative order-27 family members.
struct Order27Class {
  LoopTable representative;
  /// Smallest parameter tuple (lexicographic) producing a member.
  Family27Params params;
  int members = 0;  ///< parameter tuples in the class
  int cube_trivial = 0;  ///< |T|, T = {x : x^3 == 1}
  bool cube_trivial_subloop = false;
  int moufang = 0;  ///< |M|
  bool moufang_subloop = false;
  int nucleus = 0;
  int center = 0;
  /// "I" (T = Q), "II" (T = M), "III" (|T| = 9, T != M), or "?" otherwise.
  std::string case_label;
  /// "A" when some x outside M commutes with some y in M \ N, else "B".
  std::string subcase;
  bool aip = false;
};

struct Order27Report {
  int family_size = 0;
  int nonassociative = 0;
  bool all_pacc = false;
  /// Sorted by representative serialization.
  std::vector<Order27Class> classes;
  int aip_classes = 0;
  std::map<std::string, int> case_counts;  ///< keyed by case label
  /// has_aip agrees with the parameter criterion on every tuple.
  bool aip_criterion_holds = false;
  /// Every class with AIP is in subcase B and vice versa.
  bool aip_matches_subcase_b = false;
};

/// Builds every family member, keeps the nonassociative ones, and
/// classifies them up to isomorphism. Output does not depend on jobs.
Order27Report classify_order27(int jobs = 1);

struct Order16Loop {
  std::string name;
  LoopTable table;
  bool pacc = false;
  bool nonassociative = false;
  bool extra = false;
  int nucleus = 0;
  int center = 0;
  bool center_cyclic = false;              ///< Z(Q) is cyclic
  bool nucleus_elementary_abelian = false;  ///< N(Q) is an elementary abelian 2-group
  bool quotient_klein = false;              ///< Q/N is Z2 x Z2
  int square_trivial = 0;                   ///< |{x : x*x == 1}|
};

struct Order16Options {
  /// Run the search census of nonassociative extra loops.
  bool census = false;
  double budget_seconds = 1800.0;
  int jobs = 1;
};

struct Order16Report {
  /// Q_{0,0}, Q_{1,1} and pacc16_loop.
  std::vector<Order16Loop> trio;
  bool trio_pairwise_nonisomorphic = false;
  /// Class index of Q_{r,s} at [r][s]; classes numbered by serialization.
  std::vector<std::vector<int>> q_class_of;
  int q_classes = 0;
  /// Q_{r,s} is in the class of Q_{1,1} exactly when r and s are odd.
  bool parity_rule_holds = false;

  bool census_ran = false;
  SearchStatus census_status = SearchStatus::complete;
  double census_seconds = 0.0;
  std::vector<Order16Loop> extra_classes;
  /// Classes of trio plus census after a joint dedupe.
  int total_classes = 0;
};

Order16Report classify_order16(const Order16Options& options = {});

struct PolynomialFormCheck {
  std::string name;
  bool isomorphic = false;          ///< are_isomorphic found a witness
  bool generator_map_extends = false;  ///< the stated generator images extend
};

struct PolynomialFormsReport {
  std::vector<PolynomialFormCheck> checks;
  bool all_hold() const;
};

/// poly16(r,s) against Q_{r,s} for every (r,s) and poly2_4 against the
/// pacc16_loop, each with its stated generator map.
PolynomialFormsReport verify_polynomial_forms();

/// Summary facts about an order-16 loop.
Order16Loop describe_order16(const std::string& name, const LoopTable& q);

}  // namespace loopforge
