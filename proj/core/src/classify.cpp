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

#include "loopforge/classify.hpp"

#include <algorithm>
#include <atomic>
#include <thread>

#include "loopforge/classes.hpp"
#include "loopforge/fixtures.hpp"
#include "loopforge/isomorphism.hpp"
#include "loopforge/structure.hpp"

namespace loopforge {

namespace {

template <class F>
void parallel_for(std::size_t count, int jobs, F&& body) {
  if (jobs <= 1 || count < 2) {
    for (std::size_t i = 0; i < count; ++i) body(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> workers;
  for (int j = 0; j < jobs; ++j)
    workers.emplace_back([&] {
      for (std::size_t i; (i = next++) < count;) body(i);
    });
  for (auto& w : workers) w.join();
}

bool is_cyclic_group(const LoopTable& g) {
  if (!is_associative(g)) return false;
  for (Elem x = 0; x < g.order(); ++x)
    if (element_order(g, x) == g.order()) return true;
  return false;
}

bool is_elementary_abelian_2(const LoopTable& g) {
  if (!is_associative(g)) return false;
  for (Elem x = 0; x < g.order(); ++x)
    if (g(x, x) != 0) return false;
  return true;
}

Order27Class describe_order27(const LoopTable& q) {
  Order27Class c;
  const int n = q.order();
  const auto cls = classify_elements(q);
  const auto nuc = nucleus(q);
  ElementSet t;
  for (Elem x = 0; x < n; ++x)
    if (pow(q, x, 3) == 0) t.push_back(x);
  c.cube_trivial = static_cast<int>(t.size());
  c.cube_trivial_subloop = is_product_closed(q, t);
  c.moufang = static_cast<int>(cls.moufang_set.size());
  c.moufang_subloop = cls.moufang_set_is_subloop;
  c.nucleus = nuc.order();
  c.center = center(q).order();
  if (c.cube_trivial == n)
    c.case_label = "I";
  else if (t == cls.moufang_set)
    c.case_label = "II";
  else if (c.cube_trivial == 9)
    c.case_label = "III";
  else
    c.case_label = "?";
  std::vector<bool> in_m(static_cast<std::size_t>(n), false);
  for (const Elem x : cls.moufang_set) in_m[static_cast<std::size_t>(x)] = true;
  bool commuting = false;
  for (Elem x = 0; x < n && !commuting; ++x) {
    if (in_m[static_cast<std::size_t>(x)]) continue;
    for (const Elem y : cls.moufang_set)
      if (!nuc.contains(y) && q(x, y) == q(y, x)) {
        commuting = true;
        break;
      }
  }
  c.subcase = commuting ? "A" : "B";
  c.aip = has_aip(q);
  return c;
}

}  // namespace

Order27Report classify_order27(int jobs) {
  const auto params = all_family27_params();
  struct Member {
    LoopTable table;
    bool associative = false;
    bool pacc = false;
    bool aip_agrees = false;
  };
  std::vector<Member> members(params.size());
  parallel_for(params.size(), jobs, [&](std::size_t i) {
    auto& m = members[i];
    m.table = family27(params[i]);
    m.associative = is_associative(m.table);
    m.pacc = is_cc(m.table) && is_power_associative(m.table);
    m.aip_agrees = m.pacc && has_aip(m.table) == check_aip_criterion(params[i]);
  });

  Order27Report report;
  report.family_size = static_cast<int>(params.size());
  report.all_pacc = true;
  report.aip_criterion_holds = true;
  std::vector<LoopTable> nonassoc;
  std::vector<std::size_t> origin;
  for (std::size_t i = 0; i < members.size(); ++i) {
    report.all_pacc = report.all_pacc && members[i].pacc;
    report.aip_criterion_holds = report.aip_criterion_holds && members[i].aip_agrees;
    if (!members[i].associative) {
      nonassoc.push_back(members[i].table);
      origin.push_back(i);
    }
  }
  report.nonassociative = static_cast<int>(nonassoc.size());

  const auto classes = dedupe(nonassoc);
  report.classes.resize(classes.representatives.size());
  parallel_for(report.classes.size(), jobs, [&](std::size_t k) {
    report.classes[k] = describe_order27(classes.representatives[k]);
    report.classes[k].representative = classes.representatives[k];
  });
  for (std::size_t i = 0; i < nonassoc.size(); ++i) {
    auto& c = report.classes[static_cast<std::size_t>(classes.class_of[i])];
    if (c.members++ == 0) c.params = params[origin[i]];
  }
  report.aip_matches_subcase_b = true;
  for (const auto& c : report.classes) {
    report.aip_classes += c.aip ? 1 : 0;
    ++report.case_counts[c.case_label];
    report.aip_matches_subcase_b = report.aip_matches_subcase_b && (c.aip == (c.subcase == "B"));
  }
  return report;
}

Order16Loop describe_order16(const std::string& name, const LoopTable& q) {
  Order16Loop d;
  d.name = name;
  d.table = q;
  const auto cls = classify_elements(q);
  d.pacc = cls.flags.cc && cls.flags.power_associative;
  d.nonassociative = !cls.flags.group;
  d.extra = cls.flags.extra;
  const auto nuc = nucleus(q);
  const auto z = center(q);
  d.nucleus = nuc.order();
  d.center = z.order();
  d.center_cyclic = is_cyclic_group(subloop_table(q, z));
  d.nucleus_elementary_abelian = is_elementary_abelian_2(subloop_table(q, nuc));
  if (is_normal(q, nuc)) {
    const auto qn = quotient(q, nuc);
    d.quotient_klein = qn.order() == 4 && is_elementary_abelian_2(qn);
  }
  for (Elem x = 0; x < q.order(); ++x)
    if (q(x, x) == 0) ++d.square_trivial;
  return d;
}

Order16Report classify_order16(const Order16Options& options) {
  Order16Report report;
  report.trio = {describe_order16("q16:0,0", family16(0, 0)),
                 describe_order16("q16:1,1", family16(1, 1)),
                 describe_order16("pacc16", pacc16_loop())};
  report.trio_pairwise_nonisomorphic = true;
  for (std::size_t i = 0; i < report.trio.size(); ++i)
    for (std::size_t j = i + 1; j < report.trio.size(); ++j)
      if (are_isomorphic(report.trio[i].table, report.trio[j].table))
        report.trio_pairwise_nonisomorphic = false;

  std::vector<LoopTable> qs;
  for (int r = 0; r < 4; ++r)
    for (int s = 0; s < 4; ++s) qs.push_back(family16(r, s));
  const auto dd = dedupe(qs);
  report.q_classes = static_cast<int>(dd.representatives.size());
  report.q_class_of.assign(4, std::vector<int>(4, -1));
  for (int r = 0; r < 4; ++r)
    for (int s = 0; s < 4; ++s) report.q_class_of[r][s] = dd.class_of[r * 4 + s];
  const int odd_class = report.q_class_of[1][1];
  report.parity_rule_holds = report.q_classes == 2;
  for (int r = 0; r < 4; ++r)
    for (int s = 0; s < 4; ++s)
      report.parity_rule_holds = report.parity_rule_holds &&
                                 ((report.q_class_of[r][s] == odd_class) == (r % 2 && s % 2));

  std::vector<LoopTable> all;
  for (const auto& t : report.trio) all.push_back(t.table);
  if (options.census) {
    SearchSpec spec;
    spec.order = 16;
    spec.laws = {Law::extra};
    spec.nonassociative_only = true;
    spec.up_to_iso = true;
    spec.budget_seconds = options.budget_seconds;
    spec.jobs = options.jobs;
    const auto found = search(spec);
    report.census_ran = true;
    report.census_status = found.status;
    report.census_seconds = found.seconds;
    for (std::size_t k = 0; k < found.loops.size(); ++k) {
      report.extra_classes.push_back(
          describe_order16("extra16:" + std::to_string(k), found.loops[k]));
      all.push_back(found.loops[k]);
    }
  }
  report.total_classes = static_cast<int>(dedupe(all).representatives.size());
  return report;
}

bool PolynomialFormsReport::all_hold() const {
  return !checks.empty() && std::all_of(checks.begin(), checks.end(), [](const auto& c) {
    return c.isomorphic && c.generator_map_extends;
  });
}

PolynomialFormsReport verify_polynomial_forms() {
  PolynomialFormsReport report;
  // Q_{r,s}: z, a, b sit at 1, 8, 4; in the polynomial form at 4, 2, 1.
  for (int r = 0; r < 4; ++r)
    for (int s = 0; s < 4; ++s) {
      const auto q = family16(r, s);
      const auto p = poly16(r, s);
      PolynomialFormCheck c;
      c.name = "poly16:" + std::to_string(r) + "," + std::to_string(s);
      c.isomorphic = are_isomorphic(q, p).has_value();
      c.generator_map_extends = extend_generator_map(q, p, {1, 8, 4}, {4, 2, 1}).has_value();
      report.checks.push_back(c);
    }
  // In pacc16_loop c, u, a, b sit at 1, 2, 4, 8; in Z2^4 at 8, 4, 2, 1.
  const auto t = pacc16_loop();
  const auto p = poly2_4();
  PolynomialFormCheck c;
  c.name = "poly2_4";
  c.isomorphic = are_isomorphic(t, p).has_value();
  c.generator_map_extends = extend_generator_map(t, p, {1, 2, 4, 8}, {8, 4, 2, 1}).has_value();
  report.checks.push_back(c);
  return report;
}

}  // namespace loopforge
