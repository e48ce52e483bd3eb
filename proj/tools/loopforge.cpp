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

// loopforge: command-line front end for the finite loop toolkit.
//
// Exit codes: 0 pass, 1 property failure, 2 input error, 3 timeout.

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <filesystem>
#include <iomanip>
#include <iostream>
#include <numeric>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <CLI/CLI.hpp>
#include <nlohmann/json.hpp>

#include "loopforge/audit.hpp"
#include "loopforge/classes.hpp"
#include "loopforge/classify.hpp"
#include "loopforge/fixtures.hpp"
#include "loopforge/io.hpp"
#include "loopforge/isomorphism.hpp"
#include "loopforge/search.hpp"
#include "loopforge/structure.hpp"

namespace fs = std::filesystem;
using nlohmann::json;
using namespace loopforge;

namespace {

constexpr int kPass = 0;
constexpr int kFail = 1;
constexpr int kInputError = 2;
constexpr int kTimeout = 3;

std::string join(const std::vector<Elem>& v, const char* sep = " ") {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += sep;
    out += std::to_string(v[i]);
  }
  return out;
}

std::string set_text(const std::vector<Elem>& v) { return "{" + join(v, ",") + "}"; }

std::vector<std::string> split_list(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  for (std::string item; std::getline(ss, item, ',');)
    if (!item.empty()) out.push_back(item);
  return out;
}

// ---------------------------------------------------------------- check

struct CheckArgs {
  std::string file;
  std::string laws = "cc";
  bool json = false;
};

int run_check(const CheckArgs& a) {
  const auto q = read_table_file(a.file);
  std::vector<std::string> laws = split_list(a.laws);
  if (laws.empty()) throw CLI::ValidationError("--laws", "empty law list");
  for (const auto& l : laws)
    if (std::find(law_names().begin(), law_names().end(), l) == law_names().end())
      throw CLI::ValidationError("--laws", "unknown law '" + l + "'");
  bool all = true;
  json out = {{"loop", q.name()}, {"order", q.order()}, {"laws", json::object()}};
  for (const auto& l : laws) {
    const auto r = check_law(q, l);
    all = all && r.holds;
    out["laws"][l] = {{"holds", r.holds},
                      {"counterexample", r.holds ? json(nullptr) : json(r.counterexample)}};
    if (!a.json) {
      std::cout << std::left << std::setw(8) << l << (r.holds ? "holds" : "fails");
      if (!r.holds) std::cout << "  counterexample: " << join(r.counterexample);
      std::cout << "\n";
    }
  }
  out["all_hold"] = all;
  if (a.json) std::cout << out.dump(2) << "\n";
  return all ? kPass : kFail;
}

// ---------------------------------------------------------------- info

int run_info(const std::string& file, bool as_json) {
  const auto q = read_table_file(file);
  const auto s = structure_report(q);
  const auto c = classify_elements(q);
  if (as_json) {
    json out = {{"loop", q.name()},
                {"order", q.order()},
                {"structure", structure_json(s)},
                {"classes", classes_json(c)}};
    std::cout << out.dump(2) << "\n";
    return kPass;
  }
  const auto row = [](const std::string& k, const std::string& v) {
    std::cout << "  " << std::left << std::setw(26) << k << v << "\n";
  };
  const auto yn = [](bool b) { return std::string(b ? "yes" : "no"); };
  const auto grp = [](const std::optional<GroupSummary>& g) {
    return g ? std::to_string(g->order) + (g->abelian ? " (abelian)" : "") : "cap exceeded";
  };
  std::cout << (q.name().empty() ? "loop" : q.name()) << " of order " << q.order() << "\n";
  std::cout << "structure\n";
  row("left nucleus", set_text(s.nuclei.left.elements()));
  row("middle nucleus", set_text(s.nuclei.middle.elements()));
  row("right nucleus", set_text(s.nuclei.right.elements()));
  row("nucleus", set_text(s.nuclei.nucleus.elements()));
  row("center", set_text(s.center.elements()));
  row("associator subloop", set_text(s.associator_subloop.elements()));
  row("nucleus normal", yn(s.nucleus_normal));
  row("|Inn|", grp(s.inn));
  row("|Mlt|", grp(s.mlt));
  row("Q/N", s.quotient_mod_nucleus ? "order " + std::to_string(s.quotient_mod_nucleus->order()) +
                                          (s.quotient_is_abelian_group ? ", abelian group" : "")
                                    : "n/a");
  if (s.exponent_mod_nucleus) row("exponent of Q/N", std::to_string(*s.exponent_mod_nucleus));
  std::cout << "element classes\n";
  row("power-associative", set_text(c.pa_set));
  row("WIP", set_text(c.wip_set));
  row("Moufang", set_text(c.moufang_set));
  row("pseudoMoufang", set_text(c.pseudo_set));
  row("extra", set_text(c.extra_set));
  row("square nuclear", set_text(c.square_nuclear_set));
  row("PA set is subloop", yn(c.pa_set_is_subloop));
  row("Moufang set is subloop", yn(c.moufang_set_is_subloop));
  const auto& f = c.flags;
  std::cout << "loop flags\n";
  row("LCC / RCC / CC", yn(f.lcc) + " / " + yn(f.rcc) + " / " + yn(f.cc));
  row("power-associative", yn(f.power_associative));
  row("WIP loop", yn(f.wip));
  row("Moufang loop", yn(f.moufang));
  row("extra loop", yn(f.extra));
  row("diassociative", yn(f.diassociative));
  row("AIP", f.aip ? yn(*f.aip) : "n/a");
  row("group / abelian", yn(f.group) + " / " + yn(f.abelian_group));
  return kPass;
}

// ---------------------------------------------------------------- gen

struct GenArgs {
  std::string family;
  std::string params;
  std::string out;
  bool shuffle = false;
  std::uint64_t seed = 1;
};

// Random relabeling that keeps the identity at 0.
LoopTable shuffled(const LoopTable& q, std::uint64_t seed) {
  std::vector<Elem> img(static_cast<std::size_t>(q.order()));
  std::iota(img.begin(), img.end(), 0);
  std::mt19937_64 rng(seed);
  std::shuffle(img.begin() + 1, img.end(), rng);
  return relabel(q, Perm(img)).with_name(q.name());
}

int run_gen(const GenArgs& a) {
  std::string desc = a.family;
  if (!a.params.empty()) desc += ":" + a.params;
  LoopTable q;
  try {
    q = make_fixture(desc);
  } catch (const std::invalid_argument& e) {
    throw CLI::ValidationError("FAMILY", e.what());
  }
  if (q.name().empty()) q = q.with_name(desc);
  if (a.shuffle) q = shuffled(q, a.seed);
  if (a.out.empty() || a.out == "-")
    std::cout << format_looptab(q);
  else
    write_table_file(a.out, q);
  return kPass;
}

// ---------------------------------------------------------------- iso

int run_iso(const std::string& f1, const std::string& f2) {
  const auto a = read_table_file(f1);
  const auto b = read_table_file(f2);
  const auto w = are_isomorphic(a, b);
  if (!w) {
    std::cerr << "not isomorphic\n";
    return kFail;
  }
  std::cout << join(w->to_vector()) << "\n";
  return kPass;
}

// ---------------------------------------------------------------- classify

struct ClassifyArgs {
  int order = 0;
  std::string out;
  bool long_tier = false;
  bool json = false;
  int jobs = 1;
  double budget = 1800.0;
};

void write_representatives(const std::string& dir, const std::vector<LoopTable>& reps,
                           const std::string& stem) {
  if (dir.empty()) return;
  fs::create_directories(dir);
  for (std::size_t k = 0; k < reps.size(); ++k) {
    std::ostringstream name;
    name << stem << "-" << std::setw(2) << std::setfill('0') << k;
    write_table_file(fs::path(dir) / (name.str() + ".tbl"), reps[k].with_name(name.str()));
  }
}

int run_classify27(const ClassifyArgs& a) {
  const auto r = classify_order27(a.jobs);
  std::vector<LoopTable> reps;
  for (const auto& c : r.classes) reps.push_back(c.representative);
  write_representatives(a.out, reps, "order27");
  if (a.json) {
    std::cout << order27_json(r).dump(2) << "\n";
    return kPass;
  }
  std::cout << "family members             " << r.family_size << "\n"
            << "nonassociative members     " << r.nonassociative << "\n"
            << "all members PACC           " << (r.all_pacc ? "yes" : "no") << "\n"
            << "isomorphism classes        " << r.classes.size() << "\n"
            << "classes with AIP           " << r.aip_classes << "\n";
  for (const auto& [label, count] : r.case_counts)
    std::cout << "case " << std::left << std::setw(22) << label << count << "\n";
  std::cout << "AIP criterion holds        " << (r.aip_criterion_holds ? "yes" : "no") << "\n"
            << "AIP iff subcase B          " << (r.aip_matches_subcase_b ? "yes" : "no") << "\n\n";
  std::cout << " k  params      members |T| |M| |N| |Z| case sub AIP\n";
  for (std::size_t k = 0; k < r.classes.size(); ++k) {
    const auto& c = r.classes[k];
    const auto& p = c.params;
    std::cout << std::right << std::setw(2) << k << "  " << p.theta << "," << p.alpha << ","
              << p.beta << "," << p.gamma << "," << p.delta << "   " << std::setw(7)
              << c.members << std::setw(4) << c.cube_trivial << std::setw(4) << c.moufang
              << std::setw(4) << c.nucleus << std::setw(4) << c.center << std::setw(5)
              << c.case_label << std::setw(4) << c.subcase << std::setw(4)
              << (c.aip ? "yes" : "no") << "\n";
  }
  return kPass;
}

int run_classify16(const ClassifyArgs& a) {
  Order16Options opt;
  opt.census = a.long_tier;
  opt.budget_seconds = a.budget;
  opt.jobs = a.jobs;
  const auto r = classify_order16(opt);
  std::vector<LoopTable> reps;
  for (const auto& d : r.trio) reps.push_back(d.table);
  for (const auto& d : r.extra_classes) reps.push_back(d.table);
  write_representatives(a.out, reps, "order16");
  if (a.json) {
    std::cout << order16_json(r).dump(2) << "\n";
  } else {
    std::cout << "   name        PACC nonassoc extra |N| |Z| Z cyclic N elem.ab Q/N=V4 x^2=1\n";
    const auto line = [](const Order16Loop& d) {
      const auto yn = [](bool b) { return b ? "yes" : "no"; };
      std::cout << "   " << std::left << std::setw(12) << d.name << std::right << std::setw(4)
                << yn(d.pacc) << std::setw(9) << yn(d.nonassociative) << std::setw(6)
                << yn(d.extra) << std::setw(4) << d.nucleus << std::setw(4) << d.center
                << std::setw(9) << yn(d.center_cyclic) << std::setw(10)
                << yn(d.nucleus_elementary_abelian) << std::setw(7) << yn(d.quotient_klein)
                << std::setw(6) << d.square_trivial << "\n";
    };
    for (const auto& d : r.trio) line(d);
    std::cout << "\ntrio pairwise nonisomorphic " << (r.trio_pairwise_nonisomorphic ? "yes" : "no")
              << "\nQ_{r,s} classes             " << r.q_classes
              << "\nparity rule holds           " << (r.parity_rule_holds ? "yes" : "no") << "\n";
    if (r.census_ran) {
      std::cout << "\nextra census (" << to_string(r.census_status) << ", " << std::fixed
                << std::setprecision(1) << r.census_seconds << " s)\n";
      for (const auto& d : r.extra_classes) line(d);
    }
    std::cout << "total classes               " << r.total_classes << "\n";
  }
  if (r.census_ran && r.census_status == SearchStatus::timeout) {
    std::cerr << "census timed out after " << r.census_seconds << " s with "
              << r.extra_classes.size() << " classes found\n";
    return kTimeout;
  }
  return kPass;
}

// ---------------------------------------------------------------- search

struct SearchArgs {
  int order = 0;
  std::string laws;
  bool all_loops = false;
  bool nonassociative = false;
  bool up_to_iso = false;
  bool count_only = false;
  long long limit = 0;
  double budget = 0.0;
  int jobs = 1;
  bool json = false;
  bool no_symmetry = false;
  std::string out;
};

double default_budget() {
  if (const char* env = std::getenv("LOOPFORGE_BUDGET")) {
    char* end = nullptr;
    const double v = std::strtod(env, &end);
    if (end != env && *end == '\0' && v > 0) return v;
    throw CLI::ValidationError("LOOPFORGE_BUDGET", std::string("not a positive number: ") + env);
  }
  return SearchSpec{}.budget_seconds;
}

int run_search(const SearchArgs& a) {
  SearchSpec spec;
  spec.order = a.order;
  if (a.laws.empty() || a.laws == "none")
    spec.all_loops = true;
  else
    spec.laws = parse_laws(a.laws);
  spec.all_loops = spec.all_loops || a.all_loops;
  spec.nonassociative_only = a.nonassociative;
  spec.up_to_iso = a.up_to_iso;
  spec.count_only = a.count_only;
  if (a.limit > 0) spec.limit = a.limit;
  spec.budget_seconds = a.budget > 0 ? a.budget : default_budget();
  spec.jobs = a.jobs;
  spec.symmetry_breaking = !a.no_symmetry;
  validate(spec);
  const auto r = search(spec);
  if (!a.out.empty()) {
    std::vector<LoopTable> reps;
    for (const auto& q : r.loops) reps.push_back(q);
    write_representatives(a.out, reps, "found");
  }
  if (a.json) {
    std::cout << search_json(r, !a.count_only).dump(2) << "\n";
  } else {
    std::cout << "status  " << to_string(r.status) << "\n"
              << "count   " << r.count << "\n"
              << "nodes   " << r.nodes << "\n"
              << "seconds " << std::fixed << std::setprecision(2) << r.seconds << "\n";
    if (!a.count_only)
      for (std::size_t k = 0; k < r.loops.size(); ++k)
        std::cout << "\n# solution " << k << "\n" << format_looptab(r.loops[k]);
  }
  if (r.status == SearchStatus::timeout) {
    std::cerr << "search timed out after " << r.seconds << " s: " << r.count << " found, "
              << r.nodes << " nodes\n";
    return kTimeout;
  }
  return kPass;
}

// ---------------------------------------------------------------- audit

int run_audit(const std::string& file, bool as_json, bool verbose) {
  const auto q = read_table_file(file);
  const auto r = audit(q);
  if (as_json) {
    std::cout << audit_json(r).dump(2) << "\n";
  } else {
    for (const auto& c : r.checks) {
      if (!verbose && c.status != CheckStatus::fail) continue;
      std::cout << std::left << std::setw(16) << to_string(c.status) << std::setw(44) << c.name
                << c.scope;
      if (!c.detail.empty()) std::cout << "  " << c.detail;
      std::cout << "\n";
    }
    std::cout << r.count(CheckStatus::pass) << " passed, " << r.count(CheckStatus::fail)
              << " failed, " << r.count(CheckStatus::not_applicable) << " not applicable\n";
  }
  return r.count(CheckStatus::fail) == 0 ? kPass : kFail;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Finite loop toolkit: CC-loop structure, classification and search"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "loopforge 0.1.0");

  CheckArgs check;
  auto* check_cmd = app.add_subcommand("check", "Check loop laws; exit 1 if any fails");
  check_cmd->add_option("FILE", check.file, "LOOPTAB or JSON table")->required();
  check_cmd->add_option("--laws", check.laws,
                        "Comma list of lcc,rcc,cc,pa,wip,moufang,extra,flex,aip,diassoc")
      ->capture_default_str();
  check_cmd->add_flag("--json", check.json, "Emit JSON");

  std::string info_file;
  bool info_json = false;
  auto* info_cmd = app.add_subcommand("info", "Structure and element-class report");
  info_cmd->add_option("FILE", info_file)->required();
  info_cmd->add_flag("--json", info_json, "Emit JSON");

  GenArgs gen;
  auto* gen_cmd = app.add_subcommand(
      "gen", "Write a named loop: cyclic:n elem2:k dihedral8 quaternion8 product:A,B q16:r,s "
             "fam27:t,a,b,g,d cc16 pacc16 poly16:r,s poly2_4");
  gen_cmd->add_option("FAMILY", gen.family, "Family, optionally with :params")->required();
  gen_cmd->add_option("PARAMS", gen.params, "Parameters when not given after ':'");
  gen_cmd->add_option("-o,--out", gen.out, "Output file (.json for JSON); stdout if omitted");
  gen_cmd->add_flag("--shuffle", gen.shuffle, "Apply a random relabeling fixing the identity");
  gen_cmd->add_option("--seed", gen.seed, "Seed for --shuffle")->capture_default_str();

  std::string iso_a, iso_b;
  auto* iso_cmd = app.add_subcommand("iso", "Isomorphism test; prints a witness permutation");
  iso_cmd->add_option("FILE1", iso_a)->required();
  iso_cmd->add_option("FILE2", iso_b)->required();

  ClassifyArgs cls;
  auto* cls_cmd = app.add_subcommand("classify", "Classify the order-16 or order-27 loops");
  cls_cmd->add_option("ORDER", cls.order)->required()->check(CLI::IsMember({16, 27}));
  cls_cmd->add_option("--out", cls.out, "Directory for representative tables");
  cls_cmd->add_flag("--long", cls.long_tier, "Order 16: also run the extra-loop census");
  cls_cmd->add_option("--budget", cls.budget, "Census budget in seconds")->capture_default_str();
  cls_cmd->add_option("--jobs", cls.jobs, "Worker threads")->check(CLI::PositiveNumber);
  cls_cmd->add_flag("--json", cls.json, "Emit JSON");

  SearchArgs srch;
  auto* search_cmd = app.add_subcommand("search", "Enumerate loops satisfying laws");
  search_cmd->add_option("--order", srch.order, "Order n")->required();
  search_cmd->add_option("--laws", srch.laws,
                         "Comma list of lcc,rcc,cc,pa,extra,moufang,wip,flex; 'none' for all");
  search_cmd->add_flag("--nonassociative", srch.nonassociative, "Drop groups");
  search_cmd->add_flag("--up-to-iso", srch.up_to_iso, "One table per isomorphism class");
  search_cmd->add_flag("--count-only", srch.count_only, "Do not keep tables");
  search_cmd->add_option("--limit", srch.limit, "Stop after K results")
      ->check(CLI::PositiveNumber);
  search_cmd->add_option("--budget", srch.budget,
                         "Seconds (default 600, or LOOPFORGE_BUDGET)")
      ->check(CLI::PositiveNumber);
  search_cmd->add_option("--jobs", srch.jobs, "Worker threads")->check(CLI::PositiveNumber);
  search_cmd->add_flag("--no-symmetry", srch.no_symmetry, "Disable value symmetry breaking");
  search_cmd->add_option("--out", srch.out, "Directory for found tables");
  search_cmd->add_flag("--json", srch.json, "Emit JSON");

  std::string audit_file;
  bool audit_json_flag = false, audit_verbose = false;
  auto* audit_cmd =
      app.add_subcommand("audit", "Run every applicable identity and structure check");
  audit_cmd->add_option("FILE", audit_file)->required();
  audit_cmd->add_flag("--json", audit_json_flag, "Emit JSON");
  audit_cmd->add_flag("-v,--verbose", audit_verbose, "List passing checks too");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kInputError;
  }

  try {
    if (*check_cmd) return run_check(check);
    if (*info_cmd) return run_info(info_file, info_json);
    if (*gen_cmd) return run_gen(gen);
    if (*iso_cmd) return run_iso(iso_a, iso_b);
    if (*cls_cmd) return cls.order == 16 ? run_classify16(cls) : run_classify27(cls);
    if (*search_cmd) return run_search(srch);
    if (*audit_cmd) return run_audit(audit_file, audit_json_flag, audit_verbose);
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kInputError;
  } catch (const CLI::ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  }
  return kInputError;
}
