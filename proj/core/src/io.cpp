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

#include "loopforge/io.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <sstream>

namespace loopforge {

namespace {

using nlohmann::json;

std::string_view trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

std::vector<std::string_view> tokens(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t' || s[i] == '\r')) ++i;
    const std::size_t start = i;
    while (i < s.size() && s[i] != ' ' && s[i] != '\t' && s[i] != '\r') ++i;
    if (i > start) out.push_back(s.substr(start, i - start));
  }
  return out;
}

long long to_int(std::string_view tok, int line) {
  long long v = 0;
  const auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (ec != std::errc{} || p != tok.data() + tok.size())
    throw ParseError("not an integer: '" + std::string(tok) + "'", line);
  return v;
}

// Checks ranges and the Latin property so errors can point at a line.
LoopTable build(int n, const std::vector<std::vector<long long>>& rows,
                const std::vector<int>& lines, std::string name) {
  std::vector<Elem> cells;
  cells.reserve(static_cast<std::size_t>(n) * n);
  std::vector<std::vector<int>> col_seen(static_cast<std::size_t>(n));
  for (int x = 0; x < n; ++x) {
    const int line = lines[static_cast<std::size_t>(x)];
    const auto& row = rows[static_cast<std::size_t>(x)];
    if (static_cast<int>(row.size()) != n)
      throw ParseError("expected " + std::to_string(n) + " entries, found " +
                           std::to_string(row.size()),
                       line);
    std::vector<bool> seen(static_cast<std::size_t>(n), false);
    for (int y = 0; y < n; ++y) {
      const long long v = row[static_cast<std::size_t>(y)];
      if (v < 0 || v >= n)
        throw ParseError("entry " + std::to_string(v) + " outside 0.." + std::to_string(n - 1),
                         line);
      if (seen[static_cast<std::size_t>(v)])
        throw ParseError("row repeats " + std::to_string(v), line);
      seen[static_cast<std::size_t>(v)] = true;
      cells.push_back(static_cast<Elem>(v));
    }
  }
  for (int y = 0; y < n; ++y) {
    std::vector<bool> seen(static_cast<std::size_t>(n), false);
    for (int x = 0; x < n; ++x) {
      const Elem v = cells[static_cast<std::size_t>(x * n + y)];
      if (seen[static_cast<std::size_t>(v)])
        throw ParseError("column " + std::to_string(y) + " repeats " + std::to_string(v),
                         lines[static_cast<std::size_t>(x)]);
      seen[static_cast<std::size_t>(v)] = true;
    }
  }
  try {
    return LoopTable(n, std::move(cells), std::move(name));
  } catch (const InvalidTable& e) {
    throw ParseError(e.what(), lines.empty() ? 0 : lines.front());
  }
}

int check_order(long long n, int line) {
  if (n < 1 || n > LoopTable::kMaxOrder)
    throw ParseError("order must be in 1.." + std::to_string(LoopTable::kMaxOrder), line);
  return static_cast<int>(n);
}

LoopTable parse_looptab(std::string_view text, std::string name) {
  int n = -1;
  int line_no = 0;
  std::vector<std::vector<long long>> rows;
  std::vector<int> lines;
  while (!text.empty()) {
    const auto nl = text.find('\n');
    const auto raw = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    ++line_no;
    const auto line = trim(raw);
    if (line.empty()) continue;
    if (line.front() == '#') {
      const auto body = trim(line.substr(1));
      if (body.starts_with("name:")) name = std::string(trim(body.substr(5)));
      continue;
    }
    const auto toks = tokens(line);
    if (n < 0) {
      if (toks.size() != 1) throw ParseError("expected the order on its own line", line_no);
      n = check_order(to_int(toks[0], line_no), line_no);
      continue;
    }
    if (static_cast<int>(rows.size()) == n) throw ParseError("unexpected extra row", line_no);
    std::vector<long long> row;
    for (const auto t : toks) row.push_back(to_int(t, line_no));
    rows.push_back(std::move(row));
    lines.push_back(line_no);
  }
  if (n < 0) throw ParseError("missing order line", std::max(line_no, 1));
  if (static_cast<int>(rows.size()) != n)
    throw ParseError("expected " + std::to_string(n) + " rows, found " +
                         std::to_string(rows.size()),
                     std::max(line_no, 1));
  return build(n, rows, lines, std::move(name));
}

int line_of_offset(std::string_view text, std::size_t offset) {
  offset = std::min(offset, text.size());
  return 1 +
         static_cast<int>(std::count(text.begin(), text.begin() + static_cast<long>(offset), '\n'));
}

LoopTable parse_json_table(std::string_view text, std::string name) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(e.what(), line_of_offset(text, e.byte > 0 ? e.byte - 1 : 0));
  }
  if (!doc.is_object()) throw ParseError("expected a JSON object", 1);
  if (!doc.contains("n") || !doc["n"].is_number_integer())
    throw ParseError("missing integer field 'n'", 1);
  if (!doc.contains("table") || !doc["table"].is_array())
    throw ParseError("missing array field 'table'", 1);
  if (doc.contains("name")) {
    if (!doc["name"].is_string()) throw ParseError("field 'name' must be a string", 1);
    name = doc["name"].get<std::string>();
  }
  const int n = check_order(doc["n"].get<long long>(), 1);
  const auto& tab = doc["table"];
  if (static_cast<int>(tab.size()) != n)
    throw ParseError("expected " + std::to_string(n) + " rows in 'table'", 1);
  // Row k of a conventionally formatted file sits on a later line; find it
  // by scanning for the k-th '[' after the table key when possible.
  std::vector<int> lines(static_cast<std::size_t>(n), 1);
  if (const auto key = text.find("\"table\""); key != std::string_view::npos) {
    auto pos = text.find('[', key);
    for (int k = 0; k < n && pos != std::string_view::npos; ++k) {
      pos = text.find('[', pos + 1);
      if (pos == std::string_view::npos) break;
      lines[static_cast<std::size_t>(k)] = line_of_offset(text, pos);
    }
  }
  std::vector<std::vector<long long>> rows;
  for (int k = 0; k < n; ++k) {
    const auto& r = tab[static_cast<std::size_t>(k)];
    if (!r.is_array()) throw ParseError("row must be an array", lines[static_cast<std::size_t>(k)]);
    std::vector<long long> row;
    for (const auto& v : r) {
      if (!v.is_number_integer())
        throw ParseError("entries must be integers", lines[static_cast<std::size_t>(k)]);
      row.push_back(v.get<long long>());
    }
    rows.push_back(std::move(row));
  }
  return build(n, rows, lines, std::move(name));
}

json group_json(const std::optional<GroupSummary>& g) {
  if (!g) return nullptr;
  return {{"order", g->order}, {"abelian", g->abelian}};
}

}  // namespace

LoopTable parse_table(std::string_view text, const std::string& default_name) {
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string_view::npos && text[first] == '{')
    return parse_json_table(text, default_name);
  return parse_looptab(text, default_name);
}

LoopTable read_table_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open " + path.string(), 0);
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_table(ss.str(), path.stem().string());
}

std::string format_looptab(const LoopTable& q) {
  std::string out = "# LOOPTAB v1\n";
  if (!q.name().empty()) out += "# name: " + q.name() + "\n";
  out += std::to_string(q.order()) + "\n";
  for (Elem x = 0; x < q.order(); ++x) {
    for (Elem y = 0; y < q.order(); ++y) {
      if (y) out += ' ';
      out += std::to_string(q(x, y));
    }
    out += '\n';
  }
  return out;
}

void write_table_file(const std::filesystem::path& path, const LoopTable& q) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw LoopError("cannot write " + path.string());
  out << (path.extension() == ".json" ? table_json(q).dump() + "\n" : format_looptab(q));
  if (!out) throw LoopError("failed writing " + path.string());
}

json table_json(const LoopTable& q) {
  return {{"n", q.order()}, {"table", q.rows()}, {"name", q.name()}};
}

json element_set_json(const ElementSet& s) { return json(s); }

json classes_json(const ElementClassReport& r) {
  json flags = {{"lcc", r.flags.lcc},
                {"rcc", r.flags.rcc},
                {"cc", r.flags.cc},
                {"power_associative", r.flags.power_associative},
                {"wip", r.flags.wip},
                {"moufang", r.flags.moufang},
                {"extra", r.flags.extra},
                {"diassociative", r.flags.diassociative},
                {"aip", r.flags.aip ? json(*r.flags.aip) : json(nullptr)},
                {"group", r.flags.group},
                {"abelian_group", r.flags.abelian_group}};
  return {{"power_associative", r.pa_set},
          {"wip", r.wip_set},
          {"moufang", r.moufang_set},
          {"pseudomoufang", r.pseudo_set},
          {"extra", r.extra_set},
          {"square_nuclear", r.square_nuclear_set},
          {"power_associative_is_subloop", r.pa_set_is_subloop},
          {"moufang_is_subloop", r.moufang_set_is_subloop},
          {"flags", flags}};
}

json structure_json(const StructureReport& r) {
  json out = {{"left_nucleus", r.nuclei.left.elements()},
              {"middle_nucleus", r.nuclei.middle.elements()},
              {"right_nucleus", r.nuclei.right.elements()},
              {"nucleus", r.nuclei.nucleus.elements()},
              {"center", r.center.elements()},
              {"associator_subloop", r.associator_subloop.elements()},
              {"nucleus_normal", r.nucleus_normal},
              {"inn", group_json(r.inn)},
              {"mlt", group_json(r.mlt)},
              {"quotient_is_abelian_group", r.quotient_is_abelian_group}};
  out["quotient_order"] =
      r.quotient_mod_nucleus ? json(r.quotient_mod_nucleus->order()) : json(nullptr);
  out["quotient_exponent"] =
      r.exponent_mod_nucleus ? json(*r.exponent_mod_nucleus) : json(nullptr);
  return out;
}

json audit_json(const AuditReport& r) {
  json checks = json::array();
  for (const auto& c : r.checks) {
    json j = {{"name", c.name}, {"scope", c.scope}, {"status", std::string(to_string(c.status))}};
    if (!c.detail.empty()) j["detail"] = c.detail;
    checks.push_back(std::move(j));
  }
  return {{"loop", r.loop_name},
          {"order", r.order},
          {"cc", r.cc},
          {"pacc", r.pacc},
          {"associative", r.associative},
          {"wip", r.wip},
          {"moufang_set_is_subloop", r.moufang_set_is_subloop},
          {"passed", r.count(CheckStatus::pass)},
          {"failed", r.count(CheckStatus::fail)},
          {"not_applicable", r.count(CheckStatus::not_applicable)},
          {"checks", checks}};
}

json search_json(const SearchResult& r, bool include_tables) {
  json out = {{"status", std::string(to_string(r.status))},
              {"count", r.count},
              {"nodes", r.nodes},
              {"rejected", r.rejected},
              {"seconds", r.seconds}};
  if (include_tables) {
    json tabs = json::array();
    for (const auto& q : r.loops) tabs.push_back(q.rows());
    out["tables"] = std::move(tabs);
  }
  return out;
}

json order27_json(const Order27Report& r) {
  json classes = json::array();
  for (const auto& c : r.classes) {
    const auto& p = c.params;
    classes.push_back({{"params", {p.theta, p.alpha, p.beta, p.gamma, p.delta}},
                       {"members", c.members},
                       {"cube_trivial", c.cube_trivial},
                       {"cube_trivial_subloop", c.cube_trivial_subloop},
                       {"moufang", c.moufang},
                       {"moufang_subloop", c.moufang_subloop},
                       {"nucleus", c.nucleus},
                       {"center", c.center},
                       {"case", c.case_label},
                       {"subcase", c.subcase},
                       {"aip", c.aip}});
  }
  return {{"family_size", r.family_size},
          {"nonassociative", r.nonassociative},
          {"all_pacc", r.all_pacc},
          {"class_count", r.classes.size()},
          {"aip_classes", r.aip_classes},
          {"case_counts", r.case_counts},
          {"aip_criterion_holds", r.aip_criterion_holds},
          {"aip_matches_subcase_b", r.aip_matches_subcase_b},
          {"classes", classes}};
}

namespace {

json order16_loop_json(const Order16Loop& d) {
  return {{"name", d.name},
          {"pacc", d.pacc},
          {"nonassociative", d.nonassociative},
          {"extra", d.extra},
          {"nucleus", d.nucleus},
          {"center", d.center},
          {"center_cyclic", d.center_cyclic},
          {"nucleus_elementary_abelian", d.nucleus_elementary_abelian},
          {"quotient_klein", d.quotient_klein},
          {"square_trivial", d.square_trivial}};
}

}  // namespace

json order16_json(const Order16Report& r) {
  json trio = json::array();
  for (const auto& d : r.trio) trio.push_back(order16_loop_json(d));
  json out = {{"trio", trio},
              {"trio_pairwise_nonisomorphic", r.trio_pairwise_nonisomorphic},
              {"q_classes", r.q_classes},
              {"q_class_of", r.q_class_of},
              {"parity_rule_holds", r.parity_rule_holds},
              {"census_ran", r.census_ran}};
  if (r.census_ran) {
    json extra = json::array();
    for (const auto& d : r.extra_classes) extra.push_back(order16_loop_json(d));
    out["census_status"] = std::string(to_string(r.census_status));
    out["census_seconds"] = r.census_seconds;
    out["extra_classes"] = extra;
  }
  out["total_classes"] = r.total_classes;
  return out;
}

json polynomial_json(const PolynomialFormsReport& r) {
  json checks = json::array();
  for (const auto& c : r.checks)
    checks.push_back({{"name", c.name},
                      {"isomorphic", c.isomorphic},
                      {"generator_map_extends", c.generator_map_extends}});
  return {{"all_hold", r.all_hold()}, {"checks", checks}};
}

}  // namespace loopforge
