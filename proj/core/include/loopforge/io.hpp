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

#include <filesystem>
#include <string>
#include <string_view>

#include <nlohmann/json.hpp>

#include "loopforge/audit.hpp"
#include "loopforge/classes.hpp"
#include "loopforge/classify.hpp"
#include "loopforge/search.hpp"
#include "loopforge/structure.hpp"
#include "loopforge/table.hpp"

namespace loopforge {

/// Malformed table input. line() is 1-based, 0 when no line applies.
class ParseError : public LoopError {
 public:
  ParseError(const std::string& what, int line)
      : LoopError(line > 0 ? "line " + std::to_string(line) + ": " + what : what),
        line_(line) {}
  int line() const noexcept { return line_; }

 private:
  int line_;
};

/// Parses LOOPTAB v1 text or the JSON form {"n", "table", "name"}; the
/// format is detected from the first non-blank character. A "# name:"
/// comment sets the name of a LOOPTAB table.
LoopTable parse_table(std::string_view text, const std::string& default_name = {});
LoopTable read_table_file(const std::filesystem::path& path);

/// Canonical LOOPTAB v1 text: header, optional name comment, order, rows
/// with single spaces, newline-terminated.
std::string format_looptab(const LoopTable& q);
void write_table_file(const std::filesystem::path& path, const LoopTable& q);

nlohmann::json table_json(const LoopTable& q);
nlohmann::json element_set_json(const ElementSet& s);
nlohmann::json classes_json(const ElementClassReport& r);
nlohmann::json structure_json(const StructureReport& r);
nlohmann::json audit_json(const AuditReport& r);
nlohmann::json search_json(const SearchResult& r, bool include_tables);
nlohmann::json order27_json(const Order27Report& r);
nlohmann::json order16_json(const Order16Report& r);
nlohmann::json polynomial_json(const PolynomialFormsReport& r);

}  // namespace loopforge
