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

#include <filesystem>
#include <fstream>
#include <string>

#include <gtest/gtest.h>

#include "loopforge/extension.hpp"
#include "loopforge/fixtures.hpp"
#include "loopforge/io.hpp"
#include "oracles.hpp"

namespace loopforge {
namespace {

int error_line(const std::string& text) {
  try {
    parse_table(text);
  } catch (const ParseError& e) {
    return e.line();
  }
  return -1;
}

TEST(Looptab, WriterIsByteStable) {
  const auto q = cyclic(3).with_name("z3");
  EXPECT_EQ(format_looptab(q), "# LOOPTAB v1\n# name: z3\n3\n0 1 2\n1 2 0\n2 0 1\n");
}

TEST(Looptab, RoundTripsEveryCorpusLoop) {
  for (const auto& q : corpus()) {
    const auto text = format_looptab(q);
    const auto back = parse_table(text);
    EXPECT_EQ(back, q);
    EXPECT_EQ(back.name(), q.name());
    EXPECT_EQ(format_looptab(back), text);
  }
}

TEST(Looptab, AcceptsCommentsBlankLinesAndExtraSpacing) {
  const auto q = parse_table("# a comment\n\n  2 \n# between rows\n0   1\n\t1 0\n\n", "fallback");
  EXPECT_EQ(q.order(), 2);
  EXPECT_EQ(q(1, 1), 0);
  EXPECT_EQ(q.name(), "fallback");
}

TEST(Looptab, NormalizesIdentityOnRead) {
  const auto q = parse_table("3\n1 2 0\n2 0 1\n0 1 2\n");
  EXPECT_EQ(format_looptab(q), "# LOOPTAB v1\n3\n0 1 2\n1 2 0\n2 0 1\n");
  EXPECT_EQ(q.original_labels()[0], 2);
}

TEST(Looptab, ErrorsCarryLineNumbers) {
  EXPECT_EQ(error_line("# c\n3\n0 1 2\n1 1 0\n2 0 1\n"), 4);       // row repeat
  EXPECT_EQ(error_line("3\n0 1 2\n1 2 0\n1 0 2\n"), 4);              // column repeat
  EXPECT_EQ(error_line("3\n0 1 2\n1 2 0\n2 0 9\n"), 4);              // out of range
  EXPECT_EQ(error_line("3\n0 1 2\n1 x 0\n2 0 1\n"), 3);              // not an integer
  EXPECT_EQ(error_line("3\n0 1 2\n1 2\n2 0 1\n"), 3);                // short row
  EXPECT_EQ(error_line("3\n0 1 2\n1 2 0\n"), 3);                     // missing row
  EXPECT_EQ(error_line("3\n0 1 2\n1 2 0\n2 0 1\n0 1 2\n"), 5);       // extra row
  EXPECT_EQ(error_line("3 3\n0 1 2\n"), 1);                          // bad order line
  EXPECT_EQ(error_line("0\n"), 1);                                   // order out of range
  EXPECT_EQ(error_line("# only comments\n"), 1);
  EXPECT_EQ(error_line("3\n1 2 0\n2 0 1\n0 2 1\n"), 4);  // repeat before identity check
  EXPECT_EQ(error_line("2\n1 0\n0 1\n"), -1);            // identity is 1: accepted
  EXPECT_EQ(error_line("3\n1 0 2\n0 2 1\n2 1 0\n"), 2);  // Latin but no identity
}

TEST(Json, ReadsTablesAndNames) {
  const auto q = parse_table(R"({"n": 2, "table": [[0, 1], [1, 0]], "name": "z2"})");
  EXPECT_EQ(q.name(), "z2");
  EXPECT_EQ(q(1, 1), 0);
  const auto t1 = cc16_loop();
  EXPECT_EQ(parse_table(table_json(t1).dump(2)), t1);
}

TEST(Json, ErrorsCarryLineNumbers) {
  EXPECT_EQ(error_line("{\n  \"n\": 2,\n  \"table\": [[0, 1], [1 0]]\n}\n"), 3);
  EXPECT_EQ(error_line("{\n  \"n\": 2,\n  \"table\": [\n    [0, 1],\n    [1, 1]\n  ]\n}\n"), 5);
  EXPECT_GE(error_line(R"({"table": [[0]]})"), 1);
  EXPECT_GE(error_line(R"({"n": 1, "table": [[0]], "name": 7})"), 1);
}

TEST(Files, WriteThenReadIsIdentity) {
  const auto dir = std::filesystem::temp_directory_path() / "loopforge_io_test";
  std::filesystem::create_directories(dir);
  for (const auto& q : {pacc16_loop(), family27(1, 1, 1, 1, 1)}) {
    for (const char* ext : {".tbl", ".json"}) {
      const auto path = dir / (q.name() + ext);
      write_table_file(path, q);
      EXPECT_EQ(read_table_file(path), q);
    }
  }
  EXPECT_THROW(read_table_file(dir / "missing.tbl"), ParseError);
  std::filesystem::remove_all(dir);
}

TEST(Reports, JsonCarriesTheComputedFacts) {
  const auto q = cc16_loop();
  const auto c = classes_json(classify_elements(q));
  EXPECT_EQ(c["extra"].get<std::vector<int>>(), (std::vector<int>{0, 1, 2, 3, 4, 5, 6, 7}));
  EXPECT_FALSE(c["flags"]["power_associative"].get<bool>());
  EXPECT_TRUE(c["flags"]["aip"].is_null());
  const auto s = structure_json(structure_report(q));
  EXPECT_EQ(s["center"].get<std::vector<int>>(), oracle::center(q));
  EXPECT_EQ(s["nucleus"].get<std::vector<int>>(), oracle::nucleus(q));
  const auto o = order27_json(classify_order27());
  EXPECT_EQ(o["class_count"].get<int>(), 8);
  EXPECT_EQ(o["case_counts"]["III"].get<int>(), 4);
  const auto p = polynomial_json(verify_polynomial_forms());
  EXPECT_TRUE(p["all_hold"].get<bool>());
}

}  // namespace
}  // namespace loopforge
