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

#include "loopforge/fixtures.hpp"

#include <charconv>

#include "loopforge/extension.hpp"

namespace loopforge {

namespace {

constexpr int kCc16[16][16] = {
    { 0,  1,  2,  3,  4,  5,  6,  7,  8,  9, 10, 11, 12, 13, 14, 15},
    { 1,  0,  3,  2,  5,  4,  7,  6,  9,  8, 11, 10, 13, 12, 15, 14},
    { 2,  3,  0,  1,  6,  7,  4,  5, 10, 11,  8,  9, 14, 15, 12, 13},
    { 3,  2,  1,  0,  7,  6,  5,  4, 11, 10,  9,  8, 15, 14, 13, 12},
    { 4,  5,  6,  7,  0,  1,  2,  3, 12, 13, 14, 15,  8,  9, 10, 11},
    { 5,  4,  7,  6,  1,  0,  3,  2, 13, 12, 15, 14,  9,  8, 11, 10},
    { 6,  7,  4,  5,  2,  3,  0,  1, 14, 15, 12, 13, 10, 11,  8,  9},
    { 7,  6,  5,  4,  3,  2,  1,  0, 15, 14, 13, 12, 11, 10,  9,  8},
    { 8,  9, 11, 10, 14, 15, 13, 12,  0,  1,  3,  2,  6,  7,  5,  4},
    { 9,  8, 10, 11, 15, 14, 12, 13,  1,  0,  2,  3,  7,  6,  4,  5},
    {10, 11,  9,  8, 12, 13, 15, 14,  2,  3,  1,  0,  4,  5,  7,  6},
    {11, 10,  8,  9, 13, 12, 14, 15,  3,  2,  0,  1,  5,  4,  6,  7},
    {12, 13, 15, 14, 10, 11,  9,  8,  5,  4,  6,  7,  3,  2,  0,  1},
    {13, 12, 14, 15, 11, 10,  8,  9,  4,  5,  7,  6,  2,  3,  1,  0},
    {14, 15, 13, 12,  8,  9, 11, 10,  7,  6,  4,  5,  1,  0,  2,  3},
    {15, 14, 12, 13,  9,  8, 10, 11,  6,  7,  5,  4,  0,  1,  3,  2},
};

// Entries use the indices of pacc16_names().
constexpr int kPacc16[16][16] = {
    { 0,  1,  2,  3,  4,  5,  6,  7,  8,  9, 10, 11, 12, 13, 14, 15},
    { 1,  0,  3,  2,  5,  4,  7,  6,  9,  8, 11, 10, 13, 12, 15, 14},
    { 2,  3,  0,  1,  6,  7,  4,  5, 10, 11,  8,  9, 14, 15, 12, 13},
    { 3,  2,  1,  0,  7,  6,  5,  4, 11, 10,  9,  8, 15, 14, 13, 12},
    { 4,  5,  7,  6,  0,  1,  3,  2, 12, 13, 15, 14,  9,  8, 10, 11},
    { 5,  4,  6,  7,  1,  0,  2,  3, 13, 12, 14, 15,  8,  9, 11, 10},
    { 6,  7,  5,  4,  2,  3,  1,  0, 14, 15, 13, 12, 11, 10,  8,  9},
    { 7,  6,  4,  5,  3,  2,  0,  1, 15, 14, 12, 13, 10, 11,  9,  8},
    { 8,  9, 11, 10, 14, 15, 13, 12,  0,  1,  3,  2,  6,  7,  5,  4},
    { 9,  8, 10, 11, 15, 14, 12, 13,  1,  0,  2,  3,  7,  6,  4,  5},
    {10, 11,  9,  8, 12, 13, 15, 14,  2,  3,  1,  0,  4,  5,  7,  6},
    {11, 10,  8,  9, 13, 12, 14, 15,  3,  2,  0,  1,  5,  4,  6,  7},
    {12, 13, 14, 15, 11, 10,  9,  8,  5,  4,  7,  6,  3,  2,  1,  0},
    {13, 12, 15, 14, 10, 11,  8,  9,  4,  5,  6,  7,  2,  3,  0,  1},
    {14, 15, 12, 13,  9,  8, 11, 10,  7,  6,  5,  4,  1,  0,  3,  2},
    {15, 14, 13, 12,  8,  9, 10, 11,  6,  7,  4,  5,  0,  1,  2,  3},
};

LoopTable from_array(const int (&rows)[16][16], std::string name) {
  return LoopTable::from_function(16, [&](Elem x, Elem y) { return rows[x][y]; },
                                  std::move(name));
}

std::vector<int> parse_ints(const std::string& s, const std::string& what) {
  std::vector<int> out;
  std::size_t pos = 0;
  while (pos <= s.size()) {
    const auto comma = s.find(',', pos);
    const auto end = comma == std::string::npos ? s.size() : comma;
    int v = 0;
    const auto* first = s.data() + pos;
    const auto* last = s.data() + end;
    auto [ptr, ec] = std::from_chars(first, last, v);
    if (first == last || ec != std::errc{} || ptr != last)
      throw std::invalid_argument("malformed parameters for " + what + ": '" + s + "'");
    out.push_back(v);
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return out;
}

std::vector<int> params(const std::string& s, const std::string& what, std::size_t count) {
  auto v = parse_ints(s, what);
  if (v.size() != count)
    throw std::invalid_argument(what + " expects " + std::to_string(count) + " parameters");
  return v;
}

}  // namespace

LoopTable cyclic(int n) {
  if (n < 1 || n > LoopTable::kMaxOrder) throw std::invalid_argument("cyclic: bad order");
  return LoopTable::from_function(n, [n](Elem x, Elem y) { return (x + y) % n; },
                                  "cyclic:" + std::to_string(n));
}

LoopTable elem2(int k) {
  if (k < 0 || k > 7) throw std::invalid_argument("elem2: rank must lie in 0..7");
  return LoopTable::from_function(1 << k, [](Elem x, Elem y) { return x ^ y; },
                                  "elem2:" + std::to_string(k));
}

LoopTable dihedral8() {
  return LoopTable::from_function(
      8,
      [](Elem x, Elem y) {
        const int a = x % 4, e = x / 4, b = y % 4, f = y / 4;
        const int rot = ((e ? a - b : a + b) % 4 + 4) % 4;
        return rot + 4 * (e ^ f);
      },
      "dihedral8");
}

LoopTable quaternion8() {
  // Unit products among 1, i, j, k as (sign, unit).
  static constexpr int kUnit[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
  static constexpr int kSign[4][4] = {{0, 0, 0, 0}, {0, 1, 0, 1}, {0, 1, 1, 0}, {0, 0, 1, 1}};
  return LoopTable::from_function(
      8,
      [](Elem x, Elem y) {
        const int sx = x / 4, ux = x % 4, sy = y / 4, uy = y % 4;
        return 4 * (sx ^ sy ^ kSign[ux][uy]) + kUnit[ux][uy];
      },
      "quaternion8");
}

LoopTable direct_product(const LoopTable& a, const LoopTable& b) {
  const int m = b.order();
  return LoopTable::from_function(
      a.order() * m,
      [&](Elem x, Elem y) { return a(x / m, y / m) * m + b(x % m, y % m); },
      "product:" + a.name() + "," + b.name());
}

LoopTable cc16_loop() { return from_array(kCc16, "cc16"); }

LoopTable pacc16_loop() { return from_array(kPacc16, "pacc16"); }

const std::vector<std::string>& pacc16_names() {
  static const std::vector<std::string> names = {"1", "c",  "u",  "v",  "a",  "ca",
                                                 "ua", "va", "b",  "cb", "ub", "vb",
                                                 "ab", "cab", "uab", "vab"};
  return names;
}

LoopTable poly16(int r, int s) {
  if (r < 0 || r > 3 || s < 0 || s > 3)
    throw std::invalid_argument("poly16 parameters must lie in 0..3");
  return LoopTable::from_function(
      16,
      [r, s](Elem e1, Elem e2) {
        const int x1 = e1 / 4, x2 = (e1 / 2) % 2, x3 = e1 % 2;
        const int y1 = e2 / 4, y2 = (e2 / 2) % 2, y3 = e2 % 2;
        const int z1 = x1 + y1 + r * x2 * y2 + s * x3 * y3 + 2 * x2 * x3 * y3 +
                       2 * x2 * y2 * y3 + x3 * y2 * y2;
        return ((z1 % 4) * 2 + (x2 + y2) % 2) * 2 + (x3 + y3) % 2;
      },
      "poly16:" + std::to_string(r) + "," + std::to_string(s));
}

LoopTable poly2_4() {
  return LoopTable::from_function(
      16,
      [](Elem e1, Elem e2) {
        const int x1 = e1 >> 3, x2 = (e1 >> 2) & 1, x3 = (e1 >> 1) & 1, x4 = e1 & 1;
        const int y1 = e2 >> 3, y2 = (e2 >> 2) & 1, y3 = (e2 >> 1) & 1, y4 = e2 & 1;
        const int z1 = x1 + y1 + x3 * y2 + x3 * y3 * y4 + x4 * y2 * y2 + x3 * x4 * (y3 + y4);
        const int z2 = x2 + y2 + x4 * y3 * y3;
        return ((z1 & 1) << 3) | ((z2 & 1) << 2) | (((x3 + y3) & 1) << 1) | ((x4 + y4) & 1);
      },
      "poly2_4");
}

LoopTable make_fixture(const std::string& description) {
  const auto colon = description.find(':');
  const std::string family = description.substr(0, colon);
  const std::string args = colon == std::string::npos ? "" : description.substr(colon + 1);
  const bool has_args = colon != std::string::npos;
  auto no_args = [&] {
    if (has_args) throw std::invalid_argument(family + " takes no parameters");
  };

  if (family == "cyclic") return cyclic(params(args, family, 1)[0]);
  if (family == "elem2") return elem2(params(args, family, 1)[0]);
  if (family == "dihedral8") return no_args(), dihedral8();
  if (family == "quaternion8") return no_args(), quaternion8();
  if (family == "cc16") return no_args(), cc16_loop();
  if (family == "pacc16") return no_args(), pacc16_loop();
  if (family == "poly2_4") return no_args(), poly2_4();
  if (family == "q16") {
    const auto p = params(args, family, 2);
    return family16(p[0], p[1]);
  }
  if (family == "poly16") {
    const auto p = params(args, family, 2);
    return poly16(p[0], p[1]);
  }
  if (family == "fam27") {
    const auto p = params(args, family, 5);
    return family27(p[0], p[1], p[2], p[3], p[4]);
  }
  if (family == "product") {
    // Factors may carry their own commas; take the first split that parses.
    for (auto pos = args.find(','); pos != std::string::npos; pos = args.find(',', pos + 1)) {
      try {
        const auto a = make_fixture(args.substr(0, pos));
        const auto b = make_fixture(args.substr(pos + 1));
        if (a.order() * b.order() > LoopTable::kMaxOrder)
          throw std::invalid_argument("product too large");
        return direct_product(a, b);
      } catch (const std::invalid_argument&) {
      }
    }
    throw std::invalid_argument("malformed product description: '" + args + "'");
  }
  throw std::invalid_argument("unknown family '" + family + "'");
}

std::vector<LoopTable> corpus() {
  std::vector<LoopTable> out;
  out.push_back(cc16_loop());
  out.push_back(pacc16_loop());
  out.push_back(poly2_4());
  for (int r = 0; r < 4; ++r)
    for (int s = 0; s < 4; ++s) {
      out.push_back(family16(r, s));
      out.push_back(poly16(r, s));
    }
  for (const auto& p : all_family27_params()) out.push_back(family27(p));
  for (int n = 1; n <= 27; ++n) out.push_back(cyclic(n));
  for (int k = 2; k <= 5; ++k) out.push_back(elem2(k));
  out.push_back(dihedral8());
  out.push_back(quaternion8());
  out.push_back(direct_product(dihedral8(), cyclic(2)));
  out.push_back(direct_product(quaternion8(), cyclic(3)));
  out.push_back(direct_product(cyclic(4), cyclic(6)));
  out.push_back(direct_product(family16(0, 0), cyclic(2)));
  out.push_back(direct_product(family16(1, 1), cyclic(3)));
  return out;
}

}  // namespace loopforge
