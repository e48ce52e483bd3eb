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

#include <compare>
#include <cstdint>
#include <functional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace loopforge {

/// Elements of a loop of order n are the integers 0..n-1; 0 is the identity.
using Elem = int;

class LoopError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Raised when a table is not a Latin square or has no two-sided identity.
class InvalidTable : public LoopError {
 public:
  using LoopError::LoopError;
};

/// Raised when a canonical power is requested for an element whose
/// cyclic subloop is not a group.
class AmbiguousPower : public LoopError {
 public:
  using LoopError::LoopError;
};

/// A permutation of {0,...,n-1} stored densely.
///
/// Products compose left to right: (a * b)(x) == b(a(x)). Mappings in loop
/// theory are customarily written on the right, so R_x R_y means "apply R_x,
/// then R_y", and that is exactly `right_mult(q, x) * right_mult(q, y)`.
class Perm {
 public:
  Perm() = default;
  explicit Perm(std::vector<Elem> images);

  static Perm identity(int n);

  int size() const noexcept { return static_cast<int>(images_.size()); }
  Elem operator()(Elem x) const { return images_[static_cast<std::size_t>(x)]; }
  std::span<const std::uint8_t> images() const noexcept { return images_; }
  std::vector<Elem> to_vector() const;

  Perm inverse() const;
  Perm pow(long long k) const;
  bool is_identity() const noexcept;

  /// Byte string of the images; a cheap hash key.
  std::string key() const { return {images_.begin(), images_.end()}; }

  friend Perm operator*(const Perm& a, const Perm& b);
  friend bool operator==(const Perm&, const Perm&) = default;
  friend auto operator<=>(const Perm&, const Perm&) = default;

 private:
  struct Unchecked {};
  Perm(std::vector<std::uint8_t> images, Unchecked) : images_(std::move(images)) {}

  std::vector<std::uint8_t> images_;
};

/// A finite loop given by its Cayley table, identity normalized to 0.
///
/// Tables are immutable after construction. Division tables are computed
/// once, so ldiv/rdiv/rho/lam are lookups.
class LoopTable {
 public:
  static constexpr int kMaxOrder = 255;

  LoopTable() = default;

  /// `cells` is row-major, cells[x*n+y] == x*y. If the identity is not 0 the
  /// table is relabeled by swapping it with 0; original_labels() keeps the
  /// old name of every element.
  LoopTable(int n, std::vector<Elem> cells, std::string name = {});

  static LoopTable from_rows(const std::vector<std::vector<Elem>>& rows,
                             std::string name = {});

  template <class F>
  static LoopTable from_function(int n, F&& product, std::string name = {}) {
    std::vector<Elem> cells(static_cast<std::size_t>(n) * n);
    for (Elem x = 0; x < n; ++x)
      for (Elem y = 0; y < n; ++y) cells[x * n + y] = product(x, y);
    return LoopTable(n, std::move(cells), std::move(name));
  }

  int order() const noexcept { return n_; }
  const std::string& name() const noexcept { return name_; }
  LoopTable with_name(std::string name) const;

  /// Original label of each element before identity normalization.
  const std::vector<Elem>& original_labels() const noexcept { return original_; }

  /// Unchecked product.
  Elem operator()(Elem x, Elem y) const noexcept { return cells_[x * n_ + y]; }

  /// Range-checked product; throws std::out_of_range.
  Elem mul(Elem x, Elem y) const;
  /// The unique w with x*w == z.
  Elem ldiv(Elem x, Elem z) const { return ldiv_[x * n_ + z]; }
  /// The unique w with w*y == z.
  Elem rdiv(Elem z, Elem y) const { return rdiv_[z * n_ + y]; }
  /// Right inverse: x * rho(x) == 0.
  Elem rho(Elem x) const { return ldiv(x, 0); }
  /// Left inverse: lam(x) * x == 0.
  Elem lam(Elem x) const { return rdiv(0, x); }

  std::span<const std::uint8_t> row(Elem x) const {
    return {cells_.data() + x * n_, static_cast<std::size_t>(n_)};
  }
  std::vector<std::vector<Elem>> rows() const;

  /// The cells as bytes in row-major order; equal strings mean equal tables.
  std::string serialize() const { return {cells_.begin(), cells_.end()}; }

  friend bool operator==(const LoopTable& a, const LoopTable& b) {
    return a.n_ == b.n_ && a.cells_ == b.cells_;
  }

 private:
  int n_ = 0;
  std::vector<std::uint8_t> cells_;
  std::vector<std::uint8_t> ldiv_;
  std::vector<std::uint8_t> rdiv_;
  std::vector<Elem> original_;
  std::string name_;
};

/// Throws std::out_of_range unless 0 <= x < q.order().
void check_elem(const LoopTable& q, Elem x);

// Translations and inner mappings. Each returned permutation acts on the
// right in the sense documented on Perm.

Perm right_mult(const LoopTable& q, Elem x);  ///< y -> y*x
Perm left_mult(const LoopTable& q, Elem x);   ///< y -> x*y
/// R_x L_x^-1, i.e. y -> x \ (y*x).
Perm t_map(const LoopTable& q, Elem x);
/// R_x R_{rho(x)}, i.e. y -> (y*x)*rho(x).
Perm e_map(const LoopTable& q, Elem x);
/// R_x R_y R_{xy}^-1, i.e. z -> ((z*x)*y) / (x*y).
Perm right_inner(const LoopTable& q, Elem x, Elem y);
/// L_x L_y L_{yx}^-1, i.e. z -> (y*x) \ (y*(x*z)).
Perm left_inner(const LoopTable& q, Elem x, Elem y);

/// The c with x*y == (y*x)*c.
Elem commutator(const LoopTable& q, Elem x, Elem y);
/// The a with (x*y)*z == (x*(y*z))*a.
Elem associator(const LoopTable& q, Elem x, Elem y, Elem z);

/// Closure of {x} under the product; for a finite loop this is <x>.
std::vector<Elem> cyclic_closure(const LoopTable& q, Elem x);
/// True iff <x> is a group (checked by closing and testing associativity).
bool cyclic_subloop_is_group(const LoopTable& q, Elem x);

struct Power {
  Elem value = 0;
  /// False when x is not power-associative, so the value is merely the
  /// left-normed product and other bracketings may differ.
  bool canonical = true;
};

/// Left-normed power ((x*x)*x)... for k >= 0; for k < 0 the left-normed
/// power of rho(x). Never throws for valid x.
Power left_power(const LoopTable& q, Elem x, long long k);

/// The k-th power of x. For power-associative x the exponent is reduced
/// modulo the order of x. Otherwise only k in {0, 1, 2} (and -1 when
/// rho(x) == lam(x)) are well defined; anything else throws AmbiguousPower.
Elem pow(const LoopTable& q, Elem x, long long k);

/// Order of <x> for power-associative x; throws AmbiguousPower otherwise.
int element_order(const LoopTable& q, Elem x);

}  // namespace loopforge
