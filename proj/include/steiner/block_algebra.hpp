// Copyright 2026 The Authors.
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


#ifndef STEINER_BLOCK_ALGEBRA_HPP_
#define STEINER_BLOCK_ALGEBRA_HPP_

#include <array>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "steiner/finite_field.hpp"
#include "steiner/linear_space.hpp"

namespace steiner {

// A finite binary operation on 0..n-1.
struct StarTable {
  int n = 0;
  std::vector<int> table;  // table[x * n + y] = x * y
  std::vector<std::string> labels;

  int operator()(int x, int y) const { return table[static_cast<std::size_t>(x) * n + y]; }
  int& at(int x, int y) { return table[static_cast<std::size_t>(x) * n + y]; }
};

// Every row and column is a permutation.
bool is_latin_square(const StarTable& t);
bool is_idempotent(const StarTable& t);
// A triple with (x*y)*z != x*(y*z), if any.
std::optional<std::array<int, 3>> associativity_witness(const StarTable& t);

// Closure of {x, y} under the operation, sorted. Throws InputError if x == y.
std::vector<int> two_generated(const StarTable& t, int x, int y);

// The map sending 0 to x and 1 to y and extended along products in `free2`,
// when it is a well-defined injective homomorphism into the partial
// operation `star` (nullopt entries count as failures).
using PartialStar = std::function<std::optional<int>(int, int)>;
std::optional<std::vector<int>> map_from_generators(const StarTable& free2, int x, int y,
                                                    const PartialStar& star);

// x * y = y + (x - y) a over GF(q)^m, coordinatewise.
class BlockAlgebra {
 public:
  // Throws InputError for a outside the field or m < 1.
  BlockAlgebra(FiniteField field, int a, int power);

  const FiniteField& field() const { return field_; }
  int a() const { return a_; }
  int power() const { return power_; }
  int size() const { return size_; }
  int star(int x, int y) const;
  // "3" for m = 1, "(0,2)" for m = 2, ...; coordinate i is digit i base q.
  std::string label(int x) const;
  StarTable table() const;
  // The m = 1 algebra on the same field and a.
  StarTable free_algebra() const;

 private:
  FiniteField field_;
  int a_;
  int power_;
  int size_;
};

struct VarietyReport {
  bool ok = true;
  int q = 0;
  long long pairs_checked = 0;
  std::optional<std::pair<int, int>> witness;
  std::string reason;
};

// Every 2-generated subalgebra has q elements and 0 -> x, 1 -> y extends to
// an isomorphism from free2.
VarietyReport verify_2q_variety(const StarTable& t, const StarTable& free2);

// Blocks are the 2-generated subalgebras; star entries are copied for
// distinct points of a block. Throws ConstraintViolation if the variety check
// fails and CapacityError above 64 points.
PartialLinearSpace induced_steiner(const StarTable& t, const StarTable& free2);

struct Identity {
  std::string lhs;
  std::string rhs;
  bool holds_on_carrier = false;
};

// Two-variable identities t = s between star terms of depth <= depth that
// hold in free2; each class of equal term functions is reported against its
// first term. Each identity is re-evaluated on `carrier` (all pairs).
std::vector<Identity> check_two_variable_identities(const StarTable& free2,
                                                    const StarTable& carrier, int depth);

}  // namespace steiner

#endif  // STEINER_BLOCK_ALGEBRA_HPP_
