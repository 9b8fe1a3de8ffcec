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


#include <array>
#include <set>
#include <string>
#include <vector>

#include "doctest.h"
#include "steiner/block_algebra.hpp"
#include "steiner/errors.hpp"
#include "steiner/finite_field.hpp"

using namespace steiner;

namespace {

const std::vector<std::pair<int, int>> kFields = {
    {2, 1}, {3, 1}, {2, 2}, {5, 1}, {7, 1}, {2, 3}, {3, 2}, {11, 1}, {13, 1},
    {2, 4}, {17, 1}, {19, 1}, {23, 1}, {5, 2}, {3, 3}, {29, 1}, {31, 1}, {2, 5},
    {37, 1}, {41, 1}, {43, 1}, {47, 1}, {7, 2}};

bool has_identity(const std::vector<Identity>& ids, const std::string& lhs,
                  const std::string& rhs) {
  for (const auto& id : ids) {
    if (id.lhs == lhs && id.rhs == rhs) return true;
  }
  return false;
}

}  // namespace

TEST_CASE("field axioms for every order up to 49") {
  for (const auto& [p, n] : kFields) {
    const auto f = FiniteField::make(p, n);
    const int q = f.q();
    CAPTURE(q);
    for (int x = 0; x < q; ++x) {
      CHECK(f.add(x, 0) == x);
      CHECK(f.mul(x, 1) == x);
      CHECK(f.add(x, f.neg(x)) == 0);
      if (x != 0) CHECK(f.mul(x, f.inv(x)) == 1);
      for (int y = 0; y < q; ++y) {
        if (f.add(x, y) != f.add(y, x) || f.mul(x, y) != f.mul(y, x)) FAIL("not commutative");
        for (int z = 0; z < q; z += 3) {
          if (f.mul(x, f.add(y, z)) != f.add(f.mul(x, y), f.mul(x, z))) FAIL("not distributive");
          if (f.mul(f.mul(x, y), z) != f.mul(x, f.mul(y, z))) FAIL("not associative");
        }
      }
    }
    const auto prims = f.primitive_elements();
    int units_order = 0;
    for (int x = 1; x < q; ++x) units_order += f.order(x) == q - 1;
    CHECK(static_cast<int>(prims.size()) == units_order);
    if (q > 2) CHECK(f.pow(prims.front(), q - 1) == 1);
  }
}

TEST_CASE("field construction") {
  CHECK_THROWS_AS(FiniteField::make(4, 1), InputError);
  CHECK_THROWS_AS(FiniteField::make(2, 17), InputError);
  CHECK(FiniteField::make(3, 1).primitive_elements() == std::vector<int>{2});
  CHECK(FiniteField::make(2, 2).primitive_elements() == std::vector<int>{2, 3});
  CHECK(FiniteField::make(2, 1).primitive_elements() == std::vector<int>{1});
  CHECK(FiniteField::make(2, 2).modulus_string() == "x^2+x+1");
  CHECK(FiniteField::make(2, 3).modulus_string() == "x^3+x+1");
  CHECK(FiniteField::make(3, 2).modulus_string() == "x^2+1");
  CHECK(FiniteField::make(2, 2).element_string(3) == "x+1");
  CHECK(is_prime(47));
  CHECK_FALSE(is_prime(49));
}

TEST_CASE("block algebras are idempotent non-associative quasigroups") {
  for (const auto& [p, n] : kFields) {
    const auto f = FiniteField::make(p, n);
    if (f.q() < 3) continue;
    for (int a : f.primitive_elements()) {
      const auto t = BlockAlgebra(f, a, 1).table();
      CHECK(is_latin_square(t));
      CHECK(is_idempotent(t));
      CHECK(associativity_witness(t).has_value());
    }
  }
  const auto f3 = FiniteField::make(3, 1);
  CHECK_FALSE(is_latin_square(BlockAlgebra(f3, 0, 1).table()));
  CHECK_FALSE(is_latin_square(BlockAlgebra(f3, 1, 1).table()));
  const auto f4 = FiniteField::make(2, 2);
  const BlockAlgebra alg(f4, 2, 1);
  CHECK(alg.star(0, 1) == 3);
  CHECK(alg.star(1, 0) == 2);
  CHECK(BlockAlgebra(f3, 2, 2).label(5) == "(2,1)");
}

TEST_CASE("two-generated subalgebras") {
  const auto t3 = BlockAlgebra(FiniteField::make(3, 1), 2, 1).table();
  CHECK(two_generated(t3, 0, 1) == std::vector<int>{0, 1, 2});
  const auto t4 = BlockAlgebra(FiniteField::make(2, 2), 2, 1).table();
  CHECK(two_generated(t4, 0, 1).size() == 4);
  CHECK_THROWS_AS(two_generated(t4, 2, 2), InputError);
}

TEST_CASE("powers stay in the (2,q) variety") {
  for (const auto& [p, n] : std::vector<std::pair<int, int>>{{3, 1}, {2, 2}, {5, 1}, {7, 1}, {2, 3}, {3, 2}}) {
    const auto f = FiniteField::make(p, n);
    const int a = f.primitive_elements().front();
    for (int m = 1; m <= (f.q() <= 5 ? 3 : 2); ++m) {
      const BlockAlgebra alg(f, a, m);
      const auto r = verify_2q_variety(alg.table(), alg.free_algebra());
      CHECK(r.ok);
      CHECK(r.q == f.q());
    }
  }
  const BlockAlgebra sq3(FiniteField::make(3, 1), 2, 2);
  CHECK(verify_2q_variety(sq3.table(), sq3.free_algebra()).pairs_checked == 36);
  const BlockAlgebra sq4(FiniteField::make(2, 2), 2, 2);
  CHECK(verify_2q_variety(sq4.table(), sq4.free_algebra()).pairs_checked == 120);
}

TEST_CASE("a corrupted table leaves the variety") {
  const BlockAlgebra sq(FiniteField::make(3, 1), 2, 2);
  auto t = sq.table();
  std::swap(t.at(0, 1), t.at(0, 2));
  const auto r = verify_2q_variety(t, sq.free_algebra());
  CHECK_FALSE(r.ok);
  CHECK(r.witness.has_value());
  CHECK_THROWS_AS(induced_steiner(t, sq.free_algebra()), ConstraintViolation);
}

TEST_CASE("induced Steiner systems") {
  const auto f3 = FiniteField::make(3, 1);
  const BlockAlgebra one(f3, 2, 1);
  const auto line = induced_steiner(one.table(), one.free_algebra());
  CHECK(line.size() == 3);
  CHECK(line.line_count() == 1);
  for (const auto& [p, n, m] : std::vector<std::array<int, 3>>{{3, 1, 2}, {2, 2, 2}, {5, 1, 2}, {3, 1, 3}}) {
    const auto f = FiniteField::make(p, n);
    const BlockAlgebra alg(f, f.primitive_elements().front(), m);
    const auto s = induced_steiner(alg.table(), alg.free_algebra());
    const long long v = s.size(), k = f.q();
    CHECK(static_cast<long long>(s.line_count()) * k * (k - 1) == v * (v - 1));
    const auto lines = s.lines();
    for (std::size_t i = 0; i < lines.size(); ++i) {
      for (std::size_t j = i + 1; j < lines.size(); ++j) CHECK(popcount(lines[i] & lines[j]) <= 1);
    }
    CHECK(s.has_star_table());
  }
}

TEST_CASE("two-variable identities") {
  const auto f3 = BlockAlgebra(FiniteField::make(3, 1), 2, 1);
  const auto f4 = BlockAlgebra(FiniteField::make(2, 2), 2, 1);
  const auto ids3 = check_two_variable_identities(f3.table(), f3.table(), 1);
  const auto ids4 = check_two_variable_identities(f4.table(), f4.table(), 1);
  CHECK(has_identity(ids3, "x*x", "x"));
  CHECK(has_identity(ids4, "y*y", "y"));
  CHECK(has_identity(ids3, "y*x", "x*y"));
  CHECK_FALSE(has_identity(ids4, "y*x", "x*y"));
  const BlockAlgebra sq(FiniteField::make(2, 2), 2, 2);
  const auto ids = check_two_variable_identities(sq.free_algebra(), sq.table(), 2);
  CHECK(ids.size() > 10);
  for (const auto& id : ids) CHECK(id.holds_on_carrier);
}
