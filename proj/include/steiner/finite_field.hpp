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


#ifndef STEINER_FINITE_FIELD_HPP_
#define STEINER_FINITE_FIELD_HPP_

#include <string>
#include <vector>

namespace steiner {

// GF(p^n). Elements are integers 0..q-1 encoding sum c_i p^i, i.e. the
// polynomial sum c_i x^i reduced modulo `modulus`.
class FiniteField {
 public:
  // Modulus: the monic irreducible of degree n whose lower coefficients,
  // read as the integer sum c_i p^i, are least. Throws InputError for
  // nonprime p, n < 1 or p^n > 2^16.
  static FiniteField make(int p, int n);

  int p() const { return p_; }
  int n() const { return n_; }
  int q() const { return q_; }
  // Coefficients c_0..c_n of the modulus (c_n = 1).
  const std::vector<int>& modulus() const { return modulus_; }
  std::string modulus_string() const;
  std::string element_string(int x) const;

  int add(int x, int y) const;
  int neg(int x) const;
  int sub(int x, int y) const { return add(x, neg(y)); }
  int mul(int x, int y) const;
  int inv(int x) const;
  int pow(int x, long long e) const;
  int order(int x) const;  // multiplicative order; 0 for x = 0
  std::vector<int> primitive_elements() const;

 private:
  FiniteField() = default;
  std::vector<int> digits(int x) const;
  int from_digits(const std::vector<int>& d) const;

  int p_ = 0, n_ = 0, q_ = 0;
  std::vector<int> modulus_;
  std::vector<int> log_, exp_;
};

bool is_prime(int p);

}  // namespace steiner

#endif  // STEINER_FINITE_FIELD_HPP_
