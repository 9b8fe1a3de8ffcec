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


#include "steiner/finite_field.hpp"

#include "steiner/errors.hpp"

namespace steiner {

namespace {

using Poly = std::vector<int>;  // coefficients, lowest first

void trim(Poly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

// Remainder of f modulo monic g over GF(p).
Poly poly_mod(Poly f, const Poly& g, int p) {
  trim(f);
  const int dg = static_cast<int>(g.size()) - 1;
  while (static_cast<int>(f.size()) - 1 >= dg) {
    const int shift = static_cast<int>(f.size()) - 1 - dg;
    const int c = f.back();
    for (int i = 0; i <= dg; ++i) {
      f[shift + i] = ((f[shift + i] - c * g[i]) % p + p) % p;
    }
    trim(f);
  }
  return f;
}

Poly monic_from_code(int code, int degree, int p) {
  Poly f(degree + 1, 0);
  for (int i = 0; i < degree; ++i) {
    f[i] = code % p;
    code /= p;
  }
  f[degree] = 1;
  return f;
}

bool irreducible(const Poly& f, int p) {
  const int n = static_cast<int>(f.size()) - 1;
  for (int d = 1; 2 * d <= n; ++d) {
    int count = 1;
    for (int i = 0; i < d; ++i) count *= p;
    for (int code = 0; code < count; ++code) {
      if (poly_mod(f, monic_from_code(code, d, p), p).empty()) return false;
    }
  }
  return true;
}

}  // namespace

bool is_prime(int p) {
  if (p < 2) return false;
  for (int d = 2; d * d <= p; ++d) {
    if (p % d == 0) return false;
  }
  return true;
}

FiniteField FiniteField::make(int p, int n) {
  if (!is_prime(p)) throw InputError("field characteristic " + std::to_string(p) + " is not prime");
  if (n < 1) throw InputError("field degree must be at least 1");
  long long q = 1;
  for (int i = 0; i < n; ++i) {
    q *= p;
    if (q > 65536) throw InputError("field order exceeds 2^16");
  }
  FiniteField f;
  f.p_ = p;
  f.n_ = n;
  f.q_ = static_cast<int>(q);
  const int lower = f.q_;
  for (int code = 0; code < lower; ++code) {
    Poly g = monic_from_code(code, n, p);
    if (irreducible(g, p)) {
      f.modulus_ = g;
      break;
    }
  }

  auto slow_mul = [&](int x, int y) {
    const auto dx = f.digits(x), dy = f.digits(y);
    Poly prod(2 * n, 0);
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) prod[i + j] = (prod[i + j] + dx[i] * dy[j]) % p;
    }
    Poly r = poly_mod(prod, f.modulus_, p);
    r.resize(n, 0);
    return f.from_digits(r);
  };

  f.log_.assign(f.q_, -1);
  f.exp_.assign(f.q_ - 1, 0);
  for (int g = 1; g < f.q_; ++g) {
    int x = 1, k = 0;
    std::vector<int> seen;
    do {
      seen.push_back(x);
      x = slow_mul(x, g);
      ++k;
    } while (x != 1);
    if (k == f.q_ - 1) {
      for (int i = 0; i < k; ++i) {
        f.exp_[i] = seen[i];
        f.log_[seen[i]] = i;
      }
      break;
    }
  }
  return f;
}

std::vector<int> FiniteField::digits(int x) const {
  std::vector<int> d(n_);
  for (int i = 0; i < n_; ++i) {
    d[i] = x % p_;
    x /= p_;
  }
  return d;
}

int FiniteField::from_digits(const std::vector<int>& d) const {
  int x = 0;
  for (int i = n_ - 1; i >= 0; --i) x = x * p_ + d[i];
  return x;
}

int FiniteField::add(int x, int y) const {
  if (n_ == 1) return (x + y) % p_;
  int r = 0, place = 1;
  for (int i = 0; i < n_; ++i) {
    r += ((x % p_ + y % p_) % p_) * place;
    x /= p_;
    y /= p_;
    place *= p_;
  }
  return r;
}

int FiniteField::neg(int x) const {
  int r = 0, place = 1;
  for (int i = 0; i < n_; ++i) {
    r += ((p_ - x % p_) % p_) * place;
    x /= p_;
    place *= p_;
  }
  return r;
}

int FiniteField::mul(int x, int y) const {
  if (x == 0 || y == 0) return 0;
  return exp_[(log_[x] + log_[y]) % (q_ - 1)];
}

int FiniteField::inv(int x) const {
  if (x == 0) throw InputError("zero has no inverse");
  return exp_[(q_ - 1 - log_[x]) % (q_ - 1)];
}

int FiniteField::pow(int x, long long e) const {
  if (e == 0) return 1;
  if (x == 0) return 0;
  const long long k = ((log_[x] * (e % (q_ - 1))) % (q_ - 1) + (q_ - 1)) % (q_ - 1);
  return exp_[k];
}

int FiniteField::order(int x) const {
  if (x == 0) return 0;
  int k = 1;
  for (int y = x; y != 1; y = mul(y, x)) ++k;
  return k;
}

std::vector<int> FiniteField::primitive_elements() const {
  std::vector<int> out;
  for (int x = 1; x < q_; ++x) {
    if (order(x) == q_ - 1) out.push_back(x);
  }
  return out;
}

std::string FiniteField::modulus_string() const {
  std::string s;
  for (int i = n_; i >= 0; --i) {
    const int c = modulus_[i];
    if (c == 0) continue;
    if (!s.empty()) s += "+";
    std::string mono = i == 0 ? "" : (i == 1 ? "x" : "x^" + std::to_string(i));
    if (c != 1 || i == 0) s += std::to_string(c);
    s += mono;
  }
  return s;
}

std::string FiniteField::element_string(int x) const {
  if (x == 0) return "0";
  const auto d = digits(x);
  std::string s;
  for (int i = n_ - 1; i >= 0; --i) {
    if (d[i] == 0) continue;
    if (!s.empty()) s += "+";
    std::string mono = i == 0 ? "" : (i == 1 ? "x" : "x^" + std::to_string(i));
    if (d[i] != 1 || i == 0) s += std::to_string(d[i]);
    s += mono;
  }
  return s;
}

}  // namespace steiner
