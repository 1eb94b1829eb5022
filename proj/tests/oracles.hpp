// Copyright 2026 The polycount Authors
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

#ifndef POLYCOUNT_TESTS_ORACLES_HPP_
#define POLYCOUNT_TESTS_ORACLES_HPP_

#include <map>
#include <set>
#include <vector>

#include "polycount/enumerate.hpp"
#include "polycount/field.hpp"
#include "polycount/poly.hpp"
#include "polycount/types.hpp"

namespace oracle {

using polycount::BigInt;
using polycount::Elem;
using polycount::Field;
using polycount::Poly;
using Key = std::vector<Elem>;

inline std::vector<Poly> monic(const Field& f, int d) {
  std::vector<Poly> out;
  for (const Poly& p : polycount::enumerate_monic(f, d)) out.push_back(p);
  return out;
}

inline std::vector<Poly> upto(const Field& f, int n) {
  std::vector<Poly> out;
  for (int d = 0; d <= n; ++d) {
    for (const Poly& p : polycount::enumerate_monic(f, d)) out.push_back(p);
  }
  return out;
}

// Monic degree-d polynomials that are not a product of two monic factors of positive degree.
inline std::set<Key> irreducibles_by_sieve(const Field& f, int d) {
  std::set<Key> reducible;
  for (int k = 1; k <= d / 2; ++k) {
    for (const Poly& a : monic(f, k)) {
      for (const Poly& b : monic(f, d - k)) reducible.insert(polycount::poly_mul(f, a, b).coeffs());
    }
  }
  std::set<Key> out;
  for (const Poly& p : monic(f, d)) {
    if (!reducible.count(p.coeffs())) out.insert(p.coeffs());
  }
  return out;
}

// For each s in M_m, the number of monic divisors by degree, from all products u v with u, v monic.
inline std::map<Key, std::vector<BigInt>> divisor_spectra(const Field& f, int m) {
  std::map<Key, std::vector<BigInt>> out;
  for (const Poly& s : monic(f, m)) out[s.coeffs()].assign(static_cast<std::size_t>(m) + 1, 0);
  for (int k = 0; k <= m; ++k) {
    const auto left = monic(f, k);
    const auto right = monic(f, m - k);
    for (const Poly& u : left) {
      for (const Poly& v : right) out[polycount::poly_mul(f, u, v).coeffs()][static_cast<std::size_t>(k)] += 1;
    }
  }
  return out;
}

inline BigInt total(const std::vector<BigInt>& v) {
  BigInt t = 0;
  for (const BigInt& x : v) t += x;
  return t;
}

// Number of (u, v) in P_n x P_n with u v = s, for every s in P_{2n}.
inline std::map<Key, BigInt> constrained_counts(const Field& f, int n) {
  std::map<Key, BigInt> out;
  const auto all = upto(f, n);
  for (const Poly& u : all) {
    for (const Poly& v : all) out[polycount::poly_mul(f, u, v).coeffs()] += 1;
  }
  return out;
}

inline bool coprime(const Field& f, const Poly& a, const Poly& b) {
  // No monic divisor of positive degree divides both.
  const int top = std::min(a.degree(), b.degree());
  for (int d = 1; d <= top; ++d) {
    for (const Poly& g : monic(f, d)) {
      if (polycount::poly_divides(f, g, a) && polycount::poly_divides(f, g, b)) return false;
    }
  }
  return true;
}

}  // namespace oracle

#endif  // POLYCOUNT_TESTS_ORACLES_HPP_
