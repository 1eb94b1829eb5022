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

#ifndef POLYCOUNT_DIVISORS_HPP_
#define POLYCOUNT_DIVISORS_HPP_

#include <map>
#include <optional>
#include <span>
#include <vector>

#include "polycount/field.hpp"
#include "polycount/poly.hpp"
#include "polycount/types.hpp"

namespace polycount {

struct Factor {
  Poly p;
  int degree = 0;
  int mult = 0;

  friend bool operator==(const Factor&, const Factor&) = default;
};

// Irreducible factorization of a monic polynomial, factors in canonical order.
struct Factorization {
  std::vector<Factor> factors;

  // Sum of mult * degree.
  int degree() const;
  friend bool operator==(const Factorization&, const Factorization&) = default;
};

// Trial division by monic irreducibles in increasing degree. Keeps the
// irreducible lists it has generated, so one instance should be reused for
// bulk work. Not thread-safe; give each worker its own.
class Factorizer {
 public:
  explicit Factorizer(const Field& field) : field_(field) {}

  // Throws std::invalid_argument for a zero or non-monic input.
  Factorization operator()(const Poly& s);

 private:
  const std::vector<Poly>& irreducibles(int d);

  Field field_;
  std::map<int, std::vector<Poly>> cache_;
};

Factorization factorize(const Field& field, const Poly& s);

// Multiplies the factorization back out.
Poly expand(const Field& field, const Factorization& f);

// prod (r_i + 1)
BigInt phi(const Factorization& f);

// All monic divisors, each once. The odometer runs over exponent vectors with
// the first factor varying fastest.
std::vector<Poly> enumerate_divisors(const Field& field, const Factorization& f);

// The field-free shape (d_i, r_i) of a factorization.
struct DegMult {
  int degree = 0;
  int mult = 0;
};
std::vector<DegMult> shape_of(const Factorization& f);

// N_k = number of divisors of y^{r0} * s of total degree k, for k = 0..r0 + deg s.
using DegreeSpectrum = std::vector<BigInt>;
DegreeSpectrum degree_spectrum(std::span<const DegMult> shape, int r0);
DegreeSpectrum degree_spectrum(const Factorization& f, int r0);

// Number of ordered pairs (u, v) in P_n x P_{n'} with u * v = s.
// Throws std::invalid_argument when deg s > n + n'.
BigInt phi_constrained(const Factorization& f, int n, int n_prime);
BigInt phi_constrained(std::span<const DegMult> shape, int n, int n_prime);

// Number of divisors of total degree k of y^{r0} * p^{r} with deg p = d.
// Throws std::invalid_argument unless 0 <= k <= r0 + r * d.
BigInt slack_divisor_count(int r0, int r, int d, int k);

// Phi_n(s) recomputed as sum_k |A_k| * |D_k(b)| for the coprime split
// s(x, y) = a(x) * b(x, y), where b collects y^{r0} and the factors whose
// positions are listed in `b_factors`. Requires deg s <= 2n.
BigInt phi_n_by_split(const Factorization& f, int n, std::span<const std::size_t> b_factors);

// A monic divisor of the requested degree built by allocating irreducible
// factors in descending degree order, then patching the remaining gap d with
// an unused irreducible factor of degree d (or x(x+1) when q = 2 and d = 2).
// Returns nullopt when no patch is available. Throws std::invalid_argument
// when target is outside [0, deg s].
std::optional<Poly> greedy_divisor_of_degree(const Field& field, const Factorization& f, int target);

}  // namespace polycount

#endif  // POLYCOUNT_DIVISORS_HPP_
