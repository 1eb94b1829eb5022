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

#ifndef POLYCOUNT_TAIL_HPP_
#define POLYCOUNT_TAIL_HPP_

#include <cstdint>
#include <map>
#include <vector>

#include "polycount/divisors.hpp"
#include "polycount/field.hpp"
#include "polycount/types.hpp"

namespace polycount {

// Power series in z truncated after z^degree.
class RationalSeries {
 public:
  explicit RationalSeries(int degree);

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  const Rational& operator[](int k) const { return c_.at(static_cast<std::size_t>(k)); }
  Rational& operator[](int k) { return c_.at(static_cast<std::size_t>(k)); }

  RationalSeries operator+(const RationalSeries& other) const;
  RationalSeries operator*(const RationalSeries& other) const;
  // exp of a series with zero constant term; throws otherwise.
  RationalSeries exp() const;

  friend bool operator==(const RationalSeries&, const RationalSeries&) = default;

 private:
  std::vector<Rational> c_;
};

// Number of irreducible factors counted with multiplicity.
int omega(const Factorization& f);

struct OmegaDistribution {
  int m = 0;
  std::map<int, BigInt> histogram;

  BigInt total() const;
  // Average of alpha^Omega over M_m.
  Rational moment(const Rational& alpha) const;
  // Prob{Omega_m >= w}.
  Rational tail(double w) const;
};

OmegaDistribution omega_distribution(const Field& field, int m, const Limits& limits = {});

// q^-m sum_{d | m} d I(d) alpha^{m/d}.
Rational g_series(std::uint64_t q, int m, const Rational& alpha);
// exp(sum_{j <= degree} z^j G_j(alpha) / j), whose coefficients are E{alpha^Omega_j}.
RationalSeries moment_series(std::uint64_t q, int degree, const Rational& alpha);
Rational moment_alpha(std::uint64_t q, int m, const Rational& alpha);

// alpha^-w E{alpha^Omega_m}, a Markov bound on Prob{Omega_m >= w} for alpha >= 1.
double chernoff_bound(std::uint64_t q, int m, double w, double alpha);

struct ChernoffTail {
  double at_c = 0;
  double grid_best = 0;
  double grid_alpha = 0;
};

// Bounds on Prob{Omega_m >= c ln m} at alpha = c and over alpha = 1.05, 1.10, ..., q - 0.05.
// Requires 1 < c < q and m >= 2.
ChernoffTail chernoff_tail(std::uint64_t q, int m, double c);

struct PhiTail {
  Rational phi_prob = 0;
  Rational omega_prob = 0;

  bool chain_holds() const { return phi_prob <= omega_prob; }
};

// Prob{Phi_m >= m^beta} next to Prob{Omega_m >= beta log2 m}.
PhiTail phi_tail_empirical(const Field& field, int m, double beta, const Limits& limits = {});

// Number of s in M_m with Phi(s) > 2^Omega(s).
BigInt domination_failures(const Field& field, int m, const Limits& limits = {});

}  // namespace polycount

#endif  // POLYCOUNT_TAIL_HPP_
