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

#ifndef POLYCOUNT_MOMENTS_HPP_
#define POLYCOUNT_MOMENTS_HPP_

#include <array>
#include <cstdint>
#include <map>
#include <string>

#include "polycount/field.hpp"
#include "polycount/poly.hpp"
#include "polycount/types.hpp"

namespace polycount {

enum class Source { kFormula, kBruteForce };

struct MomentReport {
  int size = 0;
  Rational expectation = 0;
  Rational second_moment = 0;
  Rational variance = 0;
  Source source = Source::kFormula;
};

// Closed forms over GF(q).
Rational expectation_phi(std::uint64_t q, int m);
Rational variance_phi(std::uint64_t q, int m);
MomentReport moments_formula(std::uint64_t q, int m);
BigInt size_S_m(std::uint64_t q, int m);
BigInt size_S_star(std::uint64_t q, int n);
// |S_n^*| / |P_n|^2.
Rational expectation_phi_nn(std::uint64_t q, int n);
// The same expectation through its second closed form.
Rational expectation_phi_nn_closed(std::uint64_t q, int n);
BigInt coprime_pairs(std::uint64_t q, int t);
// (n+1)^4 sum_{t=0}^{2n} (min(m, 2n-m) + 1)^3 q^m with m = 2n - t.
BigInt x_star_upper_bound(std::uint64_t q, int n);
BigInt size_P(std::uint64_t q, int n);

// Number of s in M_m for each value of Phi(s).
std::map<BigInt, BigInt> phi_histogram(const Field& field, int m, const Limits& limits = {});
MomentReport moments_bruteforce(const Field& field, int m, const Limits& limits = {});

// Literal census of S_m: (b, c) with an explicit gcd test, (a, d) counted by
// the number of monic pairs of the remaining degree.
BigInt census_S_m(const Field& field, int m, const Limits& limits = {});
// Every quadruple of P_m^4 tested against the defining predicate.
BigInt census_S_m_literal(const Field& field, int m, const Limits& limits = {});
BigInt census_Q_m_literal(const Field& field, int m, const Limits& limits = {});
BigInt census_S_star(const Field& field, int n, const Limits& limits = {});
BigInt census_S_star_literal(const Field& field, int n, const Limits& limits = {});
BigInt census_coprime_pairs(const Field& field, int t, const Limits& limits = {});

// Sums of Phi_n(uv) and Phi_n(uv)^2 over (u, v) in P_n^2.
struct ConstrainedSums {
  BigInt count = 0;
  BigInt sum = 0;
  BigInt sum_sq = 0;
};
ConstrainedSums constrained_sums(const Field& field, int n, const Limits& limits = {});
MomentReport moments_nn_bruteforce(const Field& field, int n, const Limits& limits = {});

using Quad = std::array<Poly, 4>;
// (a, b, c, d) -> (ab, cd, ac, bd).
Quad bijection_S_to_Q(const Field& field, const Quad& abcd);
// (u, v, u^, v^) -> (gcd(u, u^), u / a, v / d, gcd(v, v^)).
Quad bijection_Q_to_S(const Field& field, const Quad& uvuv);
bool in_S_m(const Field& field, const Quad& abcd, int m);
bool in_Q_m(const Field& field, const Quad& uvuv, int m);

struct BijectionReport {
  BigInt s_size = 0;
  BigInt q_size = 0;
  BigInt forward_failures = 0;
  BigInt backward_failures = 0;
  bool ok() const { return s_size == q_size && forward_failures == 0 && backward_failures == 0; }
};
// Both round trips over every element of S_m and Q_m.
BijectionReport bijection_check(const Field& field, int m, const Limits& limits = {});

using Octuple = std::array<Poly, 8>;
Octuple x_to_e(const Field& field, const Octuple& f);
bool in_S_star(const Field& field, const Quad& abcd, int n);
bool in_E_star(const Field& field, const Octuple& e, int n);
bool in_X_star(const Field& field, const Octuple& f, int n);
BigInt census_E_star(const Field& field, int n, const Limits& limits = {});
BigInt census_X_star(const Field& field, int n, const Limits& limits = {});
// Number of X^* elements whose image under x_to_e is not in E^*, plus
// collisions among the images.
BigInt x_to_e_defects(const Field& field, int n, const Limits& limits = {});

// Remark-style kernel solutions of the four degree equations with
// right-hand side (n, n, n, n).
struct LambdaSolution {
  std::array<int, 8> k{};
  bool in_range = false;
  bool satisfies_system = false;
};
std::array<int, 8> lambda_base(int n);
// Throws std::invalid_argument unless sum |a_i| <= n/4 - 2.
LambdaSolution lambda_solutions(int n, const std::array<int, 4>& a);

struct MarkovCheck {
  Rational empirical = 0;
  double bound = 0.0;
  bool holds() const;
};
// Prob{Phi_m >= m^{1+eps}} against E{Phi_m} / m^{1+eps}.
MarkovCheck markov_check(const Field& field, int m, double eps, const Limits& limits = {});

}  // namespace polycount

#endif  // POLYCOUNT_MOMENTS_HPP_
