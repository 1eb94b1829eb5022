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

#ifndef POLYCOUNT_EXTREMAL_HPP_
#define POLYCOUNT_EXTREMAL_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "polycount/field.hpp"
#include "polycount/profile.hpp"
#include "polycount/types.hpp"

namespace polycount {

enum class Mode { kOrdinary, kSlack };

struct SearchStats {
  std::uint64_t nodes = 0;
  std::uint64_t prunes = 0;
  // Value found again after widening the pruning bounds; must equal `value`.
  std::optional<BigInt> widened_value;
  std::size_t widened_witnesses = 0;
  // Brute force only: best Phi over P_{m-1}, which must stay below Upsilon_m.
  std::optional<BigInt> lower_degree_max;
};

struct ExtremalResult {
  BigInt value = 0;
  // Every profile attaining `value`, sorted and distinct.
  std::vector<Profile> witnesses;
  SearchStats stats;
};

// Upsilon_m by scanning every polynomial of M_m.
ExtremalResult upsilon_bruteforce(const Field& field, int m, const Limits& limits = {});

// Upsilon_m by dynamic programming over degrees up to floor(log_q m) + 1, one
// balanced multiplicity list per (degree, total multiplicity). Field-free.
ExtremalResult upsilon_profile_search(std::uint64_t q, int m);

// Upsilon_{n,n} by scanning every polynomial of P_{2n}.
ExtremalResult upsilon_nn_bruteforce(const Field& field, int n, const Limits& limits = {});

// Upsilon_{n,n} by enumerating slack profiles that satisfy the structural
// windows for every candidate rho_n, with the degree bound
// floor(log_q 2n) + 1. Field-free.
ExtremalResult upsilon_nn_profile_search(std::uint64_t q, int n);

struct StructureReport {
  Mode mode = Mode::kOrdinary;
  int size = 0;
  int rho = 0;
  int d_t = 0;
  int d_t1 = 0;

  bool no_hole = false;
  // r_i in {floor(rho/d_i), floor(rho/d_i) - 1} for every factor and for the
  // first missing irreducible.
  bool multiplicity_window = false;
  // floor(log_q(size/8)) < d_t <= d_{t+1} <= floor(log_q size) + 1
  bool degree_window = false;
  // d_t <= rho <= 2 d_{t+1} - 1
  bool rho_window = false;

  // Soft diagnostics; reported, never enforced.
  double rho_predicted = 0.0;
  double rho_deviation = 0.0;
  // Factors whose multiplicity falls outside the high-degree formula with
  // d_i shifted by at most `kHighDegreeSlack`.
  int high_degree_outliers = 0;
  static constexpr int kHighDegreeSlack = 3;

  bool all_hard() const { return no_hole && multiplicity_window && degree_window && rho_window; }
  std::string to_string() const;
};

// Throws std::invalid_argument when the profile does not fit GF(q) or its
// weight does not match `size` (ordinary: x-weight == size with r0 == 0;
// slack: x-weight + r0 == size).
StructureReport check_structure(std::uint64_t q, const Profile& p, Mode mode, int size);

struct LowerBoundConstruction {
  int d = 0;
  int w = 0;
  BigInt bound = 0;
  Profile witness;
  BigInt witness_phi_n = 0;
  // d lies in {ceil(log_q n) + 1, ceil(log_q n) + 2}.
  bool d_in_range = false;
};

LowerBoundConstruction lower_bound_construction(std::uint64_t q, int n);

struct UpperBoundChain {
  double epsilon = 0.0;
  // floor((1 - epsilon) log_q m), clamped at 0.
  int delta = 0;
  double w1 = 0.0;
  double w2 = 0.0;
  double bound = 0.0;
};

// Throws std::invalid_argument when m < q.
UpperBoundChain upper_bound_chain(std::uint64_t q, int m);
inline double upper_bound_log2_upsilon(std::uint64_t q, int m) { return upper_bound_chain(q, m).bound; }

double log2_big(const BigInt& x);

}  // namespace polycount

#endif  // POLYCOUNT_EXTREMAL_HPP_
