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

#ifndef POLYCOUNT_IRRED_HPP_
#define POLYCOUNT_IRRED_HPP_

#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "polycount/field.hpp"
#include "polycount/poly.hpp"
#include "polycount/types.hpp"

namespace polycount {

// I(d) = (1/d) sum_{l | d} mu(l) q^{d/l}. Throws std::invalid_argument for d < 1.
BigInt count_irreducibles(std::uint64_t q, int d);

// min(I(d), cap) as a machine integer, for slot-capacity bookkeeping.
std::int64_t irreducible_slots(std::uint64_t q, int d, std::int64_t cap = std::int64_t{1} << 40);

int moebius(int n);

// Trial division by every monic polynomial of degree 1..deg(f)/2. Kept
// independent of the Moebius formula so that it can serve as its oracle.
bool is_irreducible(const Field& field, const Poly& f);

// Monic irreducibles of degree d in canonical order.
std::vector<Poly> enumerate_irreducibles(const Field& field, int d);

// Smallest monic irreducible of degree d in canonical order.
std::optional<Poly> first_irreducible(const Field& field, int d);

// (q^d, sum_{l | d} l * I(l)); the two sides must agree.
std::pair<BigInt, BigInt> degree_power_identity(std::uint64_t q, int d);

// Smallest delta >= 1 with I(d) > floor(log_q m) + 1 for every d >= delta.
//
// The tail d > D is certified with I(d) > (q^d - 2 q^{floor(d/2)})/d >= q^d/(2d),
// valid once q^{ceil(d/2)} >= 4, and q^d/(2d) is nondecreasing in d. The
// window [1, D] is then scanned exactly.
int delta_q(std::uint64_t q, const BigInt& m);

// The ordered list p_1, p_2, ... of monic irreducibles, nondecreasing in
// degree and canonical within a degree, materialized up to max_degree.
class IrreducibleIndex {
 public:
  IrreducibleIndex(const Field& field, int max_degree);

  const Field& field() const { return field_; }
  int max_degree() const { return max_degree_; }
  // Throws std::out_of_range when d exceeds the materialized degree.
  std::span<const Poly> of_degree(int d) const;
  const std::vector<Poly>& all() const { return all_; }

 private:
  Field field_;
  int max_degree_;
  std::vector<Poly> all_;
  std::vector<std::size_t> offsets_;  // offsets_[d] = first index of degree d
};

}  // namespace polycount

#endif  // POLYCOUNT_IRRED_HPP_
