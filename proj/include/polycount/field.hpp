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

#ifndef POLYCOUNT_FIELD_HPP_
#define POLYCOUNT_FIELD_HPP_

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace polycount {

// A field element of GF(p^e), stored as the integer whose base-p digits are
// its coefficients over the generator (digit i = coefficient of g^i).
using Elem = std::uint32_t;

// GF(q) with q = p^e <= 2^16. Immutable; copies share the arithmetic tables.
class Field {
 public:
  static constexpr std::uint32_t kMaxOrder = 1U << 16;

  // For e > 1 without an explicit modulus, the smallest monic irreducible of
  // degree e over GF(p) in canonical order is selected. Throws
  // std::invalid_argument on a non-prime p, an oversized field, or a modulus
  // that is not monic irreducible of degree e.
  static Field make(std::uint32_t p, std::uint32_t e = 1, std::optional<std::vector<Elem>> modulus = std::nullopt);

  // "p^e" or "p^e/c0 c1 ... ce" (modulus over GF(p), constant term first).
  // A bare prime "p" is accepted as "p^1".
  static Field parse(std::string_view text);
  std::string to_string() const;

  std::uint32_t p() const { return p_; }
  std::uint32_t e() const { return e_; }
  std::uint32_t q() const { return q_; }
  // Empty for prime fields.
  const std::vector<Elem>& modulus() const { return modulus_; }

  Elem add(Elem a, Elem b) const;
  Elem sub(Elem a, Elem b) const;
  Elem neg(Elem a) const;
  Elem mul(Elem a, Elem b) const;
  // Throws std::domain_error for a == 0.
  Elem inv(Elem a) const;

  bool contains(Elem a) const { return a < q_; }

  friend bool operator==(const Field& a, const Field& b) {
    return a.p_ == b.p_ && a.e_ == b.e_ && a.modulus_ == b.modulus_;
  }

 private:
  struct Tables;

  Field(std::uint32_t p, std::uint32_t e, std::vector<Elem> modulus, bool default_modulus);

  Elem slow_add(Elem a, Elem b) const;
  Elem slow_mul(Elem a, Elem b) const;
  Elem slow_neg(Elem a) const;

  std::uint32_t p_;
  std::uint32_t e_;
  std::uint32_t q_;
  std::vector<Elem> modulus_;
  bool default_modulus_;
  std::shared_ptr<const Tables> tables_;
};

bool is_prime(std::uint64_t n);

}  // namespace polycount

#endif  // POLYCOUNT_FIELD_HPP_
