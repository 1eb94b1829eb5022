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

#ifndef POLYCOUNT_PROFILE_HPP_
#define POLYCOUNT_PROFILE_HPP_

#include <algorithm>
#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "polycount/divisors.hpp"
#include "polycount/types.hpp"

namespace polycount {

// Field-independent shape of a factorization: slack r0 plus, per degree, the
// multiplicities sorted non-increasing. Degree 0 is reserved for the slack.
struct Profile {
  int r0 = 0;
  std::map<int, std::vector<int>> entries;

  // Number of irreducible factors, slack excluded.
  int t() const;
  // Largest degree carrying a factor, 0 for an empty profile.
  int d_t() const;
  // Largest multiplicity at degree 1, or 0.
  int rho() const;
  int rho_n() const { return std::max(r0, rho()); }
  int x_weight() const;
  int weight() const { return x_weight() + r0; }
  int omega() const;
  // Multiplicity of the j-th factor at degree d (0-based), 0 past the list.
  int mult(int d, std::size_t j) const;

  std::vector<DegMult> shape() const;
  BigInt phi() const;
  // Phi_n with 2n = weight(); the slack is part of the shape.
  BigInt phi_n() const;

  // Sorts every list, drops zero multiplicities and empty degrees.
  void normalize();
  // Each degree d carries at most I(d) factors over GF(q).
  bool fits(std::uint64_t q) const;

  // "y:2 1:2,1 3:1"; the empty profile prints as "-".
  std::string to_string() const;
  static Profile parse(std::string_view text);

  friend bool operator==(const Profile&, const Profile&) = default;
  friend auto operator<=>(const Profile& a, const Profile& b) {
    if (auto c = a.r0 <=> b.r0; c != 0) return c;
    return a.entries <=> b.entries;
  }
};

Profile profile_of(const Factorization& f, int r0 = 0);

// Every slack-free profile of x-weight exactly `weight` that fits GF(q).
std::vector<Profile> enumerate_profiles(std::uint64_t q, int weight);

}  // namespace polycount

#endif  // POLYCOUNT_PROFILE_HPP_
