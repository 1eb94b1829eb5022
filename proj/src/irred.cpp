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

#include "polycount/irred.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "polycount/enumerate.hpp"

namespace polycount {

int moebius(int n) {
  if (n < 1) throw std::invalid_argument("moebius of non-positive integer");
  int result = 1;
  for (int p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    n /= p;
    if (n % p == 0) return 0;
    result = -result;
  }
  if (n > 1) result = -result;
  return result;
}

BigInt count_irreducibles(std::uint64_t q, int d) {
  if (d < 1) throw std::invalid_argument("count_irreducibles needs d >= 1, got " + std::to_string(d));
  BigInt sum = 0;
  for (int l = 1; l <= d; ++l) {
    if (d % l != 0) continue;
    const int mu = moebius(l);
    if (mu == 0) continue;
    const BigInt term = ipow(q, static_cast<unsigned>(d / l));
    if (mu > 0) {
      sum += term;
    } else {
      sum -= term;
    }
  }
  return sum / d;
}

std::int64_t irreducible_slots(std::uint64_t q, int d, std::int64_t cap) {
  const BigInt count = count_irreducibles(q, d);
  return count > cap ? cap : static_cast<std::int64_t>(count);
}

bool is_irreducible(const Field& field, const Poly& f) {
  if (f.is_zero()) throw std::invalid_argument("is_irreducible of the zero polynomial");
  const int n = f.degree();
  if (n < 1) return false;
  for (int d = 1; d <= n / 2; ++d) {
    for (const Poly& g : enumerate_monic(field, d)) {
      if (poly_divides(field, g, f)) return false;
    }
  }
  return true;
}

std::vector<Poly> enumerate_irreducibles(const Field& field, int d) {
  if (d < 1) throw std::invalid_argument("enumerate_irreducibles needs d >= 1");
  std::vector<Poly> out;
  for (const Poly& f : enumerate_monic(field, d)) {
    if (is_irreducible(field, f)) out.push_back(f);
  }
  return out;
}

std::optional<Poly> first_irreducible(const Field& field, int d) {
  for (const Poly& f : enumerate_monic(field, d)) {
    if (is_irreducible(field, f)) return f;
  }
  return std::nullopt;
}

std::pair<BigInt, BigInt> degree_power_identity(std::uint64_t q, int d) {
  BigInt rhs = 0;
  for (int l = 1; l <= d; ++l) {
    if (d % l == 0) rhs += l * count_irreducibles(q, l);
  }
  return {ipow(q, static_cast<unsigned>(d)), rhs};
}

int delta_q(std::uint64_t q, const BigInt& m) {
  if (m < 1) throw std::invalid_argument("delta_q needs m >= 1");
  const BigInt threshold = floor_log(q, m) + 1;
  // Certificate degree D: q^{ceil(D/2)} >= 4 and q^D >= 2 D * threshold.
  int cert = 1;
  while (ipow(q, static_cast<unsigned>((cert + 1) / 2)) < 4 ||
         ipow(q, static_cast<unsigned>(cert)) < 2 * cert * threshold) {
    ++cert;
  }
  int delta = 1;
  for (int d = 1; d <= cert; ++d) {
    if (count_irreducibles(q, d) <= threshold) delta = d + 1;
  }
  return delta;
}

IrreducibleIndex::IrreducibleIndex(const Field& field, int max_degree) : field_(field), max_degree_(max_degree) {
  offsets_.assign(static_cast<std::size_t>(std::max(max_degree, 0)) + 2, 0);
  for (int d = 1; d <= max_degree; ++d) {
    offsets_[static_cast<std::size_t>(d)] = all_.size();
    auto batch = enumerate_irreducibles(field, d);
    all_.insert(all_.end(), batch.begin(), batch.end());
  }
  offsets_[static_cast<std::size_t>(std::max(max_degree, 0)) + 1] = all_.size();
}

std::span<const Poly> IrreducibleIndex::of_degree(int d) const {
  if (d < 1 || d > max_degree_) {
    throw std::out_of_range("irreducible index materialized to degree " + std::to_string(max_degree_) + ", requested " +
                            std::to_string(d));
  }
  const std::size_t begin = offsets_[static_cast<std::size_t>(d)];
  const std::size_t end = offsets_[static_cast<std::size_t>(d) + 1];
  return std::span<const Poly>(all_).subspan(begin, end - begin);
}

}  // namespace polycount
