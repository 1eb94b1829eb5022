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

#include "polycount/enumerate.hpp"

#include <stdexcept>
#include <string>

namespace polycount {

namespace {

std::uint64_t checked_power(std::uint32_t q, int n) {
  if (n < 0) throw std::invalid_argument("negative degree " + std::to_string(n));
  std::uint64_t size = 1;
  for (int i = 0; i < n; ++i) {
    if (size > (std::uint64_t{1} << 62) / q) throw std::overflow_error("enumeration size overflows");
    size *= q;
  }
  return size;
}

// Coefficient c_0 is the most significant digit so that increasing indices
// follow the canonical order.
Poly monic_from_index(std::uint32_t q, int n, std::uint64_t index) {
  std::vector<Elem> c(static_cast<std::size_t>(n) + 1, 0);
  c[static_cast<std::size_t>(n)] = 1;
  for (int i = n - 1; i >= 0; --i) {
    c[static_cast<std::size_t>(i)] = static_cast<Elem>(index % q);
    index /= q;
  }
  return Poly(std::move(c));
}

}  // namespace

MonicRange::MonicRange(const Field& field, int n) : q_(field.q()), n_(n), size_(checked_power(field.q(), n)) {}

Poly MonicRange::operator[](std::uint64_t index) const { return monic_from_index(q_, n_, index); }

UptoRange::UptoRange(const Field& field, int n) : q_(field.q()), n_(n), size_(0) {
  for (int k = 0; k <= n; ++k) size_ += checked_power(q_, k);
}

Poly UptoRange::operator[](std::uint64_t index) const {
  std::uint64_t block = 1;
  for (int k = 0; k <= n_; ++k) {
    if (index < block) return monic_from_index(q_, k, index);
    index -= block;
    block *= q_;
  }
  throw std::out_of_range("index outside P_n");
}

std::uint64_t upto_index(const Field& field, const Poly& a) {
  if (!a.is_monic()) throw std::invalid_argument("upto_index needs a monic polynomial");
  const std::uint32_t q = field.q();
  std::uint64_t offset = 0;
  std::uint64_t block = 1;
  for (int k = 0; k < a.degree(); ++k) {
    offset += block;
    block *= q;
  }
  std::uint64_t index = 0;
  for (int i = 0; i < a.degree(); ++i) index = index * q + a.coeffs()[static_cast<std::size_t>(i)];
  return offset + index;
}

}  // namespace polycount
