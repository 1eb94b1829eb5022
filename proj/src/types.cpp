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

#include "polycount/types.hpp"

namespace polycount {

void check_budget(const BigInt& size, const Limits& limits, const std::string& what) {
  if (size > limits.budget) {
    throw BudgetExceeded(what + ": " + size.str() + " items exceeds budget " + std::to_string(limits.budget));
  }
}

BigInt ipow(std::uint64_t base, unsigned exp) {
  BigInt result = 1;
  BigInt b = base;
  while (exp > 0) {
    if (exp & 1U) result *= b;
    b *= b;
    exp >>= 1U;
  }
  return result;
}

BigInt binomial(unsigned n, unsigned k) {
  if (k > n) return 0;
  if (k > n - k) k = n - k;
  BigInt result = 1;
  for (unsigned i = 1; i <= k; ++i) {
    result *= n - k + i;
    result /= i;
  }
  return result;
}

int floor_log(std::uint64_t q, const BigInt& m) {
  if (q < 2 || m < 1) throw std::invalid_argument("floor_log: need q >= 2 and m >= 1");
  int k = 0;
  BigInt power = q;
  while (power <= m) {
    power *= q;
    ++k;
  }
  return k;
}

int ceil_log(std::uint64_t q, const BigInt& m) {
  if (q < 2 || m < 1) throw std::invalid_argument("ceil_log: need q >= 2 and m >= 1");
  int k = 0;
  BigInt power = 1;
  while (power < m) {
    power *= q;
    ++k;
  }
  return k;
}

}  // namespace polycount
