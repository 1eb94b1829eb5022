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

#ifndef POLYCOUNT_TYPES_HPP_
#define POLYCOUNT_TYPES_HPP_

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace polycount {

// Every count in this library is exact.
using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Enumeration guard and worker count shared by every brute-force routine.
struct Limits {
  std::uint64_t budget = 10'000'000;
  unsigned threads = 1;
};

class BudgetExceeded : public std::runtime_error {
 public:
  explicit BudgetExceeded(const std::string& what) : std::runtime_error(what) {}
};

// Throws BudgetExceeded when `size` enumerated items would exceed the budget.
void check_budget(const BigInt& size, const Limits& limits, const std::string& what);

BigInt ipow(std::uint64_t base, unsigned exp);
BigInt binomial(unsigned n, unsigned k);

// Largest k with q^k <= m, for m >= 1.
int floor_log(std::uint64_t q, const BigInt& m);
// Smallest k with q^k >= m, for m >= 1.
int ceil_log(std::uint64_t q, const BigInt& m);

}  // namespace polycount

#endif  // POLYCOUNT_TYPES_HPP_
