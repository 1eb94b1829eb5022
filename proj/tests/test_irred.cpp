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

#include <gtest/gtest.h>

#include <cmath>

#include "oracles.hpp"
#include "polycount/irred.hpp"

namespace polycount {
namespace {

Poly P(std::vector<Elem> c) { return Poly(std::move(c)); }

Field field_of(std::uint32_t q) { return q == 4 ? Field::make(2, 2) : Field::make(q); }

TEST(IrredTest, CountExamples) {
  EXPECT_EQ(count_irreducibles(2, 2), 1);
  EXPECT_EQ(count_irreducibles(2, 4), 3);
  EXPECT_EQ(count_irreducibles(3, 1), 3);
  EXPECT_THROW(count_irreducibles(2, 0), std::invalid_argument);
}

TEST(IrredTest, IsIrreducibleExamples) {
  const Field f = Field::make(2);
  EXPECT_TRUE(is_irreducible(f, P({1, 1, 1})));
  EXPECT_FALSE(is_irreducible(f, P({1, 0, 1})));
  EXPECT_TRUE(is_irreducible(f, P({0, 1})));
  EXPECT_FALSE(is_irreducible(f, Poly::one()));
  EXPECT_THROW(is_irreducible(f, Poly()), std::invalid_argument);
}

TEST(IrredTest, EnumerateExamples) {
  const Field f = Field::make(2);
  EXPECT_EQ(enumerate_irreducibles(f, 1), (std::vector<Poly>{P({0, 1}), P({1, 1})}));
  EXPECT_EQ(enumerate_irreducibles(f, 3).size(), 2U);
  EXPECT_EQ(enumerate_irreducibles(f, 2), (std::vector<Poly>{P({1, 1, 1})}));
}

// Moebius count against a sieve that removes every product of two monic factors.
TEST(IrredTest, CountMatchesSieve) {
  for (std::uint32_t q : {2U, 3U, 4U}) {
    const Field f = field_of(q);
    for (int d = 1; d <= 8; ++d) {
      const auto sieve = oracle::irreducibles_by_sieve(f, d);
      ASSERT_EQ(count_irreducibles(q, d), sieve.size()) << "q=" << q << " d=" << d;
      if (q == 4 && d > 6) continue;
      const auto list = enumerate_irreducibles(f, d);
      ASSERT_EQ(list.size(), sieve.size());
      for (std::size_t i = 0; i < list.size(); ++i) {
        ASSERT_TRUE(sieve.count(list[i].coeffs()));
        if (i) {
          ASSERT_TRUE(canonical_less(list[i - 1], list[i]));
        }
      }
    }
  }
}

TEST(IrredTest, Bounds) {
  for (std::uint64_t q : {2U, 3U, 4U, 5U, 7U}) {
    BigInt partial = 0;
    for (int d = 1; d <= 20; ++d) {
      const BigInt i = count_irreducibles(q, d);
      const BigInt qd = ipow(q, static_cast<unsigned>(d));
      // (q^d - 2 q^{floor(d/2)}) / d < I(d) <= q^d / d
      EXPECT_LT(qd - 2 * ipow(q, static_cast<unsigned>(d / 2)), i * d) << q << " " << d;
      EXPECT_LE(i * d, qd);
      partial += i;
      // sum_{l <= d} I(l) < 4 q^d / (d + 1)
      EXPECT_LT(partial * (d + 1), 4 * qd) << q << " " << d;
    }
  }
}

TEST(IrredTest, DegreePowerIdentity) {
  EXPECT_EQ(degree_power_identity(2, 4), std::make_pair(BigInt(16), BigInt(16)));
  EXPECT_EQ(degree_power_identity(3, 2), std::make_pair(BigInt(9), BigInt(9)));
  EXPECT_EQ(degree_power_identity(2, 1), std::make_pair(BigInt(2), BigInt(2)));
  for (std::uint64_t q : {2U, 3U, 5U}) {
    for (int d = 1; d <= 10; ++d) {
      const auto [lhs, rhs] = degree_power_identity(q, d);
      EXPECT_EQ(lhs, rhs) << q << " " << d;
      BigInt direct = 0;
      for (int l = 1; l <= d; ++l) {
        if (d % l == 0) direct += l * count_irreducibles(q, l);
      }
      EXPECT_EQ(direct, ipow(q, static_cast<unsigned>(d)));
    }
  }
}

TEST(IrredTest, DeltaExamples) {
  EXPECT_EQ(delta_q(2, 4), 5);
  EXPECT_EQ(delta_q(2, 2), 4);
  EXPECT_EQ(delta_q(3, 3), 1);
}

TEST(IrredTest, DeltaAgainstLongScan) {
  for (std::uint64_t q : {2U, 3U, 4U}) {
    for (int m = 1; m <= 2000; m += 37) {
      const int delta = delta_q(q, m);
      const BigInt need = floor_log(q, BigInt(m)) + 1;
      for (int d = delta; d <= 40; ++d) {
        ASSERT_GT(count_irreducibles(q, d), need) << q << " " << m << " " << d;
      }
      if (delta > 1) {
        EXPECT_LE(count_irreducibles(q, delta - 1), need);
      }
    }
  }
}

TEST(IrredTest, IndexOrdering) {
  const Field f = Field::make(3);
  const IrreducibleIndex idx(f, 5);
  int prev = 0;
  for (const Poly& p : idx.all()) {
    ASSERT_GE(p.degree(), prev);
    prev = p.degree();
  }
  for (int d = 1; d <= 5; ++d) {
    const auto span = idx.of_degree(d);
    EXPECT_EQ(span.size(), count_irreducibles(3, d));
    EXPECT_TRUE(std::is_sorted(span.begin(), span.end(), canonical_less));
  }
  EXPECT_THROW(idx.of_degree(6), std::out_of_range);
}

}  // namespace
}  // namespace polycount
