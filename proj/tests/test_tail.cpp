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
#include "polycount/divisors.hpp"
#include "polycount/irred.hpp"
#include "polycount/moments.hpp"
#include "polycount/tail.hpp"

namespace polycount {
namespace {

// Omega histogram from sieve irreducible counts: multisets of irreducibles by total degree and size.
std::map<int, BigInt> omega_by_multisets(const Field& f, int m) {
  // ways[deg][k]
  std::vector<std::vector<BigInt>> ways(m + 1, std::vector<BigInt>(m + 1, 0));
  ways[0][0] = 1;
  for (int d = 1; d <= m; ++d) {
    const BigInt count = static_cast<long>(oracle::irreducibles_by_sieve(f, d).size());
    auto next = ways;
    for (int deg = 0; deg <= m; ++deg) {
      for (int k = 0; k <= m; ++k) {
        if (ways[deg][k] == 0) continue;
        BigInt multisets = 1;
        for (int j = 1; deg + j * d <= m; ++j) {
          multisets = multisets * (count + j - 1) / j;
          next[deg + j * d][k + j] += ways[deg][k] * multisets;
        }
      }
    }
    ways = std::move(next);
  }
  std::map<int, BigInt> h;
  for (int k = 0; k <= m; ++k) {
    if (ways[m][k] != 0) h[k] = ways[m][k];
  }
  return h;
}

TEST(OmegaTest, Examples) {
  const Field f = Field::make(2);
  EXPECT_EQ(omega(factorize(f, Poly({0, 0, 1, 1}))), 3);
  EXPECT_EQ(omega(factorize(f, Poly({1, 1, 1}))), 1);
  EXPECT_EQ(omega(factorize(f, Poly::one())), 0);
  EXPECT_EQ(omega_distribution(f, 2).histogram, (std::map<int, BigInt>{{1, 1}, {2, 3}}));
  EXPECT_EQ(omega_distribution(f, 1).histogram, (std::map<int, BigInt>{{1, 2}}));
  EXPECT_EQ(omega_distribution(f, 0).histogram, (std::map<int, BigInt>{{0, 1}}));
}

TEST(OmegaTest, HistogramMatchesMultisetCount) {
  for (std::uint32_t q : {2U, 3U}) {
    const Field f = Field::make(q);
    for (int m = 1; m <= (q == 2 ? 10 : 7); ++m) {
      const OmegaDistribution d = omega_distribution(f, m);
      EXPECT_EQ(d.histogram, omega_by_multisets(f, m)) << q << " " << m;
      EXPECT_EQ(d.total(), ipow(q, m));
    }
  }
}

TEST(OmegaTest, TwoToOmegaDominatesPhi) {
  for (std::uint32_t q : {2U, 3U}) {
    const Field f = Field::make(q);
    for (int m = 0; m <= (q == 2 ? 10 : 7); ++m) {
      EXPECT_EQ(domination_failures(f, m), 0) << q << " " << m;
      EXPECT_GE(omega_distribution(f, m).moment(2), expectation_phi(q, m));
    }
  }
}

TEST(SeriesTest, Arithmetic) {
  RationalSeries a(4);
  a[0] = 1;
  a[1] = 1;
  const RationalSeries sq = a * a;
  EXPECT_EQ(sq[0], 1);
  EXPECT_EQ(sq[1], 2);
  EXPECT_EQ(sq[2], 1);
  EXPECT_EQ(sq[3], 0);
  EXPECT_EQ((a + a)[1], 2);
  RationalSeries z(6);
  z[1] = 1;
  const RationalSeries e = z.exp();
  BigInt fact = 1;
  for (int k = 0; k <= 6; ++k) {
    if (k) fact *= k;
    EXPECT_EQ(e[k], Rational(1, fact));
  }
  EXPECT_EQ((z + z).exp(), e * e);
  EXPECT_THROW(a.exp(), std::invalid_argument);
}

TEST(SeriesTest, GExamples) {
  for (Rational alpha : {Rational(1, 2), Rational(1), Rational(3)}) {
    EXPECT_EQ(g_series(2, 1, alpha), alpha);
    EXPECT_EQ(g_series(2, 2, alpha), (2 * alpha * alpha + 2 * alpha) / 4);
    EXPECT_EQ(moment_alpha(2, 1, alpha), alpha);
    EXPECT_EQ(moment_alpha(2, 2, alpha), (3 * alpha * alpha + alpha) / 4);
  }
  for (int m = 0; m <= 16; ++m) {
    EXPECT_EQ(moment_alpha(2, m, 1), 1);
    EXPECT_EQ(moment_alpha(3, m, 1), 1);
  }
  for (int m = 1; m <= 16; ++m) {
    EXPECT_EQ(g_series(2, m, 1), 1);
  }
}

TEST(SeriesTest, MatchesHistogram) {
  const std::vector<Rational> alphas{Rational(1, 2), Rational(1), Rational(2), Rational(5, 2)};
  for (std::uint32_t q : {2U, 3U}) {
    const Field f = Field::make(q);
    const int top = q == 2 ? 9 : 6;
    for (const Rational& alpha : alphas) {
      const RationalSeries s = moment_series(q, top, alpha);
      for (int m = 0; m <= top; ++m) {
        EXPECT_EQ(s[m], omega_distribution(f, m).moment(alpha)) << q << " " << m;
        EXPECT_EQ(moment_alpha(q, m, alpha), s[m]);
      }
    }
  }
}

TEST(ChernoffTest, BoundsTheCensus) {
  for (std::uint32_t q : {2U, 3U}) {
    const Field f = Field::make(q);
    for (int m = 2; m <= (q == 2 ? 10 : 7); ++m) {
      const OmegaDistribution d = omega_distribution(f, m);
      for (double w : {1.0, 2.0, 3.5, 5.0}) {
        const double actual = static_cast<double>(d.tail(w));
        for (double alpha : {1.0, 1.25, 1.5, 1.9}) {
          EXPECT_GE(chernoff_bound(q, m, w, alpha) * (1 + 1e-12), actual) << q << " " << m << " " << w;
        }
      }
      for (double c : {1.2, 1.5, 1.9}) {
        const ChernoffTail t = chernoff_tail(q, m, c);
        const double actual = static_cast<double>(d.tail(c * std::log(m)));
        EXPECT_GE(t.at_c * (1 + 1e-12), actual);
        EXPECT_GE(t.grid_best * (1 + 1e-12), actual);
        EXPECT_GT(t.grid_alpha, 1.0);
        EXPECT_LT(t.grid_alpha, q);
      }
    }
  }
}

TEST(ChernoffTest, Edges) {
  EXPECT_NEAR(chernoff_tail(2, 8, 1.000001).at_c, 1.0, 1e-4);
  EXPECT_DOUBLE_EQ(chernoff_bound(2, 8, 3.0, 1.0), 1.0);
  EXPECT_THROW(chernoff_tail(2, 8, 1.0), std::invalid_argument);
  EXPECT_THROW(chernoff_tail(2, 8, 2.0), std::invalid_argument);
  EXPECT_THROW(chernoff_tail(2, 1, 1.5), std::invalid_argument);
}

TEST(PhiTailTest, Examples) {
  const Field f = Field::make(2);
  const PhiTail all = phi_tail_empirical(f, 8, 0.0);
  EXPECT_EQ(all.phi_prob, 1);
  EXPECT_EQ(all.omega_prob, 1);
  const PhiTail none = phi_tail_empirical(f, 8, 10.0);
  EXPECT_EQ(none.phi_prob, 0);
  EXPECT_EQ(none.omega_prob, 0);
  const PhiTail t = phi_tail_empirical(f, 8, 1 + std::log(2.0));
  EXPECT_EQ(t.phi_prob, 0);
  EXPECT_EQ(t.omega_prob, Rational(33, 256));
}

TEST(PhiTailTest, ChainHolds) {
  for (std::uint32_t q : {2U, 3U}) {
    const Field f = Field::make(q);
    for (int m = 2; m <= (q == 2 ? 10 : 7); ++m) {
      for (double beta : {0.5, 1.0, 1.5, 2.0}) {
        EXPECT_TRUE(phi_tail_empirical(f, m, beta).chain_holds()) << m;
      }
    }
  }
}

}  // namespace
}  // namespace polycount
