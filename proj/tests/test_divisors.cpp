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

#include <random>
#include <set>

#include "oracles.hpp"
#include "polycount/divisors.hpp"
#include "polycount/irred.hpp"

namespace polycount {
namespace {

Poly P(std::vector<Elem> c) { return Poly(std::move(c)); }

const Poly kX = P({0, 1});
const Poly kX1 = P({1, 1});

std::vector<BigInt> big(std::initializer_list<int> v) {
  std::vector<BigInt> out;
  for (int x : v) out.push_back(x);
  return out;
}

std::set<oracle::Key> keys(const std::vector<Poly>& ps) {
  std::set<oracle::Key> out;
  for (const Poly& p : ps) out.insert(p.coeffs());
  return out;
}

TEST(FactorizeTest, Examples) {
  const Field f = Field::make(2);
  const Factorization a = factorize(f, P({0, 0, 1, 1}));
  ASSERT_EQ(a.factors.size(), 2U);
  EXPECT_EQ(a.factors[0], (Factor{kX, 1, 2}));
  EXPECT_EQ(a.factors[1], (Factor{kX1, 1, 1}));
  const Factorization b = factorize(f, P({1, 1, 0, 1}));
  ASSERT_EQ(b.factors.size(), 1U);
  EXPECT_EQ(b.factors[0], (Factor{P({1, 1, 0, 1}), 3, 1}));
  EXPECT_TRUE(factorize(f, Poly::one()).factors.empty());
  EXPECT_EQ(factorize(f, Poly::one()).degree(), 0);
  EXPECT_THROW(factorize(f, Poly()), std::invalid_argument);
  EXPECT_THROW(factorize(Field::make(3), P({0, 2})), std::invalid_argument);
}

TEST(FactorizeTest, Invariants) {
  for (const Field& f : {Field::make(2), Field::make(3), Field::make(2, 2)}) {
    for (int m = 0; m <= (f.q() == 2 ? 10 : 6); ++m) {
      for (const Poly& s : enumerate_monic(f, m)) {
        const Factorization fac = factorize(f, s);
        ASSERT_EQ(expand(f, fac), s);
        ASSERT_EQ(fac.degree(), m);
        for (std::size_t i = 0; i < fac.factors.size(); ++i) {
          ASSERT_TRUE(is_irreducible(f, fac.factors[i].p));
          ASSERT_EQ(fac.factors[i].degree, fac.factors[i].p.degree());
          ASSERT_GE(fac.factors[i].mult, 1);
          if (i) {
            ASSERT_TRUE(canonical_less(fac.factors[i - 1].p, fac.factors[i].p));
          }
        }
      }
    }
  }
}

TEST(PhiTest, Examples) {
  const Field f = Field::make(2);
  EXPECT_EQ(phi(factorize(f, P({0, 0, 1, 1}))), 6);
  EXPECT_EQ(phi(factorize(f, P({1, 1, 0, 1}))), 2);
  EXPECT_EQ(phi(factorize(f, Poly::one())), 1);
}

// Phi(s) and the degree spectrum against a census of all products u v.
TEST(PhiTest, MatchesProductCensus) {
  for (std::uint32_t q : {2U, 3U}) {
    const Field f = Field::make(q);
    Factorizer fac(f);
    for (int m = 0; m <= 8; ++m) {
      for (const auto& [key, spectrum] : oracle::divisor_spectra(f, m)) {
        const Factorization ff = fac(Poly(key));
        ASSERT_EQ(phi(ff), oracle::total(spectrum));
        ASSERT_EQ(degree_spectrum(ff, 0), spectrum);
      }
    }
  }
}

TEST(DivisorsTest, EnumerateExamples) {
  const Field f = Field::make(2);
  EXPECT_EQ(keys(enumerate_divisors(f, factorize(f, P({0, 1, 1})))), keys({Poly::one(), kX, kX1, P({0, 1, 1})}));
  EXPECT_EQ(keys(enumerate_divisors(f, factorize(f, P({0, 0, 1})))), keys({Poly::one(), kX, P({0, 0, 1})}));
  EXPECT_EQ(enumerate_divisors(f, factorize(f, P({0, 0, 1, 0, 1}))).size(), 9U);
}

TEST(DivisorsTest, EnumerateMatchesTrialDivision) {
  for (std::uint32_t q : {2U, 3U}) {
    const Field f = Field::make(q);
    const auto candidates = oracle::upto(f, 6);
    for (int m = 0; m <= 6; ++m) {
      for (const Poly& s : enumerate_monic(f, m)) {
        const auto divs = enumerate_divisors(f, factorize(f, s));
        std::set<oracle::Key> expected;
        for (const Poly& u : candidates) {
          if (u.degree() <= m && poly_divides(f, u, s)) expected.insert(u.coeffs());
        }
        ASSERT_EQ(divs.size(), expected.size());
        ASSERT_EQ(keys(divs), expected);
      }
    }
  }
}

TEST(SpectrumTest, Examples) {
  const Field f = Field::make(2);
  EXPECT_EQ(degree_spectrum(factorize(f, P({0, 1, 1})), 0), big({1, 2, 1}));
  const std::vector<DegMult> p_squared = {{2, 2}};
  EXPECT_EQ(degree_spectrum(p_squared, 3), big({1, 1, 2, 2, 2, 2, 1, 1}));
  EXPECT_EQ(degree_spectrum(std::span<const DegMult>{}, 0), big({1}));
}

TEST(SpectrumTest, Properties) {
  std::mt19937_64 rng(7);
  for (int it = 0; it < 400; ++it) {
    std::vector<DegMult> shape;
    const int t = static_cast<int>(rng() % 5);
    BigInt product = 1;
    for (int i = 0; i < t; ++i) {
      shape.push_back({1 + static_cast<int>(rng() % 4), 1 + static_cast<int>(rng() % 4)});
      product *= shape.back().mult + 1;
    }
    const int r0 = static_cast<int>(rng() % 6);
    const DegreeSpectrum n = degree_spectrum(shape, r0);
    EXPECT_EQ(oracle::total(n), product * (r0 + 1));
    EXPECT_EQ(n.front(), 1);
    EXPECT_EQ(n.back(), 1);
    for (std::size_t k = 0; k < n.size(); ++k) EXPECT_EQ(n[k], n[n.size() - 1 - k]);
  }
}

TEST(ConstrainedTest, Examples) {
  const Field f = Field::make(2);
  EXPECT_EQ(phi_constrained(factorize(f, P({0, 1, 1})), 2, 2), 4);
  EXPECT_EQ(phi_constrained(factorize(f, poly_mul(f, P({0, 0, 1}), P({1, 0, 1}))), 2, 2), 3);
  EXPECT_EQ(phi_constrained(factorize(f, Poly::one()), 5, 5), 1);
  EXPECT_THROW(phi_constrained(factorize(f, P({0, 0, 0, 1})), 1, 1), std::invalid_argument);
}

TEST(ConstrainedTest, MatchesPairCensus) {
  for (std::uint32_t q : {2U, 3U}) {
    const Field f = Field::make(q);
    Factorizer fac(f);
    for (int n = 0; n <= 4; ++n) {
      const auto census = oracle::constrained_counts(f, n);
      for (const Poly& s : enumerate_upto(f, 2 * n)) {
        const Factorization ff = fac(s);
        const auto it = census.find(s.coeffs());
        const BigInt expected = it == census.end() ? BigInt(0) : it->second;
        ASSERT_EQ(phi_constrained(ff, n, n), expected) << format_poly(s);
        ASSERT_LE(phi_constrained(ff, n, n), phi(ff));
      }
    }
  }
}

TEST(SlackTest, Examples) {
  EXPECT_EQ(slack_divisor_count(3, 2, 2, 3), 2);
  EXPECT_EQ(slack_divisor_count(0, 1, 1, 0), 1);
  EXPECT_EQ(slack_divisor_count(2, 0, 1, 1), 1);
  EXPECT_THROW(slack_divisor_count(1, 1, 1, 3), std::invalid_argument);
  EXPECT_THROW(slack_divisor_count(1, 1, 1, -1), std::invalid_argument);
}

TEST(SlackTest, ExhaustiveAgainstSpectrumAndMonomials) {
  for (int r0 = 0; r0 <= 5; ++r0) {
    for (int r = 0; r <= 5; ++r) {
      for (int d = 1; d <= 4; ++d) {
        const std::vector<DegMult> shape = r ? std::vector<DegMult>{{d, r}} : std::vector<DegMult>{};
        const DegreeSpectrum spectrum = degree_spectrum(shape, r0);
        for (int k = 0; k <= r0 + r * d; ++k) {
          BigInt monomials = 0;
          for (int w0 = 0; w0 <= r0; ++w0) {
            for (int w = 0; w <= r; ++w) monomials += (w0 + w * d == k) ? 1 : 0;
          }
          ASSERT_EQ(slack_divisor_count(r0, r, d, k), monomials) << r0 << " " << r << " " << d << " " << k;
          ASSERT_EQ(slack_divisor_count(r0, r, d, k), spectrum[static_cast<std::size_t>(k)]);
        }
      }
    }
  }
}

TEST(SlackTest, SplitDecompositionSeeded) {
  std::mt19937_64 rng(12345);
  int instances = 0;
  for (; instances < 500; ++instances) {
    const std::uint32_t q = rng() % 2 ? 2 : 3;
    const int n = 1 + static_cast<int>(rng() % 5);
    const Field f = Field::make(q);
    const UptoRange range(f, 2 * n);
    const Poly s = range[rng() % range.size()];
    const Factorization fac = factorize(f, s);
    const BigInt direct = phi_constrained(fac, n, n);
    const std::size_t t = fac.factors.size();
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << t); ++mask) {
      std::vector<std::size_t> b;
      for (std::size_t i = 0; i < t; ++i) {
        if (mask >> i & 1) b.push_back(i);
      }
      ASSERT_EQ(phi_n_by_split(fac, n, b), direct) << format_poly(s) << " mask " << mask;
    }
  }
  EXPECT_EQ(instances, 500);
}

TEST(GreedyTest, Examples) {
  const Field f = Field::make(2);
  const Poly s = poly_mul(f, poly_mul(f, P({0, 0, 1}), kX1), P({1, 1, 1}));
  const Factorization fac = factorize(f, s);
  const auto g = greedy_divisor_of_degree(f, fac, 3);
  ASSERT_TRUE(g.has_value());
  EXPECT_EQ(g->degree(), 3);
  EXPECT_TRUE(poly_divides(f, *g, s));
  EXPECT_EQ(greedy_divisor_of_degree(f, fac, 0), Poly::one());
  EXPECT_EQ(greedy_divisor_of_degree(f, fac, 5), s);
  EXPECT_THROW(greedy_divisor_of_degree(f, fac, 6), std::invalid_argument);
}

TEST(GreedyTest, OutputsAreDivisorsOfRequestedDegree) {
  for (std::uint32_t q : {2U, 3U}) {
    const Field f = Field::make(q);
    for (int m = 0; m <= (q == 2 ? 9 : 6); ++m) {
      for (const Poly& s : enumerate_monic(f, m)) {
        const Factorization fac = factorize(f, s);
        for (int target = 0; target <= m; ++target) {
          const auto g = greedy_divisor_of_degree(f, fac, target);
          if (!g) continue;
          ASSERT_EQ(g->degree(), target);
          ASSERT_TRUE(g->is_monic());
          ASSERT_TRUE(poly_divides(f, *g, s));
        }
      }
    }
  }
}

}  // namespace
}  // namespace polycount
