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

#include "polycount/tail.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "polycount/enumerate.hpp"
#include "polycount/irred.hpp"
#include "polycount/parallel.hpp"

namespace polycount {

namespace {

Rational rpow(const Rational& a, int k) {
  Rational r = 1;
  for (int i = 0; i < k; ++i) r *= a;
  return r;
}

double to_double(const Rational& r) { return static_cast<double>(r); }

}  // namespace

RationalSeries::RationalSeries(int degree) {
  if (degree < 0) throw std::invalid_argument("series degree must be >= 0");
  c_.assign(static_cast<std::size_t>(degree) + 1, Rational(0));
}

RationalSeries RationalSeries::operator+(const RationalSeries& other) const {
  RationalSeries out(std::min(degree(), other.degree()));
  for (int k = 0; k <= out.degree(); ++k) out[k] = (*this)[k] + other[k];
  return out;
}

RationalSeries RationalSeries::operator*(const RationalSeries& other) const {
  RationalSeries out(std::min(degree(), other.degree()));
  for (int i = 0; i <= out.degree(); ++i) {
    for (int j = 0; i + j <= out.degree(); ++j) out[i + j] += (*this)[i] * other[j];
  }
  return out;
}

RationalSeries RationalSeries::exp() const {
  if (c_[0] != 0) throw std::invalid_argument("exp needs a zero constant term");
  RationalSeries b(degree());
  b[0] = 1;
  // k b_k = sum_{j=1}^{k} j a_j b_{k-j}
  for (int k = 1; k <= degree(); ++k) {
    Rational acc = 0;
    for (int j = 1; j <= k; ++j) acc += Rational(j) * (*this)[j] * b[k - j];
    b[k] = acc / k;
  }
  return b;
}

int omega(const Factorization& f) {
  int total = 0;
  for (const Factor& fac : f.factors) total += fac.mult;
  return total;
}

BigInt OmegaDistribution::total() const {
  BigInt t = 0;
  for (const auto& [k, c] : histogram) t += c;
  return t;
}

Rational OmegaDistribution::moment(const Rational& alpha) const {
  Rational acc = 0;
  for (const auto& [k, c] : histogram) acc += Rational(c) * rpow(alpha, k);
  return acc / Rational(total());
}

Rational OmegaDistribution::tail(double w) const {
  BigInt hits = 0;
  for (const auto& [k, c] : histogram) {
    if (k >= w) hits += c;
  }
  return Rational(hits, total());
}

OmegaDistribution omega_distribution(const Field& field, int m, const Limits& limits) {
  const MonicRange range(field, m);
  check_budget(range.size(), limits, "omega distribution");
  using Hist = std::map<int, BigInt>;
  OmegaDistribution out;
  out.m = m;
  out.histogram = parallel_reduce(
      range.size(), limits.threads, Hist{},
      [&](std::uint64_t lo, std::uint64_t hi) {
        Hist h;
        Factorizer fac(field);
        for (std::uint64_t i = lo; i < hi; ++i) h[omega(fac(range[i]))] += 1;
        return h;
      },
      [](Hist& a, Hist&& b) {
        for (auto& [k, v] : b) a[k] += v;
      });
  return out;
}

Rational g_series(std::uint64_t q, int m, const Rational& alpha) {
  if (m < 1) throw std::invalid_argument("g_series needs m >= 1");
  Rational acc = 0;
  for (int d = 1; d <= m; ++d) {
    if (m % d == 0) acc += Rational(BigInt(d) * count_irreducibles(q, d)) * rpow(alpha, m / d);
  }
  return acc / Rational(ipow(q, static_cast<unsigned>(m)));
}

RationalSeries moment_series(std::uint64_t q, int degree, const Rational& alpha) {
  RationalSeries log_series(degree);
  for (int j = 1; j <= degree; ++j) log_series[j] = g_series(q, j, alpha) / j;
  return log_series.exp();
}

Rational moment_alpha(std::uint64_t q, int m, const Rational& alpha) {
  if (m < 0) throw std::invalid_argument("moment_alpha needs m >= 0");
  return moment_series(q, m, alpha)[m];
}

double chernoff_bound(std::uint64_t q, int m, double w, double alpha) {
  if (!(alpha > 0)) throw std::invalid_argument("chernoff_bound needs alpha > 0");
  return to_double(moment_alpha(q, m, Rational(alpha))) * std::pow(alpha, -w);
}

ChernoffTail chernoff_tail(std::uint64_t q, int m, double c) {
  if (!(c > 1) || !(c < static_cast<double>(q))) {
    throw std::invalid_argument("chernoff_tail needs 1 < c < q");
  }
  if (m < 2) throw std::invalid_argument("chernoff_tail needs m >= 2");
  const double w = c * std::log(static_cast<double>(m));
  ChernoffTail out;
  out.at_c = chernoff_bound(q, m, w, c);
  out.grid_best = std::numeric_limits<double>::infinity();
  for (std::uint64_t k = 21; k < 20 * q; ++k) {
    const Rational alpha(BigInt(k), BigInt(20));
    const double a = to_double(alpha);
    const double b = to_double(moment_alpha(q, m, alpha)) * std::pow(a, -w);
    if (b < out.grid_best) {
      out.grid_best = b;
      out.grid_alpha = a;
    }
  }
  return out;
}

PhiTail phi_tail_empirical(const Field& field, int m, double beta, const Limits& limits) {
  const MonicRange range(field, m);
  check_budget(range.size(), limits, "phi tail census");
  const double threshold = std::pow(static_cast<double>(m), beta);
  struct Acc {
    BigInt phi_hits, omega_hits;
  };
  // 2^Omega >= m^beta is the same event as Omega >= beta log2 m.
  const Acc acc = parallel_reduce(
      range.size(), limits.threads, Acc{},
      [&](std::uint64_t lo, std::uint64_t hi) {
        Acc a;
        Factorizer fac(field);
        for (std::uint64_t i = lo; i < hi; ++i) {
          const Factorization f = fac(range[i]);
          if (static_cast<double>(phi(f)) >= threshold) a.phi_hits += 1;
          if (std::ldexp(1.0, omega(f)) >= threshold) a.omega_hits += 1;
        }
        return a;
      },
      [](Acc& a, Acc&& b) {
        a.phi_hits += b.phi_hits;
        a.omega_hits += b.omega_hits;
      });
  const BigInt total = range.size();
  return {Rational(acc.phi_hits, total), Rational(acc.omega_hits, total)};
}

BigInt domination_failures(const Field& field, int m, const Limits& limits) {
  const MonicRange range(field, m);
  check_budget(range.size(), limits, "domination census");
  return parallel_reduce(
      range.size(), limits.threads, BigInt(0),
      [&](std::uint64_t lo, std::uint64_t hi) {
        BigInt bad = 0;
        Factorizer fac(field);
        for (std::uint64_t i = lo; i < hi; ++i) {
          const Factorization f = fac(range[i]);
          if (phi(f) > BigInt(1) << omega(f)) bad += 1;
        }
        return bad;
      },
      [](BigInt& a, BigInt&& b) { a += b; });
}

}  // namespace polycount
