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

#include "polycount/divisors.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "polycount/irred.hpp"

namespace polycount {

int Factorization::degree() const {
  int m = 0;
  for (const Factor& f : factors) m += f.degree * f.mult;
  return m;
}

const std::vector<Poly>& Factorizer::irreducibles(int d) {
  auto it = cache_.find(d);
  if (it == cache_.end()) it = cache_.emplace(d, enumerate_irreducibles(field_, d)).first;
  return it->second;
}

Factorization Factorizer::operator()(const Poly& s) {
  if (s.is_zero() || !s.is_monic()) throw std::invalid_argument("factorize needs a monic polynomial");
  Factorization out;
  Poly rest = s;
  for (int d = 1; 2 * d <= rest.degree(); ++d) {
    for (const Poly& p : irreducibles(d)) {
      int mult = 0;
      for (;;) {
        auto [quot, rem] = poly_divrem(field_, rest, p);
        if (!rem.is_zero()) break;
        rest = std::move(quot);
        ++mult;
      }
      if (mult > 0) out.factors.push_back({p, d, mult});
      if (2 * d > rest.degree()) break;
    }
  }
  if (rest.degree() > 0) out.factors.push_back({rest, rest.degree(), 1});
  return out;
}

Factorization factorize(const Field& field, const Poly& s) { return Factorizer(field)(s); }

Poly expand(const Field& field, const Factorization& f) {
  Poly out = Poly::one();
  for (const Factor& fac : f.factors) out = poly_mul(field, out, poly_pow(field, fac.p, fac.mult));
  return out;
}

BigInt phi(const Factorization& f) {
  BigInt out = 1;
  for (const Factor& fac : f.factors) out *= fac.mult + 1;
  return out;
}

std::vector<Poly> enumerate_divisors(const Field& field, const Factorization& f) {
  const std::size_t t = f.factors.size();
  std::vector<int> exps(t, 0);
  std::vector<Poly> out;
  for (;;) {
    Poly d = Poly::one();
    for (std::size_t i = 0; i < t; ++i) d = poly_mul(field, d, poly_pow(field, f.factors[i].p, exps[i]));
    out.push_back(std::move(d));
    std::size_t i = 0;
    while (i < t && exps[i] == f.factors[i].mult) exps[i++] = 0;
    if (i == t) break;
    ++exps[i];
  }
  return out;
}

std::vector<DegMult> shape_of(const Factorization& f) {
  std::vector<DegMult> out;
  out.reserve(f.factors.size());
  for (const Factor& fac : f.factors) out.push_back({fac.degree, fac.mult});
  return out;
}

DegreeSpectrum degree_spectrum(std::span<const DegMult> shape, int r0) {
  if (r0 < 0) throw std::invalid_argument("negative slack");
  DegreeSpectrum acc(static_cast<std::size_t>(r0) + 1, BigInt(1));
  for (const DegMult& dm : shape) {
    const std::size_t grow = static_cast<std::size_t>(dm.degree) * static_cast<std::size_t>(dm.mult);
    DegreeSpectrum next(acc.size() + grow, BigInt(0));
    for (std::size_t k = 0; k < acc.size(); ++k) {
      if (acc[k] == 0) continue;
      for (int j = 0; j <= dm.mult; ++j) next[k + static_cast<std::size_t>(j * dm.degree)] += acc[k];
    }
    acc = std::move(next);
  }
  return acc;
}

DegreeSpectrum degree_spectrum(const Factorization& f, int r0) {
  const auto shape = shape_of(f);
  return degree_spectrum(shape, r0);
}

BigInt phi_constrained(std::span<const DegMult> shape, int n, int n_prime) {
  int m = 0;
  for (const DegMult& dm : shape) m += dm.degree * dm.mult;
  if (m > n + n_prime) {
    throw std::invalid_argument("degree " + std::to_string(m) + " exceeds n + n' = " + std::to_string(n + n_prime));
  }
  const DegreeSpectrum spectrum = degree_spectrum(shape, 0);
  BigInt sum = 0;
  for (int k = std::max(0, m - n_prime); k <= std::min(n, m); ++k) sum += spectrum[static_cast<std::size_t>(k)];
  return sum;
}

BigInt phi_constrained(const Factorization& f, int n, int n_prime) {
  const auto shape = shape_of(f);
  return phi_constrained(shape, n, n_prime);
}

BigInt slack_divisor_count(int r0, int r, int d, int k) {
  if (r0 < 0 || r < 0 || d < 1) throw std::invalid_argument("slack_divisor_count: bad shape");
  const int h = r0 + r * d;
  if (k < 0 || k > h) {
    throw std::invalid_argument("slack_divisor_count: k=" + std::to_string(k) + " outside [0, " + std::to_string(h) +
                                "]");
  }
  const int kappa = k / d;
  const int lambda = (h - k) / d;
  return std::max(0, std::min(r, kappa) - std::max(0, r - lambda) + 1);
}

BigInt phi_n_by_split(const Factorization& f, int n, std::span<const std::size_t> b_factors) {
  const int deg_s = f.degree();
  if (deg_s > 2 * n) throw std::invalid_argument("phi_n_by_split needs deg s <= 2n");
  const int r0 = 2 * n - deg_s;
  std::vector<bool> in_b(f.factors.size(), false);
  for (std::size_t i : b_factors) {
    if (i >= f.factors.size()) throw std::out_of_range("split index out of range");
    in_b[i] = true;
  }
  std::vector<DegMult> a_shape;
  std::vector<DegMult> b_shape;
  for (std::size_t i = 0; i < f.factors.size(); ++i) {
    const DegMult dm{f.factors[i].degree, f.factors[i].mult};
    (in_b[i] ? b_shape : a_shape).push_back(dm);
  }
  const DegreeSpectrum a_spec = degree_spectrum(a_shape, 0);
  const DegreeSpectrum b_spec = degree_spectrum(b_shape, r0);
  const int h = static_cast<int>(b_spec.size()) - 1;
  const int deg_a = static_cast<int>(a_spec.size()) - 1;
  BigInt sum = 0;
  for (int k = 0; k <= h; ++k) {
    const int need = n - k;
    if (need < 0 || need > deg_a) continue;
    sum += a_spec[static_cast<std::size_t>(need)] * b_spec[static_cast<std::size_t>(k)];
  }
  return sum;
}

std::optional<Poly> greedy_divisor_of_degree(const Field& field, const Factorization& f, int target) {
  const int m = f.degree();
  if (target < 0 || target > m) {
    throw std::invalid_argument("target degree " + std::to_string(target) + " outside [0, " + std::to_string(m) + "]");
  }
  // Factor positions, largest degree first; canonical order breaks ties.
  std::vector<std::size_t> order(f.factors.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return f.factors[a].degree > f.factors[b].degree; });

  Poly g = Poly::one();
  std::vector<int> used(f.factors.size(), 0);
  for (std::size_t i : order) {
    const Factor& fac = f.factors[i];
    for (int c = 0; c < fac.mult; ++c) {
      if (g.degree() == target) return g;
      if (g.degree() + fac.degree > target) {
        const int gap = target - g.degree();
        for (std::size_t j = 0; j < f.factors.size(); ++j) {
          if (f.factors[j].degree == gap && used[j] < f.factors[j].mult) {
            return poly_mul(field, g, f.factors[j].p);
          }
        }
        if (field.q() == 2 && gap == 2) {
          const Poly x = Poly::x();
          const Poly x1({1, 1});
          bool has_x = false;
          bool has_x1 = false;
          for (std::size_t j = 0; j < f.factors.size(); ++j) {
            if (used[j] >= f.factors[j].mult) continue;
            has_x = has_x || f.factors[j].p == x;
            has_x1 = has_x1 || f.factors[j].p == x1;
          }
          if (has_x && has_x1) return poly_mul(field, g, poly_mul(field, x, x1));
        }
        return std::nullopt;
      }
      g = poly_mul(field, g, fac.p);
      ++used[i];
    }
  }
  return g.degree() == target ? std::optional<Poly>(g) : std::nullopt;
}

}  // namespace polycount
