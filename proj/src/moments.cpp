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

#include "polycount/moments.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <set>
#include <stdexcept>
#include <vector>

#include "polycount/divisors.hpp"
#include "polycount/enumerate.hpp"
#include "polycount/parallel.hpp"

namespace polycount {

namespace {

std::vector<Poly> materialize(const Field& field, int n) {
  std::vector<Poly> out;
  for (const Poly& p : enumerate_upto(field, n)) out.push_back(p);
  return out;
}

BigInt sum_reduce(std::uint64_t n, unsigned threads, const std::function<BigInt(std::uint64_t)>& body) {
  return parallel_reduce(
      n, threads, BigInt(0),
      [&](std::uint64_t lo, std::uint64_t hi) {
        BigInt acc = 0;
        for (std::uint64_t i = lo; i < hi; ++i) acc += body(i);
        return acc;
      },
      [](BigInt& a, BigInt&& b) { a += b; });
}

bool coprime(const Field& field, const Poly& a, const Poly& b) { return poly_gcd(field, a, b) == Poly::one(); }

void require_monic(const Poly& p, const char* what) {
  if (!p.is_monic()) throw std::invalid_argument(std::string(what) + ": entries must be monic");
}

Rational ratio(const BigInt& a, const BigInt& b) { return Rational(a, b); }

}  // namespace

BigInt size_P(std::uint64_t q, int n) {
  if (n < 0) return 0;
  return (ipow(q, static_cast<unsigned>(n + 1)) - 1) / (q - 1);
}

Rational expectation_phi(std::uint64_t, int m) { return m + 1; }

Rational variance_phi(std::uint64_t q, int m) {
  return Rational(BigInt(q - 1), BigInt(q)) * Rational(binomial(static_cast<unsigned>(m + 1), 3));
}

MomentReport moments_formula(std::uint64_t q, int m) {
  MomentReport r;
  r.size = m;
  r.expectation = expectation_phi(q, m);
  r.variance = variance_phi(q, m);
  r.second_moment = r.variance + r.expectation * r.expectation;
  r.source = Source::kFormula;
  return r;
}

BigInt size_S_m(std::uint64_t q, int m) {
  const Rational inner = variance_phi(q, m) + Rational((m + 1) * (m + 1));
  const Rational total = Rational(ipow(q, static_cast<unsigned>(m))) * inner;
  if (denominator(total) != 1) throw std::logic_error("|S_m| formula is not an integer");
  return numerator(total);
}

BigInt size_S_star(std::uint64_t q, int n) {
  const BigInt qn1 = ipow(q, static_cast<unsigned>(n + 1));
  const BigInt qm1 = q - 1;
  const Rational first(BigInt(n + 1) * ipow(q, static_cast<unsigned>(2 * n + 1)) * (q + 1), qm1 * qm1);
  const Rational second((qn1 - 1) * (3 * qn1 - 1), qm1 * qm1 * qm1);
  const Rational total = first - second;
  if (denominator(total) != 1) throw std::logic_error("|S*_n| formula is not an integer");
  return numerator(total);
}

Rational expectation_phi_nn(std::uint64_t q, int n) {
  const BigInt p = size_P(q, n);
  return ratio(size_S_star(q, n), p * p);
}

Rational expectation_phi_nn_closed(std::uint64_t q, int n) {
  const BigInt qn1 = ipow(q, static_cast<unsigned>(n + 1));
  const Rational first(BigInt(n + 1) * ipow(q, static_cast<unsigned>(2 * n + 1)) * (q + 1), (qn1 - 1) * (qn1 - 1));
  const Rational second(3 * qn1 - 1, (qn1 - 1) * (q - 1));
  return first - second;
}

BigInt coprime_pairs(std::uint64_t q, int t) { return (ipow(q, static_cast<unsigned>(2 * t + 1)) - 1) / (q - 1); }

BigInt x_star_upper_bound(std::uint64_t q, int n) {
  BigInt sum = 0;
  for (int t = 0; t <= 2 * n; ++t) {
    const int m = 2 * n - t;
    const BigInt h = std::min(m, 2 * n - m) + 1;
    sum += h * h * h * ipow(q, static_cast<unsigned>(m));
  }
  const BigInt n1 = n + 1;
  return n1 * n1 * n1 * n1 * sum;
}

std::map<BigInt, BigInt> phi_histogram(const Field& field, int m, const Limits& limits) {
  const MonicRange range(field, m);
  check_budget(range.size(), limits, "phi histogram");
  using Hist = std::map<BigInt, BigInt>;
  return parallel_reduce(
      range.size(), limits.threads, Hist{},
      [&](std::uint64_t lo, std::uint64_t hi) {
        Hist h;
        Factorizer fac(field);
        for (std::uint64_t i = lo; i < hi; ++i) h[phi(fac(range[i]))] += 1;
        return h;
      },
      [](Hist& a, Hist&& b) {
        for (auto& [k, v] : b) a[k] += v;
      });
}

MomentReport moments_bruteforce(const Field& field, int m, const Limits& limits) {
  const auto hist = phi_histogram(field, m, limits);
  BigInt count = 0;
  BigInt sum = 0;
  BigInt sum_sq = 0;
  for (const auto& [v, c] : hist) {
    count += c;
    sum += v * c;
    sum_sq += v * v * c;
  }
  MomentReport r;
  r.size = m;
  r.expectation = ratio(sum, count);
  r.second_moment = ratio(sum_sq, count);
  r.variance = r.second_moment - r.expectation * r.expectation;
  r.source = Source::kBruteForce;
  return r;
}

BigInt census_S_m(const Field& field, int m, const Limits& limits) {
  const auto all = materialize(field, m);
  const std::uint64_t n = all.size();
  check_budget(BigInt(n) * n, limits, "S_m census");
  return sum_reduce(n, limits.threads, [&](std::uint64_t bi) {
    BigInt acc = 0;
    const Poly& b = all[bi];
    for (const Poly& c : all) {
      const int r = m - b.degree() - c.degree();
      if (r < 0 || !coprime(field, b, c)) continue;
      for (int j = 0; j <= r; ++j)
        acc += ipow(field.q(), static_cast<unsigned>(j)) * ipow(field.q(), static_cast<unsigned>(r - j));
    }
    return acc;
  });
}

BigInt census_S_m_literal(const Field& field, int m, const Limits& limits) {
  const auto all = materialize(field, m);
  const std::uint64_t n = all.size();
  check_budget(BigInt(n) * n * n * n, limits, "S_m literal census");
  return sum_reduce(n, limits.threads, [&](std::uint64_t bi) {
    BigInt acc = 0;
    for (const Poly& c : all) {
      for (const Poly& a : all) {
        for (const Poly& d : all) {
          if (in_S_m(field, {a, all[bi], c, d}, m)) acc += 1;
        }
      }
    }
    return acc;
  });
}

BigInt census_Q_m_literal(const Field& field, int m, const Limits& limits) {
  const auto all = materialize(field, m);
  const std::uint64_t n = all.size();
  check_budget(BigInt(n) * n * n * n, limits, "Q_m literal census");
  return sum_reduce(n, limits.threads, [&](std::uint64_t ui) {
    BigInt acc = 0;
    for (const Poly& v : all) {
      for (const Poly& uh : all) {
        for (const Poly& vh : all) {
          if (in_Q_m(field, {all[ui], v, uh, vh}, m)) acc += 1;
        }
      }
    }
    return acc;
  });
}

BigInt census_S_star(const Field& field, int n, const Limits& limits) {
  const auto all = materialize(field, n);
  const std::uint64_t sz = all.size();
  check_budget(BigInt(sz) * sz, limits, "S*_n census");
  return sum_reduce(sz, limits.threads, [&](std::uint64_t bi) {
    BigInt acc = 0;
    const Poly& b = all[bi];
    for (const Poly& c : all) {
      if (!coprime(field, b, c)) continue;
      // ab, ac in P_n bound deg a; cd, bd bound deg d the same way.
      const BigInt side = size_P(field.q(), n - std::max(b.degree(), c.degree()));
      acc += side * side;
    }
    return acc;
  });
}

BigInt census_S_star_literal(const Field& field, int n, const Limits& limits) {
  const auto all = materialize(field, n);
  const std::uint64_t sz = all.size();
  check_budget(BigInt(sz) * sz * sz * sz, limits, "S*_n literal census");
  return sum_reduce(sz, limits.threads, [&](std::uint64_t ai) {
    BigInt acc = 0;
    for (const Poly& b : all) {
      for (const Poly& c : all) {
        for (const Poly& d : all) {
          if (in_S_star(field, {all[ai], b, c, d}, n)) acc += 1;
        }
      }
    }
    return acc;
  });
}

BigInt census_coprime_pairs(const Field& field, int t, const Limits& limits) {
  const auto all = materialize(field, t);
  const std::uint64_t sz = all.size();
  check_budget(BigInt(sz) * sz, limits, "coprime pair census");
  return sum_reduce(sz, limits.threads, [&](std::uint64_t i) {
    BigInt acc = 0;
    for (const Poly& c : all) acc += coprime(field, all[i], c) ? 1 : 0;
    return acc;
  });
}

ConstrainedSums constrained_sums(const Field& field, int n, const Limits& limits) {
  const auto all = materialize(field, n);
  const std::uint64_t sz = all.size();
  check_budget(BigInt(sz) * sz, limits, "constrained moment census");
  return parallel_reduce(
      sz, limits.threads, ConstrainedSums{},
      [&](std::uint64_t lo, std::uint64_t hi) {
        ConstrainedSums acc;
        Factorizer fac(field);
        for (std::uint64_t i = lo; i < hi; ++i) {
          for (const Poly& v : all) {
            const BigInt c = phi_constrained(fac(poly_mul(field, all[i], v)), n, n);
            acc.count += 1;
            acc.sum += c;
            acc.sum_sq += c * c;
          }
        }
        return acc;
      },
      [](ConstrainedSums& a, ConstrainedSums&& b) {
        a.count += b.count;
        a.sum += b.sum;
        a.sum_sq += b.sum_sq;
      });
}

MomentReport moments_nn_bruteforce(const Field& field, int n, const Limits& limits) {
  const ConstrainedSums s = constrained_sums(field, n, limits);
  MomentReport r;
  r.size = n;
  r.expectation = ratio(s.sum, s.count);
  r.second_moment = ratio(s.sum_sq, s.count);
  r.variance = r.second_moment - r.expectation * r.expectation;
  r.source = Source::kBruteForce;
  return r;
}

Quad bijection_S_to_Q(const Field& field, const Quad& abcd) {
  for (const Poly& p : abcd) require_monic(p, "bijection_S_to_Q");
  const auto& [a, b, c, d] = abcd;
  if (!coprime(field, b, c)) throw std::invalid_argument("bijection_S_to_Q: gcd(b, c) != 1");
  return {poly_mul(field, a, b), poly_mul(field, c, d), poly_mul(field, a, c), poly_mul(field, b, d)};
}

Quad bijection_Q_to_S(const Field& field, const Quad& uvuv) {
  for (const Poly& p : uvuv) require_monic(p, "bijection_Q_to_S");
  const auto& [u, v, uh, vh] = uvuv;
  if (poly_mul(field, u, v) != poly_mul(field, uh, vh)) {
    throw std::invalid_argument("bijection_Q_to_S: u v != u^ v^");
  }
  const Poly a = poly_gcd(field, u, uh);
  const Poly d = poly_gcd(field, v, vh);
  return {a, poly_divrem(field, u, a).first, poly_divrem(field, v, d).first, d};
}

bool in_S_m(const Field& field, const Quad& abcd, int m) {
  const auto& [a, b, c, d] = abcd;
  for (const Poly& p : abcd) {
    if (!p.is_monic() || p.degree() > m) return false;
  }
  return a.degree() + b.degree() + c.degree() + d.degree() == m && coprime(field, b, c);
}

bool in_Q_m(const Field& field, const Quad& uvuv, int m) {
  const auto& [u, v, uh, vh] = uvuv;
  for (const Poly& p : uvuv) {
    if (!p.is_monic() || p.degree() > m) return false;
  }
  if (u.degree() + v.degree() != m || uh.degree() + vh.degree() != m) return false;
  return poly_mul(field, u, v) == poly_mul(field, uh, vh);
}

BijectionReport bijection_check(const Field& field, int m, const Limits& limits) {
  const auto all = materialize(field, m);
  const std::uint64_t n = all.size();
  check_budget(BigInt(n) * n * n * n * 2, limits, "bijection check");
  struct Acc {
    BigInt s, q, fwd, bwd;
  };
  Acc acc = parallel_reduce(
      n, limits.threads, Acc{},
      [&](std::uint64_t lo, std::uint64_t hi) {
        Acc local;
        for (std::uint64_t i = lo; i < hi; ++i) {
          for (const Poly& p1 : all) {
            for (const Poly& p2 : all) {
              for (const Poly& p3 : all) {
                const Quad t{all[i], p1, p2, p3};
                if (in_S_m(field, t, m)) {
                  local.s += 1;
                  const Quad img = bijection_S_to_Q(field, t);
                  if (!in_Q_m(field, img, m) || bijection_Q_to_S(field, img) != t) local.fwd += 1;
                }
                if (in_Q_m(field, t, m)) {
                  local.q += 1;
                  const Quad pre = bijection_Q_to_S(field, t);
                  if (!in_S_m(field, pre, m) || bijection_S_to_Q(field, pre) != t) local.bwd += 1;
                }
              }
            }
          }
        }
        return local;
      },
      [](Acc& a, Acc&& b) {
        a.s += b.s;
        a.q += b.q;
        a.fwd += b.fwd;
        a.bwd += b.bwd;
      });
  return {acc.s, acc.q, acc.fwd, acc.bwd};
}

Octuple x_to_e(const Field& field, const Octuple& f) {
  auto mul = [&](int i, int j) {
    return poly_mul(field, f[static_cast<std::size_t>(i - 1)], f[static_cast<std::size_t>(j - 1)]);
  };
  return {mul(1, 2), mul(3, 4), mul(5, 6), mul(7, 8), mul(1, 3), mul(2, 4), mul(5, 7), mul(6, 8)};
}

bool in_S_star(const Field& field, const Quad& abcd, int n) {
  const auto& [a, b, c, d] = abcd;
  for (const Poly& p : abcd) {
    if (!p.is_monic() || p.degree() > n) return false;
  }
  if (a.degree() + b.degree() > n || c.degree() + d.degree() > n) return false;
  if (a.degree() + c.degree() > n || b.degree() + d.degree() > n) return false;
  return coprime(field, b, c);
}

bool in_E_star(const Field& field, const Octuple& e, int n) {
  const Quad first{e[0], e[1], e[2], e[3]};
  const Quad second{e[4], e[5], e[6], e[7]};
  if (!in_S_star(field, first, n) || !in_S_star(field, second, n)) return false;
  return poly_mul(field, e[0], e[1]) == poly_mul(field, e[4], e[5]) &&
         poly_mul(field, e[2], e[3]) == poly_mul(field, e[6], e[7]);
}

bool in_X_star(const Field& field, const Octuple& f, int n) {
  for (const Poly& p : f) {
    if (!p.is_monic() || p.degree() > n) return false;
  }
  auto deg = [&](std::initializer_list<int> idx) {
    int s = 0;
    for (int i : idx) s += f[static_cast<std::size_t>(i - 1)].degree();
    return s;
  };
  if (deg({1, 2, 3, 4}) > n || deg({5, 6, 7, 8}) > n || deg({1, 2, 5, 6}) > n || deg({3, 4, 7, 8}) > n ||
      deg({1, 3, 5, 7}) > n || deg({2, 4, 6, 8}) > n) {
    return false;
  }
  auto at = [&](int i) -> const Poly& { return f[static_cast<std::size_t>(i - 1)]; };
  auto mul = [&](int i, int j) { return poly_mul(field, at(i), at(j)); };
  return coprime(field, mul(3, 4), mul(5, 6)) && coprime(field, mul(2, 4), mul(5, 7)) && coprime(field, at(2), at(3)) &&
         coprime(field, at(6), at(7));
}

BigInt census_E_star(const Field& field, int n, const Limits& limits) {
  const auto all = materialize(field, n);
  const std::uint64_t sz = all.size();
  check_budget(BigInt(sz) * sz * sz * sz, limits, "E*_n census");
  // Group the elements of S*_n by (ab, cd); E*_n pairs up members of a group.
  std::map<std::pair<std::string, std::string>, BigInt> groups;
  for (const Poly& a : all) {
    for (const Poly& b : all) {
      for (const Poly& c : all) {
        for (const Poly& d : all) {
          if (!in_S_star(field, {a, b, c, d}, n)) continue;
          groups[{format_poly(poly_mul(field, a, b)), format_poly(poly_mul(field, c, d))}] += 1;
        }
      }
    }
  }
  BigInt total = 0;
  for (const auto& [key, count] : groups) total += count * count;
  return total;
}

namespace {

// Calls visit on every octuple of P_n^8 whose six block degrees stay within n.
void for_each_x_candidate(const Field& field, int n, const std::function<void(const Octuple&)>& visit) {
  std::vector<std::vector<Poly>> by_degree(static_cast<std::size_t>(n) + 1);
  for (int d = 0; d <= n; ++d) {
    for (const Poly& p : enumerate_monic(field, d)) by_degree[static_cast<std::size_t>(d)].push_back(p);
  }
  std::array<int, 8> k{};
  Octuple f;
  auto blocks_ok = [&](int filled) {
    static constexpr std::array<std::array<int, 4>, 6> kBlocks{
        {{0, 1, 2, 3}, {4, 5, 6, 7}, {0, 1, 4, 5}, {2, 3, 6, 7}, {0, 2, 4, 6}, {1, 3, 5, 7}}};
    for (const auto& blk : kBlocks) {
      int s = 0;
      for (int i : blk) {
        if (i < filled) s += k[static_cast<std::size_t>(i)];
      }
      if (s > n) return false;
    }
    return true;
  };
  std::function<void(int)> polys = [&](int i) {
    if (i == 8) {
      visit(f);
      return;
    }
    for (const Poly& p : by_degree[static_cast<std::size_t>(k[static_cast<std::size_t>(i)])]) {
      f[static_cast<std::size_t>(i)] = p;
      polys(i + 1);
    }
  };
  std::function<void(int)> degrees = [&](int i) {
    if (i == 8) {
      polys(0);
      return;
    }
    for (int d = 0; d <= n; ++d) {
      k[static_cast<std::size_t>(i)] = d;
      if (blocks_ok(i + 1)) degrees(i + 1);
    }
  };
  degrees(0);
}

}  // namespace

BigInt census_X_star(const Field& field, int n, const Limits& limits) {
  const BigInt sz = size_P(field.q(), n);
  check_budget(sz * sz * sz * sz * sz * sz * sz * sz, limits, "X*_n census");
  BigInt total = 0;
  for_each_x_candidate(field, n, [&](const Octuple& f) {
    if (in_X_star(field, f, n)) total += 1;
  });
  return total;
}

BigInt x_to_e_defects(const Field& field, int n, const Limits& limits) {
  const BigInt sz = size_P(field.q(), n);
  check_budget(sz * sz * sz * sz * sz * sz * sz * sz, limits, "X*_n to E*_n map");
  BigInt defects = 0;
  std::set<std::vector<std::string>> images;
  BigInt members = 0;
  for_each_x_candidate(field, n, [&](const Octuple& f) {
    if (!in_X_star(field, f, n)) return;
    members += 1;
    const Octuple e = x_to_e(field, f);
    if (!in_E_star(field, e, n)) defects += 1;
    std::vector<std::string> key;
    for (const Poly& p : e) key.push_back(format_poly(p));
    images.insert(std::move(key));
  });
  return defects + (members - images.size());
}

std::array<int, 8> lambda_base(int n) {
  const int b = (n + 2) / 4;
  return {b, b, b, n - 3 * b, b, n - 3 * b, n - 3 * b, 5 * b - n};
}

LambdaSolution lambda_solutions(int n, const std::array<int, 4>& a) {
  int l1 = 0;
  for (int v : a) l1 += std::abs(v);
  // sum |a_i| <= n/4 - 2, kept in integers.
  if (4 * l1 > n - 8) {
    throw std::invalid_argument("lambda_solutions: sum |a_i| = " + std::to_string(l1) + " exceeds n/4 - 2");
  }
  static constexpr int kLambda[4][8] = {{+1, -1, +1, -1, -1, +1, -1, +1},
                                        {+1, +1, -1, -1, -1, -1, +1, +1},
                                        {+1, -1, -1, +1, +1, -1, -1, +1},
                                        {+1, -1, -1, +1, -1, +1, +1, -1}};
  static constexpr int kSystem[4][8] = {
      {1, 1, 1, 1, 0, 0, 0, 0}, {0, 0, 0, 0, 1, 1, 1, 1}, {1, 1, 0, 0, 1, 1, 0, 0}, {1, 0, 1, 0, 1, 0, 1, 0}};
  LambdaSolution out;
  out.k = lambda_base(n);
  for (int r = 0; r < 4; ++r) {
    for (int j = 0; j < 8; ++j) out.k[static_cast<std::size_t>(j)] += kLambda[r][j] * a[static_cast<std::size_t>(r)];
  }
  out.in_range = std::all_of(out.k.begin(), out.k.end(), [&](int v) { return v >= 0 && v <= n; });
  out.satisfies_system = true;
  for (const auto& row : kSystem) {
    int s = 0;
    for (int j = 0; j < 8; ++j) s += row[j] * out.k[static_cast<std::size_t>(j)];
    out.satisfies_system = out.satisfies_system && s == n;
  }
  return out;
}

bool MarkovCheck::holds() const { return static_cast<double>(empirical) <= bound; }

MarkovCheck markov_check(const Field& field, int m, double eps, const Limits& limits) {
  if (m < 1) throw std::invalid_argument("markov_check needs m >= 1");
  const auto hist = phi_histogram(field, m, limits);
  const double threshold = std::pow(static_cast<double>(m), 1.0 + eps);
  BigInt hits = 0;
  BigInt total = 0;
  for (const auto& [v, c] : hist) {
    total += c;
    if (static_cast<double>(v) >= threshold) hits += c;
  }
  return {Rational(hits, total), static_cast<double>(m + 1) / threshold};
}

}  // namespace polycount
