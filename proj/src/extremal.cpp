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

#include "polycount/extremal.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <set>
#include <sstream>
#include <stdexcept>

#include "polycount/divisors.hpp"
#include "polycount/enumerate.hpp"
#include "polycount/irred.hpp"
#include "polycount/parallel.hpp"

namespace polycount {

namespace {

struct Best {
  BigInt value = -1;
  std::set<Profile> witnesses;

  void offer(const BigInt& v, Profile p) {
    if (v > value) {
      value = v;
      witnesses.clear();
    }
    if (v == value) witnesses.insert(std::move(p));
  }
};

void merge_best(Best& into, Best&& from) {
  if (from.value > into.value) {
    into = std::move(from);
  } else if (from.value == into.value) {
    into.witnesses.merge(from.witnesses);
  }
}

ExtremalResult to_result(Best&& best) {
  ExtremalResult out;
  out.value = std::max(best.value, BigInt(0));
  out.witnesses.assign(best.witnesses.begin(), best.witnesses.end());
  return out;
}

// prod (r_j + 1) over R split into min(K, R) parts differing by at most one.
BigInt balanced_product(int total, std::int64_t slots) {
  if (total == 0) return 1;
  const int parts = static_cast<int>(std::min<std::int64_t>(slots, total));
  const int base = total / parts;
  const int extra = total % parts;
  BigInt out = 1;
  for (int j = 0; j < parts; ++j) out *= base + 1 + (j < extra ? 1 : 0);
  return out;
}

std::vector<int> balanced_list(int total, std::int64_t slots) {
  if (total == 0) return {};
  const int parts = static_cast<int>(std::min<std::int64_t>(slots, total));
  std::vector<int> out(static_cast<std::size_t>(parts), total / parts);
  for (int j = 0; j < total % parts; ++j) ++out[static_cast<std::size_t>(j)];
  return out;
}

struct DpOutcome {
  BigInt value;
  std::set<Profile> witnesses;
  std::uint64_t nodes = 0;
};

DpOutcome ordinary_dp(std::uint64_t q, int m, int max_degree) {
  DpOutcome out;
  const auto D = static_cast<std::size_t>(max_degree);
  const auto M = static_cast<std::size_t>(m);
  std::vector<std::int64_t> slots(D + 1, 0);
  for (std::size_t d = 1; d <= D; ++d) slots[d] = irreducible_slots(q, static_cast<int>(d));
  // best[d][b]: largest product using degrees 1..d with weight exactly b; 0 = unreachable.
  std::vector<std::vector<BigInt>> best(D + 1, std::vector<BigInt>(M + 1, BigInt(0)));
  best[0][0] = 1;
  for (std::size_t d = 1; d <= D; ++d) {
    for (std::size_t b = 0; b <= M; ++b) {
      for (std::size_t r = 0; r * d <= b; ++r) {
        ++out.nodes;
        const BigInt& prev = best[d - 1][b - r * d];
        if (prev == 0) continue;
        BigInt cand = prev * balanced_product(static_cast<int>(r), slots[d]);
        if (cand > best[d][b]) best[d][b] = std::move(cand);
      }
    }
  }
  out.value = best[D][M];

  Profile current;
  std::function<void(std::size_t, std::size_t)> walk = [&](std::size_t d, std::size_t b) {
    if (d == 0) {
      if (b == 0) {
        Profile p = current;
        p.normalize();
        out.witnesses.insert(std::move(p));
      }
      return;
    }
    for (std::size_t r = 0; r * d <= b; ++r) {
      const BigInt& prev = best[d - 1][b - r * d];
      if (prev == 0 || prev * balanced_product(static_cast<int>(r), slots[d]) != best[d][b]) continue;
      current.entries[static_cast<int>(d)] = balanced_list(static_cast<int>(r), slots[d]);
      walk(d - 1, b - r * d);
      current.entries.erase(static_cast<int>(d));
    }
  };
  walk(D, M);
  return out;
}

struct SlackSearch {
  std::uint64_t q;
  int n;
  bool widened;
  int max_degree;
  std::vector<std::int64_t> slots;
  Best best;
  std::uint64_t nodes = 0;
  std::uint64_t prunes = 0;

  void run() {
    slots.assign(static_cast<std::size_t>(max_degree) + 1, 0);
    for (int d = 1; d <= max_degree; ++d) slots[static_cast<std::size_t>(d)] = irreducible_slots(q, d);
    for (int rho = 0; rho <= 2 * n; ++rho) {
      Profile p;
      degree(p, rho, 1, 2 * n);
    }
  }

  std::vector<int> allowed(int rho, int d) const {
    const int base = rho / d;
    std::vector<int> vals;
    const int lo = widened ? base - 2 : base - 1;
    const int hi = widened ? base + 1 : base;
    for (int v = hi; v >= std::max(lo, 1); --v) vals.push_back(v);
    return vals;
  }

  void degree(Profile& p, int rho, int d, int remaining) {
    if (d > max_degree || remaining == 0) {
      finish(p, rho, remaining);
      return;
    }
    if (!widened && d > 1) {
      auto prev = p.entries.find(d - 1);
      const std::int64_t have = prev == p.entries.end() ? 0 : static_cast<std::int64_t>(prev->second.size());
      if (have < slots[static_cast<std::size_t>(d - 1)]) {
        ++prunes;
        finish(p, rho, remaining);
        return;
      }
    }
    const auto vals = allowed(rho, d);
    std::vector<int> list;
    fill(p, rho, d, remaining, vals, 0, list);
  }

  void fill(Profile& p, int rho, int d, int remaining, const std::vector<int>& vals, std::size_t vi,
            std::vector<int>& list) {
    if (vi == vals.size()) {
      if (list.empty()) {
        p.entries.erase(d);
      } else {
        p.entries[d] = list;
      }
      degree(p, rho, d + 1, remaining);
      p.entries.erase(d);
      return;
    }
    const int v = vals[vi];
    const std::int64_t room = slots[static_cast<std::size_t>(d)] - static_cast<std::int64_t>(list.size());
    const std::size_t mark = list.size();
    for (std::int64_t c = 0; c <= room && c * v * d <= remaining; ++c) {
      if (c > 0) list.push_back(v);
      fill(p, rho, d, remaining - static_cast<int>(c) * v * d, vals, vi + 1, list);
    }
    list.resize(mark);
  }

  void finish(const Profile& x_part, int rho, int remaining) {
    ++nodes;
    Profile p = x_part;
    p.r0 = remaining;
    const int base_lo = widened ? rho - 2 : rho - 1;
    const int base_hi = widened ? rho + 1 : rho;
    if (p.r0 < base_lo || p.r0 > base_hi) {
      ++prunes;
      return;
    }
    if (!widened) {
      if (p.rho_n() != rho || !check_structure(q, p, Mode::kSlack, 2 * n).all_hard()) {
        ++prunes;
        return;
      }
    }
    BigInt value = p.phi_n();
    best.offer(value, std::move(p));
  }
};

}  // namespace

ExtremalResult upsilon_bruteforce(const Field& field, int m, const Limits& limits) {
  if (m < 0) throw std::invalid_argument("upsilon_bruteforce needs m >= 0");
  const MonicRange range(field, m);
  check_budget(BigInt(range.size()) * (m > 0 ? 2 : 1), limits, "upsilon brute force");
  Best best = parallel_reduce(
      range.size(), limits.threads, Best{},
      [&](std::uint64_t lo, std::uint64_t hi) {
        Best local;
        Factorizer fac(field);
        for (std::uint64_t i = lo; i < hi; ++i) {
          const Factorization f = fac(range[i]);
          local.offer(phi(f), profile_of(f));
        }
        return local;
      },
      merge_best);
  ExtremalResult out = to_result(std::move(best));
  out.stats.nodes = range.size();
  if (m > 0) {
    const UptoRange lower(field, m - 1);
    out.stats.lower_degree_max = parallel_reduce(
        lower.size(), limits.threads, BigInt(0),
        [&](std::uint64_t lo, std::uint64_t hi) {
          BigInt local = 0;
          Factorizer fac(field);
          for (std::uint64_t i = lo; i < hi; ++i) local = std::max(local, phi(fac(lower[i])));
          return local;
        },
        [](BigInt& a, BigInt&& b) { a = std::max(a, b); });
    out.stats.nodes += lower.size();
  }
  return out;
}

ExtremalResult upsilon_profile_search(std::uint64_t q, int m) {
  if (m < 0) throw std::invalid_argument("upsilon_profile_search needs m >= 0");
  const int bound = m == 0 ? 0 : floor_log(q, m) + 1;
  DpOutcome main = ordinary_dp(q, m, bound);
  DpOutcome wide = ordinary_dp(q, m, bound + 1);
  ExtremalResult out;
  out.value = main.value;
  out.witnesses.assign(main.witnesses.begin(), main.witnesses.end());
  out.stats.nodes = main.nodes + wide.nodes;
  out.stats.widened_value = wide.value;
  out.stats.widened_witnesses = wide.witnesses.size();
  return out;
}

ExtremalResult upsilon_nn_bruteforce(const Field& field, int n, const Limits& limits) {
  if (n < 0) throw std::invalid_argument("upsilon_nn_bruteforce needs n >= 0");
  const UptoRange range(field, 2 * n);
  check_budget(range.size(), limits, "upsilon_nn brute force");
  Best best = parallel_reduce(
      range.size(), limits.threads, Best{},
      [&](std::uint64_t lo, std::uint64_t hi) {
        Best local;
        Factorizer fac(field);
        for (std::uint64_t i = lo; i < hi; ++i) {
          const Factorization f = fac(range[i]);
          local.offer(phi_constrained(f, n, n), profile_of(f, 2 * n - f.degree()));
        }
        return local;
      },
      merge_best);
  ExtremalResult out = to_result(std::move(best));
  out.stats.nodes = range.size();
  return out;
}

ExtremalResult upsilon_nn_profile_search(std::uint64_t q, int n) {
  if (n < 0) throw std::invalid_argument("upsilon_nn_profile_search needs n >= 0");
  const int bound = n == 0 ? 1 : floor_log(q, 2 * n) + 1;
  SlackSearch main{q, n, false, bound, {}, {}, 0, 0};
  main.run();
  SlackSearch wide{q, n, true, bound + 1, {}, {}, 0, 0};
  wide.run();
  ExtremalResult out = to_result(std::move(main.best));
  out.stats.nodes = main.nodes + wide.nodes;
  out.stats.prunes = main.prunes;
  out.stats.widened_value = std::max(wide.best.value, BigInt(0));
  out.stats.widened_witnesses = wide.best.witnesses.size();
  return out;
}

std::string StructureReport::to_string() const {
  std::ostringstream out;
  out << "no_hole=" << no_hole << " multiplicity_window=" << multiplicity_window << " degree_window=" << degree_window
      << " rho_window=" << rho_window << " rho=" << rho << " d_t=" << d_t << " d_t1=" << d_t1
      << " rho_predicted=" << rho_predicted << " rho_deviation=" << rho_deviation
      << " high_degree_outliers=" << high_degree_outliers;
  return out.str();
}

StructureReport check_structure(std::uint64_t q, const Profile& p, Mode mode, int size) {
  if (!p.fits(q)) throw std::invalid_argument("profile " + p.to_string() + " does not fit GF(q)");
  if (mode == Mode::kOrdinary && (p.r0 != 0 || p.x_weight() != size)) {
    throw std::invalid_argument("ordinary profile must have weight " + std::to_string(size) + " and no slack");
  }
  if (mode == Mode::kSlack && p.weight() != size) {
    throw std::invalid_argument("slack profile must have total weight " + std::to_string(size));
  }
  const bool slack = mode == Mode::kSlack;
  StructureReport rep;
  rep.mode = mode;
  rep.size = size;
  rep.rho = slack ? p.rho_n() : p.rho();
  rep.d_t = p.d_t();
  if (slack && rep.d_t == 0 && p.r0 > 0) rep.d_t = 1;
  auto count_at = [&](int d) {
    auto it = p.entries.find(d);
    return it == p.entries.end() ? std::int64_t{0} : static_cast<std::int64_t>(it->second.size());
  };
  if (rep.d_t == 0) {
    rep.d_t1 = 1;
  } else {
    rep.d_t1 = count_at(rep.d_t) < irreducible_slots(q, rep.d_t) ? rep.d_t : rep.d_t + 1;
  }

  // Multiplicities at degree d, padded with zeros below d_t; the slack
  // joins degree 1.
  auto group = [&](int d) {
    std::vector<int> vals;
    auto it = p.entries.find(d);
    if (it != p.entries.end()) vals = it->second;
    if (d < rep.d_t) {
      const auto slots = irreducible_slots(q, d);
      while (static_cast<std::int64_t>(vals.size()) < slots) vals.push_back(0);
    }
    if (slack && d == 1) vals.push_back(p.r0);
    return vals;
  };

  rep.no_hole = true;
  int running_min = std::numeric_limits<int>::max();
  for (int d = 1; d <= rep.d_t; ++d) {
    const auto vals = group(d);
    for (int r : vals) {
      if (r > running_min) rep.no_hole = false;
    }
    for (int r : vals) running_min = std::min(running_min, r);
  }

  auto in_window = [&](int r, int d) {
    const int base = rep.rho / d;
    return r == base || r == base - 1;
  };
  rep.multiplicity_window = in_window(0, rep.d_t1);
  for (int d = 1; d <= rep.d_t; ++d) {
    for (int r : group(d)) rep.multiplicity_window = rep.multiplicity_window && in_window(r, d);
  }

  if (size == 0) {
    rep.degree_window = true;
  } else {
    const BigInt s = size;
    rep.degree_window = 8 * ipow(q, static_cast<unsigned>(rep.d_t)) > s && rep.d_t <= rep.d_t1 &&
                        ipow(q, static_cast<unsigned>(rep.d_t1 - 1)) <= s;
  }
  rep.rho_window = rep.d_t <= rep.rho && rep.rho <= 2 * rep.d_t1 - 1;

  if (size >= 1) {
    const double lq = std::log(static_cast<double>(size)) / std::log(static_cast<double>(q));
    rep.rho_predicted = lq / std::log(2.0);
    rep.rho_deviation = rep.rho - rep.rho_predicted;
    const int fl = floor_log(q, size);
    if (fl >= 1) {
      auto formula = [&](double x) {
        if (x <= 0) return std::numeric_limits<double>::infinity();
        return std::floor(1.0 / (std::exp2(x / fl) - 1.0));
      };
      for (const auto& [d, list] : p.entries) {
        const double lo = formula(d + StructureReport::kHighDegreeSlack);
        const double hi = formula(d - StructureReport::kHighDegreeSlack);
        for (int r : list) {
          if (r < lo || r > hi) ++rep.high_degree_outliers;
        }
      }
    }
  }
  return rep;
}

LowerBoundConstruction lower_bound_construction(std::uint64_t q, int n) {
  if (n < 1) throw std::invalid_argument("lower_bound_construction needs n >= 1");
  LowerBoundConstruction out;
  int d = 1;
  while (d * count_irreducibles(q, d) < 2 * n) ++d;
  out.d = d;
  const int c = ceil_log(q, n);
  out.d_in_range = d == c + 1 || d == c + 2;
  out.w = n / d;
  out.bound = binomial(static_cast<unsigned>(2 * out.w), static_cast<unsigned>(out.w));
  if (out.w > 0) out.witness.entries[d] = std::vector<int>(static_cast<std::size_t>(2 * out.w), 1);
  out.witness.r0 = 2 * n - 2 * out.w * d;
  out.witness_phi_n = out.witness.phi_n();
  return out;
}

UpperBoundChain upper_bound_chain(std::uint64_t q, int m) {
  if (m < 0 || static_cast<std::uint64_t>(m) < q) {
    throw std::invalid_argument("upper bound needs m >= q");
  }
  UpperBoundChain out;
  const long double lnq = std::log(static_cast<long double>(q));
  const long double lq = std::log(static_cast<long double>(m)) / lnq;
  const long double llq = std::log(lq) / lnq;
  out.epsilon = static_cast<double>(2 * llq / lq);
  out.delta = std::max(0, static_cast<int>(std::floor((1 - 2 * llq / lq) * lq)));
  const int fl = floor_log(q, m);
  const long double qd = std::pow(static_cast<long double>(q), out.delta);
  out.w1 = static_cast<double>(2.0L * (fl + 1) * 4.0L * qd / (out.delta + 1));
  out.w2 = static_cast<double>(static_cast<long double>(m) / (out.delta + 1));
  out.bound = out.w1 + out.w2;
  return out;
}

double log2_big(const BigInt& x) {
  if (x <= 0) throw std::domain_error("log2 of a non-positive number");
  const auto bits = boost::multiprecision::msb(x);
  if (bits < 60) return std::log2(static_cast<double>(x));
  const unsigned shift = static_cast<unsigned>(bits) - 60;
  const BigInt top = x >> shift;
  return std::log2(static_cast<double>(top)) + shift;
}

}  // namespace polycount
