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

// Acceptance run: one PASS/FAIL line per criterion; exit status 1 if any fail.

#include <cmath>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>

#include "oracles.hpp"
#include "polycount/cli.hpp"
#include "polycount/divisors.hpp"
#include "polycount/extremal.hpp"
#include "polycount/irred.hpp"
#include "polycount/moments.hpp"
#include "polycount/moves.hpp"
#include "polycount/tail.hpp"

using namespace polycount;

namespace {

struct Outcome {
  bool ok = true;
  std::size_t cases = 0;
  std::vector<std::string> failures;

  void expect(bool cond, const std::string& what) {
    ++cases;
    if (!cond) {
      ok = false;
      failures.push_back(what);
    }
  }
};

std::string tag(std::uint64_t q, const char* var, int v) {
  return "q=" + std::to_string(q) + " " + var + "=" + std::to_string(v);
}

Field field(std::uint32_t q) { return q == 4 ? Field::make(2, 2) : Field::make(q); }

Rational binom_r(int n, int k) { return Rational(binomial(n, k)); }

Outcome irreducible_counts() {
  Outcome o;
  for (std::uint32_t q : {2U, 3U, 4U}) {
    for (int d = 1; d <= 8; ++d) {
      o.expect(count_irreducibles(q, d) == oracle::irreducibles_by_sieve(field(q), d).size(), tag(q, "d", d));
    }
  }
  return o;
}

Outcome moments() {
  Outcome o;
  for (std::uint32_t q : {2U, 3U}) {
    for (int m = 0; m <= (q == 2 ? 10 : 6); ++m) {
      Rational sum = 0;
      Rational sq = 0;
      for (const auto& [s, spectrum] : oracle::divisor_spectra(field(q), m)) {
        const BigInt phi = oracle::total(spectrum);
        sum += phi;
        sq += phi * phi;
      }
      const Rational size = Rational(ipow(q, m));
      const Rational mean = sum / size;
      const Rational var = sq / size - mean * mean;
      o.expect(mean == m + 1 && var == Rational(q - 1, q) * binom_r(m + 1, 3), tag(q, "m", m));
    }
  }
  return o;
}

Outcome s_m_sizes() {
  Outcome o;
  for (std::uint32_t q : {2U, 3U}) {
    const Field f = field(q);
    for (int m = 0; m <= 4; ++m) {
      // (b, c) coprime by direct divisor search; (a, d) with deg a + deg d = k number (k + 1) q^k.
      BigInt census = 0;
      const auto all = oracle::upto(f, m);
      for (const Poly& b : all) {
        for (const Poly& c : all) {
          const int k = m - b.degree() - c.degree();
          if (k >= 0 && oracle::coprime(f, b, c)) census += (k + 1) * ipow(q, k);
        }
      }
      const Rational closed = Rational(ipow(q, m)) * (Rational(q - 1, q) * binom_r(m + 1, 3) + (m + 1) * (m + 1));
      o.expect(Rational(census) == closed && census_S_m(f, m) == census, tag(q, "m", m));
    }
  }
  return o;
}

Outcome s_star_sizes() {
  Outcome o;
  for (std::uint32_t q : {2U, 3U}) {
    const Field f = field(q);
    for (int n = 0; n <= 4; ++n) {
      // Sum of Phi_n(u v) over P_n^2 is the number of ordered pairs of factorizations of each product.
      BigInt sum = 0;
      BigInt pairs = 0;
      for (const auto& [s, c] : oracle::constrained_counts(f, n)) {
        sum += c * c;
        pairs += c;
      }
      const bool ok = sum == size_S_star(q, n) && census_S_star(f, n) == sum &&
                      Rational(sum, pairs) == expectation_phi_nn_closed(q, n);
      o.expect(ok, tag(q, "n", n));
    }
  }
  o.expect(size_S_star(2, 2) == 127 && expectation_phi_nn(2, 2) == Rational(127, 49), "q=2 n=2 example");
  return o;
}

Outcome bijections() {
  Outcome o;
  const Field f = field(2);
  for (int m = 0; m <= 3; ++m) {
    const BijectionReport r = bijection_check(f, m);
    o.expect(r.ok() && r.q_size == r.s_size && r.s_size == census_Q_m_literal(f, m), tag(2, "m", m));
  }
  for (int n = 0; n <= 1; ++n) {
    o.expect(census_E_star(f, n) == census_X_star(f, n) && x_to_e_defects(f, n) == 0, tag(2, "n", n));
  }
  return o;
}

struct Witnessed {
  std::uint64_t q;
  Mode mode;
  int size;
  ExtremalResult brute;
};

const std::vector<Witnessed>& witnessed() {
  static const std::vector<Witnessed> all = [] {
    std::vector<Witnessed> w;
    for (std::uint32_t q : {2U, 3U}) {
      for (int m = 1; m <= (q == 2 ? 12 : 8); ++m)
        w.push_back({q, Mode::kOrdinary, m, upsilon_bruteforce(field(q), m)});
      for (int n = 1; n <= (q == 2 ? 5 : 3); ++n)
        w.push_back({q, Mode::kSlack, 2 * n, upsilon_nn_bruteforce(field(q), n)});
    }
    return w;
  }();
  return all;
}

std::string label(const Witnessed& w) {
  return w.mode == Mode::kOrdinary ? tag(w.q, "m", w.size) : tag(w.q, "n", w.size / 2);
}

Outcome extremal() {
  Outcome o;
  for (const Witnessed& w : witnessed()) {
    const ExtremalResult s =
        w.mode == Mode::kOrdinary ? upsilon_profile_search(w.q, w.size) : upsilon_nn_profile_search(w.q, w.size / 2);
    o.expect(s.value == w.brute.value && s.witnesses == w.brute.witnesses, label(w));
  }
  o.expect(upsilon_bruteforce(field(2), 3).value == 6, "q=2 m=3 regression");
  o.expect(upsilon_nn_bruteforce(field(2), 2).value == 4, "q=2 n=2 regression");
  return o;
}

Outcome structure() {
  Outcome o;
  for (const Witnessed& w : witnessed()) {
    for (const Profile& p : w.brute.witnesses) {
      o.expect(check_structure(w.q, p, w.mode, w.size).all_hard(), label(w) + " " + p.to_string());
    }
  }
  return o;
}

Outcome local_optimality() {
  Outcome o;
  for (const Witnessed& w : witnessed()) {
    for (const Profile& p : w.brute.witnesses) {
      for (const MoveSpec& mv : candidate_moves(w.q, p, w.mode, w.size)) {
        if (const auto r = try_apply_move(w.q, p, mv, w.mode, w.size)) {
          o.expect(r->ratio <= 1, label(w) + " " + p.to_string() + " " + mv.to_string());
        }
      }
    }
  }
  for (std::uint32_t q : {2U, 3U}) {
    for (int m = 1; m <= (q == 2 ? 12 : 8); ++m) {
      for (const Profile& p : enumerate_profiles(q, m)) {
        for (const ViolationWitness& vw : violation_moves(q, p)) {
          Profile cur = p;
          Rational ratio = 1;
          for (const MoveSpec& mv : vw.moves) {
            const MoveOutcome r = apply_move(q, cur, mv, Mode::kOrdinary, m);
            ratio *= r.ratio;
            cur = r.profile;
          }
          o.expect(ratio > 1, tag(q, "m", m) + " " + p.to_string());
        }
      }
    }
  }
  return o;
}

Outcome sandwich() {
  Outcome o;
  for (const Witnessed& w : witnessed()) {
    if (w.mode == Mode::kSlack) {
      const LowerBoundConstruction lb = lower_bound_construction(w.q, w.size / 2);
      o.expect(lb.bound == binomial(2 * lb.w, lb.w) && lb.bound <= w.brute.value, label(w));
    } else if (w.size >= static_cast<int>(w.q)) {
      o.expect(log2_big(w.brute.value) <= upper_bound_log2_upsilon(w.q, w.size), label(w));
    }
  }
  return o;
}

Outcome tail() {
  Outcome o;
  for (int m = 1; m <= 16; ++m)
    o.expect(g_series(2, m, 1) == 1 && g_series(3, m, 1) == 1, "G(1) m=" + std::to_string(m));
  for (std::uint32_t q : {2U, 3U}) {
    for (int m = 1; m <= 8; ++m) {
      const OmegaDistribution d = omega_distribution(field(q), m);
      for (const Rational& a : {Rational(1, 2), Rational(1), Rational(2)}) {
        o.expect(d.moment(a) == moment_alpha(q, m, a), tag(q, "m", m) + " alpha=" + a.str());
      }
      if (m < 2) continue;
      for (double c : {1.1, 1.25, 1.5, 1.75, 2.5}) {
        if (c >= q) continue;
        const ChernoffTail t = chernoff_tail(q, m, c);
        const double actual = static_cast<double>(d.tail(c * std::log(static_cast<double>(m))));
        o.expect(t.at_c + 1e-9 >= actual && t.grid_best + 1e-9 >= actual, tag(q, "m", m) + " c=" + std::to_string(c));
      }
    }
  }
  return o;
}

Outcome slack_formula() {
  Outcome o;
  // Divisors y^j p^i of y^{r0} p^r, counted by total degree.
  const auto census = [](int r0, int r, int d) {
    std::vector<BigInt> n(static_cast<std::size_t>(r0 + r * d + 1), 0);
    for (int j = 0; j <= r0; ++j) {
      for (int i = 0; i <= r; ++i) n[static_cast<std::size_t>(j + i * d)] += 1;
    }
    return n;
  };
  for (int r0 = 0; r0 <= 5; ++r0) {
    for (int r = 0; r <= 5; ++r) {
      for (int d = 1; d <= 4; ++d) {
        const auto n = census(r0, r, d);
        const DegMult block{d, r};
        const DegreeSpectrum spectrum = degree_spectrum(std::span<const DegMult>(&block, r ? 1 : 0), r0);
        bool ok = spectrum == n;
        for (int k = 0; k <= r0 + r * d; ++k)
          ok = ok && slack_divisor_count(r0, r, d, k) == n[static_cast<std::size_t>(k)];
        o.expect(ok, "r0=" + std::to_string(r0) + " r=" + std::to_string(r) + " d=" + std::to_string(d));
      }
    }
  }
  // Two blocks: the spectrum is the convolution of single-block counts.
  for (int r1 = 1; r1 <= 5; ++r1) {
    for (int d1 = 1; d1 <= 4; ++d1) {
      for (int r2 = 1; r2 <= 5; ++r2) {
        for (int d2 = d1 + 1; d2 <= 4; ++d2) {
          const int r0 = (r1 + r2) % 6;
          const std::vector<DegMult> shape{{d1, r1}, {d2, r2}};
          const DegreeSpectrum spectrum = degree_spectrum(shape, r0);
          std::vector<BigInt> conv(static_cast<std::size_t>(r0 + r1 * d1 + r2 * d2 + 1), 0);
          for (int a = 0; a <= r0 + r1 * d1; ++a) {
            for (int b = 0; b <= r2 * d2; ++b) {
              conv[static_cast<std::size_t>(a + b)] +=
                  slack_divisor_count(r0, r1, d1, a) * slack_divisor_count(0, r2, d2, b);
            }
          }
          o.expect(spectrum == conv, "two blocks r0=" + std::to_string(r0));
        }
      }
    }
  }
  std::map<std::pair<std::uint32_t, int>, std::map<oracle::Key, BigInt>> phi_n;
  std::mt19937_64 rng(20240601);
  for (int i = 0; i < 500; ++i) {
    const std::uint32_t q = rng() % 2 ? 3 : 2;
    const int n = 1 + static_cast<int>(rng() % 5);
    auto& counts = phi_n[{q, n}];
    if (counts.empty()) counts = oracle::constrained_counts(field(q), n);
    const UptoRange range(field(q), 2 * n);
    const Poly s = range[rng() % range.size()];
    const Factorization fac = factorize(field(q), s);
    std::vector<std::size_t> b;
    for (std::size_t j = 0; j < fac.factors.size(); ++j) {
      if (rng() % 2) b.push_back(j);
    }
    const auto it = counts.find(s.coeffs());
    const BigInt expected = it == counts.end() ? BigInt(0) : it->second;
    o.expect(phi_n_by_split(fac, n, b) == expected, tag(q, "n", n) + " s=" + format_poly(s));
  }
  return o;
}

std::string verify_all(unsigned threads, const std::string& output) {
  RunConfig c;
  c.command = "verify-all";
  c.threads = threads;
  c.output = output;
  std::ostringstream out;
  std::ostringstream err;
  const int code = run(c, out, err);
  return std::to_string(code) + "\n" + out.str();
}

Outcome determinism() {
  Outcome o;
  for (const char* format : {"csv", "json"}) {
    const std::string first = verify_all(1, format);
    o.expect(first.rfind("0\n", 0) == 0, std::string(format) + " exit status");
    o.expect(verify_all(1, format) == first, std::string(format) + " rerun");
    o.expect(verify_all(4, format) == first, std::string(format) + " threads=4");
  }
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"irreducible counts", irreducible_counts},
      {"divisor-count mean and variance", moments},
      {"|S_m| census", s_m_sizes},
      {"|S*_n| and constrained divisor sums", s_star_sizes},
      {"bijections", bijections},
      {"extremal exactness", extremal},
      {"witness structure", structure},
      {"local optimality", local_optimality},
      {"bound sandwich", sandwich},
      {"omega moments and Chernoff tail", tail},
      {"slack divisor formula", slack_formula},
      {"determinism", determinism},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o.ok = false;
      o.failures.push_back(std::string("exception: ") + e.what());
    }
    std::string detail = std::to_string(o.cases) + " cases";
    if (!o.ok) {
      detail = std::to_string(o.failures.size()) + " failures: " + o.failures.front();
      ++failed;
    }
    std::cout << "criterion " << i + 1 << " (" << criteria[i].first << "): " << (o.ok ? "PASS" : "FAIL") << " - "
              << detail << std::endl;
  }
  return failed ? 1 : 0;
}
