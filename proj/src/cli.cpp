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

#include "polycount/cli.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <iomanip>
#include <map>
#include <ostream>
#include <random>
#include <sstream>
#include <stdexcept>

#include "json.hpp"
#include "polycount/divisors.hpp"
#include "polycount/enumerate.hpp"
#include "polycount/extremal.hpp"
#include "polycount/field.hpp"
#include "polycount/irred.hpp"
#include "polycount/moments.hpp"
#include "polycount/moves.hpp"
#include "polycount/poly.hpp"
#include "polycount/profile.hpp"
#include "polycount/tail.hpp"

namespace polycount {

namespace {

using Json = nlohmann::ordered_json;

class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

std::string str(const BigInt& v) { return v.str(); }
std::string str(const Rational& v) { return v.str(); }

std::string real(double v) {
  std::ostringstream os;
  os << std::setprecision(12) << v;
  return os.str();
}

// Accepts "a", "a/b" and decimal "x.y".
Rational parse_rational(const std::string& text) {
  const auto dot = text.find('.');
  if (dot == std::string::npos) return Rational(text);
  const std::string frac = text.substr(dot + 1);
  const std::string whole = text.substr(0, dot);
  if (frac.empty() || frac.find_first_not_of("0123456789") != std::string::npos) {
    throw UsageError("malformed rational '" + text + "'");
  }
  const bool neg = !whole.empty() && whole[0] == '-';
  const BigInt w = BigInt((whole.empty() || whole == "-") ? "0" : whole);
  const BigInt scale = ipow(10, static_cast<unsigned>(frac.size()));
  Rational r(BigInt(frac), scale);
  return neg ? Rational(w) - r : Rational(w) + r;
}

template <class T>
T need(const std::optional<T>& v, const char* flag) {
  if (!v) throw UsageError(std::string("missing required flag ") + flag);
  return *v;
}

int need_nonneg(const std::optional<int>& v, const char* flag) {
  const int x = need(v, flag);
  if (x < 0) throw UsageError(std::string(flag) + " must be >= 0");
  return x;
}

std::string cell_text(const Json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (!v.is_array()) return v.dump();
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ";" : "") + cell_text(v[i]);
  return s;
}

std::string csv_cell(const Json& v) {
  const std::string s = cell_text(v);
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char ch : s) q += ch == '"' ? std::string("\"\"") : std::string(1, ch);
  return q + "\"";
}

void write_table(std::ostream& out, const std::vector<std::string>& keys, const std::vector<const Json*>& rows) {
  for (std::size_t i = 0; i < keys.size(); ++i) out << (i ? "," : "") << keys[i];
  out << "\n";
  for (const Json* row : rows) {
    for (std::size_t i = 0; i < keys.size(); ++i) {
      out << (i ? "," : "");
      if (row->contains(keys[i])) out << csv_cell((*row)[keys[i]]);
    }
    out << "\n";
  }
}

// Summary fields as one row, then the "rows" table after a blank line.
void write_csv(std::ostream& out, const Json& doc) {
  std::vector<std::string> keys;
  for (const auto& [k, v] : doc.items()) {
    if (k != "rows") keys.push_back(k);
  }
  write_table(out, keys, {&doc});
  if (!doc.contains("rows") || doc["rows"].empty()) return;
  std::vector<std::string> row_keys;
  std::vector<const Json*> rows;
  for (const Json& r : doc["rows"]) {
    for (const auto& [k, v] : r.items()) {
      if (std::find(row_keys.begin(), row_keys.end(), k) == row_keys.end()) row_keys.push_back(k);
    }
    rows.push_back(&r);
  }
  out << "\n";
  write_table(out, row_keys, rows);
}

struct Context {
  const RunConfig& config;
  Field field;
  Limits limits;
  bool mismatch = false;
};

Json profiles_json(const std::vector<Profile>& ps) {
  Json a = Json::array();
  for (const Profile& p : ps) a.push_back(p.to_string());
  return a;
}

Json factorization_rows(const Factorization& f) {
  Json rows = Json::array();
  for (const Factor& fac : f.factors) {
    rows.push_back({{"factor", format_poly(fac.p)}, {"degree", fac.degree}, {"mult", fac.mult}});
  }
  return rows;
}

Poly poly_flag(const Context& ctx) {
  const Poly p = parse_poly(ctx.field, need(ctx.config.poly, "--poly"));
  if (!p.is_monic()) throw UsageError("--poly must be monic and nonzero");
  return p;
}

Json cmd_irred_count(Context& ctx) {
  const int d = need_nonneg(ctx.config.d, "--d");
  Json rows = Json::array();
  for (int k = 1; k <= d; ++k) rows.push_back({{"d", k}, {"count", str(count_irreducibles(ctx.field.q(), k))}});
  return {{"field", ctx.field.to_string()}, {"d", d}, {"rows", rows}};
}

Json cmd_irred_list(Context& ctx) {
  const int d = need_nonneg(ctx.config.d, "--d");
  check_budget(ipow(ctx.field.q(), static_cast<unsigned>(d)), ctx.limits, "irred-list");
  Json rows = Json::array();
  for (const Poly& p : enumerate_irreducibles(ctx.field, d)) {
    rows.push_back({{"poly", format_poly(p)}, {"pretty", pretty_poly(p)}});
  }
  return {{"field", ctx.field.to_string()}, {"d", d}, {"count", std::to_string(rows.size())}, {"rows", rows}};
}

Json cmd_factor(Context& ctx) {
  const Poly s = poly_flag(ctx);
  const Factorization f = factorize(ctx.field, s);
  const bool irreducible = f.factors.size() == 1 && f.factors[0].mult == 1;
  return {
      {"poly", format_poly(s)}, {"degree", s.degree()}, {"irreducible", irreducible}, {"rows", factorization_rows(f)}};
}

Json cmd_phi(Context& ctx) {
  const Poly s = poly_flag(ctx);
  const Factorization f = factorize(ctx.field, s);
  return {{"poly", format_poly(s)}, {"phi", str(phi(f))}, {"omega", omega(f)}, {"profile", profile_of(f).to_string()}};
}

Json cmd_phi_nn(Context& ctx) {
  const Poly s = poly_flag(ctx);
  const int n = need_nonneg(ctx.config.n, "--n");
  const Factorization f = factorize(ctx.field, s);
  return {{"poly", format_poly(s)},
          {"n", n},
          {"phi_n", str(phi_constrained(f, n, n))},
          {"phi", str(phi(f))},
          {"profile", profile_of(f, 2 * n - s.degree()).to_string()}};
}

Json cmd_spectrum(Context& ctx) {
  const Poly s = poly_flag(ctx);
  const int r0 = ctx.config.r0.value_or(0);
  if (r0 < 0) throw UsageError("--r0 must be >= 0");
  const DegreeSpectrum spectrum = degree_spectrum(factorize(ctx.field, s), r0);
  Json rows = Json::array();
  BigInt total = 0;
  for (std::size_t k = 0; k < spectrum.size(); ++k) {
    rows.push_back({{"k", k}, {"count", str(spectrum[k])}});
    total += spectrum[k];
  }
  return {{"poly", format_poly(s)}, {"r0", r0}, {"total", str(total)}, {"rows", rows}};
}

Json extremal_doc(Context& ctx, const ExtremalResult& search, const std::optional<ExtremalResult>& brute,
                  const char* size_key, int size) {
  Json doc = {{size_key, size},
              {"value", str(search.value)},
              {"witnesses", profiles_json(search.witnesses)},
              {"nodes", search.stats.nodes},
              {"prunes", search.stats.prunes}};
  if (search.stats.widened_value) doc["widened_value"] = str(*search.stats.widened_value);
  if (brute) {
    const bool same = brute->value == search.value && brute->witnesses == search.witnesses;
    doc["bruteforce_value"] = str(brute->value);
    doc["match"] = same;
    if (!same) ctx.mismatch = true;
  } else {
    doc["bruteforce_value"] = "skipped";
  }
  return doc;
}

template <class F>
auto within_budget(F&& f) -> std::optional<decltype(f())> {
  try {
    return f();
  } catch (const BudgetExceeded&) {
    return std::nullopt;
  }
}

Json cmd_upsilon(Context& ctx) {
  const int m = need_nonneg(ctx.config.m, "--m");
  const ExtremalResult search = upsilon_profile_search(ctx.field.q(), m);
  const auto brute = within_budget([&] { return upsilon_bruteforce(ctx.field, m, ctx.limits); });
  return extremal_doc(ctx, search, brute, "m", m);
}

Json cmd_upsilon_nn(Context& ctx) {
  const int n = need_nonneg(ctx.config.n, "--n");
  const ExtremalResult search = upsilon_nn_profile_search(ctx.field.q(), n);
  const auto brute = within_budget([&] { return upsilon_nn_bruteforce(ctx.field, n, ctx.limits); });
  return extremal_doc(ctx, search, brute, "n", n);
}

struct ModeSize {
  Mode mode;
  int size;
};

ModeSize mode_size(const RunConfig& config) {
  if (config.n && config.m) throw UsageError("give either --m (ordinary) or --n (slack), not both");
  if (config.n) return {Mode::kSlack, 2 * need_nonneg(config.n, "--n")};
  return {Mode::kOrdinary, need_nonneg(config.m, "--m or --n")};
}

Json cmd_check_structure(Context& ctx) {
  const Profile p = Profile::parse(need(ctx.config.profile, "--profile"));
  const ModeSize ms = mode_size(ctx.config);
  const StructureReport r = check_structure(ctx.field.q(), p, ms.mode, ms.size);
  return {{"profile", p.to_string()},
          {"mode", ms.mode == Mode::kSlack ? "slack" : "ordinary"},
          {"size", r.size},
          {"rho", r.rho},
          {"d_t", r.d_t},
          {"d_t1", r.d_t1},
          {"no_hole", r.no_hole},
          {"multiplicity_window", r.multiplicity_window},
          {"degree_window", r.degree_window},
          {"rho_window", r.rho_window},
          {"all_hard", r.all_hard()},
          {"rho_predicted", real(r.rho_predicted)},
          {"rho_deviation", real(r.rho_deviation)},
          {"high_degree_outliers", r.high_degree_outliers}};
}

const char* violation_name(Violation v) {
  switch (v) {
    case Violation::kNoHole:
      return "no-hole";
    case Violation::kWindowLeft:
      return "window-left";
    case Violation::kWindowRight:
      return "window-right";
  }
  return "?";
}

Json cmd_moves(Context& ctx) {
  const Profile p = Profile::parse(need(ctx.config.profile, "--profile"));
  const ModeSize ms = mode_size(ctx.config);
  const std::uint64_t q = ctx.field.q();
  Json rows = Json::array();
  bool improvable = false;
  for (const MoveSpec& mv : candidate_moves(q, p, ms.mode, ms.size)) {
    const auto o = try_apply_move(q, p, mv, ms.mode, ms.size);
    if (!o) continue;
    improvable = improvable || o->ratio > 1;
    rows.push_back({{"source", "candidate"},
                    {"move", mv.to_string()},
                    {"after", o->profile.to_string()},
                    {"ratio", str(o->ratio)}});
  }
  if (ms.mode == Mode::kOrdinary) {
    for (const ViolationWitness& vw : violation_moves(q, p)) {
      Profile cur = p;
      Rational ratio = 1;
      std::string seq;
      for (const MoveSpec& mv : vw.moves) {
        const MoveOutcome o = apply_move(q, cur, mv, ms.mode, ms.size);
        ratio *= o.ratio;
        cur = o.profile;
        seq += (seq.empty() ? "" : " then ") + mv.to_string();
      }
      rows.push_back(
          {{"source", violation_name(vw.violation)}, {"move", seq}, {"after", cur.to_string()}, {"ratio", str(ratio)}});
    }
  }
  return {{"profile", p.to_string()},
          {"mode", ms.mode == Mode::kSlack ? "slack" : "ordinary"},
          {"phi", str(ms.mode == Mode::kSlack ? p.phi_n() : p.phi())},
          {"improvable", improvable},
          {"rows", rows}};
}

Json cmd_lower_bound(Context& ctx) {
  const int n = need_nonneg(ctx.config.n, "--n");
  const LowerBoundConstruction lb = lower_bound_construction(ctx.field.q(), n);
  const ExtremalResult ex = upsilon_nn_profile_search(ctx.field.q(), n);
  const bool holds = lb.bound <= ex.value && lb.witness_phi_n >= lb.bound;
  if (!holds) ctx.mismatch = true;
  return {{"n", n},
          {"d", lb.d},
          {"w", lb.w},
          {"bound", str(lb.bound)},
          {"witness", lb.witness.to_string()},
          {"witness_phi_n", str(lb.witness_phi_n)},
          {"d_in_range", lb.d_in_range},
          {"upsilon_nn", str(ex.value)},
          {"holds", holds}};
}

Json cmd_upper_bound(Context& ctx) {
  const int m = need_nonneg(ctx.config.m, "--m");
  const UpperBoundChain ub = upper_bound_chain(ctx.field.q(), m);
  const double lhs = log2_big(upsilon_profile_search(ctx.field.q(), m).value);
  const bool holds = lhs <= ub.bound;
  if (!holds) ctx.mismatch = true;
  return {{"m", m},
          {"epsilon", real(ub.epsilon)},
          {"delta", ub.delta},
          {"w1", real(ub.w1)},
          {"w2", real(ub.w2)},
          {"bound", real(ub.bound)},
          {"log2_upsilon", real(lhs)},
          {"holds", holds}};
}

Json moment_json(const std::string& prefix, const MomentReport& r) {
  return {{prefix + "_expectation", str(r.expectation)},
          {prefix + "_second_moment", str(r.second_moment)},
          {prefix + "_variance", str(r.variance)}};
}

Json cmd_moments(Context& ctx) {
  const std::uint64_t q = ctx.field.q();
  if (ctx.config.n) {
    const int n = need_nonneg(ctx.config.n, "--n");
    const Rational closed = expectation_phi_nn(q, n);
    const Rational closed2 = expectation_phi_nn_closed(q, n);
    Json doc = {{"n", n}, {"formula_expectation", str(closed)}, {"formula_expectation_alt", str(closed2)}};
    bool ok = closed == closed2;
    if (const auto b = within_budget([&] { return moments_nn_bruteforce(ctx.field, n, ctx.limits); })) {
      doc.update(moment_json("bruteforce", *b));
      ok = ok && b->expectation == closed;
    } else {
      doc["bruteforce_expectation"] = "skipped";
    }
    doc["match"] = ok;
    if (!ok) ctx.mismatch = true;
    return doc;
  }
  const int m = need_nonneg(ctx.config.m, "--m");
  const MomentReport f = moments_formula(q, m);
  Json doc = {{"m", m}};
  doc.update(moment_json("formula", f));
  bool ok = true;
  if (const auto b = within_budget([&] { return moments_bruteforce(ctx.field, m, ctx.limits); })) {
    doc.update(moment_json("bruteforce", *b));
    ok = b->expectation == f.expectation && b->variance == f.variance;
  } else {
    doc["bruteforce_expectation"] = "skipped";
  }
  doc["match"] = ok;
  if (!ok) ctx.mismatch = true;
  return doc;
}

Json cmd_s_sizes(Context& ctx) {
  const std::uint64_t q = ctx.field.q();
  Json doc = Json::object();
  bool ok = true;
  if (ctx.config.m) {
    const int m = need_nonneg(ctx.config.m, "--m");
    const BigInt formula = size_S_m(q, m);
    const BigInt census = census_S_m(ctx.field, m, ctx.limits);
    doc["m"] = m;
    doc["S_m_formula"] = str(formula);
    doc["S_m_census"] = str(census);
    ok = ok && formula == census;
  }
  if (ctx.config.n) {
    const int n = need_nonneg(ctx.config.n, "--n");
    const BigInt formula = size_S_star(q, n);
    const BigInt census = census_S_star(ctx.field, n, ctx.limits);
    const ConstrainedSums sums = constrained_sums(ctx.field, n, ctx.limits);
    const BigInt pairs = coprime_pairs(q, n);
    const BigInt pairs_census = census_coprime_pairs(ctx.field, n, ctx.limits);
    doc["n"] = n;
    doc["S_star_formula"] = str(formula);
    doc["S_star_census"] = str(census);
    doc["phi_n_sum"] = str(sums.sum);
    doc["pairs"] = str(sums.count);
    doc["coprime_pairs_formula"] = str(pairs);
    doc["coprime_pairs_census"] = str(pairs_census);
    ok = ok && formula == census && formula == sums.sum && pairs == pairs_census;
  }
  if (doc.empty()) throw UsageError("s-sizes needs --m and/or --n");
  doc["match"] = ok;
  if (!ok) ctx.mismatch = true;
  return doc;
}

Json cmd_bijection_check(Context& ctx) {
  Json doc = Json::object();
  bool ok = true;
  if (ctx.config.m) {
    const int m = need_nonneg(ctx.config.m, "--m");
    const BijectionReport r = bijection_check(ctx.field, m, ctx.limits);
    doc["m"] = m;
    doc["S_m"] = str(r.s_size);
    doc["Q_m"] = str(r.q_size);
    doc["forward_failures"] = str(r.forward_failures);
    doc["backward_failures"] = str(r.backward_failures);
    ok = ok && r.ok();
  }
  if (ctx.config.n) {
    const int n = need_nonneg(ctx.config.n, "--n");
    const BigInt e = census_E_star(ctx.field, n, ctx.limits);
    const BigInt x = census_X_star(ctx.field, n, ctx.limits);
    const BigInt defects = x_to_e_defects(ctx.field, n, ctx.limits);
    const BigInt bound = x_star_upper_bound(ctx.field.q(), n);
    doc["n"] = n;
    doc["E_star"] = str(e);
    doc["X_star"] = str(x);
    doc["map_defects"] = str(defects);
    doc["X_star_bound"] = str(bound);
    ok = ok && e == x && defects == 0 && x <= bound;
  }
  if (doc.empty()) throw UsageError("bijection-check needs --m and/or --n");
  doc["match"] = ok;
  if (!ok) ctx.mismatch = true;
  return doc;
}

Json cmd_tail(Context& ctx) {
  const int m = need_nonneg(ctx.config.m, "--m");
  const std::uint64_t q = ctx.field.q();
  const Rational alpha = parse_rational(ctx.config.alpha.value_or("2"));
  if (alpha <= 0) throw UsageError("--alpha must be > 0");
  Json doc = {{"m", m}, {"alpha", str(alpha)}, {"moment_series", str(moment_alpha(q, m, alpha))}};
  bool ok = true;
  const auto dist = within_budget([&] { return omega_distribution(ctx.field, m, ctx.limits); });
  if (dist) {
    const Rational avg = dist->moment(alpha);
    doc["moment_census"] = str(avg);
    ok = ok && avg == moment_alpha(q, m, alpha);
  }
  if (ctx.config.c) {
    const double c = *ctx.config.c;
    const ChernoffTail t = chernoff_tail(q, m, c);
    doc["c"] = real(c);
    doc["chernoff_at_c"] = real(t.at_c);
    doc["chernoff_grid"] = real(t.grid_best);
    doc["chernoff_grid_alpha"] = real(t.grid_alpha);
    if (dist) {
      const Rational emp = dist->tail(c * std::log(static_cast<double>(m)));
      doc["omega_tail_census"] = str(emp);
      ok = ok && t.at_c + 1e-9 >= static_cast<double>(emp) && t.grid_best + 1e-9 >= static_cast<double>(emp);
    }
  }
  if (ctx.config.beta) {
    const double beta = *ctx.config.beta;
    const PhiTail pt = phi_tail_empirical(ctx.field, m, beta, ctx.limits);
    doc["beta"] = real(beta);
    doc["phi_tail"] = str(pt.phi_prob);
    doc["omega_tail"] = str(pt.omega_prob);
    doc["chain_holds"] = pt.chain_holds();
    ok = ok && pt.chain_holds();
    if (m >= 2) {
      const double c = beta / std::log(2.0);
      const double bound = chernoff_bound(q, m, c * std::log(static_cast<double>(m)), c);
      doc["chernoff_bound"] = real(bound);
      ok = ok && bound + 1e-9 >= static_cast<double>(pt.phi_prob);
    }
  }
  doc["match"] = ok;
  if (!ok) ctx.mismatch = true;
  return doc;
}

Json cmd_omega_dist(Context& ctx) {
  const int m = need_nonneg(ctx.config.m, "--m");
  const OmegaDistribution d = omega_distribution(ctx.field, m, ctx.limits);
  Json rows = Json::array();
  for (const auto& [k, c] : d.histogram) rows.push_back({{"k", k}, {"count", str(c)}});
  return {{"m", m}, {"total", str(d.total())}, {"rows", rows}};
}

// verify-all

struct Check {
  bool ok = true;
  std::string detail;
};

using CheckFn = std::function<Check(const Limits&, std::uint64_t seed)>;

std::string join_failures(const std::vector<std::string>& f) {
  std::string s;
  for (std::size_t i = 0; i < f.size() && i < 5; ++i) s += (i ? "; " : "") + f[i];
  if (f.size() > 5) s += "; +" + std::to_string(f.size() - 5) + " more";
  return s;
}

Check finish(std::size_t cases, const std::vector<std::string>& failures) {
  if (failures.empty()) return {true, std::to_string(cases) + " cases"};
  return {false, join_failures(failures)};
}

std::string tag(std::uint64_t q, const char* var, int v) {
  return "q=" + std::to_string(q) + " " + var + "=" + std::to_string(v);
}

Check check_irreducibles(const Limits&, std::uint64_t) {
  std::vector<std::string> bad;
  std::size_t cases = 0;
  for (std::uint32_t q : {2U, 3U, 4U}) {
    const Field f = q == 4 ? Field::make(2, 2) : Field::make(q);
    for (int d = 1; d <= 8; ++d, ++cases) {
      if (count_irreducibles(q, d) != enumerate_irreducibles(f, d).size()) bad.push_back(tag(q, "d", d));
    }
  }
  return finish(cases, bad);
}

Check check_moments(const Limits& limits, std::uint64_t) {
  std::vector<std::string> bad;
  std::size_t cases = 0;
  for (std::uint32_t q : {2U, 3U}) {
    for (int m = 0; m <= (q == 2 ? 10 : 6); ++m, ++cases) {
      const MomentReport b = moments_bruteforce(Field::make(q), m, limits);
      const MomentReport f = moments_formula(q, m);
      if (b.expectation != f.expectation || b.variance != f.variance) bad.push_back(tag(q, "m", m));
    }
  }
  return finish(cases, bad);
}

Check check_s_sizes(const Limits& limits, std::uint64_t) {
  std::vector<std::string> bad;
  std::size_t cases = 0;
  for (std::uint32_t q : {2U, 3U}) {
    const Field f = Field::make(q);
    for (int m = 1; m <= 4; ++m, ++cases) {
      if (census_S_m(f, m, limits) != size_S_m(q, m)) bad.push_back(tag(q, "m", m));
    }
    for (int n = 0; n <= 4; ++n, ++cases) {
      const BigInt closed = size_S_star(q, n);
      if (census_S_star(f, n, limits) != closed || constrained_sums(f, n, limits).sum != closed ||
          expectation_phi_nn(q, n) != expectation_phi_nn_closed(q, n)) {
        bad.push_back(tag(q, "n", n));
      }
    }
  }
  return finish(cases, bad);
}

Check check_bijections(const Limits& limits, std::uint64_t) {
  std::vector<std::string> bad;
  std::size_t cases = 0;
  const Field f = Field::make(2);
  for (int m = 1; m <= 3; ++m, ++cases) {
    const BijectionReport r = bijection_check(f, m, limits);
    if (!r.ok() || r.s_size != size_S_m(2, m)) bad.push_back(tag(2, "m", m));
  }
  for (int n = 0; n <= 1; ++n, ++cases) {
    if (census_E_star(f, n, limits) != census_X_star(f, n, limits) || x_to_e_defects(f, n, limits) != 0) {
      bad.push_back(tag(2, "n", n));
    }
  }
  return finish(cases, bad);
}

struct Witnessed {
  std::uint64_t q;
  Mode mode;
  int size;
  ExtremalResult result;
};

// Brute-force extremal results shared by the witness-based checks.
const std::vector<Witnessed>& witnessed(const Limits& limits) {
  static std::map<std::pair<std::uint64_t, unsigned>, std::vector<Witnessed>> cache;
  auto& slot = cache[{limits.budget, limits.threads}];
  if (!slot.empty()) return slot;
  for (std::uint32_t q : {2U, 3U}) {
    const Field f = Field::make(q);
    for (int m = 1; m <= (q == 2 ? 12 : 8); ++m)
      slot.push_back({q, Mode::kOrdinary, m, upsilon_bruteforce(f, m, limits)});
    for (int n = 1; n <= (q == 2 ? 5 : 3); ++n) {
      slot.push_back({q, Mode::kSlack, 2 * n, upsilon_nn_bruteforce(f, n, limits)});
    }
  }
  return slot;
}

Check check_extremal(const Limits& limits, std::uint64_t) {
  std::vector<std::string> bad;
  for (const Witnessed& w : witnessed(limits)) {
    const ExtremalResult s =
        w.mode == Mode::kOrdinary ? upsilon_profile_search(w.q, w.size) : upsilon_nn_profile_search(w.q, w.size / 2);
    if (s.value != w.result.value || s.witnesses != w.result.witnesses) {
      bad.push_back(tag(w.q, w.mode == Mode::kOrdinary ? "m" : "n", w.mode == Mode::kOrdinary ? w.size : w.size / 2));
    }
  }
  const auto& all = witnessed(limits);
  for (const Witnessed& w : all) {
    if (w.q != 2 || w.size != (w.mode == Mode::kOrdinary ? 3 : 4)) continue;
    const int expected = w.mode == Mode::kOrdinary ? 6 : 4;
    if (w.result.value != expected)
      bad.push_back("regression " + tag(2, w.mode == Mode::kOrdinary ? "m" : "n", w.size == 3 ? 3 : 2));
  }
  return finish(all.size(), bad);
}

Check check_structure_all(const Limits& limits, std::uint64_t) {
  std::vector<std::string> bad;
  std::size_t cases = 0;
  for (const Witnessed& w : witnessed(limits)) {
    for (const Profile& p : w.result.witnesses) {
      ++cases;
      if (!check_structure(w.q, p, w.mode, w.size).all_hard()) bad.push_back(p.to_string());
    }
  }
  return finish(cases, bad);
}

Check check_local_optimality(const Limits& limits, std::uint64_t) {
  std::vector<std::string> bad;
  std::size_t cases = 0;
  for (const Witnessed& w : witnessed(limits)) {
    for (const Profile& p : w.result.witnesses) {
      for (const MoveSpec& mv : candidate_moves(w.q, p, w.mode, w.size)) {
        const auto o = try_apply_move(w.q, p, mv, w.mode, w.size);
        if (!o) continue;
        ++cases;
        if (o->ratio > 1) bad.push_back(p.to_string() + " " + mv.to_string());
      }
    }
  }
  for (std::uint32_t q : {2U, 3U}) {
    for (int m = 1; m <= (q == 2 ? 12 : 8); ++m) {
      for (const Profile& p : enumerate_profiles(q, m)) {
        for (const ViolationWitness& vw : violation_moves(q, p)) {
          ++cases;
          Profile cur = p;
          Rational ratio = 1;
          for (const MoveSpec& mv : vw.moves) {
            const MoveOutcome o = apply_move(q, cur, mv, Mode::kOrdinary, m);
            ratio *= o.ratio;
            cur = o.profile;
          }
          if (ratio <= 1) bad.push_back(p.to_string() + " " + violation_name(vw.violation));
        }
      }
    }
  }
  return finish(cases, bad);
}

Check check_sandwich(const Limits& limits, std::uint64_t) {
  std::vector<std::string> bad;
  std::size_t cases = 0;
  for (const Witnessed& w : witnessed(limits)) {
    ++cases;
    if (w.mode == Mode::kSlack) {
      if (lower_bound_construction(w.q, w.size / 2).bound > w.result.value) bad.push_back(tag(w.q, "n", w.size / 2));
    } else if (w.size >= static_cast<int>(w.q)) {
      if (log2_big(w.result.value) > upper_bound_log2_upsilon(w.q, w.size)) bad.push_back(tag(w.q, "m", w.size));
    }
  }
  return finish(cases, bad);
}

Check check_tail(const Limits& limits, std::uint64_t) {
  std::vector<std::string> bad;
  std::size_t cases = 0;
  for (int m = 1; m <= 16; ++m, ++cases) {
    if (g_series(2, m, 1) != 1 || g_series(3, m, 1) != 1) bad.push_back("G_" + std::to_string(m) + "(1)");
  }
  for (std::uint32_t q : {2U, 3U}) {
    const Field f = Field::make(q);
    for (int m = 1; m <= 8; ++m) {
      const OmegaDistribution d = omega_distribution(f, m, limits);
      for (const Rational& a : {Rational(1, 2), Rational(1), Rational(2)}) {
        ++cases;
        if (d.moment(a) != moment_alpha(q, m, a)) bad.push_back(tag(q, "m", m) + " alpha=" + a.str());
      }
      if (m < 2) continue;
      for (double c : {1.25, 1.5, 1.75, 2.5}) {
        if (c >= q) continue;
        ++cases;
        const ChernoffTail t = chernoff_tail(q, m, c);
        const double emp = static_cast<double>(d.tail(c * std::log(static_cast<double>(m))));
        if (t.at_c + 1e-9 < emp || t.grid_best + 1e-9 < emp) bad.push_back(tag(q, "m", m) + " c=" + real(c));
      }
    }
  }
  return finish(cases, bad);
}

Check check_slack_formula(const Limits& limits, std::uint64_t seed) {
  std::vector<std::string> bad;
  std::size_t cases = 0;
  for (int r0 = 0; r0 <= 5; ++r0) {
    for (int r = 0; r <= 5; ++r) {
      for (int d = 1; d <= 4; ++d) {
        for (int k = 0; k <= r0 + r * d; ++k) {
          ++cases;
          BigInt census = 0;
          for (int j = 0; j <= r0; ++j) {
            for (int i = 0; i <= r; ++i) census += (j + i * d == k) ? 1 : 0;
          }
          if (slack_divisor_count(r0, r, d, k) != census) {
            bad.push_back("r0=" + std::to_string(r0) + " r=" + std::to_string(r) + " d=" + std::to_string(d));
          }
        }
      }
    }
  }
  std::mt19937_64 rng(seed);
  for (int i = 0; i < 500; ++i, ++cases) {
    const std::uint32_t q = rng() % 2 == 0 ? 2 : 3;
    const int n = 1 + static_cast<int>(rng() % 5);
    const Field f = Field::make(q);
    const UptoRange range(f, 2 * n);
    check_budget(range.size(), limits, "random split instances");
    const Factorization fac = factorize(f, range[rng() % range.size()]);
    std::vector<std::size_t> b;
    for (std::size_t j = 0; j < fac.factors.size(); ++j) {
      if (rng() % 2) b.push_back(j);
    }
    if (phi_n_by_split(fac, n, b) != phi_constrained(fac, n, n)) bad.push_back(tag(q, "n", n));
  }
  return finish(cases, bad);
}

Json cmd_verify_all(Context& ctx) {
  static const std::vector<std::pair<std::string, CheckFn>> kChecks = {
      {"irreducible-counts", check_irreducibles},
      {"moments", check_moments},
      {"set-sizes", check_s_sizes},
      {"bijections", check_bijections},
      {"extremal", check_extremal},
      {"structure", check_structure_all},
      {"local-optimality", check_local_optimality},
      {"sandwich", check_sandwich},
      {"tail", check_tail},
      {"slack-formula", check_slack_formula},
  };
  Json rows = Json::array();
  int passed = 0;
  int failed = 0;
  int skipped = 0;
  for (const auto& [name, fn] : kChecks) {
    std::string status;
    std::string detail;
    try {
      const Check c = fn(ctx.limits, ctx.config.seed);
      status = c.ok ? "pass" : "FAIL";
      detail = c.detail;
    } catch (const BudgetExceeded& e) {
      status = "skipped";
      detail = e.what();
    }
    (status == "pass" ? passed : status == "FAIL" ? failed : skipped) += 1;
    rows.push_back({{"check", name}, {"status", status}, {"detail", detail}});
  }
  if (failed) ctx.mismatch = true;
  return {{"seed", ctx.config.seed}, {"passed", passed}, {"failed", failed}, {"skipped", skipped}, {"rows", rows}};
}

using Command = Json (*)(Context&);

const std::vector<std::pair<std::string, Command>>& command_table() {
  static const std::vector<std::pair<std::string, Command>> table = {
      {"irred-count", cmd_irred_count},
      {"irred-list", cmd_irred_list},
      {"factor", cmd_factor},
      {"phi", cmd_phi},
      {"phi-nn", cmd_phi_nn},
      {"spectrum", cmd_spectrum},
      {"upsilon", cmd_upsilon},
      {"upsilon-nn", cmd_upsilon_nn},
      {"check-structure", cmd_check_structure},
      {"moves", cmd_moves},
      {"lower-bound", cmd_lower_bound},
      {"upper-bound", cmd_upper_bound},
      {"moments", cmd_moments},
      {"s-sizes", cmd_s_sizes},
      {"bijection-check", cmd_bijection_check},
      {"tail", cmd_tail},
      {"omega-dist", cmd_omega_dist},
      {"verify-all", cmd_verify_all},
  };
  return table;
}

}  // namespace

const std::vector<std::string>& subcommands() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> v;
    for (const auto& [name, fn] : command_table()) v.push_back(name);
    return v;
  }();
  return names;
}

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  const auto& table = command_table();
  const auto it = std::find_if(table.begin(), table.end(), [&](const auto& e) { return e.first == config.command; });
  if (it == table.end()) {
    err << "unknown subcommand '" << config.command << "'\n";
    return kExitUsage;
  }
  if (config.output != "csv" && config.output != "json") {
    err << "--output must be csv or json\n";
    return kExitUsage;
  }
  if (config.threads == 0) {
    err << "--threads must be >= 1\n";
    return kExitUsage;
  }
  try {
    Context ctx{config, Field::parse(config.field), Limits{config.budget, config.threads}};
    Json doc = Json{{"command", config.command}};
    doc.update(it->second(ctx));
    if (config.output == "json") {
      out << doc.dump(2) << "\n";
    } else {
      write_csv(out, doc);
    }
    return ctx.mismatch ? kExitMismatch : kExitOk;
  } catch (const BudgetExceeded& e) {
    err << "budget exceeded: " << e.what() << "\n";
    return kExitBudget;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}

}  // namespace polycount
