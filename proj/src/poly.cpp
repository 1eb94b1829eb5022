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

#include "polycount/poly.hpp"

#include <algorithm>
#include <charconv>
#include <stdexcept>

namespace polycount {

namespace {

void trim(std::vector<Elem>& c) {
  while (!c.empty() && c.back() == 0) c.pop_back();
}

}  // namespace

Poly::Poly(std::vector<Elem> coeffs) : coeffs_(std::move(coeffs)) { trim(coeffs_); }

Poly Poly::monomial(int k) {
  std::vector<Elem> c(static_cast<std::size_t>(k) + 1, 0);
  c.back() = 1;
  return Poly(std::move(c));
}

std::strong_ordering canonical_compare(const Poly& a, const Poly& b) {
  if (auto c = a.degree() <=> b.degree(); c != 0) return c;
  const auto& ca = a.coeffs();
  const auto& cb = b.coeffs();
  for (std::size_t i = 0; i < ca.size(); ++i) {
    if (auto c = ca[i] <=> cb[i]; c != 0) return c;
  }
  return std::strong_ordering::equal;
}

Poly poly_add(const Field& f, const Poly& a, const Poly& b) {
  const auto& ca = a.coeffs();
  const auto& cb = b.coeffs();
  std::vector<Elem> c(std::max(ca.size(), cb.size()), 0);
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = f.add(a[i], b[i]);
  return Poly(std::move(c));
}

Poly poly_sub(const Field& f, const Poly& a, const Poly& b) {
  std::vector<Elem> c(std::max(a.coeffs().size(), b.coeffs().size()), 0);
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = f.sub(a[i], b[i]);
  return Poly(std::move(c));
}

Poly poly_mul(const Field& f, const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return Poly();
  const auto& ca = a.coeffs();
  const auto& cb = b.coeffs();
  std::vector<Elem> c(ca.size() + cb.size() - 1, 0);
  for (std::size_t i = 0; i < ca.size(); ++i) {
    if (ca[i] == 0) continue;
    for (std::size_t j = 0; j < cb.size(); ++j) {
      c[i + j] = f.add(c[i + j], f.mul(ca[i], cb[j]));
    }
  }
  return Poly(std::move(c));
}

Poly poly_pow(const Field& f, const Poly& a, int k) {
  if (k < 0) throw std::invalid_argument("negative polynomial exponent");
  Poly result = Poly::one();
  for (int i = 0; i < k; ++i) result = poly_mul(f, result, a);
  return result;
}

std::pair<Poly, Poly> poly_divrem(const Field& f, const Poly& a, const Poly& b) {
  if (b.is_zero()) throw std::domain_error("division by the zero polynomial");
  if (a.degree() < b.degree()) return {Poly(), a};
  std::vector<Elem> r = a.coeffs();
  const auto& cb = b.coeffs();
  const std::size_t db = cb.size() - 1;
  const Elem lead_inv = f.inv(cb.back());
  std::vector<Elem> quot(r.size() - db, 0);
  for (std::size_t k = r.size(); k-- > db;) {
    const Elem c = f.mul(r[k], lead_inv);
    quot[k - db] = c;
    if (c == 0) continue;
    for (std::size_t j = 0; j <= db; ++j) {
      r[k - db + j] = f.sub(r[k - db + j], f.mul(c, cb[j]));
    }
  }
  r.resize(db);
  return {Poly(std::move(quot)), Poly(std::move(r))};
}

bool poly_divides(const Field& f, const Poly& d, const Poly& a) { return poly_divrem(f, a, d).second.is_zero(); }

Poly make_monic(const Field& f, const Poly& a) {
  if (a.is_zero()) return a;
  const Elem lead_inv = f.inv(a.coeffs().back());
  std::vector<Elem> c = a.coeffs();
  for (Elem& x : c) x = f.mul(x, lead_inv);
  return Poly(std::move(c));
}

Poly poly_gcd(const Field& f, const Poly& a, const Poly& b) {
  if (a.is_zero() && b.is_zero()) throw std::domain_error("gcd(0, 0) is undefined");
  Poly u = a;
  Poly v = b;
  while (!v.is_zero()) {
    Poly r = poly_divrem(f, u, v).second;
    u = std::move(v);
    v = std::move(r);
  }
  return make_monic(f, u);
}

Poly parse_poly(const Field& f, std::string_view text) {
  std::vector<Elem> c;
  std::size_t pos = 0;
  while (pos < text.size()) {
    while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\t')) ++pos;
    if (pos == text.size()) break;
    std::size_t end = pos;
    while (end < text.size() && text[end] != ' ' && text[end] != '\t') ++end;
    Elem v = 0;
    auto [ptr, ec] = std::from_chars(text.data() + pos, text.data() + end, v);
    if (ec != std::errc() || ptr != text.data() + end) {
      throw std::invalid_argument("malformed polynomial coefficient '" + std::string(text.substr(pos, end - pos)) +
                                  "'");
    }
    if (!f.contains(v)) {
      throw std::invalid_argument("coefficient " + std::to_string(v) + " is not an element of GF(" +
                                  std::to_string(f.q()) + ")");
    }
    c.push_back(v);
    pos = end;
  }
  if (c.empty()) throw std::invalid_argument("empty polynomial text");
  return Poly(std::move(c));
}

std::string format_poly(const Poly& a) {
  if (a.is_zero()) return "0";
  std::string s;
  for (std::size_t i = 0; i < a.coeffs().size(); ++i) {
    if (i > 0) s += ' ';
    s += std::to_string(a.coeffs()[i]);
  }
  return s;
}

std::string pretty_poly(const Poly& a) {
  if (a.is_zero()) return "0";
  std::string s;
  for (int k = a.degree(); k >= 0; --k) {
    const Elem c = a[static_cast<std::size_t>(k)];
    if (c == 0) continue;
    if (!s.empty()) s += '+';
    std::string coeff = c == 1 ? "" : "[" + std::to_string(c) + "]";
    if (k == 0) {
      s += c == 1 ? "1" : coeff;
    } else {
      s += coeff + (k == 1 ? "x" : "x^" + std::to_string(k));
    }
  }
  return s;
}

}  // namespace polycount
