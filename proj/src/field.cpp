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

#include "polycount/field.hpp"

#include <charconv>
#include <stdexcept>
#include <string>

#include "polycount/enumerate.hpp"
#include "polycount/irred.hpp"
#include "polycount/poly.hpp"

namespace polycount {

struct Field::Tables {
  // Full q x q tables, present only for extension fields with q <= 256.
  std::vector<std::uint16_t> add;
  std::vector<std::uint16_t> mul;
  std::vector<std::uint32_t> inv;
};

namespace {

constexpr std::uint32_t kTableLimit = 256;

std::uint32_t parse_uint(std::string_view s, const char* what) {
  std::uint32_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size() || s.empty()) {
    throw std::invalid_argument(std::string("malformed ") + what + ": '" + std::string(s) + "'");
  }
  return v;
}

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

Field Field::make(std::uint32_t p, std::uint32_t e, std::optional<std::vector<Elem>> modulus) {
  if (!is_prime(p)) throw std::invalid_argument("field characteristic " + std::to_string(p) + " is not prime");
  if (e < 1) throw std::invalid_argument("extension degree must be >= 1");
  std::uint64_t q = 1;
  for (std::uint32_t i = 0; i < e; ++i) {
    q *= p;
    if (q > kMaxOrder) throw std::invalid_argument("field order exceeds 2^16");
  }
  if (e == 1) {
    if (modulus.has_value()) throw std::invalid_argument("prime fields take no modulus");
    return Field(p, 1, {}, true);
  }
  const Field base = make(p, 1);
  if (modulus.has_value()) {
    for (Elem c : *modulus) {
      if (c >= p) throw std::invalid_argument("modulus coefficient outside GF(p)");
    }
    const Poly m(*modulus);
    if (m.degree() != static_cast<int>(e) || !m.is_monic()) {
      throw std::invalid_argument("modulus must be monic of degree " + std::to_string(e));
    }
    if (!is_irreducible(base, m)) throw std::invalid_argument("modulus is reducible over GF(p)");
    const bool is_default = m == *first_irreducible(base, static_cast<int>(e));
    return Field(p, e, m.coeffs(), is_default);
  }
  return Field(p, e, first_irreducible(base, static_cast<int>(e))->coeffs(), true);
}

Field Field::parse(std::string_view text) {
  std::string_view head = text;
  std::optional<std::vector<Elem>> modulus;
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    head = text.substr(0, slash);
    std::string_view tail = text.substr(slash + 1);
    std::vector<Elem> coeffs;
    std::size_t pos = 0;
    while (pos < tail.size()) {
      while (pos < tail.size() && tail[pos] == ' ') ++pos;
      if (pos == tail.size()) break;
      std::size_t end = tail.find(' ', pos);
      if (end == std::string_view::npos) end = tail.size();
      coeffs.push_back(parse_uint(tail.substr(pos, end - pos), "modulus coefficient"));
      pos = end;
    }
    modulus = std::move(coeffs);
  }
  std::uint32_t p = 0;
  std::uint32_t e = 1;
  if (auto caret = head.find('^'); caret != std::string_view::npos) {
    p = parse_uint(head.substr(0, caret), "field characteristic");
    e = parse_uint(head.substr(caret + 1), "extension degree");
  } else {
    p = parse_uint(head, "field characteristic");
  }
  return make(p, e, std::move(modulus));
}

std::string Field::to_string() const {
  std::string s = std::to_string(p_) + "^" + std::to_string(e_);
  if (e_ > 1 && !default_modulus_) s += "/" + format_poly(Poly(modulus_));
  return s;
}

Field::Field(std::uint32_t p, std::uint32_t e, std::vector<Elem> modulus, bool default_modulus)
    : p_(p), e_(e), q_(1), modulus_(std::move(modulus)), default_modulus_(default_modulus) {
  for (std::uint32_t i = 0; i < e; ++i) q_ *= p;
  auto tables = std::make_shared<Tables>();
  if (e_ > 1 && q_ <= kTableLimit) {
    tables->add.resize(static_cast<std::size_t>(q_) * q_);
    tables->mul.resize(static_cast<std::size_t>(q_) * q_);
    for (Elem a = 0; a < q_; ++a) {
      for (Elem b = 0; b < q_; ++b) {
        tables->add[a * q_ + b] = static_cast<std::uint16_t>(slow_add(a, b));
        tables->mul[a * q_ + b] = static_cast<std::uint16_t>(slow_mul(a, b));
      }
    }
  }
  // Inverses by exhaustive search for tabled fields, Fermat otherwise.
  tables->inv.assign(q_, 0);
  tables_ = tables;
  for (Elem a = 1; a < q_; ++a) {
    Elem result = 1;
    Elem base = a;
    for (std::uint32_t k = q_ - 2; k > 0; k >>= 1U) {
      if (k & 1U) result = mul(result, base);
      base = mul(base, base);
    }
    tables->inv[a] = result;
  }
}

Elem Field::slow_add(Elem a, Elem b) const {
  if (e_ == 1) return (a + b) % p_;
  Elem result = 0;
  Elem scale = 1;
  for (std::uint32_t i = 0; i < e_; ++i) {
    result += ((a % p_ + b % p_) % p_) * scale;
    a /= p_;
    b /= p_;
    scale *= p_;
  }
  return result;
}

Elem Field::slow_neg(Elem a) const {
  if (e_ == 1) return (p_ - a) % p_;
  Elem result = 0;
  Elem scale = 1;
  for (std::uint32_t i = 0; i < e_; ++i) {
    result += ((p_ - a % p_) % p_) * scale;
    a /= p_;
    scale *= p_;
  }
  return result;
}

Elem Field::slow_mul(Elem a, Elem b) const {
  if (e_ == 1) return static_cast<Elem>((static_cast<std::uint64_t>(a) * b) % p_);
  std::vector<std::uint64_t> da(e_), db(e_), prod(2 * e_ - 1, 0);
  for (std::uint32_t i = 0; i < e_; ++i) {
    da[i] = a % p_;
    db[i] = b % p_;
    a /= p_;
    b /= p_;
  }
  for (std::uint32_t i = 0; i < e_; ++i) {
    for (std::uint32_t j = 0; j < e_; ++j) prod[i + j] = (prod[i + j] + da[i] * db[j]) % p_;
  }
  // Reduce with the monic modulus: g^e = -sum_{i<e} m_i g^i.
  for (std::size_t k = prod.size() - 1; k >= e_; --k) {
    const std::uint64_t c = prod[k];
    if (c == 0) continue;
    prod[k] = 0;
    for (std::uint32_t i = 0; i < e_; ++i) {
      prod[k - e_ + i] = (prod[k - e_ + i] + (p_ - modulus_[i]) % p_ * c) % p_;
    }
  }
  Elem result = 0;
  for (std::uint32_t i = e_; i-- > 0;) result = result * p_ + static_cast<Elem>(prod[i]);
  return result;
}

Elem Field::add(Elem a, Elem b) const {
  if (e_ == 1) {
    const Elem s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  if (!tables_->add.empty()) return tables_->add[a * q_ + b];
  return slow_add(a, b);
}

Elem Field::neg(Elem a) const { return slow_neg(a); }

Elem Field::sub(Elem a, Elem b) const { return add(a, neg(b)); }

Elem Field::mul(Elem a, Elem b) const {
  if (e_ == 1) return static_cast<Elem>((static_cast<std::uint64_t>(a) * b) % p_);
  if (!tables_->mul.empty()) return tables_->mul[a * q_ + b];
  return slow_mul(a, b);
}

Elem Field::inv(Elem a) const {
  if (a == 0 || a >= q_) throw std::domain_error("inverse of zero");
  return tables_->inv[a];
}

}  // namespace polycount
