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

#ifndef POLYCOUNT_POLY_HPP_
#define POLYCOUNT_POLY_HPP_

#include <compare>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "polycount/field.hpp"

namespace polycount {

// Univariate polynomial over some Field. The field is not stored; every
// arithmetic routine takes it explicitly. Coefficients are constant term
// first with no trailing zeros, so the zero polynomial is the empty vector.
class Poly {
 public:
  Poly() = default;
  explicit Poly(std::vector<Elem> coeffs);

  static Poly one() { return Poly({1}); }
  static Poly x() { return Poly({0, 1}); }
  // x^k
  static Poly monomial(int k);

  bool is_zero() const { return coeffs_.empty(); }
  // -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_monic() const { return !coeffs_.empty() && coeffs_.back() == 1; }
  const std::vector<Elem>& coeffs() const { return coeffs_; }
  Elem operator[](std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : 0; }

  friend bool operator==(const Poly&, const Poly&) = default;

 private:
  std::vector<Elem> coeffs_;
};

// Canonical order: degree first, then coefficients compared constant term
// first.
std::strong_ordering canonical_compare(const Poly& a, const Poly& b);
inline bool canonical_less(const Poly& a, const Poly& b) { return canonical_compare(a, b) < 0; }

Poly poly_add(const Field& f, const Poly& a, const Poly& b);
Poly poly_sub(const Field& f, const Poly& a, const Poly& b);
Poly poly_mul(const Field& f, const Poly& a, const Poly& b);
Poly poly_pow(const Field& f, const Poly& a, int k);
// Returns (quotient, remainder). Throws std::domain_error when b is zero.
std::pair<Poly, Poly> poly_divrem(const Field& f, const Poly& a, const Poly& b);
bool poly_divides(const Field& f, const Poly& d, const Poly& a);
// Monic gcd; gcd(a, 0) is a made monic. Throws std::domain_error when both
// arguments are zero.
Poly poly_gcd(const Field& f, const Poly& a, const Poly& b);
Poly make_monic(const Field& f, const Poly& a);

// Text format: space-separated element integers, constant term first.
// The zero polynomial is written "0".
Poly parse_poly(const Field& f, std::string_view text);
std::string format_poly(const Poly& a);
// Human-readable form such as "x^2+x+1"; non-unit coefficients print as "[k]".
std::string pretty_poly(const Poly& a);

}  // namespace polycount

#endif  // POLYCOUNT_POLY_HPP_
