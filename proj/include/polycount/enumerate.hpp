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

#ifndef POLYCOUNT_ENUMERATE_HPP_
#define POLYCOUNT_ENUMERATE_HPP_

#include <cstdint>
#include <iterator>

#include "polycount/field.hpp"
#include "polycount/poly.hpp"

namespace polycount {

// Random-access view over a finite family of polynomials, indexed in
// canonical order. Single-consumer iteration; parallel callers split the
// index range themselves.
template <class Derived>
class PolyRangeBase {
 public:
  class iterator {
   public:
    using iterator_category = std::input_iterator_tag;
    using value_type = Poly;
    using difference_type = std::ptrdiff_t;

    iterator() = default;
    iterator(const Derived* range, std::uint64_t index) : range_(range), index_(index) {}
    Poly operator*() const { return (*range_)[index_]; }
    iterator& operator++() {
      ++index_;
      return *this;
    }
    iterator operator++(int) {
      iterator old = *this;
      ++index_;
      return old;
    }
    friend bool operator==(const iterator& a, const iterator& b) { return a.index_ == b.index_; }

   private:
    const Derived* range_ = nullptr;
    std::uint64_t index_ = 0;
  };

  iterator begin() const { return iterator(static_cast<const Derived*>(this), 0); }
  iterator end() const {
    return iterator(static_cast<const Derived*>(this), static_cast<const Derived*>(this)->size());
  }
};

// M_n: monic polynomials of degree exactly n, q^n of them.
class MonicRange : public PolyRangeBase<MonicRange> {
 public:
  // Throws std::overflow_error if q^n does not fit in 62 bits.
  MonicRange(const Field& field, int n);
  std::uint64_t size() const { return size_; }
  int degree() const { return n_; }
  Poly operator[](std::uint64_t index) const;

 private:
  std::uint32_t q_;
  int n_;
  std::uint64_t size_;
};

// P_n: monic polynomials of degree at most n, ordered by degree.
class UptoRange : public PolyRangeBase<UptoRange> {
 public:
  UptoRange(const Field& field, int n);
  std::uint64_t size() const { return size_; }
  Poly operator[](std::uint64_t index) const;

 private:
  std::uint32_t q_;
  int n_;
  std::uint64_t size_;
};

inline MonicRange enumerate_monic(const Field& field, int n) { return MonicRange(field, n); }
inline UptoRange enumerate_upto(const Field& field, int n) { return UptoRange(field, n); }

// Position of a monic polynomial inside enumerate_upto(field, n); used to
// index dense per-polynomial tables.
std::uint64_t upto_index(const Field& field, const Poly& a);

}  // namespace polycount

#endif  // POLYCOUNT_ENUMERATE_HPP_
