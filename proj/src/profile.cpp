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

#include "polycount/profile.hpp"

#include <algorithm>
#include <charconv>
#include <functional>
#include <sstream>
#include <stdexcept>

#include "polycount/irred.hpp"

namespace polycount {

namespace {

int parse_int(std::string_view text) {
  int value = 0;
  const auto* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (ec != std::errc() || ptr != end || value < 0) {
    throw std::invalid_argument("bad profile number '" + std::string(text) + "'");
  }
  return value;
}

}  // namespace

int Profile::t() const {
  int total = 0;
  for (const auto& [d, list] : entries) total += static_cast<int>(list.size());
  return total;
}

int Profile::d_t() const { return entries.empty() ? 0 : entries.rbegin()->first; }

int Profile::rho() const {
  auto it = entries.find(1);
  if (it == entries.end() || it->second.empty()) return 0;
  return *std::max_element(it->second.begin(), it->second.end());
}

int Profile::x_weight() const {
  int total = 0;
  for (const auto& [d, list] : entries) {
    for (int r : list) total += d * r;
  }
  return total;
}

int Profile::omega() const {
  int total = 0;
  for (const auto& [d, list] : entries) {
    for (int r : list) total += r;
  }
  return total;
}

int Profile::mult(int d, std::size_t j) const {
  auto it = entries.find(d);
  if (it == entries.end() || j >= it->second.size()) return 0;
  return it->second[j];
}

std::vector<DegMult> Profile::shape() const {
  std::vector<DegMult> out;
  for (const auto& [d, list] : entries) {
    for (int r : list) out.push_back({d, r});
  }
  return out;
}

BigInt Profile::phi() const {
  BigInt out = 1;
  for (const auto& [d, list] : entries) {
    for (int r : list) out *= r + 1;
  }
  return out;
}

BigInt Profile::phi_n() const {
  const int w = weight();
  if (w % 2 != 0) throw std::invalid_argument("phi_n needs an even total weight, got " + std::to_string(w));
  const auto spectrum = degree_spectrum(shape(), r0);
  return spectrum[static_cast<std::size_t>(w / 2)];
}

void Profile::normalize() {
  for (auto it = entries.begin(); it != entries.end();) {
    auto& list = it->second;
    std::erase(list, 0);
    std::sort(list.begin(), list.end(), std::greater<>());
    it = list.empty() ? entries.erase(it) : std::next(it);
  }
}

bool Profile::fits(std::uint64_t q) const {
  for (const auto& [d, list] : entries) {
    if (d < 1) return false;
    if (static_cast<std::int64_t>(list.size()) > irreducible_slots(q, d)) return false;
    for (int r : list) {
      if (r < 1) return false;
    }
  }
  return r0 >= 0;
}

std::string Profile::to_string() const {
  std::ostringstream out;
  bool first = true;
  if (r0 > 0) {
    out << "y:" << r0;
    first = false;
  }
  for (const auto& [d, list] : entries) {
    if (!first) out << ' ';
    first = false;
    out << d << ':';
    for (std::size_t j = 0; j < list.size(); ++j) out << (j ? "," : "") << list[j];
  }
  return first ? "-" : out.str();
}

Profile Profile::parse(std::string_view text) {
  Profile out;
  std::istringstream in{std::string(text)};
  std::string token;
  while (in >> token) {
    if (token == "-") continue;
    const auto colon = token.find(':');
    if (colon == std::string::npos) throw std::invalid_argument("bad profile token '" + token + "'");
    const std::string_view key = std::string_view(token).substr(0, colon);
    std::string_view rest = std::string_view(token).substr(colon + 1);
    if (key == "y") {
      out.r0 = parse_int(rest);
      continue;
    }
    const int d = parse_int(key);
    if (d < 1) throw std::invalid_argument("profile degree must be positive");
    auto& list = out.entries[d];
    while (!rest.empty()) {
      const auto comma = rest.find(',');
      list.push_back(parse_int(rest.substr(0, comma)));
      rest = comma == std::string_view::npos ? std::string_view() : rest.substr(comma + 1);
    }
  }
  out.normalize();
  return out;
}

Profile profile_of(const Factorization& f, int r0) {
  Profile out;
  out.r0 = r0;
  for (const Factor& fac : f.factors) out.entries[fac.degree].push_back(fac.mult);
  out.normalize();
  return out;
}

namespace {

void profiles_from(std::uint64_t q, int d, int remaining, Profile& cur, std::vector<Profile>& out) {
  if (remaining == 0) {
    out.push_back(cur);
    return;
  }
  if (d > remaining) return;
  const std::int64_t slots = irreducible_slots(q, d);
  std::vector<int> list;
  // Non-increasing lists at degree d, built part by part.
  std::function<void(int, int)> parts = [&](int left, int cap) {
    if (!list.empty()) {
      cur.entries[d] = list;
      profiles_from(q, d + 1, left, cur, out);
      cur.entries.erase(d);
    } else {
      profiles_from(q, d + 1, left, cur, out);
    }
    if (static_cast<std::int64_t>(list.size()) >= slots) return;
    for (int r = std::min(cap, left / d); r >= 1; --r) {
      list.push_back(r);
      parts(left - r * d, r);
      list.pop_back();
    }
  };
  parts(remaining, remaining);
}

}  // namespace

std::vector<Profile> enumerate_profiles(std::uint64_t q, int weight) {
  if (weight < 0) throw std::invalid_argument("negative profile weight");
  std::vector<Profile> out;
  Profile cur;
  profiles_from(q, 1, weight, cur, out);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace polycount
