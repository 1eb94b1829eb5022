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

#include "polycount/moves.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

#include "polycount/irred.hpp"

namespace polycount {

namespace {

BigInt count_of(const Profile& p, Mode mode) { return mode == Mode::kOrdinary ? p.phi() : p.phi_n(); }

std::size_t list_len(const Profile& p, int d) {
  auto it = p.entries.find(d);
  return it == p.entries.end() ? 0 : it->second.size();
}

// Slot indices worth trying at degree d: the first of each run of equal
// multiplicities and the first absent slot.
std::vector<Slot> reps(std::uint64_t q, const Profile& p, int d) {
  std::vector<Slot> out;
  auto it = p.entries.find(d);
  std::size_t len = 0;
  if (it != p.entries.end()) {
    len = it->second.size();
    for (std::size_t j = 0; j < len; ++j) {
      if (j == 0 || it->second[j] != it->second[j - 1]) out.push_back({d, j});
    }
  }
  if (static_cast<std::int64_t>(len) < irreducible_slots(q, d)) out.push_back({d, len});
  return out;
}

int d_t1_of(std::uint64_t q, const Profile& p) {
  const int dt = p.d_t();
  if (dt == 0) return 1;
  return static_cast<std::int64_t>(list_len(p, dt)) < irreducible_slots(q, dt) ? dt : dt + 1;
}

const char* kind_name(MoveKind k) {
  switch (k) {
    case MoveKind::kIdentity:
      return "identity";
    case MoveKind::kSwap:
      return "swap";
    case MoveKind::kLift:
      return "lift";
    case MoveKind::kDrop:
      return "drop";
    case MoveKind::kBlockUp:
      return "block_up";
    case MoveKind::kBlockDown:
      return "block_down";
  }
  return "?";
}

}  // namespace

MoveSpec MoveSpec::identity() { return {}; }

MoveSpec MoveSpec::swap(Slot i, Slot j, std::optional<Slot> k) {
  MoveSpec mv{MoveKind::kSwap, {{i, -1}, {j, +1}}};
  if (k) mv.changes.push_back({*k, +1});
  return mv;
}

MoveSpec MoveSpec::lift(Slot i, Slot k) { return {MoveKind::kLift, {{i, +1}, {k, -i.degree}}}; }

MoveSpec MoveSpec::drop(Slot i, Slot k) { return {MoveKind::kDrop, {{i, -1}, {k, +i.degree}}}; }

MoveSpec MoveSpec::block_up(const std::vector<Slot>& u, const std::vector<Slot>& v) {
  MoveSpec mv{MoveKind::kBlockUp, {}};
  for (const Slot& s : u) mv.changes.push_back({s, -1});
  for (const Slot& s : v) mv.changes.push_back({s, +1});
  return mv;
}

MoveSpec MoveSpec::block_down(const std::vector<Slot>& u, const std::vector<Slot>& v) {
  MoveSpec mv{MoveKind::kBlockDown, {}};
  for (const Slot& s : u) mv.changes.push_back({s, +1});
  for (const Slot& s : v) mv.changes.push_back({s, -1});
  return mv;
}

std::string MoveSpec::to_string() const {
  std::ostringstream out;
  out << kind_name(kind);
  for (const auto& [slot, delta] : changes) {
    out << ' ';
    if (slot.degree == 0) {
      out << 'y';
    } else {
      out << slot.degree << '.' << slot.index;
    }
    out << (delta > 0 ? "+" : "") << delta;
  }
  return out.str();
}

MoveOutcome apply_move(std::uint64_t q, const Profile& p, const MoveSpec& mv, Mode mode, int size) {
  auto fail = [&](const std::string& why) {
    throw std::invalid_argument("move '" + mv.to_string() + "' not applicable to " + p.to_string() + ": " + why);
  };
  std::map<int, std::vector<int>> lists(p.entries.begin(), p.entries.end());
  int y_delta = 0;
  bool touches_y = false;
  for (const auto& [slot, delta] : mv.changes) {
    if (slot.degree == 0) {
      if (mode == Mode::kOrdinary) fail("no slack in ordinary mode");
      touches_y = true;
      y_delta += delta;
      continue;
    }
    if (slot.degree < 0) fail("negative degree");
    if (static_cast<std::int64_t>(slot.index) >= irreducible_slots(q, slot.degree)) fail("slot beyond I(d)");
    auto& list = lists[slot.degree];
    if (list.size() <= slot.index) list.resize(slot.index + 1, 0);
    list[slot.index] += delta;
  }
  Profile out;
  out.entries = std::move(lists);
  for (const auto& [d, list] : out.entries) {
    for (int r : list) {
      if (r < 0) fail("negative multiplicity");
    }
  }
  out.normalize();
  const int xw = out.x_weight();
  if (xw > size) fail("weight exceeds " + std::to_string(size));
  if (mode == Mode::kSlack) {
    out.r0 = size - xw;
    if (touches_y && out.r0 != p.r0 + y_delta) fail("slack change does not balance the degree");
  }
  MoveOutcome res;
  res.before = count_of(p, mode);
  if (res.before == 0) fail("base count is zero");
  res.after = count_of(out, mode);
  res.ratio = Rational(res.after, res.before);
  res.profile = std::move(out);
  return res;
}

std::optional<MoveOutcome> try_apply_move(std::uint64_t q, const Profile& p, const MoveSpec& mv, Mode mode, int size) {
  try {
    return apply_move(q, p, mv, mode, size);
  } catch (const std::invalid_argument&) {
    return std::nullopt;
  }
}

std::vector<MoveSpec> candidate_moves(std::uint64_t q, const Profile& p, Mode mode, int size) {
  const bool slack = mode == Mode::kSlack;
  const int dt = p.d_t();
  const int dt1 = d_t1_of(q, p);
  const int top = std::max(dt + 1, dt1);
  std::vector<MoveSpec> out{MoveSpec::identity()};

  // Every linear slot up to the second absent one, plus y.
  std::vector<Slot> linear;
  const std::size_t lin_len = list_len(p, 1);
  for (std::size_t j = 0; j < lin_len + 2 && static_cast<std::uint64_t>(j) < q; ++j) linear.push_back({1, j});
  std::vector<Slot> sinks = linear;
  if (slack) sinks.push_back(Slot::y());

  for (int di = 1; di <= top; ++di) {
    for (const Slot& i : reps(q, p, di)) {
      const bool present = i.index < list_len(p, di);
      for (const Slot& k : sinks) {
        if (k == i) continue;
        out.push_back(MoveSpec::lift(i, k));
        if (present) out.push_back(MoveSpec::drop(i, k));
      }
      if (!present) continue;
      for (int dj = 1; dj < di; ++dj) {
        for (const Slot& j : reps(q, p, dj)) {
          for (const Slot& k : sinks) {
            if (k == j) continue;
            out.push_back(MoveSpec::swap(i, j, k));
          }
          if (slack) out.push_back(MoveSpec::swap(i, j));
        }
      }
    }
  }

  // Exchanges between a degree-d block and the degrees around d_t.
  for (int d = 1; d <= top; ++d) {
    const std::size_t len = list_len(p, d);
    const auto need_u = static_cast<std::size_t>(dt + 1);
    const int dv = dt + 1;
    const std::size_t vlen = list_len(p, dv);
    if (d != dv && len >= need_u &&
        static_cast<std::int64_t>(vlen + static_cast<std::size_t>(d)) <= irreducible_slots(q, dv)) {
      std::vector<Slot> v;
      for (int k = 0; k < d; ++k) v.push_back({dv, vlen + static_cast<std::size_t>(k)});
      std::vector<Slot> u_big;
      std::vector<Slot> u_small;
      for (std::size_t j = 0; j < need_u; ++j) {
        u_big.push_back({d, j});
        u_small.push_back({d, len - 1 - j});
      }
      out.push_back(MoveSpec::block_up(u_big, v));
      out.push_back(MoveSpec::block_up(u_small, v));
    }
    const int dw = dt1 - 1;
    if (dw >= 1 && d != dw) {
      const std::size_t wlen = list_len(p, dw);
      const auto need_v = static_cast<std::size_t>(d);
      const auto need_w = static_cast<std::size_t>(dw);
      const std::int64_t cap = irreducible_slots(q, d);
      if (wlen >= need_v && static_cast<std::int64_t>(need_w) <= cap) {
        std::vector<Slot> v;
        for (std::size_t j = 0; j < need_v; ++j) v.push_back({dw, j});
        // Smallest multiplicities first: absent slots, then the tail of the list.
        std::vector<Slot> u;
        for (std::size_t j = len; u.size() < need_w && static_cast<std::int64_t>(j) < cap; ++j) u.push_back({d, j});
        for (std::size_t j = len; u.size() < need_w && j > 0; --j) u.push_back({d, j - 1});
        if (u.size() == need_w) out.push_back(MoveSpec::block_down(u, v));
      }
    }
  }
  (void)size;
  return out;
}

std::vector<ViolationWitness> violation_moves(std::uint64_t q, const Profile& p) {
  std::vector<ViolationWitness> out;
  const int rho = p.rho();
  const int dt = p.d_t();
  const Slot k0{1, 0};
  const Slot k1{1, 1};

  // Larger degree with a strictly larger multiplicity than a lower one.
  for (int di = 2; di <= dt; ++di) {
    if (list_len(p, di) == 0) continue;
    const Slot i{di, 0};
    const int ri = p.mult(di, 0);
    for (int dj = 1; dj < di; ++dj) {
      const std::size_t len = list_len(p, dj);
      const bool has_absent = static_cast<std::int64_t>(len) < irreducible_slots(q, dj);
      const Slot j{dj, has_absent ? len : len - 1};
      const int rj = p.mult(dj, j.index);
      if (ri < rj + 1) continue;
      const Slot k = j == k0 ? k1 : k0;
      out.push_back({Violation::kNoHole, {MoveSpec::swap(i, j, k)}});
    }
  }

  const int dt1 = d_t1_of(q, p);
  for (int d = 1; d <= std::max(dt, dt1); ++d) {
    std::vector<Slot> slots;
    for (const Slot& s : reps(q, p, d)) {
      const bool present = s.index < list_len(p, d);
      if (present || d == dt1) slots.push_back(s);
    }
    for (const Slot& i : slots) {
      const int r = p.mult(d, i.index);
      if (d * (r + 2) < rho + 1) out.push_back({Violation::kWindowLeft, {MoveSpec::lift(i, k0)}});
      if (r > 0 && r * d >= rho + 1) {
        ViolationWitness w{Violation::kWindowRight, {MoveSpec::drop(i, k0)}};
        if (r * d == rho + 1) w.moves.push_back(MoveSpec::lift(k1, k0));
        out.push_back(std::move(w));
      }
    }
  }
  return out;
}

}  // namespace polycount
