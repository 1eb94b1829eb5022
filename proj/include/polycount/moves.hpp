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

#ifndef POLYCOUNT_MOVES_HPP_
#define POLYCOUNT_MOVES_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "polycount/extremal.hpp"
#include "polycount/profile.hpp"
#include "polycount/types.hpp"

namespace polycount {

// One irreducible position of a profile. Degree 0 is the slack y. Indices
// below the list length name present factors (in list order); larger indices
// name distinct absent irreducibles of that degree.
struct Slot {
  int degree = 1;
  std::size_t index = 0;

  static Slot y() { return {0, 0}; }
  friend bool operator==(const Slot&, const Slot&) = default;
};

enum class MoveKind { kIdentity, kSwap, kLift, kDrop, kBlockUp, kBlockDown };

// A multiplicity exchange from the structural proofs.
struct MoveSpec {
  MoveKind kind = MoveKind::kIdentity;
  std::vector<std::pair<Slot, int>> changes;

  static MoveSpec identity();
  // s * p_k * p_j / p_i. Without k (slack mode) the freed degree goes to y.
  static MoveSpec swap(Slot i, Slot j, std::optional<Slot> k = std::nullopt);
  // s * p_i / p_k^{d_i}, k linear or y.
  static MoveSpec lift(Slot i, Slot k);
  // s * p_k^{d_i} / p_i, k linear or y.
  static MoveSpec drop(Slot i, Slot k);
  // s * prod_V p / prod_U p
  static MoveSpec block_up(const std::vector<Slot>& u, const std::vector<Slot>& v);
  // s * prod_U p / prod_V p
  static MoveSpec block_down(const std::vector<Slot>& u, const std::vector<Slot>& v);

  std::string to_string() const;
};

struct MoveOutcome {
  Profile profile;
  BigInt before = 0;
  BigInt after = 0;
  // after / before: Phi in ordinary mode, Phi_n in slack mode.
  Rational ratio = 0;
};

// Ordinary mode keeps r0 = 0 and requires x-weight <= size. Slack mode
// resets r0 to size minus the new x-weight, which must agree with any explicit
// change to y. Throws std::invalid_argument when the move is not applicable:
// a slot beyond the I(d) irreducibles, a negative multiplicity, a weight
// overflow, or a base count of zero.
MoveOutcome apply_move(std::uint64_t q, const Profile& p, const MoveSpec& mv, Mode mode, int size);
std::optional<MoveOutcome> try_apply_move(std::uint64_t q, const Profile& p, const MoveSpec& mv, Mode mode, int size);

// Representative moves of every kind: one slot per distinct multiplicity at
// each degree, plus the first absent slot.
std::vector<MoveSpec> candidate_moves(std::uint64_t q, const Profile& p, Mode mode, int size);

enum class Violation { kNoHole, kWindowLeft, kWindowRight };

// A structural violation in an ordinary profile together with the move
// sequence its proof applies; the product of the ratios exceeds 1.
struct ViolationWitness {
  Violation violation;
  std::vector<MoveSpec> moves;
};
std::vector<ViolationWitness> violation_moves(std::uint64_t q, const Profile& p);

}  // namespace polycount

#endif  // POLYCOUNT_MOVES_HPP_
