// Copyright 2026 The QSkat Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Gate-level realization of the game operators. Each conditioned product
// prod_i C_i | (alpha = i) is applied one pattern at a time, only for the
// patterns present in the support. Serial and slow; kept as the reference
// the fused kernels are checked against.

#include <cstdint>
#include <set>

#include "branch_rules.h"
#include "qskat/qsim/gate.h"

namespace qskat::game::reference {

using encoding::Location;
using qsim::BasisIndex;
using qsim::Condition;

namespace {

using Mask = std::uint64_t;

Mask ToMask(const std::vector<int>& positions) {
  Mask m = 0;
  for (int p : positions) m |= Mask{1} << p;
  return m;
}

std::vector<int> FromMask(Mask m) {
  std::vector<int> positions;
  for (int p = 0; m != 0; ++p, m >>= 1) {
    if (m & 1) positions.push_back(p);
  }
  return positions;
}

// alpha: cards whose player code equals `seat` and whose ancilla is 0. Reads
// only player and ancilla qubits.
Mask AlphaPattern(const CardLayout& layout, const BasisIndex& key, int seat) {
  Mask m = 0;
  for (int pos = 0; pos < layout.num_cards(); ++pos) {
    if (layout.HolderAt(key, pos) == seat && !layout.PlayedAt(key, pos)) {
      m |= Mask{1} << pos;
    }
  }
  return m;
}

std::vector<int> TableQubits(const CardLayout& layout,
                             const std::vector<int>& positions) {
  std::vector<int> q;
  for (int p : positions) q.push_back(layout.cards()[p].table);
  return q;
}

}  // namespace

SparseState CpGate(const SparseState& state, const CardLayout& layout,
                   int player, int k) {
  std::set<Mask> patterns;
  for (const auto& e : state.entries()) {
    patterns.insert(AlphaPattern(layout, e.key, player));
  }
  SparseState s = state;
  for (Mask alpha : patterns) {
    const auto cards = FromMask(alpha);
    if (static_cast<int>(cards.size()) != k) {
      throw GameError("branch holds " + std::to_string(cards.size()) +
                      " cards for seat " + std::to_string(player) +
                      ", expected " + std::to_string(k));
    }
    const Condition cond = Condition::Pattern(
        layout.HandPatternQubits(), [&layout, player, alpha](const BasisIndex& key) {
          return AlphaPattern(layout, key, player) == alpha;
        });
    s = qsim::ApplySp(s, TableQubits(layout, cards), layout.scratch(), cond);
  }
  return s;
}

SparseState ResetAncillas(const SparseState& state, const CardLayout& layout) {
  SparseState s = state;
  for (const auto& cq : layout.cards()) {
    s = qsim::ApplyGate(s, qsim::PauliX{cq.ancilla},
                        qsim::ControlSpec{{cq.table, true}, {cq.stack, false}});
  }
  return s;
}

SparseState TtGate(const SparseState& state, const CardLayout& layout, int k,
                   int round, const std::vector<int>& seat_order) {
  // One D_i per distinct table configuration: the pattern fixes which cards
  // lie on the table and who played them, hence the flips to apply.
  std::set<std::pair<BasisIndex, BasisIndex>> configs;  // (pattern, flips)
  BasisIndex pattern_mask;
  for (const auto& cq : layout.cards()) {
    for (int q : cq.player) pattern_mask.Set(q, true);
    pattern_mask.Set(cq.table, true);
    pattern_mask.Set(cq.stack, true);
  }
  if (layout.has_leader_registers()) {
    for (int q : layout.LeaderRegister(round)) pattern_mask.Set(q, true);
    if (round < layout.rounds()) {
      for (int q : layout.LeaderRegister(round + 1)) pattern_mask.Set(q, true);
    }
  }
  for (const auto& e : state.entries()) {
    const BasisIndex after =
        internal::TakeTrick(layout, e.key, k, round, seat_order);
    configs.insert({BasisIndex(e.key.raw() & pattern_mask.raw()),
                    BasisIndex(e.key.raw() ^ after.raw())});
  }
  SparseState s = state;
  for (const auto& [pattern, flips] : configs) {
    s = qsim::ApplyBasisMap(s, [&](const BasisIndex& key) {
      if (BasisIndex(key.raw() & pattern_mask.raw()) != pattern) return key;
      return BasisIndex(key.raw() ^ flips.raw());
    });
  }
  return s;
}

SparseState HybridPlayStep(const SparseState& state, const CardLayout& layout,
                           int round, int step,
                           const std::vector<int>& seat_order) {
  struct Config {
    int seat;
    int led;
    int leader;
    Mask alpha;
    Mask legal;
    auto operator<=>(const Config&) const = default;
  };
  std::set<Config> configs;
  for (const auto& e : state.entries()) {
    const auto choice =
        internal::LegalPositions(layout, e.key, round, step, seat_order);
    const int leader =
        layout.has_leader_registers() ? layout.LeaderAt(e.key, round) : -1;
    configs.insert({choice.seat, choice.led, leader,
                    AlphaPattern(layout, e.key, choice.seat),
                    ToMask(choice.legal)});
  }
  SparseState s = state;
  for (const Config& c : configs) {
    std::vector<int> reads = layout.HandPatternQubits();
    if (layout.has_leader_registers()) {
      const auto& reg = layout.LeaderRegister(round);
      reads.insert(reads.end(), reg.begin(), reg.end());
    }
    if (c.led >= 0) {
      reads.push_back(layout.cards()[c.led].table);
      reads.push_back(layout.cards()[c.led].stack);
    }
    const int trick_leader = c.leader >= 0 ? c.leader : seat_order.front();
    const Condition cond = Condition::Pattern(
        reads, [&layout, &c, round, trick_leader](const BasisIndex& key) {
          if (c.leader >= 0 && layout.LeaderAt(key, round) != c.leader) {
            return false;
          }
          if (AlphaPattern(layout, key, c.seat) != c.alpha) return false;
          if (c.led < 0) return true;
          return layout.LocationAt(key, c.led) == Location::kTable &&
                 layout.HolderAt(key, c.led) == trick_leader;
        });
    s = qsim::ApplySp(s, TableQubits(layout, FromMask(c.legal)),
                      layout.scratch(), cond);
  }
  return s;
}

}  // namespace qskat::game::reference
