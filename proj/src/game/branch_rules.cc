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

#include "branch_rules.h"

#include <algorithm>

namespace qskat::game::internal {

using encoding::Location;

std::vector<int> HandPositions(const CardLayout& layout, const BasisIndex& key,
                               int seat) {
  std::vector<int> hand;
  for (int pos = 0; pos < layout.num_cards(); ++pos) {
    if (layout.HolderAt(key, pos) == seat && !layout.PlayedAt(key, pos) &&
        layout.LocationAt(key, pos) == Location::kHand) {
      hand.push_back(pos);
    }
  }
  return hand;
}

std::vector<int> TrickSeatOrder(const CardLayout& layout, const BasisIndex& key,
                                int round, const std::vector<int>& seat_order) {
  if (!layout.has_leader_registers()) return seat_order;
  const int leader = layout.LeaderAt(key, round);
  std::vector<int> order;
  for (int i = 0; i < layout.players(); ++i) {
    order.push_back((leader + i) % layout.players());
  }
  return order;
}

std::vector<int> TableInPlayOrder(const CardLayout& layout,
                                  const BasisIndex& key,
                                  const std::vector<int>& trick_order) {
  std::vector<std::pair<int, int>> ranked;  // (play index, position)
  for (int pos = 0; pos < layout.num_cards(); ++pos) {
    if (layout.LocationAt(key, pos) != Location::kTable) continue;
    const int seat = layout.HolderAt(key, pos);
    auto it = std::find(trick_order.begin(), trick_order.end(), seat);
    const int idx = it == trick_order.end()
                        ? static_cast<int>(trick_order.size())
                        : static_cast<int>(it - trick_order.begin());
    ranked.push_back({idx, pos});
  }
  std::stable_sort(ranked.begin(), ranked.end());
  std::vector<int> table;
  for (const auto& [idx, pos] : ranked) table.push_back(pos);
  return table;
}

LegalChoice LegalPositions(const CardLayout& layout, const BasisIndex& key,
                           int round, int step,
                           const std::vector<int>& seat_order) {
  const auto order = TrickSeatOrder(layout, key, round, seat_order);
  if (step < 0 || step >= static_cast<int>(order.size())) {
    throw GameError("play step out of range");
  }
  LegalChoice choice;
  choice.seat = order[step];
  choice.hand = HandPositions(layout, key, choice.seat);
  if (step == 0) {
    choice.legal = choice.hand;
    return choice;
  }
  const auto table = TableInPlayOrder(layout, key, order);
  if (table.empty()) throw GameError("follower to move on an empty table");
  choice.led = table.front();
  const auto led_suit =
      encoding::EffectiveSuit(layout.cards()[choice.led].card, layout.game());
  for (int pos : choice.hand) {
    if (encoding::EffectiveSuit(layout.cards()[pos].card, layout.game()) ==
        led_suit) {
      choice.legal.push_back(pos);
    }
  }
  if (choice.legal.empty()) choice.legal = choice.hand;
  return choice;
}

BasisIndex TakeTrick(const CardLayout& layout, const BasisIndex& key, int k,
                     int round, const std::vector<int>& seat_order) {
  const auto order = TrickSeatOrder(layout, key, round, seat_order);
  const auto table = TableInPlayOrder(layout, key, order);
  if (static_cast<int>(table.size()) != k) {
    throw GameError("branch has " + std::to_string(table.size()) +
                    " table cards, expected " + std::to_string(k));
  }
  const int winner = layout.HolderAt(key, table[TrickWinnerIndex(layout, table)]);
  BasisIndex out = key;
  for (int pos : table) {
    if (layout.TrickAt(key, pos) != 0) {
      throw GameError("trick register already written");
    }
    out.Set(layout.cards()[pos].stack, true);
    layout.SetHolder(out, pos, winner);
    layout.SetTrick(out, pos, round);
  }
  if (layout.has_leader_registers() && round < layout.rounds()) {
    if (layout.LeaderAt(out, round + 1) != 0) {
      throw GameError("leader register already written");
    }
    layout.SetLeader(out, round + 1, winner);
  }
  return out;
}

}  // namespace qskat::game::internal
