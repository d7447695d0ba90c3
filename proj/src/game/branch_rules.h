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

// Per-branch game rules shared by the kernel and reference backends.

#ifndef QSKAT_SRC_GAME_BRANCH_RULES_H_
#define QSKAT_SRC_GAME_BRANCH_RULES_H_

#include <vector>

#include "qskat/game/evolution.h"

namespace qskat::game::internal {

using qsim::BasisIndex;

// Positions of cards `seat` still holds (player code matches, ancilla 0,
// location hand).
std::vector<int> HandPositions(const CardLayout& layout, const BasisIndex& key,
                               int seat);

// Seat order of this trick on this branch: the leader register rotated
// order when the layout tracks leaders, else `seat_order` as given.
std::vector<int> TrickSeatOrder(const CardLayout& layout, const BasisIndex& key,
                                int round, const std::vector<int>& seat_order);

// Table positions sorted by play order.
std::vector<int> TableInPlayOrder(const CardLayout& layout,
                                  const BasisIndex& key,
                                  const std::vector<int>& trick_order);

struct LegalChoice {
  int seat = 0;
  int led = -1;  // layout position of the led card, -1 when leading
  std::vector<int> hand;
  std::vector<int> legal;
};

LegalChoice LegalPositions(const CardLayout& layout, const BasisIndex& key,
                           int round, int step,
                           const std::vector<int>& seat_order);

// Key after taking the trick on this branch. Throws when the table does not
// hold exactly k cards.
BasisIndex TakeTrick(const CardLayout& layout, const BasisIndex& key, int k,
                     int round, const std::vector<int>& seat_order);

}  // namespace qskat::game::internal

#endif  // QSKAT_SRC_GAME_BRANCH_RULES_H_
