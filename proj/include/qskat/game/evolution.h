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

#ifndef QSKAT_GAME_EVOLUTION_H_
#define QSKAT_GAME_EVOLUTION_H_

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"
#include "qskat/encoding/layout.h"
#include "qskat/qsim/sparse_state.h"

namespace qskat::game {

using encoding::Card;
using encoding::CardLayout;
using qsim::SparseState;

class GameError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class EvolutionMode {
  kPaperExact,   // every hand card is playable; fixed seat order per round
  kHybridLegal,  // per-branch legal moves; winner leads when tracked
};

// Fused per-branch kernels (parallel) or the gate-level circuit built from
// pattern-conditioned SP / X gates (serial reference used by tests and the
// benchmark).
enum class Backend { kKernel, kReference };

struct RoundPlan {
  int round = 1;            // 1-based
  std::vector<int> order;   // seat order for PaperExact
  int hand_count = 1;       // cards per hand at the start of the round
  int start_step = 0;       // > 0 when earlier plays were applied already
};

// Moves `card` from hand to table on branches where its ancilla is 0 and it
// is not stacked: the controlled-X play circuit with the ancilla as control.
SparseState PlaySingleCard(const SparseState& state, const CardLayout& layout,
                           Card card);

// Every branch splits into k equal children, one per hand card of `player`.
// Throws GameError when a branch holds a different number of cards.
SparseState CpGate(const SparseState& state, const CardLayout& layout,
                   int player, int k, Backend backend = Backend::kKernel);

// Marks every card that has left the hand (table or stack) as played.
SparseState ResetAncillas(const SparseState& state, const CardLayout& layout,
                          Backend backend = Backend::kKernel);

// Moves the k table cards to the winner's stack. The winner is the supremum
// of the table cards; among several maximal cards the earliest played wins,
// with play order given by `seat_order` (or the branch's leader register when
// the layout tracks leaders). Writes the winner into the next round's leader
// register when present.
SparseState TtGate(const SparseState& state, const CardLayout& layout, int k,
                   int round, const std::vector<int>& seat_order,
                   Backend backend = Backend::kKernel);

// Plays `card` for `player` without branching. Throws when some branch does
// not have the card in that hand.
SparseState FixedFirstCard(const SparseState& state, const CardLayout& layout,
                           int player, Card card);

// Rule-legal play of step `step` (0 = lead) in round `round`: the seat to
// move and the led suit are read per branch; the branch splits equally over
// its legal cards.
SparseState HybridPlayStep(const SparseState& state, const CardLayout& layout,
                           int round, int step,
                           const std::vector<int>& seat_order,
                           Backend backend = Backend::kKernel);

// tt . reset . play(last) ... play(first).
SparseState RoundOperator(const SparseState& state, const CardLayout& layout,
                          const RoundPlan& plan, EvolutionMode mode,
                          Backend backend = Backend::kKernel);

// Rounds `first_round`..layout.rounds() with the given seat order.
SparseState PlayOut(const SparseState& state, const CardLayout& layout,
                    EvolutionMode mode, const std::vector<int>& seat_order,
                    int first_round = 1, int first_start_step = 0,
                    Backend backend = Backend::kKernel);

// Game script: replayable list of operations.
struct ScriptOp {
  enum class Kind { kCp, kTt, kReset, kFixed, kHybrid };
  Kind kind = Kind::kCp;
  int player = 0;
  int k = 0;
  int round = 1;
  int step = 0;
  std::optional<Card> card;
};
using GameScript = std::vector<ScriptOp>;

nlohmann::json ScriptToJson(const GameScript& script);
GameScript ScriptFromJson(const nlohmann::json& j);

SparseState RunScript(const SparseState& state, const CardLayout& layout,
                      const GameScript& script,
                      const std::vector<int>& seat_order,
                      Backend backend = Backend::kKernel);

// PaperExact script for a full game with fixed seat order.
GameScript PaperExactScript(const CardLayout& layout,
                            const std::vector<int>& seat_order);

// Default seat order 0..players-1.
std::vector<int> DefaultSeatOrder(const CardLayout& layout);

// Index of the winning card among `table` (layout positions, in play order).
int TrickWinnerIndex(const CardLayout& layout, const std::vector<int>& table);

}  // namespace qskat::game

#endif  // QSKAT_GAME_EVOLUTION_H_
