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

// Classical card play: legal moves, trick resolution, double-dummy minimax
// and play-tree counting. Ground truth for the quantum engine.

#ifndef QSKAT_ORACLE_PLAY_H_
#define QSKAT_ORACLE_PLAY_H_

#include <cstdint>
#include <functional>
#include <random>
#include <stdexcept>
#include <vector>

#include "qskat/encoding/deal.h"

namespace qskat::oracle {

using encoding::BigUint;
using encoding::Card;
using encoding::GameType;

class OracleError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Played {
  int seat = 0;
  Card card;
  bool operator==(const Played&) const = default;
};

struct PlayState {
  int players = 3;
  GameType game;
  std::vector<std::vector<Card>> hands;  // per seat
  std::vector<Played> trick;             // current trick in play order
  int leader = 0;                        // seat that led the current trick
  int declarer = 0;
  int declarer_points = 0;
  int defender_points = 0;
  std::vector<Card> swept;
  bool follow_suit = true;  // false: every hand card is playable

  int ToMove() const;
  bool Terminal() const;
  // Throws OracleError when hands and trick do not fit together.
  void Validate() const;
};

// Leader: the whole hand. Follower: cards of the led effective suit (Jacks
// are trump) when held, else the whole hand. Sorted strongest first.
std::vector<Card> LegalMoves(const PlayState& state, int seat);

// Seat of the supremum of the trick; without one, the earliest-played
// maximal card wins.
int TrickWinner(const std::vector<Played>& played,
                const encoding::TrickOrder& order);

// Plays `card` for the seat to move and resolves a completed trick.
PlayState ApplyMove(const PlayState& state, Card card);

struct SolveResult {
  int declarer_points = 0;
  int defender_points = 0;
  std::vector<Played> line;  // principal variation from `start`
};

enum class Search {
  kMinimax,    // plain recursion, the auditable reference
  kAlphaBeta,  // same value and line, pruned
};

// Declarer maximizes its final points, the defenders jointly minimize.
// Among equally good moves the strongest card (canonical order) is chosen.
SolveResult SolveDeal(const PlayState& start, Search search = Search::kMinimax);

using TerminalPredicate = std::function<bool(const PlayState&)>;

struct PathCounts {
  BigUint all = 0;
  BigUint winning = 0;
};

inline constexpr std::uint64_t kDefaultPathNodeCap = 50'000'000;

// Legal play sequences to the end of the game and those ending favorably.
// Throws OracleError after visiting more than `node_cap` nodes.
PathCounts CountPaths(const PlayState& start, const TerminalPredicate& favorable,
                      std::uint64_t node_cap = kDefaultPathNodeCap);

// Probability of a favorable end when every seat picks uniformly among its
// legal moves.
double UniformPlayWinProbability(const PlayState& start,
                                 const TerminalPredicate& favorable);

// Legal-move counts along one uniformly random playout.
std::vector<double> RandomPlayoutBranching(const PlayState& start,
                                           std::mt19937_64& rng);

// Mean over games of the per-game geometric mean of branching factors.
double BranchingGeomean(const std::vector<std::vector<double>>& games);

// Deck-order start state for a deal: seats 0..players-1 hold their cards,
// the Skat is left out.
PlayState StartState(const encoding::DealSpec& spec, const encoding::Deal& deal,
                     int declarer, int leader = 0);

}  // namespace qskat::oracle

#endif  // QSKAT_ORACLE_PLAY_H_
