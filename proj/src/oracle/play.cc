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

#include "qskat/oracle/play.h"

#include <algorithm>
#include <climits>
#include <cmath>
#include <set>

namespace qskat::oracle {

using encoding::EffectiveSuit;
using encoding::TrickOrder;

namespace {

void SortStrongestFirst(std::vector<Card>& cards, const GameType& game) {
  std::sort(cards.begin(), cards.end(), [&game](Card a, Card b) {
    return encoding::CanonicalRank(a, game) < encoding::CanonicalRank(b, game);
  });
}

bool OnDeclarerSide(const PlayState& s, int seat) { return seat == s.declarer; }

}  // namespace

int PlayState::ToMove() const {
  return (leader + static_cast<int>(trick.size())) % players;
}

bool PlayState::Terminal() const {
  if (!trick.empty()) return false;
  for (const auto& h : hands) {
    if (!h.empty()) return false;
  }
  return true;
}

void PlayState::Validate() const {
  if (players != 2 && players != 3) throw OracleError("players must be 2 or 3");
  if (static_cast<int>(hands.size()) != players) {
    throw OracleError("one hand per seat required");
  }
  if (leader < 0 || leader >= players || declarer < 0 || declarer >= players) {
    throw OracleError("seat out of range");
  }
  if (static_cast<int>(trick.size()) >= players) {
    throw OracleError("trick already complete");
  }
  std::set<Card> seen;
  const auto add = [&seen](Card c) {
    if (!seen.insert(c).second) throw OracleError("card appears twice");
  };
  for (const auto& h : hands) {
    for (Card c : h) add(c);
  }
  for (std::size_t i = 0; i < trick.size(); ++i) {
    if (trick[i].seat != (leader + static_cast<int>(i)) % players) {
      throw OracleError("trick is not in seat order");
    }
    add(trick[i].card);
  }
  for (Card c : swept) add(c);
  // Seats that already played to this trick hold one card fewer.
  const std::size_t base = hands[leader].size() + (trick.empty() ? 0 : 1);
  for (int i = 0; i < players; ++i) {
    const int seat = (leader + i) % players;
    const std::size_t expect = base - (i < static_cast<int>(trick.size()) ? 1 : 0);
    if (hands[seat].size() != expect) throw OracleError("hand sizes do not match");
  }
}

std::vector<Card> LegalMoves(const PlayState& state, int seat) {
  if (seat != state.ToMove()) throw OracleError("seat is not to move");
  std::vector<Card> hand = state.hands[seat];
  SortStrongestFirst(hand, state.game);
  if (state.trick.empty() || !state.follow_suit) return hand;
  const auto led = EffectiveSuit(state.trick.front().card, state.game);
  std::vector<Card> follow;
  for (Card c : hand) {
    if (EffectiveSuit(c, state.game) == led) follow.push_back(c);
  }
  return follow.empty() ? hand : follow;
}

int TrickWinner(const std::vector<Played>& played, const TrickOrder& order) {
  if (played.empty()) throw OracleError("empty trick");
  for (std::size_t i = 0; i < played.size(); ++i) {
    bool maximal = true;
    for (std::size_t j = 0; j < played.size() && maximal; ++j) {
      if (i != j && order.Beats(played[j].card, played[i].card) == true) {
        maximal = false;
      }
    }
    if (maximal) return played[i].seat;
  }
  throw OracleError("trick has no maximal card");
}

PlayState ApplyMove(const PlayState& state, Card card) {
  const int seat = state.ToMove();
  const auto legal = LegalMoves(state, seat);
  if (std::find(legal.begin(), legal.end(), card) == legal.end()) {
    throw OracleError(card.ToString() + " is not a legal move for seat " +
                      std::to_string(seat));
  }
  PlayState next = state;
  auto& hand = next.hands[seat];
  hand.erase(std::find(hand.begin(), hand.end(), card));
  next.trick.push_back({seat, card});
  if (static_cast<int>(next.trick.size()) == next.players) {
    const int winner = TrickWinner(next.trick, TrickOrder({}, next.game));
    int points = 0;
    for (const auto& p : next.trick) {
      points += encoding::CardPoints(p.card);
      next.swept.push_back(p.card);
    }
    (OnDeclarerSide(next, winner) ? next.declarer_points
                                  : next.defender_points) += points;
    next.trick.clear();
    next.leader = winner;
  }
  return next;
}

namespace {

int Minimax(const PlayState& s) {
  if (s.Terminal()) return s.declarer_points;
  const bool maximize = OnDeclarerSide(s, s.ToMove());
  int best = maximize ? INT_MIN : INT_MAX;
  for (Card c : LegalMoves(s, s.ToMove())) {
    const int v = Minimax(ApplyMove(s, c));
    best = maximize ? std::max(best, v) : std::min(best, v);
  }
  return best;
}

// Fail-hard alpha-beta; exact whenever the true value lies in (alpha, beta).
int AlphaBeta(const PlayState& s, int alpha, int beta) {
  if (s.Terminal()) return s.declarer_points;
  const bool maximize = OnDeclarerSide(s, s.ToMove());
  for (Card c : LegalMoves(s, s.ToMove())) {
    const int v = AlphaBeta(ApplyMove(s, c), alpha, beta);
    if (maximize) {
      alpha = std::max(alpha, v);
    } else {
      beta = std::min(beta, v);
    }
    if (alpha >= beta) break;
  }
  return maximize ? alpha : beta;
}

int Value(const PlayState& s, Search search) {
  if (search == Search::kMinimax) return Minimax(s);
  return AlphaBeta(s, INT_MIN + 1, INT_MAX - 1);
}

}  // namespace

SolveResult SolveDeal(const PlayState& start, Search search) {
  start.Validate();
  SolveResult out;
  PlayState s = start;
  const int value = Value(s, search);
  // Walk down, taking the first move (strongest card) that keeps the value.
  while (!s.Terminal()) {
    bool moved = false;
    for (Card c : LegalMoves(s, s.ToMove())) {
      PlayState child = ApplyMove(s, c);
      if (Value(child, search) == value) {
        out.line.push_back({s.ToMove(), c});
        s = std::move(child);
        moved = true;
        break;
      }
    }
    if (!moved) throw OracleError("principal variation lost its value");
  }
  out.declarer_points = s.declarer_points;
  out.defender_points = s.defender_points;
  return out;
}

namespace {

void Count(const PlayState& s, const TerminalPredicate& favorable,
           std::uint64_t cap, std::uint64_t& nodes, PathCounts& out) {
  if (++nodes > cap) throw OracleError("path count exceeds node cap");
  if (s.Terminal()) {
    out.all += 1;
    if (favorable(s)) out.winning += 1;
    return;
  }
  for (Card c : LegalMoves(s, s.ToMove())) {
    Count(ApplyMove(s, c), favorable, cap, nodes, out);
  }
}

double Uniform(const PlayState& s, const TerminalPredicate& favorable) {
  if (s.Terminal()) return favorable(s) ? 1.0 : 0.0;
  const auto moves = LegalMoves(s, s.ToMove());
  double sum = 0.0;
  for (Card c : moves) sum += Uniform(ApplyMove(s, c), favorable);
  return sum / static_cast<double>(moves.size());
}

}  // namespace

PathCounts CountPaths(const PlayState& start, const TerminalPredicate& favorable,
                      std::uint64_t node_cap) {
  start.Validate();
  PathCounts out;
  std::uint64_t nodes = 0;
  Count(start, favorable, node_cap, nodes, out);
  return out;
}

double UniformPlayWinProbability(const PlayState& start,
                                 const TerminalPredicate& favorable) {
  start.Validate();
  return Uniform(start, favorable);
}

std::vector<double> RandomPlayoutBranching(const PlayState& start,
                                           std::mt19937_64& rng) {
  start.Validate();
  std::vector<double> factors;
  PlayState s = start;
  while (!s.Terminal()) {
    const auto moves = LegalMoves(s, s.ToMove());
    factors.push_back(static_cast<double>(moves.size()));
    std::uniform_int_distribution<std::size_t> pick(0, moves.size() - 1);
    s = ApplyMove(s, moves[pick(rng)]);
  }
  return factors;
}

double BranchingGeomean(const std::vector<std::vector<double>>& games) {
  if (games.empty()) throw OracleError("no games given");
  double sum = 0.0;
  for (const auto& g : games) {
    if (g.empty()) throw OracleError("game without moves");
    double log_sum = 0.0;
    for (double b : g) {
      if (!(b >= 1.0)) throw OracleError("branching factors must be >= 1");
      log_sum += std::log(b);
    }
    sum += std::exp(log_sum / static_cast<double>(g.size()));
  }
  return sum / static_cast<double>(games.size());
}

PlayState StartState(const encoding::DealSpec& spec, const encoding::Deal& deal,
                     int declarer, int leader) {
  PlayState s;
  s.players = spec.players;
  s.game = spec.game;
  s.hands.resize(spec.players);
  for (int seat = 0; seat < spec.players; ++seat) {
    s.hands[seat] = deal.HandOf(spec, seat);
  }
  s.declarer = declarer;
  s.leader = leader;
  s.Validate();
  return s;
}

}  // namespace qskat::oracle
