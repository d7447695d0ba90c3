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

#include "qskat/scoring/payoff.h"

#include <algorithm>
#include <sstream>

#include "qskat/scoring/score.h"

namespace qskat::scoring {

using encoding::Card;
using encoding::GameType;
using encoding::Rank;
using encoding::Suit;

int BaseValue(const GameType& game) {
  if (game.variant == GameType::Variant::kGrand) return 24;
  switch (game.trump) {
    case Suit::kDiamonds: return 9;
    case Suit::kHearts: return 10;
    case Suit::kSpades: return 11;
    case Suit::kClubs: return 12;
  }
  return 0;
}

namespace {

// Trumps from the top: Jacks, then the trump suit without its Jack.
std::vector<Card> TrumpLadder(const GameType& game) {
  std::vector<Card> ladder;
  for (Suit s : {Suit::kClubs, Suit::kSpades, Suit::kHearts, Suit::kDiamonds}) {
    ladder.push_back({s, Rank::kJack});
  }
  if (game.variant == GameType::Variant::kSuit) {
    for (Rank r : {Rank::kAce, Rank::k10, Rank::kKing, Rank::kQueen, Rank::k9,
                   Rank::k8, Rank::k7}) {
      ladder.push_back({game.trump, r});
    }
  }
  return ladder;
}

}  // namespace

int MatadorRun(const std::vector<Card>& declarer_cards, const GameType& game) {
  const auto ladder = TrumpLadder(game);
  const auto held = [&](Card c) {
    return std::find(declarer_cards.begin(), declarer_cards.end(), c) !=
           declarer_cards.end();
  };
  const bool with = held(ladder.front());
  int run = 0;
  while (run < static_cast<int>(ladder.size()) && held(ladder[run]) == with) {
    ++run;
  }
  return run;
}

int GameValue(const std::vector<Card>& declarer_cards, const GameType& game) {
  return (MatadorRun(declarer_cards, game) + 1) * BaseValue(game);
}

double Payoff(double p_win, int value_won, int value_lost,
              const PayoffParams& params) {
  if (!(p_win >= 0.0 && p_win <= 1.0)) {
    throw ScoringError("win probability must lie in [0, 1]");
  }
  const double bonus = params.seeger_fabian ? 50.0 : 0.0;
  return p_win * (value_won + bonus) -
         (1.0 - p_win) * (params.loss_multiplier * value_lost + bonus);
}

double BreakEven(int value_won, int value_lost, const PayoffParams& params) {
  const double bonus = params.seeger_fabian ? 50.0 : 0.0;
  const double loss = params.loss_multiplier * value_lost + bonus;
  const double denom = value_won + bonus + loss;
  if (denom <= 0.0) throw ScoringError("payoff has no break-even point");
  return loss / denom;
}

std::vector<PayoffRow> PayoffCurve(const std::vector<PayoffChoice>& choices,
                                   int points, const PayoffParams& params) {
  if (points < 2) throw ScoringError("payoff curve needs at least two points");
  std::vector<PayoffRow> rows;
  for (const auto& choice : choices) {
    for (int i = 0; i < points; ++i) {
      const double p = static_cast<double>(i) / (points - 1);
      rows.push_back({p, choice.name,
                      Payoff(p, choice.value_won, choice.value_lost, params)});
    }
  }
  return rows;
}

std::vector<PayoffChoice> DefaultChoices() {
  std::vector<PayoffChoice> out;
  const std::pair<const char*, GameType> games[] = {
      {"diamonds", GameType::SuitGame(Suit::kDiamonds)},
      {"hearts", GameType::SuitGame(Suit::kHearts)},
      {"spades", GameType::SuitGame(Suit::kSpades)},
      {"clubs", GameType::SuitGame(Suit::kClubs)},
      {"grand", GameType::Grand()},
  };
  for (const auto& [name, game] : games) {
    const int v = 2 * BaseValue(game);
    out.push_back({name, v, v});
  }
  return out;
}

std::string PayoffCurveToCsv(const std::vector<PayoffRow>& rows) {
  std::ostringstream os;
  os << "p,choice,payoff\n";
  for (const auto& r : rows) os << r.p << "," << r.choice << "," << r.payoff << "\n";
  return os.str();
}

}  // namespace qskat::scoring
