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

// End-game scenarios seen from one defender: own hand, unseen cards,
// knowledge about how the unseen cards are split, and the points already
// taken. Card quality counts the consistent deals a lead wins.

#ifndef QSKAT_ORACLE_SCENARIO_H_
#define QSKAT_ORACLE_SCENARIO_H_

#include <string>
#include <vector>

#include "json.hpp"
#include "qskat/oracle/play.h"

namespace qskat::oracle {

struct Scenario {
  GameType game;
  int our_seat = 0;
  int declarer_seat = 2;
  int leader = 0;
  std::vector<Card> our_hand;
  std::vector<Card> unseen;
  // "none" or "<n>-trumps-<m>-<suit>s-each" (e.g. "2-trumps-1-heart-each"):
  // every other seat holds n trumps and m non-trump cards of the suit.
  std::string constraints = "none";
  int declarer_points = 0;
  int defender_points = 0;

  int partner_seat() const { return 3 - our_seat - declarer_seat; }
  // Points of the whole game: taken so far plus everything in play.
  int total_points() const;
  // The declarer wins with more than half of the total.
  bool DefendersWin(int final_declarer_points) const;

  void Validate() const;
  encoding::DealSpec ToDealSpec() const;
  PlayState Start(const encoding::DealSpec& spec, const encoding::Deal& deal) const;

  static Scenario FromJson(const nlohmann::json& j);
  nlohmann::json ToJson() const;
};

// Deals consistent with the knowledge and with every move in `history`
// being legal, in enumeration order.
std::vector<encoding::Deal> ConsistentDeals(const Scenario& scenario,
                                            const std::vector<Played>& history);

// Replays `history` on one deal; throws OracleError on an illegal move.
PlayState Replay(const Scenario& scenario, const encoding::Deal& deal,
                 const std::vector<Played>& history);

enum class Parallelism { kParallel, kSerial };

struct CardQuality {
  Card card;
  int wins = 0;    // deals the defenders win after this card, optimal play
  int total = 0;   // consistent deals
  double p_win = 0;
  // Uniform-play variant: favorable play sequences over all sequences.
  BigUint winning_paths = 0;
  BigUint all_paths = 0;
};

struct QualityReport {
  int to_move = 0;
  int deals_total = 0;
  // Deals the defenders win with optimal play from here, all hands open.
  int deals_won = 0;
  double p_win = 0;
  std::vector<CardQuality> qualities;  // empty unless our seat is to move
  // Deals no candidate wins (our seat to move only).
  std::vector<encoding::Deal> unbeatable;
  bool terminal = false;
};

// Quality of `candidate` for our seat, which must be to move.
CardQuality EvaluateCard(const Scenario& scenario,
                         const std::vector<Played>& history, Card candidate,
                         Parallelism parallelism = Parallelism::kParallel);

QualityReport EvaluatePosition(const Scenario& scenario,
                               const std::vector<Played>& history,
                               Parallelism parallelism = Parallelism::kParallel);

nlohmann::json QualityToJson(const CardQuality& q);
nlohmann::json ReportToJson(const Scenario& scenario, const QualityReport& r);

}  // namespace qskat::oracle

#endif  // QSKAT_ORACLE_SCENARIO_H_
