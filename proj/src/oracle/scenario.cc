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

#include "qskat/oracle/scenario.h"

#include <algorithm>
#include <regex>
#include <set>

namespace qskat::oracle {

using encoding::Deal;
using encoding::DealSpec;
using encoding::Suit;

int Scenario::total_points() const {
  return declarer_points + defender_points + encoding::TotalPoints(our_hand) +
         encoding::TotalPoints(unseen);
}

bool Scenario::DefendersWin(int final_declarer_points) const {
  return final_declarer_points <= total_points() / 2;
}

void Scenario::Validate() const {
  if (our_seat < 0 || our_seat > 2 || declarer_seat < 0 || declarer_seat > 2 ||
      our_seat == declarer_seat) {
    throw OracleError("our seat and the declarer seat must differ in 0..2");
  }
  if (leader < 0 || leader > 2) throw OracleError("leader must be a seat");
  if (our_hand.empty()) throw OracleError("our hand is empty");
  if (unseen.size() != 2 * our_hand.size()) {
    throw OracleError("unseen cards must fill the two other hands");
  }
  std::set<Card> all(our_hand.begin(), our_hand.end());
  all.insert(unseen.begin(), unseen.end());
  if (all.size() != our_hand.size() + unseen.size()) {
    throw OracleError("duplicate card in scenario");
  }
  if (declarer_points < 0 || defender_points < 0) {
    throw OracleError("points must be non-negative");
  }
  ToDealSpec().Validate();
}

DealSpec Scenario::ToDealSpec() const {
  DealSpec spec;
  spec.players = 3;
  spec.skat_size = 0;
  spec.hand_size = static_cast<int>(our_hand.size());
  spec.game = game;
  spec.deck = our_hand;
  spec.deck.insert(spec.deck.end(), unseen.begin(), unseen.end());
  for (Card c : our_hand) spec.fixed.push_back({c, our_seat});

  if (constraints == "none" || constraints.empty()) return spec;
  static const std::regex kPattern(
      R"((\d+)-trumps?-(\d+)-(club|spade|heart|diamond)s?-each)");
  std::smatch m;
  if (!std::regex_match(constraints, m, kPattern)) {
    throw OracleError("unknown constraint preset: " + constraints);
  }
  const int trumps = std::stoi(m[1]);
  const int side = std::stoi(m[2]);
  const Suit suit = encoding::ParseSuit(std::string(1, static_cast<char>(
                                            std::toupper(m[3].str()[0]))));
  std::vector<Card> trump_cards, suit_cards;
  for (Card c : unseen) {
    const auto eff = encoding::EffectiveSuit(c, game);
    if (!eff) {
      trump_cards.push_back(c);
    } else if (*eff == suit) {
      suit_cards.push_back(c);
    }
  }
  for (int seat = 0; seat < 3; ++seat) {
    if (seat == our_seat) continue;
    spec.counts.push_back({trump_cards, seat, trumps});
    spec.counts.push_back({suit_cards, seat, side});
  }
  return spec;
}

PlayState Scenario::Start(const DealSpec& spec, const Deal& deal) const {
  PlayState s = StartState(spec, deal, declarer_seat, leader);
  s.declarer_points = declarer_points;
  s.defender_points = defender_points;
  return s;
}

namespace {

std::vector<Card> CardList(const nlohmann::json& j) {
  std::vector<Card> out;
  for (const auto& c : j) out.push_back(Card::Parse(c.get<std::string>()));
  return out;
}

std::vector<std::string> CardNames(const std::vector<Card>& cards) {
  std::vector<std::string> out;
  for (Card c : cards) out.push_back(c.ToString());
  return out;
}

}  // namespace

Scenario Scenario::FromJson(const nlohmann::json& j) {
  Scenario s;
  try {
    const std::string trump = j.at("trump").get<std::string>();
    if (trump == "G" || trump == "grand") {
      s.game = GameType::Grand();
    } else {
      s.game = GameType::SuitGame(encoding::ParseSuit(trump));
    }
    s.our_seat = j.value("our_seat", 0);
    s.declarer_seat = j.value("declarer_seat", 2);
    s.leader = j.value("leader", s.our_seat);
    s.our_hand = CardList(j.at("our_hand"));
    s.unseen = CardList(j.at("unseen"));
    s.constraints = j.value("constraints", std::string("none"));
    s.declarer_points = j.value("declarer_points", 0);
    s.defender_points = j.value("defender_points", 0);
  } catch (const nlohmann::json::exception& e) {
    throw OracleError(std::string("malformed scenario: ") + e.what());
  } catch (const encoding::EncodingError& e) {
    throw OracleError(std::string("malformed scenario: ") + e.what());
  }
  s.Validate();
  return s;
}

nlohmann::json Scenario::ToJson() const {
  return {
      {"trump", game.variant == GameType::Variant::kGrand
                    ? std::string("G")
                    : std::string(1, encoding::SuitChar(game.trump))},
      {"our_seat", our_seat},
      {"declarer_seat", declarer_seat},
      {"leader", leader},
      {"our_hand", CardNames(our_hand)},
      {"unseen", CardNames(unseen)},
      {"constraints", constraints},
      {"declarer_points", declarer_points},
      {"defender_points", defender_points},
  };
}

PlayState Replay(const Scenario& scenario, const Deal& deal,
                 const std::vector<Played>& history) {
  PlayState s = scenario.Start(scenario.ToDealSpec(), deal);
  for (const Played& p : history) {
    if (s.Terminal()) throw OracleError("game is over");
    if (p.seat != s.ToMove()) {
      throw OracleError("seat " + std::to_string(p.seat) + " is not to move");
    }
    s = ApplyMove(s, p.card);
  }
  return s;
}

std::vector<Deal> ConsistentDeals(const Scenario& scenario,
                                  const std::vector<Played>& history) {
  const DealSpec spec = scenario.ToDealSpec();
  std::vector<Deal> out;
  for (const Deal& d : encoding::EnumerateDeals(spec)) {
    try {
      Replay(scenario, d, history);
      out.push_back(d);
    } catch (const OracleError&) {
    }
  }
  return out;
}

namespace {

bool Won(const Scenario& scenario, const PlayState& s) {
  return scenario.DefendersWin(SolveDeal(s, Search::kAlphaBeta).declarer_points);
}

// Per-deal outcome after our candidate, in deal order.
struct DealOutcome {
  bool won = false;
  PathCounts paths;
};

std::vector<DealOutcome> Outcomes(const Scenario& scenario,
                                  const std::vector<PlayState>& positions,
                                  Card candidate, Parallelism parallelism) {
  const long n = static_cast<long>(positions.size());
  std::vector<DealOutcome> out(n);
  const TerminalPredicate favorable = [&scenario](const PlayState& s) {
    return scenario.DefendersWin(s.declarer_points);
  };
  const auto one = [&](long i) {
    const PlayState next = ApplyMove(positions[i], candidate);
    out[i].won = Won(scenario, next);
    out[i].paths = CountPaths(next, favorable);
  };
  if (parallelism == Parallelism::kSerial) {
    for (long i = 0; i < n; ++i) one(i);
    return out;
  }
  std::exception_ptr error;
#pragma omp parallel for schedule(dynamic)
  for (long i = 0; i < n; ++i) {
    try {
      one(i);
    } catch (...) {
#pragma omp critical(qskat_oracle_error)
      if (!error) error = std::current_exception();
    }
  }
  if (error) std::rethrow_exception(error);
  return out;
}

std::vector<PlayState> Positions(const Scenario& scenario,
                                 const std::vector<Deal>& deals,
                                 const std::vector<Played>& history) {
  std::vector<PlayState> out;
  out.reserve(deals.size());
  for (const Deal& d : deals) out.push_back(Replay(scenario, d, history));
  return out;
}

CardQuality Summarize(Card candidate, const std::vector<DealOutcome>& outcomes) {
  CardQuality q;
  q.card = candidate;
  q.total = static_cast<int>(outcomes.size());
  for (const auto& o : outcomes) {
    q.wins += o.won;
    q.winning_paths += o.paths.winning;
    q.all_paths += o.paths.all;
  }
  q.p_win = q.total == 0 ? 0.0 : static_cast<double>(q.wins) / q.total;
  return q;
}

}  // namespace

CardQuality EvaluateCard(const Scenario& scenario,
                         const std::vector<Played>& history, Card candidate,
                         Parallelism parallelism) {
  scenario.Validate();
  const auto deals = ConsistentDeals(scenario, history);
  if (deals.empty()) throw OracleError("no deal is consistent with the history");
  const auto positions = Positions(scenario, deals, history);
  if (positions.front().Terminal() ||
      positions.front().ToMove() != scenario.our_seat) {
    throw OracleError("our seat is not to move");
  }
  // Our hand is known, so legality does not depend on the deal.
  const auto legal = LegalMoves(positions.front(), scenario.our_seat);
  if (std::find(legal.begin(), legal.end(), candidate) == legal.end()) {
    throw OracleError(candidate.ToString() + " is not a legal card for us");
  }
  return Summarize(candidate,
                   Outcomes(scenario, positions, candidate, parallelism));
}

QualityReport EvaluatePosition(const Scenario& scenario,
                               const std::vector<Played>& history,
                               Parallelism parallelism) {
  scenario.Validate();
  QualityReport r;
  const auto deals = ConsistentDeals(scenario, history);
  if (deals.empty()) throw OracleError("no deal is consistent with the history");
  const auto positions = Positions(scenario, deals, history);
  r.deals_total = static_cast<int>(deals.size());
  r.terminal = positions.front().Terminal();
  r.to_move = r.terminal ? -1 : positions.front().ToMove();

  if (r.terminal || r.to_move != scenario.our_seat) {
    for (const auto& p : positions) {
      r.deals_won += r.terminal ? scenario.DefendersWin(p.declarer_points)
                                : Won(scenario, p);
    }
  } else {
    std::vector<bool> any(deals.size(), false);
    for (Card c : LegalMoves(positions.front(), scenario.our_seat)) {
      const auto outcomes = Outcomes(scenario, positions, c, parallelism);
      for (std::size_t i = 0; i < outcomes.size(); ++i) {
        if (outcomes[i].won) any[i] = true;
      }
      r.qualities.push_back(Summarize(c, outcomes));
    }
    for (std::size_t i = 0; i < deals.size(); ++i) {
      if (any[i]) {
        ++r.deals_won;
      } else {
        r.unbeatable.push_back(deals[i]);
      }
    }
  }
  r.p_win = static_cast<double>(r.deals_won) / r.deals_total;
  return r;
}

nlohmann::json QualityToJson(const CardQuality& q) {
  return {
      {"card", q.card.ToString()},
      {"q_bar", q.wins},
      {"deals_total", q.total},
      {"p_win", q.p_win},
      {"winning_paths", q.winning_paths.str()},
      {"all_paths", q.all_paths.str()},
  };
}

nlohmann::json ReportToJson(const Scenario& scenario, const QualityReport& r) {
  nlohmann::json qualities = nlohmann::json::array();
  for (const auto& q : r.qualities) qualities.push_back(QualityToJson(q));
  nlohmann::json unbeatable = nlohmann::json::array();
  const auto spec = scenario.ToDealSpec();
  for (const auto& d : r.unbeatable) {
    nlohmann::json hands = nlohmann::json::object();
    for (int seat = 0; seat < 3; ++seat) {
      hands[std::to_string(seat)] = CardNames(d.HandOf(spec, seat));
    }
    unbeatable.push_back({{"declarer", CardNames(d.HandOf(spec, scenario.declarer_seat))},
                          {"hands", hands}});
  }
  nlohmann::json out = {
      {"to_move", r.to_move},
      {"terminal", r.terminal},
      {"deals_total", r.deals_total},
      {"deals_won", r.deals_won},
      {"p_win", r.p_win},
      {"qualities", qualities},
      {"unbeatable", unbeatable},
  };
  if (!r.qualities.empty()) {
    const auto best = std::max_element(
        r.qualities.begin(), r.qualities.end(),
        [](const CardQuality& a, const CardQuality& b) { return a.wins < b.wins; });
    out["recommended"] = best->card.ToString();
  }
  return out;
}

}  // namespace qskat::oracle
