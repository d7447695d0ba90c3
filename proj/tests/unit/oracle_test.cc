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

#include <algorithm>
#include <climits>
#include <fstream>
#include <random>

#include <gtest/gtest.h>

#include "qskat/oracle/scenario.h"

namespace qskat::oracle {
namespace {

using encoding::Suit;

Card C(const char* s) { return Card::Parse(s); }
std::vector<Card> Cs(std::initializer_list<const char*> names) {
  std::vector<Card> out;
  for (const char* n : names) out.push_back(C(n));
  return out;
}

Scenario Showcase() {
  std::ifstream f(QSKAT_DATA_DIR "/showcase.json");
  return Scenario::FromJson(nlohmann::json::parse(f));
}

PlayState ShowcaseDeal(std::vector<Card> partner, std::vector<Card> declarer) {
  const Scenario s = Showcase();
  PlayState p;
  p.players = 3;
  p.game = s.game;
  p.hands = {s.our_hand, std::move(partner), std::move(declarer)};
  p.declarer = 2;
  p.declarer_points = s.declarer_points;
  p.defender_points = s.defender_points;
  return p;
}

TEST(LegalMovesTest, FollowRules) {
  PlayState s;
  s.game = encoding::GameType::SuitGame(Suit::kSpades);
  s.hands = {Cs({"CJ", "HA", "H7"}), Cs({"S7", "HK", "D7"}),
             Cs({"SA", "H10", "DA"})};
  EXPECT_EQ(LegalMoves(s, 0).size(), 3u);
  EXPECT_THROW(LegalMoves(s, 1), OracleError);
  s = ApplyMove(s, C("H7"));
  EXPECT_EQ(LegalMoves(s, 1), Cs({"HK"}));
  // Spade led: the club Jack is trump and must follow.
  PlayState t;
  t.game = s.game;
  t.hands = {Cs({"S8", "D8", "D9"}), Cs({"CJ", "HA", "H7"}), Cs({"C7", "C8", "C9"})};
  t = ApplyMove(t, C("S8"));
  EXPECT_EQ(LegalMoves(t, 1), Cs({"CJ"}));
  t = ApplyMove(t, C("CJ"));
  EXPECT_EQ(LegalMoves(t, 2).size(), 3u);  // void: anything goes
  EXPECT_THROW(ApplyMove(s, C("D7")), OracleError);
}

TEST(TrickWinnerTest, Examples) {
  const encoding::TrickOrder order({}, encoding::GameType::SuitGame(Suit::kSpades));
  EXPECT_EQ(TrickWinner({{0, C("HJ")}, {1, C("CJ")}, {2, C("SJ")}}, order), 1);
  EXPECT_EQ(TrickWinner({{0, C("HA")}, {1, C("CA")}, {2, C("DA")}}, order), 0);
  EXPECT_EQ(TrickWinner({{2, C("H7")}, {0, C("S7")}, {1, C("HA")}}, order), 0);
  EXPECT_THROW(TrickWinner({}, order), OracleError);
}

TEST(TrickWinnerTest, SupremumIgnoresPlayOrder) {
  const auto game = encoding::GameType::SuitGame(Suit::kHearts);
  const encoding::TrickOrder order({}, game);
  std::mt19937_64 rng(9);
  const auto deck = encoding::FullDeck();
  for (int trial = 0; trial < 2000; ++trial) {
    std::vector<Card> cards;
    std::sample(deck.begin(), deck.end(), std::back_inserter(cards), 3, rng);
    std::vector<Played> trick = {{0, cards[0]}, {1, cards[1]}, {2, cards[2]}};
    // Supremum: a card beating both others.
    int sup = -1;
    for (int i = 0; i < 3; ++i) {
      if (order.Beats(cards[i], cards[(i + 1) % 3]) == true &&
          order.Beats(cards[i], cards[(i + 2) % 3]) == true) {
        sup = i;
      }
    }
    if (sup < 0) continue;
    std::sort(trick.begin(), trick.end(),
              [](const Played& a, const Played& b) { return a.seat < b.seat; });
    do {
      ASSERT_EQ(TrickWinner(trick, order), sup);
    } while (std::next_permutation(
        trick.begin(), trick.end(),
        [](const Played& a, const Played& b) { return a.seat < b.seat; }));
  }
}

TEST(SolveTest, ShowcaseScenarioTotals) {
  const auto a = ShowcaseDeal(Cs({"HJ", "S7", "HA"}), Cs({"CJ", "SJ", "H8"}));
  const auto b = ShowcaseDeal(Cs({"CJ", "SJ", "H8"}), Cs({"HJ", "S7", "HA"}));
  const auto defenders = [](const PlayState& s, const char* lead) {
    const auto r = SolveDeal(ApplyMove(s, C(lead)));
    EXPECT_EQ(r.declarer_points + r.defender_points, 120);
    return r.defender_points;
  };
  EXPECT_EQ(defenders(a, "H10"), 69);
  EXPECT_EQ(defenders(a, "H7"), 59);
  EXPECT_EQ(defenders(a, "HQ"), 62);
  EXPECT_EQ(defenders(b, "H7"), 67);
  EXPECT_EQ(defenders(b, "H10"), 57);
  EXPECT_EQ(defenders(b, "HQ"), 64);
}

TEST(SolveTest, PrincipalVariationIsLegalAndAchievesValue) {
  const auto a = ShowcaseDeal(Cs({"HJ", "S7", "HA"}), Cs({"CJ", "SJ", "H8"}));
  const auto r = SolveDeal(a);
  EXPECT_EQ(r.line.size(), 9u);
  PlayState s = a;
  for (const auto& p : r.line) {
    ASSERT_EQ(p.seat, s.ToMove());
    s = ApplyMove(s, p.card);
  }
  EXPECT_EQ(s.declarer_points, r.declarer_points);
}

// Random three-player endings over the full deck.
PlayState RandomEnding(std::mt19937_64& rng, int cards_per_hand) {
  auto deck = encoding::FullDeck();
  std::shuffle(deck.begin(), deck.end(), rng);
  PlayState s;
  s.game = rng() % 5 == 0 ? encoding::GameType::Grand()
                          : encoding::GameType::SuitGame(static_cast<Suit>(rng() % 4));
  s.hands.resize(3);
  for (int seat = 0; seat < 3; ++seat) {
    s.hands[seat].assign(deck.begin() + seat * cards_per_hand,
                         deck.begin() + (seat + 1) * cards_per_hand);
  }
  s.declarer = rng() % 3;
  s.leader = rng() % 3;
  return s;
}

TEST(SolveTest, AlphaBetaAgreesWithMinimax) {
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 150; ++trial) {
    const auto s = RandomEnding(rng, 1 + trial % 4);
    const auto plain = SolveDeal(s, Search::kMinimax);
    const auto pruned = SolveDeal(s, Search::kAlphaBeta);
    ASSERT_EQ(plain.declarer_points, pruned.declarer_points);
    ASSERT_EQ(plain.line, pruned.line);
  }
}

// Any fixed defender policy gives the declarer at least the minimax value.
int AgainstFixedDefence(const PlayState& s) {
  if (s.Terminal()) return s.declarer_points;
  const auto moves = LegalMoves(s, s.ToMove());
  if (s.ToMove() != s.declarer) return AgainstFixedDefence(ApplyMove(s, moves.back()));
  int best = INT_MIN;
  for (Card c : moves) best = std::max(best, AgainstFixedDefence(ApplyMove(s, c)));
  return best;
}

TEST(SolveTest, MinimaxDominatesFixedDefence) {
  std::mt19937_64 rng(4);
  for (int trial = 0; trial < 100; ++trial) {
    const auto s = RandomEnding(rng, 2);
    EXPECT_GE(AgainstFixedDefence(s), SolveDeal(s).declarer_points);
  }
}

TEST(PathTest, ToyCounts) {
  const auto spec = encoding::ToySpec();
  // A holds CA and C10, B holds CK and CQ.
  const encoding::Deal deal{{0, 0, 1, 1}};
  const auto start = StartState(spec, deal, 0);
  const auto wins = [](const PlayState& s) { return s.declarer_points >= 15; };
  const auto counts = CountPaths(start, wins);
  EXPECT_EQ(counts.all, 4);
  EXPECT_EQ(counts.winning, 4);
  // Single-card hands: one path.
  PlayState one;
  one.players = 2;
  one.game = spec.game;
  one.hands = {Cs({"CA"}), Cs({"CK"})};
  EXPECT_EQ(CountPaths(one, wins).all, 1);
  EXPECT_THROW(CountPaths(start, wins, 3), OracleError);
}

TEST(PathTest, ToyUniformPlayAveragesToFiveTwelfths) {
  const auto spec = encoding::ToySpec();
  const auto wins = [](const PlayState& s) { return s.declarer_points >= 15; };
  double sum = 0;
  const auto deals = encoding::EnumerateDeals(spec);
  for (const auto& d : deals) {
    const auto start = StartState(spec, d, 0);
    const auto counts = CountPaths(start, wins);
    const double frac = static_cast<double>(counts.winning) / static_cast<double>(counts.all);
    EXPECT_NEAR(UniformPlayWinProbability(start, wins), frac, 1e-15);
    sum += frac;
  }
  EXPECT_NEAR(sum / deals.size(), 5.0 / 12.0, 1e-15);
}

TEST(BranchingTest, Geomean) {
  EXPECT_DOUBLE_EQ(BranchingGeomean({{1, 1, 1}}), 1.0);
  EXPECT_NEAR(BranchingGeomean({{2, 8}}), 4.0, 1e-12);
  EXPECT_NEAR(BranchingGeomean({{2, 8}, {1, 1}}), 2.5, 1e-12);
  EXPECT_THROW(BranchingGeomean({}), OracleError);
  EXPECT_THROW(BranchingGeomean({{0.5}}), OracleError);
  // Toy: two choices each in round one, forced in round two.
  std::mt19937_64 rng(1);
  const auto spec = encoding::ToySpec();
  const auto f = RandomPlayoutBranching(StartState(spec, {{0, 1, 0, 1}}, 0), rng);
  EXPECT_EQ(f, (std::vector<double>{2, 2, 1, 1}));
  EXPECT_NEAR(BranchingGeomean({f}), std::sqrt(2.0), 1e-12);
}

TEST(ScenarioTest, ShowcaseQualityTable) {
  const Scenario s = Showcase();
  EXPECT_EQ(s.total_points(), 120);
  EXPECT_EQ(ConsistentDeals(s, {}).size(), 12u);
  const auto r = EvaluatePosition(s, {});
  ASSERT_EQ(r.qualities.size(), 3u);
  std::map<std::string, int> q;
  for (const auto& c : r.qualities) {
    q[c.card.ToString()] = c.wins;
    EXPECT_EQ(c.total, 12);
  }
  EXPECT_EQ(q["H10"], 6);
  EXPECT_EQ(q["HQ"], 11);
  EXPECT_EQ(q["H7"], 9);
  ASSERT_EQ(r.unbeatable.size(), 1u);
  auto declarer = r.unbeatable[0].HandOf(s.ToDealSpec(), 2);
  std::sort(declarer.begin(), declarer.end());
  auto want = Cs({"CJ", "SJ", "HA"});
  std::sort(want.begin(), want.end());
  EXPECT_EQ(declarer, want);
  EXPECT_EQ(ReportToJson(s, r)["recommended"], "HQ");
}

TEST(ScenarioTest, SerialAndParallelAgree) {
  const Scenario s = Showcase();
  for (Card c : s.our_hand) {
    const auto a = EvaluateCard(s, {}, c, Parallelism::kParallel);
    const auto b = EvaluateCard(s, {}, c, Parallelism::kSerial);
    EXPECT_EQ(a.wins, b.wins);
    EXPECT_EQ(a.all_paths, b.all_paths);
    EXPECT_EQ(a.winning_paths, b.winning_paths);
  }
}

TEST(ScenarioTest, HistoryNarrowsDeals) {
  const Scenario s = Showcase();
  // Partner follows HQ with the heart Ace: partner holds HA.
  const std::vector<Played> h = {{0, C("HQ")}, {1, C("HA")}};
  const auto deals = ConsistentDeals(s, h);
  EXPECT_EQ(deals.size(), 6u);
  const auto r = EvaluatePosition(s, h);
  EXPECT_EQ(r.to_move, 2);
  EXPECT_TRUE(r.qualities.empty());
  EXPECT_THROW(EvaluateCard(s, h, C("H10")), OracleError);
  // A card we do not hold.
  EXPECT_THROW(EvaluateCard(s, {}, C("CJ")), OracleError);
  // A seat out of turn leaves no consistent deal.
  EXPECT_THROW(EvaluatePosition(s, {{1, C("HA")}}), OracleError);
}

TEST(ScenarioTest, JsonRoundTripAndErrors) {
  const Scenario s = Showcase();
  EXPECT_EQ(Scenario::FromJson(s.ToJson()).ToJson(), s.ToJson());
  auto bad = s.ToJson();
  bad["unseen"].erase(0);
  EXPECT_THROW(Scenario::FromJson(bad), OracleError);
  auto dup = s.ToJson();
  dup["unseen"][0] = "H10";
  EXPECT_THROW(Scenario::FromJson(dup), OracleError);
  auto preset = s.ToJson();
  preset["constraints"] = "whatever";
  EXPECT_THROW(Scenario::FromJson(preset), OracleError);
  EXPECT_THROW(Scenario::FromJson(nlohmann::json::parse(R"({"trump":"S"})")),
               OracleError);
}

}  // namespace
}  // namespace qskat::oracle
