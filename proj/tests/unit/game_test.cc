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
#include <map>

#include <gtest/gtest.h>

#include "qskat/game/evolution.h"

namespace qskat::game {
namespace {

using encoding::Location;
using qsim::BasisIndex;

Card C(const char* s) { return Card::Parse(s); }

void ExpectSameState(const SparseState& a, const SparseState& b) {
  ASSERT_EQ(a.size(), b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    ASSERT_EQ(a.entries()[i].key, b.entries()[i].key);
    ASSERT_NEAR(std::abs(a.entries()[i].amp - b.entries()[i].amp), 0.0, 1e-12);
  }
}

class ToyGame : public ::testing::Test {
 protected:
  ToyGame()
      : spec_(encoding::ToySpec()),
        layout_(CardLayout::Build(spec_)),
        initial_(encoding::InitialState(spec_, layout_)),
        order_(DefaultSeatOrder(layout_)) {}

  encoding::DealSpec spec_;
  CardLayout layout_;
  SparseState initial_;
  std::vector<int> order_;
};

TEST_F(ToyGame, SupportLadderAndProbabilities) {
  std::vector<SparseState> stages = {initial_};
  auto s = CpGate(initial_, layout_, 0, 2);
  stages.push_back(s);
  s = CpGate(s, layout_, 1, 2);
  stages.push_back(s);
  s = TtGate(ResetAncillas(s, layout_), layout_, 2, 1, order_);
  stages.push_back(s);
  s = CpGate(CpGate(s, layout_, 0, 1), layout_, 1, 1);
  stages.push_back(s);
  s = TtGate(ResetAncillas(s, layout_), layout_, 2, 2, order_);
  stages.push_back(s);

  const std::vector<std::size_t> sizes = {6, 12, 24, 24, 24, 8};
  const std::vector<double> probs = {1.0 / 6, 1.0 / 12, 1.0 / 24, 1.0 / 24,
                                     1.0 / 24};
  for (std::size_t i = 0; i < stages.size(); ++i) {
    EXPECT_EQ(qsim::Marginal(stages[i], layout_.game_width()).size(), sizes[i])
        << "stage " << i;
    EXPECT_NEAR(stages[i].Norm(), 1.0, 1e-12);
    for (const auto& e : stages[i].entries()) {
      EXPECT_GT(e.amp.real(), 0.0);
      EXPECT_EQ(e.amp.imag(), 0.0);
      if (i < probs.size()) EXPECT_NEAR(std::norm(e.amp), probs[i], 1e-12);
    }
  }
  // The last trick merges deals on the game register; the origin copies
  // keep them apart in the full key.
  EXPECT_EQ(stages.back().size(), 24u);
  std::vector<double> final_probs;
  for (const auto& [key, p] : qsim::Marginal(stages.back(), layout_.game_width())) {
    final_probs.push_back(p);
    for (const auto& cs : encoding::DecodeBasis(key, layout_)) {
      EXPECT_EQ(cs.location, Location::kStack);
    }
  }
  std::sort(final_probs.begin(), final_probs.end());
  for (int i = 0; i < 6; ++i) EXPECT_NEAR(final_probs[i], 1.0 / 12, 1e-12);
  EXPECT_NEAR(final_probs[6], 0.25, 1e-12);
  EXPECT_NEAR(final_probs[7], 0.25, 1e-12);

  // Same thing through the script runner.
  ExpectSameState(RunScript(initial_, layout_, PaperExactScript(layout_, order_),
                            order_),
                  s);
  ExpectSameState(PlayOut(initial_, layout_, EvolutionMode::kPaperExact, order_),
                  s);
}

TEST_F(ToyGame, ReferenceBackendMatchesKernel) {
  const auto script = PaperExactScript(layout_, order_);
  SparseState k = initial_, r = initial_;
  for (std::size_t i = 0; i < script.size(); ++i) {
    const GameScript one = {script[i]};
    k = RunScript(k, layout_, one, order_, Backend::kKernel);
    r = RunScript(r, layout_, one, order_, Backend::kReference);
    ExpectSameState(k, r);
  }
}

TEST_F(ToyGame, TrickRewriteExample) {
  // A plays CK, B plays CA: B takes both, so both blocks read |1 1 1>.
  encoding::Deal deal{{0, 1, 0, 1}};  // deck order CA C10 CK CQ
  const BasisIndex start = encoding::EncodeDeal(deal, spec_, layout_);
  auto s = SparseState::Basis(layout_.width(), start);
  s = PlaySingleCard(s, layout_, C("CK"));
  s = PlaySingleCard(s, layout_, C("C10"));
  s = TtGate(ResetAncillas(s, layout_), layout_, 2, 1, order_);
  ASSERT_EQ(s.size(), 1u);
  const auto key = s.entries()[0].key;
  const auto& ck = layout_.cards()[layout_.PositionOf(C("CK"))];
  const auto& c10 = layout_.cards()[layout_.PositionOf(C("C10"))];
  EXPECT_EQ(layout_.HolderAt(key, layout_.PositionOf(C("CK"))), 1);
  EXPECT_TRUE(key.Get(ck.table) && key.Get(ck.stack) && key.Get(ck.ancilla));
  EXPECT_EQ(layout_.HolderAt(key, layout_.PositionOf(C("C10"))), 1);
  EXPECT_TRUE(key.Get(c10.table) && key.Get(c10.stack));
}

TEST_F(ToyGame, PlaySingleCardOnlyTouchesActiveBranches) {
  auto s = CpGate(initial_, layout_, 0, 2);
  const auto before = s;
  s = ResetAncillas(s, layout_);
  // Cards already on the table now have ancilla 1; replay is blocked.
  const auto again = PlaySingleCard(s, layout_, C("CA"));
  std::size_t changed = 0;
  for (const auto& e : s.entries()) changed += again.amplitude(e.key) == 0.0;
  // Only branches where CA is still in some hand moved.
  std::size_t in_hand = 0;
  const int pos = layout_.PositionOf(C("CA"));
  for (const auto& e : s.entries()) {
    in_hand += layout_.LocationAt(e.key, pos) == Location::kHand;
  }
  EXPECT_EQ(changed, in_hand);
  EXPECT_GT(in_hand, 0u);
  EXPECT_LT(in_hand, before.size());
}

TEST_F(ToyGame, ResetIsIdempotentOnReachableStates) {
  auto s = initial_;
  for (const auto& op : PaperExactScript(layout_, order_)) {
    s = RunScript(s, layout_, {op}, order_);
    const auto once = ResetAncillas(s, layout_);
    ExpectSameState(ResetAncillas(once, layout_), once);
  }
}

TEST_F(ToyGame, PreconditionViolationsThrow) {
  EXPECT_THROW(CpGate(initial_, layout_, 0, 3), GameError);
  EXPECT_THROW(CpGate(initial_, layout_, 0, 3, Backend::kReference), GameError);
  EXPECT_THROW(TtGate(initial_, layout_, 2, 1, order_), GameError);
  EXPECT_THROW(FixedFirstCard(initial_, layout_, 0, C("CA")), GameError);
  EXPECT_THROW(PlaySingleCard(initial_, layout_, C("S7")),
               encoding::EncodingError);
}

TEST_F(ToyGame, FixedFirstCardEqualsFilteredCp) {
  // Restrict to deals where A holds CA.
  std::vector<BasisIndex> keys;
  for (const auto& e : initial_.entries()) {
    if (layout_.HolderAt(e.key, 0) == 0) keys.push_back(e.key);
  }
  const auto start = qsim::PrepareSuperposition(layout_.width(), keys);
  const auto fixed = FixedFirstCard(start, layout_, 0, C("CA"));
  const auto cp = CpGate(start, layout_, 0, 2);
  std::vector<qsim::Entry> kept;
  for (const auto& e : cp.entries()) {
    if (layout_.LocationAt(e.key, 0) == Location::kTable) kept.push_back(e);
  }
  ExpectSameState(fixed, SparseState::FromEntries(layout_.width(), kept).Normalized());
  // Evolving further keeps agreeing.
  auto a = CpGate(fixed, layout_, 1, 2);
  auto b = CpGate(SparseState::FromEntries(layout_.width(), kept).Normalized(),
                  layout_, 1, 2);
  ExpectSameState(a, b);
}

TEST_F(ToyGame, FixingTheOnlyCardIsCpWithOneCard) {
  auto s = PlayOut(initial_, layout_, EvolutionMode::kPaperExact, order_, 1);
  // Replay to the start of round 2 and compare on a single branch.
  auto r = CpGate(CpGate(initial_, layout_, 0, 2), layout_, 1, 2);
  r = TtGate(ResetAncillas(r, layout_), layout_, 2, 1, order_);
  const auto one = SparseState::Basis(layout_.width(), r.entries()[0].key);
  const auto& hand_pos = [&] {
    for (int pos = 0; pos < layout_.num_cards(); ++pos) {
      if (layout_.HolderAt(one.entries()[0].key, pos) == 0 &&
          !layout_.PlayedAt(one.entries()[0].key, pos)) {
        return pos;
      }
    }
    return -1;
  }();
  ASSERT_GE(hand_pos, 0);
  ExpectSameState(FixedFirstCard(one, layout_, 0, layout_.cards()[hand_pos].card),
                  CpGate(one, layout_, 0, 1));
  EXPECT_EQ(qsim::Marginal(s, layout_.game_width()).size(), 8u);
}

TEST(ScriptTest, JsonRoundTrip) {
  GameScript script = {
      {ScriptOp::Kind::kFixed, 0, 0, 1, 0, C("HQ")},
      {ScriptOp::Kind::kCp, 1, 3, 1, 0, std::nullopt},
      {ScriptOp::Kind::kReset, 0, 0, 1, 0, std::nullopt},
      {ScriptOp::Kind::kTt, 0, 3, 1, 0, std::nullopt},
      {ScriptOp::Kind::kHybrid, 0, 0, 2, 1, std::nullopt},
  };
  const auto j = ScriptToJson(script);
  EXPECT_EQ(j[0]["op"], "fixed");
  EXPECT_EQ(j[0]["card"], "HQ");
  EXPECT_EQ(ScriptToJson(ScriptFromJson(j)), j);
  EXPECT_THROW(ScriptFromJson(nlohmann::json::parse(R"([{"op":"swap"}])")),
               GameError);
}

// Three-player reduced deck, both modes, kernel against reference.
class ThreePlayer : public ::testing::TestWithParam<bool> {};

TEST_P(ThreePlayer, BackendsAgreeOverFullGame) {
  const bool hybrid = GetParam();
  encoding::DealSpec spec = encoding::ReducedSkatSpec(2);
  spec.fixed.push_back({spec.deck[0], 0});
  const auto layout = CardLayout::Build(spec, {.track_leader = hybrid});
  const auto order = DefaultSeatOrder(layout);
  auto k = encoding::InitialState(spec, layout);
  auto r = k;
  const auto mode =
      hybrid ? EvolutionMode::kHybridLegal : EvolutionMode::kPaperExact;
  for (int round = 1; round <= layout.rounds(); ++round) {
    RoundPlan plan{round, order, layout.rounds() + 1 - round, 0};
    k = RoundOperator(k, layout, plan, mode, Backend::kKernel);
    r = RoundOperator(r, layout, plan, mode, Backend::kReference);
    ExpectSameState(k, r);
    EXPECT_NEAR(k.Norm(), 1.0, 1e-12);
  }
  // Every card except the Skat ends on a stack; points are conserved.
  for (const auto& e : k.entries()) {
    int points = 0;
    for (const auto& cs : encoding::DecodeBasis(e.key, layout)) {
      if (cs.holder == encoding::kSkat) {
        EXPECT_EQ(cs.location, Location::kHand);
      } else {
        EXPECT_EQ(cs.location, Location::kStack);
        points += encoding::CardPoints(cs.card);
      }
    }
    int skat = 0;
    for (const auto& cs : encoding::DecodeBasis(e.key, layout)) {
      if (cs.holder == encoding::kSkat) skat += encoding::CardPoints(cs.card);
    }
    EXPECT_EQ(points + skat, encoding::TotalPoints(spec.deck));
  }
}

INSTANTIATE_TEST_SUITE_P(Modes, ThreePlayer, ::testing::Bool());

}  // namespace
}  // namespace qskat::game
