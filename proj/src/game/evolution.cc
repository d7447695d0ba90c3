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

#include "qskat/game/evolution.h"

#include <cmath>

#include "branch_rules.h"
#include "qskat/qsim/gate.h"

namespace qskat::game {

using encoding::Location;
using qsim::Amplitude;
using qsim::BasisIndex;
using qsim::Child;

namespace reference {
SparseState CpGate(const SparseState& state, const CardLayout& layout,
                   int player, int k);
SparseState ResetAncillas(const SparseState& state, const CardLayout& layout);
SparseState TtGate(const SparseState& state, const CardLayout& layout, int k,
                   int round, const std::vector<int>& seat_order);
SparseState HybridPlayStep(const SparseState& state, const CardLayout& layout,
                           int round, int step,
                           const std::vector<int>& seat_order);
}  // namespace reference

int TrickWinnerIndex(const CardLayout& layout, const std::vector<int>& table) {
  if (table.empty()) throw GameError("empty trick");
  const encoding::TrickOrder order({}, layout.game());
  // Earliest-played card that no other table card beats.
  for (std::size_t i = 0; i < table.size(); ++i) {
    const Card c = layout.cards()[table[i]].card;
    bool maximal = true;
    for (std::size_t j = 0; j < table.size() && maximal; ++j) {
      if (i != j && order.Beats(layout.cards()[table[j]].card, c) == true) {
        maximal = false;
      }
    }
    if (maximal) return static_cast<int>(i);
  }
  throw GameError("trick has no maximal card");
}

std::vector<int> DefaultSeatOrder(const CardLayout& layout) {
  std::vector<int> order;
  for (int s = 0; s < layout.players(); ++s) order.push_back(s);
  return order;
}

SparseState PlaySingleCard(const SparseState& state, const CardLayout& layout,
                           Card card) {
  const auto& cq = layout.cards()[layout.PositionOf(card)];
  return qsim::ApplyGate(state, qsim::PauliX{cq.table},
                         qsim::ControlSpec{{cq.ancilla, false}, {cq.stack, false}});
}

SparseState CpGate(const SparseState& state, const CardLayout& layout,
                   int player, int k, Backend backend) {
  if (k < 1) throw GameError("k must be positive");
  if (backend == Backend::kReference) {
    return reference::CpGate(state, layout, player, k);
  }
  const Amplitude factor(1.0 / std::sqrt(static_cast<double>(k)), 0.0);
  return qsim::ExpandBranches(
      state, [&](const BasisIndex& key, std::vector<Child>& out) {
        const auto hand = internal::HandPositions(layout, key, player);
        if (static_cast<int>(hand.size()) != k) {
          throw GameError("branch holds " + std::to_string(hand.size()) +
                          " cards for seat " + std::to_string(player) +
                          ", expected " + std::to_string(k));
        }
        for (int pos : hand) {
          out.push_back({key.Flipped(layout.cards()[pos].table), factor});
        }
      });
}

SparseState ResetAncillas(const SparseState& state, const CardLayout& layout,
                          Backend backend) {
  if (backend == Backend::kReference) {
    return reference::ResetAncillas(state, layout);
  }
  return qsim::ApplyBasisMap(state, [&](const BasisIndex& key) {
    BasisIndex out = key;
    for (int pos = 0; pos < layout.num_cards(); ++pos) {
      if (layout.LocationAt(key, pos) != Location::kHand) {
        out.Set(layout.cards()[pos].ancilla, true);
      }
    }
    return out;
  });
}

SparseState TtGate(const SparseState& state, const CardLayout& layout, int k,
                   int round, const std::vector<int>& seat_order,
                   Backend backend) {
  if (backend == Backend::kReference) {
    return reference::TtGate(state, layout, k, round, seat_order);
  }
  return qsim::ApplyBasisMap(state, [&](const BasisIndex& key) {
    return internal::TakeTrick(layout, key, k, round, seat_order);
  });
}

SparseState FixedFirstCard(const SparseState& state, const CardLayout& layout,
                           int player, Card card) {
  const int pos = layout.PositionOf(card);
  return qsim::ApplyBasisMap(state, [&](const BasisIndex& key) {
    if (layout.HolderAt(key, pos) != player || layout.PlayedAt(key, pos) ||
        layout.LocationAt(key, pos) != Location::kHand) {
      throw GameError(card.ToString() + " is not in the hand of seat " +
                      std::to_string(player) + " on every branch");
    }
    return key.Flipped(layout.cards()[pos].table);
  });
}

SparseState HybridPlayStep(const SparseState& state, const CardLayout& layout,
                           int round, int step,
                           const std::vector<int>& seat_order,
                           Backend backend) {
  if (backend == Backend::kReference) {
    return reference::HybridPlayStep(state, layout, round, step, seat_order);
  }
  return qsim::ExpandBranches(
      state, [&](const BasisIndex& key, std::vector<Child>& out) {
        const auto choice =
            internal::LegalPositions(layout, key, round, step, seat_order);
        if (choice.legal.empty()) throw GameError("seat to move has no cards");
        const Amplitude factor(
            1.0 / std::sqrt(static_cast<double>(choice.legal.size())), 0.0);
        for (int pos : choice.legal) {
          out.push_back({key.Flipped(layout.cards()[pos].table), factor});
        }
      });
}

SparseState RoundOperator(const SparseState& state, const CardLayout& layout,
                          const RoundPlan& plan, EvolutionMode mode,
                          Backend backend) {
  if (plan.hand_count < 1) throw GameError("hand count must be positive");
  const int players = layout.players();
  if (static_cast<int>(plan.order.size()) != players) {
    throw GameError("seat order must list every seat once");
  }
  SparseState s = state;
  for (int step = plan.start_step; step < players; ++step) {
    if (mode == EvolutionMode::kPaperExact) {
      s = CpGate(s, layout, plan.order[step], plan.hand_count, backend);
    } else {
      s = HybridPlayStep(s, layout, plan.round, step, plan.order, backend);
    }
  }
  s = ResetAncillas(s, layout, backend);
  return TtGate(s, layout, players, plan.round, plan.order, backend);
}

SparseState PlayOut(const SparseState& state, const CardLayout& layout,
                    EvolutionMode mode, const std::vector<int>& seat_order,
                    int first_round, int first_start_step, Backend backend) {
  SparseState s = state;
  for (int round = first_round; round <= layout.rounds(); ++round) {
    RoundPlan plan;
    plan.round = round;
    plan.order = seat_order;
    plan.hand_count = layout.rounds() + 1 - round;
    plan.start_step = round == first_round ? first_start_step : 0;
    s = RoundOperator(s, layout, plan, mode, backend);
  }
  return s;
}

GameScript PaperExactScript(const CardLayout& layout,
                            const std::vector<int>& seat_order) {
  GameScript script;
  for (int round = 1; round <= layout.rounds(); ++round) {
    const int k = layout.rounds() + 1 - round;
    for (int seat : seat_order) {
      script.push_back({ScriptOp::Kind::kCp, seat, k, round, 0, std::nullopt});
    }
    script.push_back({ScriptOp::Kind::kReset, 0, 0, round, 0, std::nullopt});
    script.push_back({ScriptOp::Kind::kTt, 0, layout.players(), round, 0,
                      std::nullopt});
  }
  return script;
}

SparseState RunScript(const SparseState& state, const CardLayout& layout,
                      const GameScript& script,
                      const std::vector<int>& seat_order, Backend backend) {
  SparseState s = state;
  for (const ScriptOp& op : script) {
    switch (op.kind) {
      case ScriptOp::Kind::kCp:
        s = CpGate(s, layout, op.player, op.k, backend);
        break;
      case ScriptOp::Kind::kReset:
        s = ResetAncillas(s, layout, backend);
        break;
      case ScriptOp::Kind::kTt:
        s = TtGate(s, layout, op.k, op.round, seat_order, backend);
        break;
      case ScriptOp::Kind::kFixed:
        if (!op.card) throw GameError("fixed op needs a card");
        s = FixedFirstCard(s, layout, op.player, *op.card);
        break;
      case ScriptOp::Kind::kHybrid:
        s = HybridPlayStep(s, layout, op.round, op.step, seat_order, backend);
        break;
    }
  }
  return s;
}

namespace {

const char* KindName(ScriptOp::Kind kind) {
  switch (kind) {
    case ScriptOp::Kind::kCp: return "cp";
    case ScriptOp::Kind::kTt: return "tt";
    case ScriptOp::Kind::kReset: return "reset";
    case ScriptOp::Kind::kFixed: return "fixed";
    case ScriptOp::Kind::kHybrid: return "hybrid";
  }
  return "?";
}

}  // namespace

nlohmann::json ScriptToJson(const GameScript& script) {
  nlohmann::json arr = nlohmann::json::array();
  for (const ScriptOp& op : script) {
    nlohmann::json j = {{"op", KindName(op.kind)}};
    switch (op.kind) {
      case ScriptOp::Kind::kCp:
        j["player"] = op.player;
        j["k"] = op.k;
        break;
      case ScriptOp::Kind::kTt:
        j["k"] = op.k;
        j["round"] = op.round;
        break;
      case ScriptOp::Kind::kReset:
        break;
      case ScriptOp::Kind::kFixed:
        j["player"] = op.player;
        if (op.card) j["card"] = op.card->ToString();
        break;
      case ScriptOp::Kind::kHybrid:
        j["round"] = op.round;
        j["step"] = op.step;
        break;
    }
    arr.push_back(j);
  }
  return arr;
}

GameScript ScriptFromJson(const nlohmann::json& j) {
  GameScript script;
  for (const auto& item : j) {
    ScriptOp op;
    const std::string name = item.at("op").get<std::string>();
    if (name == "cp") op.kind = ScriptOp::Kind::kCp;
    else if (name == "tt") op.kind = ScriptOp::Kind::kTt;
    else if (name == "reset") op.kind = ScriptOp::Kind::kReset;
    else if (name == "fixed") op.kind = ScriptOp::Kind::kFixed;
    else if (name == "hybrid") op.kind = ScriptOp::Kind::kHybrid;
    else throw GameError("unknown script op: " + name);
    op.player = item.value("player", 0);
    op.k = item.value("k", 0);
    op.round = item.value("round", 1);
    op.step = item.value("step", 0);
    if (item.contains("card")) op.card = Card::Parse(item.at("card").get<std::string>());
    script.push_back(op);
  }
  return script;
}

}  // namespace qskat::game
