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

#include "qskat/cli/experiments.h"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <numeric>
#include <random>
#include <sstream>

#include "qskat/oracle/play.h"
#include "qskat/scoring/counting.h"
#include "qskat/scoring/payoff.h"
#include "qskat/scoring/score.h"

namespace qskat::cli {

using encoding::BigUint;
using encoding::Card;
using encoding::CardLayout;
using encoding::DealSpec;
using game::ScriptOp;
using nlohmann::json;

namespace {

using Clock = std::chrono::steady_clock;

double SecondsSince(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

// Number of script operations that make up `stage`.
std::size_t StageLength(const game::GameScript& full, ToyStage stage) {
  switch (stage) {
    case ToyStage::kInitial: return 0;
    case ToyStage::kAPlayed: return 1;
    case ToyStage::kBPlayed: return 2;
    case ToyStage::kTrick1: {
      for (std::size_t i = 0; i < full.size(); ++i) {
        if (full[i].kind == ScriptOp::Kind::kTt) return i + 1;
      }
      throw CliError("toy script has no trick");
    }
    case ToyStage::kFinal: return full.size();
  }
  return full.size();
}

json StateEntries(const qsim::SparseState& state) {
  json out = json::array();
  for (const auto& e : state.entries()) {
    out.push_back({{"label", e.key.ToLabel(state.width())},
                   {"amplitude", e.amp.real()}});
  }
  return out;
}

json MarginalEntries(const qsim::SparseState& state, int width) {
  json out = json::array();
  for (const auto& [key, p] : qsim::Marginal(state, width)) {
    out.push_back({{"label", key.ToLabel(width)}, {"probability", p}});
  }
  return out;
}

// a / b > c / d for non-negative big integers, zero denominators last.
bool RatioGreater(const BigUint& a, const BigUint& b, const BigUint& c,
                  const BigUint& d) {
  if (b == 0) return false;
  if (d == 0) return true;
  return a * d > c * b;
}

}  // namespace

ToyStage ParseToyStage(std::string_view name) {
  if (name == "initial") return ToyStage::kInitial;
  if (name == "a-played") return ToyStage::kAPlayed;
  if (name == "b-played") return ToyStage::kBPlayed;
  if (name == "trick1") return ToyStage::kTrick1;
  if (name == "final") return ToyStage::kFinal;
  throw CliError("unknown stage: " + std::string(name));
}

std::string ToString(ToyStage stage) {
  switch (stage) {
    case ToyStage::kInitial: return "initial";
    case ToyStage::kAPlayed: return "a-played";
    case ToyStage::kBPlayed: return "b-played";
    case ToyStage::kTrick1: return "trick1";
    case ToyStage::kFinal: return "final";
  }
  return "?";
}

ToyRun RunToy(ToyStage stage, game::Backend backend) {
  const DealSpec spec = encoding::ToySpec();
  ToyRun run;
  run.stage = stage;
  run.layout = CardLayout::Build(spec);
  const auto order = game::DefaultSeatOrder(run.layout);
  auto full = game::PaperExactScript(run.layout, order);
  full.resize(StageLength(full, stage));
  run.script = full;
  run.state = game::RunScript(encoding::InitialState(spec, run.layout),
                              run.layout, run.script, order, backend);
  return run;
}

json ToyReport(const ToyRun& run) {
  const int gw = run.layout.game_width();
  const auto marginal = qsim::Marginal(run.state, gw);
  json j;
  j["stage"] = ToString(run.stage);
  j["game_width"] = gw;
  j["width"] = run.layout.width();
  j["support"] = marginal.size();
  j["full_support"] = run.state.size();
  j["norm"] = run.state.Norm();
  j["states"] = MarginalEntries(run.state, gw);
  j["amplitudes"] = StateEntries(run.state);
  j["script"] = game::ScriptToJson(run.script);
  if (run.stage == ToyStage::kFinal) {
    const auto projector = scoring::FavorableProjector::MoreThanHalf(
        run.layout, {0}, 0, encoding::TotalPoints(encoding::ToySpec().deck));
    const auto w = scoring::ComputeWinProbability(run.state, run.layout, projector);
    j["p_win"] = w.probability;
    j["favorable_dimension"] = w.dimension;
    j["expected_score_a"] = scoring::ExpectedScore(run.state, run.layout, 0);
  }
  return j;
}

qsim::Histogram ToyHistogram(const ToyRun& run, long shots, long long seed) {
  return qsim::MeasureHistogram(run.state, shots, seed, run.layout.game_width());
}

json DealsReport() {
  const auto start = Clock::now();
  json j;
  j["full"] = encoding::DealCount(encoding::FullSkatSpec()).str();
  j["known_hand"] = encoding::DealCount(encoding::KnownHandSpec()).str();
  j["toy"] = encoding::DealCount(encoding::ToySpec()).str();
  json reduced = json::array();
  for (int x = 1; x <= 10; ++x) {
    reduced.push_back(
        {{"cards_per_hand", x},
         {"deals", encoding::DealCount(encoding::ReducedSkatSpec(x)).str()},
         {"known_hand_deals",
          encoding::DealCount(encoding::ReducedKnownHandSpec(x)).str()}});
  }
  j["reduced"] = reduced;
  j["elapsed_ms"] = SecondsSince(start) * 1e3;
  return j;
}

json DealsReport(const DealSpec& spec) {
  const auto start = Clock::now();
  json j;
  j["spec"] = spec.ToJson();
  j["deals"] = encoding::DealCount(spec).str();
  j["elapsed_ms"] = SecondsSince(start) * 1e3;
  return j;
}

AdviceMode ParseAdviceMode(std::string_view name) {
  if (name == "oracle") return AdviceMode::kOracle;
  if (name == "hybrid-legal") return AdviceMode::kHybridLegal;
  if (name == "paper-exact") {
    throw CliError("paper-exact ignores the follow-suit rule; use oracle or hybrid-legal");
  }
  throw CliError("unknown mode: " + std::string(name));
}

std::string ToString(AdviceMode mode) {
  return mode == AdviceMode::kOracle ? "oracle" : "hybrid-legal";
}

std::string Recommend(const oracle::QualityReport& report, AdviceMode mode) {
  const oracle::CardQuality* best = nullptr;
  for (const auto& q : report.qualities) {
    if (best == nullptr) {
      best = &q;
    } else if (mode == AdviceMode::kOracle ? q.wins > best->wins
                                           : RatioGreater(q.winning_paths, q.all_paths,
                                                          best->winning_paths,
                                                          best->all_paths)) {
      best = &q;
    }
  }
  return best == nullptr ? "" : best->card.ToString();
}

game::GameScript HybridScriptAfterLead(const CardLayout& layout, int leader,
                                       Card lead) {
  const int players = layout.players();
  game::GameScript script;
  ScriptOp fixed;
  fixed.kind = ScriptOp::Kind::kFixed;
  fixed.player = leader;
  fixed.card = lead;
  script.push_back(fixed);
  for (int round = 1; round <= layout.rounds(); ++round) {
    for (int step = round == 1 ? 1 : 0; step < players; ++step) {
      ScriptOp op;
      op.kind = ScriptOp::Kind::kHybrid;
      op.round = round;
      op.step = step;
      script.push_back(op);
    }
    ScriptOp reset;
    reset.kind = ScriptOp::Kind::kReset;
    script.push_back(reset);
    ScriptOp tt;
    tt.kind = ScriptOp::Kind::kTt;
    tt.k = players;
    tt.round = round;
    script.push_back(tt);
  }
  return script;
}

json ShowcaseReport(const oracle::Scenario& scenario) {
  const auto start = Clock::now();
  const auto report = oracle::EvaluatePosition(scenario, {});
  json j = oracle::ReportToJson(scenario, report);
  j["oracle_seconds"] = SecondsSince(start);

  json leads = json::array();
  if (scenario.leader == scenario.our_seat) {
    const auto spec = scenario.ToDealSpec();
    const auto layout = CardLayout::Build(
        spec, {.track_leader = true, .first_leader = scenario.leader});
    const auto order = game::DefaultSeatOrder(layout);
    const auto initial = encoding::InitialState(spec, layout);
    const auto projector = scoring::FavorableProjector::HoldToHalf(
        layout, {scenario.our_seat, scenario.partner_seat()},
        scenario.defender_points, scenario.total_points());
    for (Card lead : scenario.our_hand) {
      const auto script = HybridScriptAfterLead(layout, scenario.leader, lead);
      const auto final_state = game::RunScript(initial, layout, script, order);
      const auto w = scoring::ComputeWinProbability(final_state, layout, projector);
      leads.push_back({{"card", lead.ToString()},
                       {"p_win_uniform_legal", w.probability},
                       {"support", final_state.size()},
                       {"favorable_dimension", w.dimension},
                       {"width", layout.width()},
                       {"script", game::ScriptToJson(script)}});
    }
  }
  j["quantum"] = leads;
  j["total_seconds"] = SecondsSince(start);
  return j;
}

json RecommendReport(const oracle::Scenario& scenario, AdviceMode mode) {
  const auto report = oracle::EvaluatePosition(scenario, {});
  json j = oracle::ReportToJson(scenario, report);
  j["mode"] = ToString(mode);
  const auto card = Recommend(report, mode);
  if (card.empty()) {
    j.erase("recommended");
  } else {
    j["recommended"] = card;
  }
  return j;
}

json QcountReport(int t) {
  constexpr int kItems = 16;
  constexpr int kMarked = 6;
  const auto start = Clock::now();
  std::vector<qsim::BasisIndex> prep;
  for (int i = 0; i < kItems; ++i) prep.push_back(qsim::BasisIndex(i));
  const auto marked = [](const qsim::BasisIndex& k) {
    return k < qsim::BasisIndex(kMarked);
  };
  const auto c = scoring::QuantumCount(marked, prep, t);
  json j;
  j["t"] = t;
  j["items"] = kItems;
  j["marked"] = kMarked;
  j["outcome"] = c.outcome;
  j["probability"] = c.probability;
  j["phase"] = c.phase;
  j["estimate"] = c.estimate;
  j["abs_error"] = std::abs(c.estimate - kMarked);
  j["error_bound"] = scoring::CountingErrorBound(kItems, t);
  j["seconds"] = SecondsSince(start);
  return j;
}

json PayoffReport(bool seeger_fabian, int points) {
  scoring::PayoffParams params;
  params.seeger_fabian = seeger_fabian;
  const auto choices = scoring::DefaultChoices();
  json j;
  j["seeger_fabian"] = seeger_fabian;
  json breaks = json::array();
  for (const auto& c : choices) {
    breaks.push_back({{"choice", c.name},
                      {"value_won", c.value_won},
                      {"value_lost", c.value_lost},
                      {"break_even", scoring::BreakEven(c.value_won, c.value_lost, params)}});
  }
  j["choices"] = breaks;
  json curve = json::array();
  for (const auto& row : scoring::PayoffCurve(choices, points, params)) {
    curve.push_back({{"p", row.p}, {"choice", row.choice}, {"payoff", row.payoff}});
  }
  j["curve"] = curve;
  return j;
}

std::string PayoffCsv(bool seeger_fabian, int points) {
  scoring::PayoffParams params;
  params.seeger_fabian = seeger_fabian;
  return scoring::PayoffCurveToCsv(
      scoring::PayoffCurve(scoring::DefaultChoices(), points, params));
}

std::vector<BenchRow> RunBench(int min_cards, int max_cards, int samples,
                               std::uint64_t seed) {
  if (min_cards < 1 || max_cards > 10 || min_cards > max_cards) {
    throw CliError("card range must lie in 1..10");
  }
  if (samples < 1) throw CliError("samples must be positive");
  std::mt19937_64 rng(seed);
  std::vector<BenchRow> rows;
  for (int x = min_cards; x <= max_cards; ++x) {
    const DealSpec spec = encoding::ReducedSkatSpec(x);
    std::vector<int> slots;
    for (int holder : spec.Holders()) {
      slots.insert(slots.end(), spec.HolderCapacity(holder), holder);
    }
    double elapsed = 0;
    for (int s = 0; s < samples; ++s) {
      std::shuffle(slots.begin(), slots.end(), rng);
      encoding::Deal deal{slots};
      const auto state = oracle::StartState(spec, deal, 0);
      const auto start = Clock::now();
      oracle::SolveDeal(state, oracle::Search::kAlphaBeta);
      elapsed += SecondsSince(start);
    }
    BenchRow row;
    row.cards_per_hand = x;
    const BigUint deals = encoding::DealCount(spec);
    row.deals = deals.str();
    row.sampled = samples;
    row.seconds_per_game = elapsed / samples;
    row.total_seconds = deals.convert_to<double>() * row.seconds_per_game;
    rows.push_back(row);
  }
  return rows;
}

std::string BenchToCsv(const std::vector<BenchRow>& rows) {
  std::ostringstream os;
  os << "cards,deals,sampled,time_per_game_s,total_s\n";
  for (const auto& r : rows) {
    os << r.cards_per_hand << "," << r.deals << "," << r.sampled << ","
       << r.seconds_per_game << "," << r.total_seconds << "\n";
  }
  return os.str();
}

json BenchToJson(const std::vector<BenchRow>& rows) {
  json out = json::array();
  for (const auto& r : rows) {
    out.push_back({{"cards", r.cards_per_hand},
                   {"deals", r.deals},
                   {"sampled", r.sampled},
                   {"time_per_game_s", r.seconds_per_game},
                   {"total_s", r.total_seconds}});
  }
  return out;
}

}  // namespace qskat::cli
