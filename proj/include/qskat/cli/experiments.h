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

// Experiment runners behind the command-line tool. Each returns JSON so the
// tool stays a thin formatting layer and the numbers can be tested here.

#ifndef QSKAT_CLI_EXPERIMENTS_H_
#define QSKAT_CLI_EXPERIMENTS_H_

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "qskat/encoding/deal.h"
#include "qskat/encoding/layout.h"
#include "qskat/game/evolution.h"
#include "qskat/oracle/scenario.h"
#include "qskat/qsim/prepare.h"

namespace qskat::cli {

class CliError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class ToyStage { kInitial, kAPlayed, kBPlayed, kTrick1, kFinal };

ToyStage ParseToyStage(std::string_view name);
std::string ToString(ToyStage stage);

struct ToyRun {
  ToyStage stage = ToyStage::kFinal;
  encoding::CardLayout layout;
  game::GameScript script;  // the operations actually applied
  qsim::SparseState state{0};
};

ToyRun RunToy(ToyStage stage, game::Backend backend = game::Backend::kKernel);

// Support and exact probabilities of the game register, the script, and the
// win probability once the game is over.
nlohmann::json ToyReport(const ToyRun& run);

qsim::Histogram ToyHistogram(const ToyRun& run, long shots, long long seed);

// Deal counts for the full game, the known-hand case, the toy and the
// reduced 3x+2 decks.
nlohmann::json DealsReport();
nlohmann::json DealsReport(const encoding::DealSpec& spec);

// How a session or recommendation ranks candidate cards.
enum class AdviceMode {
  kOracle,       // optimal play, all hands open, per consistent deal
  kHybridLegal,  // uniform random legal play
};

AdviceMode ParseAdviceMode(std::string_view name);
std::string ToString(AdviceMode mode);

// Card picked by `mode` from a report with qualities; empty when none.
std::string Recommend(const oracle::QualityReport& report, AdviceMode mode);

// Hybrid game script from a fixed lead of `lead` by seat `leader`.
game::GameScript HybridScriptAfterLead(const encoding::CardLayout& layout,
                                       int leader, encoding::Card lead);

// Oracle quality table plus, per candidate lead, the quantum rule-legal
// evolution's win probability and the script that produced it.
nlohmann::json ShowcaseReport(const oracle::Scenario& scenario);

nlohmann::json RecommendReport(const oracle::Scenario& scenario,
                               AdviceMode mode);

// Counting demonstrator: 16 prepared items, 6 marked.
nlohmann::json QcountReport(int t);

nlohmann::json PayoffReport(bool seeger_fabian, int points);
std::string PayoffCsv(bool seeger_fabian, int points);

struct BenchRow {
  int cards_per_hand = 0;
  std::string deals;          // exact count, decimal
  int sampled = 0;
  double seconds_per_game = 0;
  double total_seconds = 0;   // deals x seconds_per_game
};

// Times the exact solver on random deals of the reduced decks.
std::vector<BenchRow> RunBench(int min_cards, int max_cards, int samples,
                               std::uint64_t seed);
std::string BenchToCsv(const std::vector<BenchRow>& rows);
nlohmann::json BenchToJson(const std::vector<BenchRow>& rows);

}  // namespace qskat::cli

#endif  // QSKAT_CLI_EXPERIMENTS_H_
