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

#ifndef QSKAT_SCORING_PAYOFF_H_
#define QSKAT_SCORING_PAYOFF_H_

#include <string>
#include <vector>

#include "qskat/encoding/card.h"

namespace qskat::scoring {

// Diamonds 9, hearts 10, spades 11, clubs 12, Grand 24.
int BaseValue(const encoding::GameType& game);

// Length of the run of top trumps (from the club Jack down) that are all
// held or all missing.
int MatadorRun(const std::vector<encoding::Card>& declarer_cards,
               const encoding::GameType& game);

// (run + 1) * base.
int GameValue(const std::vector<encoding::Card>& declarer_cards,
              const encoding::GameType& game);

struct PayoffParams {
  bool seeger_fabian = false;  // +50 for a win, -50 for a loss
  int loss_multiplier = 2;
};

double Payoff(double p_win, int value_won, int value_lost,
              const PayoffParams& params = {});

// Win probability at which the expected payoff is zero.
double BreakEven(int value_won, int value_lost, const PayoffParams& params = {});

struct PayoffChoice {
  std::string name;
  int value_won = 0;
  int value_lost = 0;
};

struct PayoffRow {
  double p = 0;
  std::string choice;
  double payoff = 0;
};

// `points` evenly spaced p values in [0, 1] per choice.
std::vector<PayoffRow> PayoffCurve(const std::vector<PayoffChoice>& choices,
                                   int points, const PayoffParams& params = {});

// One choice per suit game and Grand, valued at the minimal run of one.
std::vector<PayoffChoice> DefaultChoices();

std::string PayoffCurveToCsv(const std::vector<PayoffRow>& rows);

}  // namespace qskat::scoring

#endif  // QSKAT_SCORING_PAYOFF_H_
