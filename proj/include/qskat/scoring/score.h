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

// Stack-point observables, the favorable projector and the win probability.

#ifndef QSKAT_SCORING_SCORE_H_
#define QSKAT_SCORING_SCORE_H_

#include <cstddef>
#include <stdexcept>
#include <vector>

#include "qskat/encoding/layout.h"
#include "qskat/qsim/sparse_state.h"

namespace qskat::scoring {

class ScoringError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Diagonal observable: points of every card lying on the stack of one of
// `party`'s seats.
class ScoreOperator {
 public:
  ScoreOperator(const encoding::CardLayout& layout, std::vector<int> party);

  int Diagonal(const qsim::BasisIndex& key) const;
  const std::vector<int>& party() const { return party_; }

 private:
  const encoding::CardLayout* layout_;
  std::vector<int> party_;
};

double ExpectedScore(const qsim::SparseState& state,
                     const encoding::CardLayout& layout, int player);

// 0/1 diagonal: head_start + party stack points >= min_points.
class FavorableProjector {
 public:
  FavorableProjector(const encoding::CardLayout& layout, std::vector<int> party,
                     int head_start, int min_points);

  // The party needs more than half of `total` (61 of 120, 15 of 28).
  static FavorableProjector MoreThanHalf(const encoding::CardLayout& layout,
                                         std::vector<int> party,
                                         int head_start, int total);
  // The opposing side is held to at most half of `total`; a tie goes to
  // this party.
  static FavorableProjector HoldToHalf(const encoding::CardLayout& layout,
                                       std::vector<int> party, int head_start,
                                       int total);

  bool Favorable(const qsim::BasisIndex& key) const;
  int min_points() const { return min_points_; }
  int head_start() const { return head_start_; }

 private:
  ScoreOperator score_;
  int head_start_;
  int min_points_;
};

struct WinProbability {
  double probability = 0.0;
  // Favorable basis states of the game register (garbage qubits traced out).
  std::size_t dimension = 0;
};

WinProbability ComputeWinProbability(const qsim::SparseState& state,
                                     const encoding::CardLayout& layout,
                                     const FavorableProjector& projector);

}  // namespace qskat::scoring

#endif  // QSKAT_SCORING_SCORE_H_
