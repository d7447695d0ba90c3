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

#include "qskat/scoring/score.h"

#include <algorithm>

namespace qskat::scoring {

using encoding::Location;

ScoreOperator::ScoreOperator(const encoding::CardLayout& layout,
                             std::vector<int> party)
    : layout_(&layout), party_(std::move(party)) {
  if (party_.empty()) throw ScoringError("party must name at least one seat");
  for (int seat : party_) {
    if (seat < 0 || seat >= layout.players()) {
      throw ScoringError("unknown player " + std::to_string(seat));
    }
  }
}

int ScoreOperator::Diagonal(const qsim::BasisIndex& key) const {
  int points = 0;
  for (int pos = 0; pos < layout_->num_cards(); ++pos) {
    if (layout_->LocationAt(key, pos) != Location::kStack) continue;
    const int holder = layout_->HolderAt(key, pos);
    if (std::find(party_.begin(), party_.end(), holder) != party_.end()) {
      points += encoding::CardPoints(layout_->cards()[pos].card);
    }
  }
  return points;
}

double ExpectedScore(const qsim::SparseState& state,
                     const encoding::CardLayout& layout, int player) {
  const ScoreOperator op(layout, {player});
  return qsim::Expectation(
      state, [&op](const qsim::BasisIndex& key) { return op.Diagonal(key); });
}

FavorableProjector::FavorableProjector(const encoding::CardLayout& layout,
                                       std::vector<int> party, int head_start,
                                       int min_points)
    : score_(layout, std::move(party)),
      head_start_(head_start),
      min_points_(min_points) {}

FavorableProjector FavorableProjector::MoreThanHalf(
    const encoding::CardLayout& layout, std::vector<int> party, int head_start,
    int total) {
  return FavorableProjector(layout, std::move(party), head_start, total / 2 + 1);
}

FavorableProjector FavorableProjector::HoldToHalf(
    const encoding::CardLayout& layout, std::vector<int> party, int head_start,
    int total) {
  return FavorableProjector(layout, std::move(party), head_start,
                            total - total / 2);
}

bool FavorableProjector::Favorable(const qsim::BasisIndex& key) const {
  return head_start_ + score_.Diagonal(key) >= min_points_;
}

WinProbability ComputeWinProbability(const qsim::SparseState& state,
                                     const encoding::CardLayout& layout,
                                     const FavorableProjector& projector) {
  WinProbability out;
  for (const auto& [key, p] : qsim::Marginal(state, layout.game_width())) {
    if (!projector.Favorable(key)) continue;
    out.probability += p;
    ++out.dimension;
  }
  return out;
}

}  // namespace qskat::scoring
