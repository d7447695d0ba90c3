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

#ifndef QSKAT_ENCODING_LAYOUT_H_
#define QSKAT_ENCODING_LAYOUT_H_

#include <vector>

#include "qskat/encoding/deal.h"
#include "qskat/qsim/prepare.h"
#include "qskat/qsim/sparse_state.h"

namespace qskat::encoding {

// Location code on (table, stack) qubits: 00 hand, 10 table, 11 stack.
// 01 is never produced and is rejected on decode.
enum class Location { kHand, kTable, kStack };

struct CardQubits {
  Card card;
  std::vector<int> player;   // 1 qubit (2 players) or 2 qubits (3 players)
  int table = -1;
  int stack = -1;
  int suit_follow = -1;      // allocated on request, never driven
  int ancilla = -1;          // 1 once the card has left the hand
  std::vector<int> origin;   // copy of the dealt holder, never rewritten
  std::vector<int> trick;    // round in which the card was taken, 0 before
};

struct LayoutOptions {
  bool suit_follow_qubit = false;
  // Per-round leader registers, needed for rule-legal evolution where the
  // trick winner leads the next round.
  bool track_leader = false;
  int first_leader = 0;
};

// Qubit map: card blocks in canonical trick order (strongest card leftmost),
// then the SP scratch qubit, then per-card ancillas, origin copies, trick
// round codes and leader registers. Origin and trick codes are the garbage
// that keeps trick taking one-to-one. For the four-card example this is exactly q0..q11 for the
// cards, q12 scratch and q13..q16 ancillas.
class CardLayout {
 public:
  static CardLayout Build(const DealSpec& spec, LayoutOptions options = {});

  int width() const { return width_; }
  int players() const { return players_; }
  int player_bits() const { return player_bits_; }
  int scratch() const { return scratch_; }
  // Card blocks, scratch and ancillas: the register shown in histograms.
  int game_width() const { return game_width_; }
  int rounds() const { return rounds_; }
  const GameType& game() const { return game_; }
  const LayoutOptions& options() const { return options_; }
  const std::vector<CardQubits>& cards() const { return cards_; }
  int num_cards() const { return static_cast<int>(cards_.size()); }

  // Layout position of `card`; throws when absent.
  int PositionOf(Card card) const;

  int HolderAt(const qsim::BasisIndex& key, int pos) const;
  void SetHolder(qsim::BasisIndex& key, int pos, int holder) const;
  int OriginAt(const qsim::BasisIndex& key, int pos) const;
  Location LocationAt(const qsim::BasisIndex& key, int pos) const;
  bool PlayedAt(const qsim::BasisIndex& key, int pos) const {
    return key.Get(cards_[pos].ancilla);
  }

  int TrickAt(const qsim::BasisIndex& key, int pos) const;
  void SetTrick(qsim::BasisIndex& key, int pos, int round) const;

  bool has_leader_registers() const { return options_.track_leader; }
  // Leader of round `round` (1-based).
  int LeaderAt(const qsim::BasisIndex& key, int round) const;
  void SetLeader(qsim::BasisIndex& key, int round, int seat) const;
  const std::vector<int>& LeaderRegister(int round) const;

  // Qubits holding player codes and ancillas of every card (read set for
  // hand-pattern conditions).
  std::vector<int> HandPatternQubits() const;
  std::vector<int> LocationQubits() const;

 private:
  int ReadCode(const qsim::BasisIndex& key, const std::vector<int>& q) const;
  void WriteCode(qsim::BasisIndex& key, const std::vector<int>& q, int code) const;

  std::vector<CardQubits> cards_;
  std::vector<std::vector<int>> leader_;
  GameType game_;
  LayoutOptions options_;
  int players_ = 0;
  int player_bits_ = 0;
  int rounds_ = 0;
  int scratch_ = -1;
  int game_width_ = 0;
  int width_ = 0;
};

struct CardState {
  Card card;
  int holder;
  Location location;
};

qsim::BasisIndex EncodeDeal(const Deal& deal, const DealSpec& spec,
                            const CardLayout& layout);
// Per card in layout order. Throws on the unused location code 01.
std::vector<CardState> DecodeBasis(const qsim::BasisIndex& key,
                                   const CardLayout& layout);

qsim::SparseState InitialState(
    const DealSpec& spec, const CardLayout& layout,
    qsim::PrepBackend backend = qsim::PrepBackend::kInjection);

}  // namespace qskat::encoding

#endif  // QSKAT_ENCODING_LAYOUT_H_
