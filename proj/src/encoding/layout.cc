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

#include "qskat/encoding/layout.h"

#include <algorithm>
#include <bit>

namespace qskat::encoding {

using qsim::BasisIndex;

CardLayout CardLayout::Build(const DealSpec& spec, LayoutOptions options) {
  spec.Validate();
  if (spec.players == 2 && spec.skat_size != 0) {
    throw EncodingError("two-player layouts have no Skat code");
  }
  CardLayout l;
  l.game_ = spec.game;
  l.options_ = options;
  l.players_ = spec.players;
  l.player_bits_ = spec.players == 2 ? 1 : 2;
  l.rounds_ = spec.hand_size;
  if (options.first_leader < 0 || options.first_leader >= spec.players) {
    throw EncodingError("first leader must be a seat");
  }

  const auto ordered = TrickOrder(spec.deck, spec.game).CanonicalOrder();
  int q = 0;
  for (Card c : ordered) {
    CardQubits cq;
    cq.card = c;
    for (int b = 0; b < l.player_bits_; ++b) cq.player.push_back(q++);
    cq.table = q++;
    cq.stack = q++;
    if (options.suit_follow_qubit) cq.suit_follow = q++;
    l.cards_.push_back(cq);
  }
  l.scratch_ = q++;
  for (auto& cq : l.cards_) cq.ancilla = q++;
  l.game_width_ = q;
  // Dealt-holder copies keep the trick rewrite one-to-one.
  for (auto& cq : l.cards_) {
    for (int b = 0; b < l.player_bits_; ++b) cq.origin.push_back(q++);
  }
  const int round_bits = std::bit_width(static_cast<unsigned>(l.rounds_));
  for (auto& cq : l.cards_) {
    for (int b = 0; b < round_bits; ++b) cq.trick.push_back(q++);
  }
  if (options.track_leader) {
    for (int r = 0; r < l.rounds_; ++r) {
      std::vector<int> reg;
      for (int b = 0; b < l.player_bits_; ++b) reg.push_back(q++);
      l.leader_.push_back(reg);
    }
  }
  if (q > BasisIndex::kMaxQubits) throw EncodingError("layout exceeds 128 qubits");
  l.width_ = q;
  return l;
}

int CardLayout::PositionOf(Card card) const {
  for (int i = 0; i < num_cards(); ++i) {
    if (cards_[i].card == card) return i;
  }
  throw EncodingError("card not in layout: " + card.ToString());
}

// Code bits are big-endian over the listed qubits: for two player qubits
// j0 j1, code 2 (rearhand) reads "10".
int CardLayout::ReadCode(const BasisIndex& key, const std::vector<int>& q) const {
  int code = 0;
  for (int b : q) code = (code << 1) | static_cast<int>(key.Get(b));
  return code;
}

void CardLayout::WriteCode(BasisIndex& key, const std::vector<int>& q,
                           int code) const {
  const int n = static_cast<int>(q.size());
  for (int i = 0; i < n; ++i) key.Set(q[i], (code >> (n - 1 - i)) & 1);
}

int CardLayout::HolderAt(const BasisIndex& key, int pos) const {
  return ReadCode(key, cards_[pos].player);
}

void CardLayout::SetHolder(BasisIndex& key, int pos, int holder) const {
  WriteCode(key, cards_[pos].player, holder);
}

int CardLayout::OriginAt(const BasisIndex& key, int pos) const {
  if (cards_[pos].origin.empty()) return HolderAt(key, pos);
  return ReadCode(key, cards_[pos].origin);
}

Location CardLayout::LocationAt(const BasisIndex& key, int pos) const {
  const bool t = key.Get(cards_[pos].table);
  const bool s = key.Get(cards_[pos].stack);
  if (!t && !s) return Location::kHand;
  if (t && !s) return Location::kTable;
  if (t && s) return Location::kStack;
  throw EncodingError("location code 01 is not used");
}

int CardLayout::TrickAt(const BasisIndex& key, int pos) const {
  return ReadCode(key, cards_[pos].trick);
}

void CardLayout::SetTrick(BasisIndex& key, int pos, int round) const {
  WriteCode(key, cards_[pos].trick, round);
}

int CardLayout::LeaderAt(const BasisIndex& key, int round) const {
  if (!options_.track_leader) throw EncodingError("layout has no leader registers");
  return ReadCode(key, LeaderRegister(round));
}

void CardLayout::SetLeader(BasisIndex& key, int round, int seat) const {
  WriteCode(key, LeaderRegister(round), seat);
}

const std::vector<int>& CardLayout::LeaderRegister(int round) const {
  if (round < 1 || round > static_cast<int>(leader_.size())) {
    throw EncodingError("round out of range");
  }
  return leader_[round - 1];
}

std::vector<int> CardLayout::HandPatternQubits() const {
  std::vector<int> q;
  for (const auto& c : cards_) {
    q.insert(q.end(), c.player.begin(), c.player.end());
    q.push_back(c.ancilla);
  }
  return q;
}

std::vector<int> CardLayout::LocationQubits() const {
  std::vector<int> q;
  for (const auto& c : cards_) {
    q.push_back(c.table);
    q.push_back(c.stack);
  }
  return q;
}

BasisIndex EncodeDeal(const Deal& deal, const DealSpec& spec,
                      const CardLayout& layout) {
  if (deal.holders.size() != spec.deck.size()) {
    throw EncodingError("deal does not match spec");
  }
  BasisIndex key;
  for (std::size_t i = 0; i < spec.deck.size(); ++i) {
    const int pos = layout.PositionOf(spec.deck[i]);
    layout.SetHolder(key, pos, deal.holders[i]);
    for (std::size_t b = 0; b < layout.cards()[pos].origin.size(); ++b) {
      key.Set(layout.cards()[pos].origin[b],
              key.Get(layout.cards()[pos].player[b]));
    }
  }
  if (layout.has_leader_registers()) {
    layout.SetLeader(key, 1, layout.options().first_leader);
  }
  return key;
}

std::vector<CardState> DecodeBasis(const BasisIndex& key,
                                   const CardLayout& layout) {
  if (!key.FitsWidth(layout.width())) throw EncodingError("key exceeds layout width");
  std::vector<CardState> out;
  for (int pos = 0; pos < layout.num_cards(); ++pos) {
    out.push_back({layout.cards()[pos].card, layout.HolderAt(key, pos),
                   layout.LocationAt(key, pos)});
  }
  return out;
}

qsim::SparseState InitialState(const DealSpec& spec, const CardLayout& layout,
                               qsim::PrepBackend backend) {
  const auto deals = EnumerateDeals(spec);
  std::vector<BasisIndex> keys;
  keys.reserve(deals.size());
  for (const Deal& d : deals) keys.push_back(EncodeDeal(d, spec, layout));
  return qsim::PrepareSuperposition(layout.width(), keys, backend);
}

}  // namespace qskat::encoding
