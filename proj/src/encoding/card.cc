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

#include "qskat/encoding/card.h"

#include <algorithm>
#include <set>

namespace qskat::encoding {
namespace {

constexpr std::array<const char*, kNumRanks> kRankText = {
    "7", "8", "9", "10", "J", "Q", "K", "A"};

// Ranking inside a non-Jack suit chain: A > 10 > K > Q > 9 > 8 > 7.
int ChainStrength(Rank rank) {
  switch (rank) {
    case Rank::k7: return 0;
    case Rank::k8: return 1;
    case Rank::k9: return 2;
    case Rank::kQueen: return 3;
    case Rank::kKing: return 4;
    case Rank::k10: return 5;
    case Rank::kAce: return 6;
    case Rank::kJack: break;
  }
  return -1;
}

// Side suits are laid out in this order after the trump block.
constexpr std::array<Suit, 4> kSideSuitOrder = {Suit::kClubs, Suit::kSpades,
                                                Suit::kHearts, Suit::kDiamonds};

}  // namespace

char SuitChar(Suit suit) {
  switch (suit) {
    case Suit::kDiamonds: return 'D';
    case Suit::kHearts: return 'H';
    case Suit::kSpades: return 'S';
    case Suit::kClubs: return 'C';
  }
  return '?';
}

Suit ParseSuit(std::string_view text) {
  if (text.size() == 1) {
    switch (text[0]) {
      case 'D': case 'd': return Suit::kDiamonds;
      case 'H': case 'h': return Suit::kHearts;
      case 'S': case 's': return Suit::kSpades;
      case 'C': case 'c': return Suit::kClubs;
      default: break;
    }
  }
  throw EncodingError("unknown suit: " + std::string(text));
}

std::string Card::ToString() const {
  return std::string(1, SuitChar(suit)) + kRankText[static_cast<int>(rank)];
}

Card Card::Parse(std::string_view text) {
  if (text.size() < 2) throw EncodingError("bad card: " + std::string(text));
  const Suit suit = ParseSuit(text.substr(0, 1));
  std::string rank(text.substr(1));
  std::transform(rank.begin(), rank.end(), rank.begin(), ::toupper);
  if (rank == "T") rank = "10";
  for (int r = 0; r < kNumRanks; ++r) {
    if (rank == kRankText[r]) return {suit, static_cast<Rank>(r)};
  }
  throw EncodingError("bad card: " + std::string(text));
}

std::vector<Card> ParseCards(const std::vector<std::string>& texts) {
  std::vector<Card> cards;
  cards.reserve(texts.size());
  for (const auto& t : texts) cards.push_back(Card::Parse(t));
  return cards;
}

std::vector<Card> FullDeck() {
  std::vector<Card> deck;
  for (int i = 0; i < kDeckSize; ++i) deck.push_back(Card::FromIndex(i));
  return deck;
}

int CardPoints(Card card) {
  switch (card.rank) {
    case Rank::kAce: return 11;
    case Rank::k10: return 10;
    case Rank::kKing: return 4;
    case Rank::kQueen: return 3;
    case Rank::kJack: return 2;
    default: return 0;
  }
}

int TotalPoints(const std::vector<Card>& cards) {
  int sum = 0;
  for (Card c : cards) sum += CardPoints(c);
  return sum;
}

std::optional<Suit> EffectiveSuit(Card card, const GameType& game) {
  if (game.IsTrump(card)) return std::nullopt;
  return card.suit;
}

int CanonicalRank(Card card, const GameType& game) {
  if (card.rank == Rank::kJack) return 3 - static_cast<int>(card.suit);
  int block = 4;
  if (game.variant == GameType::Variant::kSuit) {
    if (card.suit == game.trump) return block + (6 - ChainStrength(card.rank));
    block += 7;
  }
  for (Suit s : kSideSuitOrder) {
    if (game.variant == GameType::Variant::kSuit && s == game.trump) continue;
    if (card.suit == s) return block + (6 - ChainStrength(card.rank));
    block += 7;
  }
  return block;
}

TrickOrder::TrickOrder(std::vector<Card> deck, GameType game)
    : deck_(std::move(deck)), game_(game) {
  std::set<Card> seen(deck_.begin(), deck_.end());
  if (seen.size() != deck_.size()) throw EncodingError("duplicate card in deck");
}

std::optional<bool> TrickOrder::Beats(Card a, Card b) const {
  if (a == b) return false;
  const bool ta = game_.IsTrump(a);
  const bool tb = game_.IsTrump(b);
  if (ta != tb) return ta;
  if (!ta && a.suit != b.suit) return std::nullopt;
  return CanonicalRank(a, game_) < CanonicalRank(b, game_);
}

std::vector<Card> TrickOrder::CanonicalOrder() const {
  std::vector<Card> sorted = deck_;
  std::sort(sorted.begin(), sorted.end(), [this](Card a, Card b) {
    return CanonicalRank(a, game_) < CanonicalRank(b, game_);
  });
  return sorted;
}

}  // namespace qskat::encoding
