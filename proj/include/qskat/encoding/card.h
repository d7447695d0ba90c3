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

#ifndef QSKAT_ENCODING_CARD_H_
#define QSKAT_ENCODING_CARD_H_

#include <array>
#include <compare>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace qskat::encoding {

class EncodingError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Declaration order is the Jack ranking: Clubs > Spades > Hearts > Diamonds.
enum class Suit { kDiamonds = 0, kHearts = 1, kSpades = 2, kClubs = 3 };
enum class Rank { k7 = 0, k8, k9, k10, kJack, kQueen, kKing, kAce };

inline constexpr int kNumSuits = 4;
inline constexpr int kNumRanks = 8;
inline constexpr int kDeckSize = 32;

struct Card {
  Suit suit;
  Rank rank;

  constexpr int Index() const {
    return static_cast<int>(suit) * kNumRanks + static_cast<int>(rank);
  }
  static constexpr Card FromIndex(int index) {
    return {static_cast<Suit>(index / kNumRanks),
            static_cast<Rank>(index % kNumRanks)};
  }

  // "CA", "H10", "SJ", "D7".
  std::string ToString() const;
  static Card Parse(std::string_view text);

  constexpr bool operator==(const Card&) const = default;
  constexpr auto operator<=>(const Card& o) const { return Index() <=> o.Index(); }
};

char SuitChar(Suit suit);
Suit ParseSuit(std::string_view text);
std::vector<Card> ParseCards(const std::vector<std::string>& texts);
std::vector<Card> FullDeck();

// Point value: A 11, 10 10, K 4, Q 3, J 2, 9/8/7 0.
int CardPoints(Card card);
int TotalPoints(const std::vector<Card>& cards);

struct GameType {
  enum class Variant { kSuit, kGrand };
  Variant variant = Variant::kSuit;
  Suit trump = Suit::kSpades;  // ignored for Grand

  static GameType SuitGame(Suit trump) { return {Variant::kSuit, trump}; }
  static GameType Grand() { return {Variant::kGrand, Suit::kClubs}; }

  bool IsTrump(Card card) const {
    return card.rank == Rank::kJack ||
           (variant == Variant::kSuit && card.suit == trump);
  }
  bool operator==(const GameType&) const = default;
};

// Suit a card follows under the game type; nullopt stands for trump.
std::optional<Suit> EffectiveSuit(Card card, const GameType& game);

// Trick-taking partial order: Jack chain, above the trump chain, above every
// side-suit chain; side suits are mutually incomparable.
class TrickOrder {
 public:
  TrickOrder(std::vector<Card> deck, GameType game);

  // true: a beats b; false: b beats a (or a == b); nullopt: incomparable.
  std::optional<bool> Beats(Card a, Card b) const;
  bool Comparable(Card a, Card b) const { return Beats(a, b).has_value(); }

  // Deck sorted into a non-increasing total extension of the order:
  // Jacks (C S H D), trump suit, then side suits in C S H D order, each by
  // descending rank.
  std::vector<Card> CanonicalOrder() const;

  const GameType& game() const { return game_; }
  const std::vector<Card>& deck() const { return deck_; }

 private:
  std::vector<Card> deck_;
  GameType game_;
};

// Position of `card` in the canonical total extension of the full deck under
// `game` (0 = strongest). Used as a sort key.
int CanonicalRank(Card card, const GameType& game);

}  // namespace qskat::encoding

#endif  // QSKAT_ENCODING_CARD_H_
