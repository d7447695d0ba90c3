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

#ifndef QSKAT_ENCODING_DEAL_H_
#define QSKAT_ENCODING_DEAL_H_

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <string>
#include <vector>

#include "json.hpp"
#include "qskat/encoding/card.h"

namespace qskat::encoding {

using BigUint = boost::multiprecision::cpp_int;

// Holder codes. Seats are 0..players-1; the Skat has its own code so that
// the 3-player two-bit encoding reads 00 fore-, 01 middle-, 10 rearhand,
// 11 Skat.
inline constexpr int kSkat = 3;

struct FixedHolder {
  Card card;
  int holder;
};

// Exactly `count` of `cards` lie with `holder`.
struct CountConstraint {
  std::vector<Card> cards;
  int holder;
  int count;
};

struct DealSpec {
  std::vector<Card> deck;
  int players = 3;
  int hand_size = 10;
  int skat_size = 2;
  GameType game;
  std::vector<FixedHolder> fixed;
  std::vector<CountConstraint> counts;

  // Throws EncodingError when the spec is inconsistent.
  void Validate() const;
  int HolderCapacity(int holder) const;
  std::vector<int> Holders() const;  // seats then the Skat when present
  int DeckIndexOf(Card card) const;  // -1 when absent

  static DealSpec FromJson(const nlohmann::json& j);
  nlohmann::json ToJson() const;
};

// Holder per deck position (same order as DealSpec::deck).
struct Deal {
  std::vector<int> holders;

  std::vector<Card> HandOf(const DealSpec& spec, int holder) const;
  auto operator<=>(const Deal&) const = default;
};

bool Satisfies(const DealSpec& spec, const Deal& deal);

// Exact number of deals consistent with the spec.
BigUint DealCount(const DealSpec& spec);

inline constexpr std::uint64_t kDefaultEnumerationCap = 100'000'000;

// All consistent deals, lexicographic by (deck position, holder code).
// Throws when the count exceeds `cap`.
std::vector<Deal> EnumerateDeals(const DealSpec& spec,
                                 std::uint64_t cap = kDefaultEnumerationCap);

// Presets used by the CLI and tests.
DealSpec FullSkatSpec();
DealSpec KnownHandSpec();         // one full hand fixed to seat 0
DealSpec ReducedSkatSpec(int cards_per_hand);  // 3x+2 cards
DealSpec ReducedKnownHandSpec(int cards_per_hand);
DealSpec ToySpec();               // CA C10 CK CQ, two players, two cards each

}  // namespace qskat::encoding

#endif  // QSKAT_ENCODING_DEAL_H_
