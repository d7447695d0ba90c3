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

#include "qskat/encoding/deal.h"

#include <algorithm>
#include <map>
#include <set>

namespace qskat::encoding {
namespace {

BigUint Factorial(int n) {
  BigUint f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

// Per-position view of the constraints used by counting and enumeration.
struct Walker {
  const DealSpec& spec;
  std::vector<int> holders;               // holder codes in play
  std::vector<int> fixed_holder;          // per position, -1 when free
  std::vector<std::vector<int>> member;   // per position: count constraints
  std::vector<std::vector<int>> left_in;  // per position+constraint: cards of
                                          // the group at positions >= pos

  explicit Walker(const DealSpec& s) : spec(s), holders(s.Holders()) {
    const int n = static_cast<int>(s.deck.size());
    fixed_holder.assign(n, -1);
    member.assign(n, {});
    for (const auto& f : s.fixed) fixed_holder[s.DeckIndexOf(f.card)] = f.holder;
    const int m = static_cast<int>(s.counts.size());
    left_in.assign(n + 1, std::vector<int>(m, 0));
    for (int c = 0; c < m; ++c) {
      for (Card card : s.counts[c].cards) member[s.DeckIndexOf(card)].push_back(c);
    }
    for (int pos = n - 1; pos >= 0; --pos) {
      left_in[pos] = left_in[pos + 1];
      for (int c : member[pos]) ++left_in[pos][c];
    }
  }

  int Slot(int holder) const {
    return holder == kSkat ? static_cast<int>(holders.size()) - 1 : holder;
  }

  // Applies `holder` at `pos`; returns false if it violates a constraint.
  bool Step(int pos, int holder, std::vector<int>& caps,
            std::vector<int>& need) const {
    if (fixed_holder[pos] >= 0 && fixed_holder[pos] != holder) return false;
    int& cap = caps[Slot(holder)];
    if (cap == 0) return false;
    --cap;
    for (int c : member[pos]) {
      if (spec.counts[c].holder == holder) {
        if (need[c] == 0) return false;
        --need[c];
      }
    }
    // Remaining group cards must still be able to satisfy each count.
    for (int c = 0; c < static_cast<int>(need.size()); ++c) {
      if (need[c] > left_in[pos + 1][c]) return false;
    }
    return true;
  }

  std::vector<int> InitialCaps() const {
    std::vector<int> caps;
    for (int h : holders) caps.push_back(spec.HolderCapacity(h));
    return caps;
  }
  std::vector<int> InitialNeed() const {
    std::vector<int> need;
    for (const auto& c : spec.counts) need.push_back(c.count);
    return need;
  }
};

BigUint CountRec(const Walker& w, int pos, std::vector<int>& caps,
                 std::vector<int>& need,
                 std::map<std::vector<int>, BigUint>& memo) {
  const int n = static_cast<int>(w.spec.deck.size());
  if (pos == n) {
    for (int c : caps) if (c != 0) return 0;
    for (int c : need) if (c != 0) return 0;
    return 1;
  }
  std::vector<int> key;
  key.reserve(1 + caps.size() + need.size());
  key.push_back(pos);
  key.insert(key.end(), caps.begin(), caps.end());
  key.insert(key.end(), need.begin(), need.end());
  if (auto it = memo.find(key); it != memo.end()) return it->second;

  BigUint total = 0;
  for (int h : w.holders) {
    std::vector<int> c2 = caps, n2 = need;
    if (w.Step(pos, h, c2, n2)) total += CountRec(w, pos + 1, c2, n2, memo);
  }
  memo.emplace(std::move(key), total);
  return total;
}

void EnumerateRec(const Walker& w, int pos, std::vector<int>& caps,
                  std::vector<int>& need, Deal& current,
                  std::vector<Deal>& out) {
  const int n = static_cast<int>(w.spec.deck.size());
  if (pos == n) {
    for (int c : caps) if (c != 0) return;
    for (int c : need) if (c != 0) return;
    out.push_back(current);
    return;
  }
  for (int h : w.holders) {
    std::vector<int> c2 = caps, n2 = need;
    if (!w.Step(pos, h, c2, n2)) continue;
    current.holders[pos] = h;
    EnumerateRec(w, pos + 1, c2, n2, current, out);
  }
}

Card ParseCardJson(const nlohmann::json& j) {
  if (j.is_string()) return Card::Parse(j.get<std::string>());
  return Card::Parse(j.at("suit").get<std::string>() +
                     j.at("rank").get<std::string>());
}

nlohmann::json CardJson(Card c) {
  std::string s = c.ToString();
  return {{"suit", s.substr(0, 1)}, {"rank", s.substr(1)}};
}

std::vector<Card> CanonicalPrefix(int n, const GameType& game) {
  TrickOrder order(FullDeck(), game);
  auto all = order.CanonicalOrder();
  all.resize(n);
  return all;
}

}  // namespace

int DealSpec::HolderCapacity(int holder) const {
  return holder == kSkat ? skat_size : hand_size;
}

std::vector<int> DealSpec::Holders() const {
  std::vector<int> h;
  for (int p = 0; p < players; ++p) h.push_back(p);
  if (skat_size > 0) h.push_back(kSkat);
  return h;
}

int DealSpec::DeckIndexOf(Card card) const {
  auto it = std::find(deck.begin(), deck.end(), card);
  return it == deck.end() ? -1 : static_cast<int>(it - deck.begin());
}

void DealSpec::Validate() const {
  if (players != 2 && players != 3) throw EncodingError("players must be 2 or 3");
  if (skat_size != 0 && skat_size != 2) throw EncodingError("skat_size must be 0 or 2");
  if (hand_size < 0) throw EncodingError("hand_size must be non-negative");
  if (players * hand_size + skat_size != static_cast<int>(deck.size())) {
    throw EncodingError("players * hand_size + skat_size must equal deck size");
  }
  std::set<Card> seen(deck.begin(), deck.end());
  if (seen.size() != deck.size()) throw EncodingError("duplicate card in deck");
  auto valid_holder = [this](int h) {
    return (h >= 0 && h < players) || (h == kSkat && skat_size > 0);
  };
  std::set<Card> fixed_cards;
  std::vector<int> per_holder(kSkat + 1, 0);
  for (const auto& f : fixed) {
    if (DeckIndexOf(f.card) < 0) throw EncodingError("constrained card not in deck");
    if (!valid_holder(f.holder)) throw EncodingError("invalid holder in constraint");
    if (!fixed_cards.insert(f.card).second) {
      throw EncodingError("card constrained twice");
    }
    if (++per_holder[f.holder] > HolderCapacity(f.holder)) {
      throw EncodingError("too many cards fixed to one holder");
    }
  }
  for (const auto& c : counts) {
    if (!valid_holder(c.holder)) throw EncodingError("invalid holder in count constraint");
    std::set<Card> group(c.cards.begin(), c.cards.end());
    if (group.size() != c.cards.size()) throw EncodingError("duplicate card in count constraint");
    for (Card card : c.cards) {
      if (DeckIndexOf(card) < 0) throw EncodingError("count-constrained card not in deck");
    }
    if (c.count < 0 || c.count > static_cast<int>(c.cards.size()) ||
        c.count > HolderCapacity(c.holder)) {
      throw EncodingError("count constraint out of range");
    }
  }
}

std::vector<Card> Deal::HandOf(const DealSpec& spec, int holder) const {
  std::vector<Card> hand;
  for (std::size_t i = 0; i < holders.size(); ++i) {
    if (holders[i] == holder) hand.push_back(spec.deck[i]);
  }
  return hand;
}

bool Satisfies(const DealSpec& spec, const Deal& deal) {
  if (deal.holders.size() != spec.deck.size()) return false;
  for (int h : spec.Holders()) {
    if (static_cast<int>(deal.HandOf(spec, h).size()) != spec.HolderCapacity(h)) {
      return false;
    }
  }
  for (int h : deal.holders) {
    const auto hs = spec.Holders();
    if (std::find(hs.begin(), hs.end(), h) == hs.end()) return false;
  }
  for (const auto& f : spec.fixed) {
    if (deal.holders[spec.DeckIndexOf(f.card)] != f.holder) return false;
  }
  for (const auto& c : spec.counts) {
    int n = 0;
    for (Card card : c.cards) n += deal.holders[spec.DeckIndexOf(card)] == c.holder;
    if (n != c.count) return false;
  }
  return true;
}

BigUint DealCount(const DealSpec& spec) {
  spec.Validate();
  if (spec.counts.empty()) {
    // Multinomial over the unconstrained cards.
    const auto holders = spec.Holders();
    std::vector<int> free_slots;
    for (int h : holders) free_slots.push_back(spec.HolderCapacity(h));
    for (const auto& f : spec.fixed) {
      const int slot = f.holder == kSkat ? static_cast<int>(holders.size()) - 1
                                         : f.holder;
      --free_slots[slot];
    }
    const int free_cards =
        static_cast<int>(spec.deck.size() - spec.fixed.size());
    BigUint result = Factorial(free_cards);
    for (int s : free_slots) result /= Factorial(s);
    return result;
  }
  Walker w(spec);
  auto caps = w.InitialCaps();
  auto need = w.InitialNeed();
  std::map<std::vector<int>, BigUint> memo;
  return CountRec(w, 0, caps, need, memo);
}

std::vector<Deal> EnumerateDeals(const DealSpec& spec, std::uint64_t cap) {
  const BigUint count = DealCount(spec);
  if (count > cap) throw EncodingError("deal count exceeds enumeration cap");
  Walker w(spec);
  auto caps = w.InitialCaps();
  auto need = w.InitialNeed();
  Deal current{std::vector<int>(spec.deck.size(), -1)};
  std::vector<Deal> out;
  out.reserve(static_cast<std::size_t>(count));
  EnumerateRec(w, 0, caps, need, current, out);
  return out;
}

DealSpec DealSpec::FromJson(const nlohmann::json& j) {
  DealSpec s;
  for (const auto& c : j.at("deck")) s.deck.push_back(ParseCardJson(c));
  s.players = j.value("players", 3);
  s.hand_size = j.value("hand_size", 10);
  s.skat_size = j.value("skat_size", 2);
  if (j.contains("game")) {
    const auto& g = j.at("game");
    if (g.value("variant", "suit") == "grand") {
      s.game = GameType::Grand();
    } else {
      s.game = GameType::SuitGame(ParseSuit(g.value("trump", "S")));
    }
  }
  if (j.contains("constraints")) {
    for (const auto& c : j.at("constraints")) {
      s.fixed.push_back({ParseCardJson(c.at("card")), c.at("holder").get<int>()});
    }
  }
  if (j.contains("count_constraints")) {
    for (const auto& c : j.at("count_constraints")) {
      CountConstraint cc;
      for (const auto& card : c.at("cards")) cc.cards.push_back(ParseCardJson(card));
      cc.holder = c.at("holder").get<int>();
      cc.count = c.at("count").get<int>();
      s.counts.push_back(std::move(cc));
    }
  }
  s.Validate();
  return s;
}

nlohmann::json DealSpec::ToJson() const {
  nlohmann::json j;
  j["deck"] = nlohmann::json::array();
  for (Card c : deck) j["deck"].push_back(CardJson(c));
  j["players"] = players;
  j["hand_size"] = hand_size;
  j["skat_size"] = skat_size;
  if (game.variant == GameType::Variant::kGrand) {
    j["game"] = {{"variant", "grand"}};
  } else {
    j["game"] = {{"variant", "suit"}, {"trump", std::string(1, SuitChar(game.trump))}};
  }
  j["constraints"] = nlohmann::json::array();
  for (const auto& f : fixed) {
    j["constraints"].push_back({{"card", CardJson(f.card)}, {"holder", f.holder}});
  }
  if (!counts.empty()) {
    j["count_constraints"] = nlohmann::json::array();
    for (const auto& c : counts) {
      nlohmann::json cards = nlohmann::json::array();
      for (Card card : c.cards) cards.push_back(CardJson(card));
      j["count_constraints"].push_back(
          {{"cards", cards}, {"holder", c.holder}, {"count", c.count}});
    }
  }
  return j;
}

DealSpec FullSkatSpec() {
  DealSpec s;
  s.deck = FullDeck();
  s.players = 3;
  s.hand_size = 10;
  s.skat_size = 2;
  s.game = GameType::SuitGame(Suit::kSpades);
  return s;
}

DealSpec KnownHandSpec() { return ReducedKnownHandSpec(10); }

DealSpec ReducedSkatSpec(int cards_per_hand) {
  if (cards_per_hand < 1 || cards_per_hand > 10) {
    throw EncodingError("cards per hand must be in 1..10");
  }
  DealSpec s;
  s.game = GameType::SuitGame(Suit::kSpades);
  s.deck = CanonicalPrefix(3 * cards_per_hand + 2, s.game);
  s.players = 3;
  s.hand_size = cards_per_hand;
  s.skat_size = 2;
  return s;
}

DealSpec ReducedKnownHandSpec(int cards_per_hand) {
  DealSpec s = ReducedSkatSpec(cards_per_hand);
  for (int i = 0; i < cards_per_hand; ++i) s.fixed.push_back({s.deck[i], 0});
  return s;
}

DealSpec ToySpec() {
  DealSpec s;
  s.game = GameType::SuitGame(Suit::kClubs);
  s.deck = ParseCards({"CA", "C10", "CK", "CQ"});
  s.players = 2;
  s.hand_size = 2;
  s.skat_size = 0;
  return s;
}

}  // namespace qskat::encoding
