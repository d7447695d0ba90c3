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

#ifndef QSKAT_QSIM_BASIS_INDEX_H_
#define QSKAT_QSIM_BASIS_INDEX_H_

#include <compare>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>

namespace qskat::qsim {

// Computational-basis ket as a bit pattern, one bit per qubit. Qubit 0 is the
// least significant bit and the leftmost character of the label form.
class BasisIndex {
 public:
  static constexpr int kMaxQubits = 128;
  using Word = unsigned __int128;

  constexpr BasisIndex() = default;
  constexpr explicit BasisIndex(Word bits) : bits_(bits) {}

  // Parses a label such as "0110"; character i is qubit i.
  static BasisIndex FromLabel(std::string_view label);

  constexpr bool Get(int qubit) const { return (bits_ >> qubit) & 1; }
  constexpr void Set(int qubit, bool value) {
    const Word mask = Word{1} << qubit;
    bits_ = value ? (bits_ | mask) : (bits_ & ~mask);
  }
  constexpr void Flip(int qubit) { bits_ ^= Word{1} << qubit; }
  constexpr BasisIndex Flipped(int qubit) const {
    return BasisIndex(bits_ ^ (Word{1} << qubit));
  }

  constexpr Word raw() const { return bits_; }

  // True when no bit at or above `width` is set.
  constexpr bool FitsWidth(int width) const {
    return width >= kMaxQubits || (bits_ >> width) == 0;
  }

  std::string ToLabel(int width) const;

  constexpr auto operator<=>(const BasisIndex&) const = default;

 private:
  Word bits_ = 0;
};

struct BasisIndexHash {
  std::size_t operator()(const BasisIndex& b) const noexcept {
    const auto lo = static_cast<std::uint64_t>(b.raw());
    const auto hi = static_cast<std::uint64_t>(b.raw() >> 64);
    return static_cast<std::size_t>(lo ^ (hi * 0x9e3779b97f4a7c15ULL));
  }
};

}  // namespace qskat::qsim

#endif  // QSKAT_QSIM_BASIS_INDEX_H_
