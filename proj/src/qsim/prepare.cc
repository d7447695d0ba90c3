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

#include "qskat/qsim/prepare.h"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <map>
#include <random>
#include <set>
#include <sstream>

#include "json.hpp"

namespace qskat::qsim {
namespace {

void ValidateSet(int width, std::span<const BasisIndex> basis_set) {
  if (basis_set.empty()) throw QsimError("basis set must not be empty");
  std::set<BasisIndex> seen;
  for (const BasisIndex& b : basis_set) {
    if (!b.FitsWidth(width)) throw QsimError("basis key exceeds width");
    if (!seen.insert(b).second) throw QsimError("basis set has duplicates");
  }
}

BasisIndex PrefixBelow(const BasisIndex& key, int qubit) {
  if (qubit == 0) return BasisIndex();
  const BasisIndex::Word mask = (BasisIndex::Word{1} << qubit) - 1;
  return BasisIndex(key.raw() & mask);
}

}  // namespace

Circuit SynthesizePreparation(int width,
                              std::span<const BasisIndex> basis_set) {
  ValidateSet(width, basis_set);
  Circuit circuit;
  std::vector<int> varying;  // qubits already fixed that differ across keys
  for (int q = 0; q < width; ++q) {
    std::size_t ones = 0;
    for (const BasisIndex& b : basis_set) ones += b.Get(q);
    if (ones == 0) continue;
    if (ones == basis_set.size()) {
      circuit.push_back({PauliX{q}, {}});
      continue;
    }
    // Group keys by their prefix on lower qubits; split each group.
    std::map<BasisIndex, std::pair<std::size_t, std::size_t>> groups;
    for (const BasisIndex& b : basis_set) {
      auto& [n0, n1] = groups[PrefixBelow(b, q)];
      (b.Get(q) ? n1 : n0) += 1;
    }
    for (const auto& [prefix, counts] : groups) {
      const auto [n0, n1] = counts;
      if (n1 == 0) continue;
      ControlSpec controls;
      for (int v : varying) controls.push_back({v, prefix.Get(v)});
      if (n0 == 0) {
        circuit.push_back({PauliX{q}, controls});
      } else {
        const double p1 = static_cast<double>(n1) / static_cast<double>(n0 + n1);
        circuit.push_back(
            {RyGate(q, 2.0 * std::asin(std::sqrt(p1))), controls});
      }
    }
    varying.push_back(q);
  }
  return circuit;
}

SparseState PrepareSuperposition(int width,
                                 std::span<const BasisIndex> basis_set,
                                 PrepBackend backend) {
  ValidateSet(width, basis_set);
  if (backend == PrepBackend::kCircuit) {
    return RunCircuit(SparseState::Basis(width, BasisIndex()),
                      SynthesizePreparation(width, basis_set));
  }
  const double amp = 1.0 / std::sqrt(static_cast<double>(basis_set.size()));
  std::vector<Entry> entries;
  entries.reserve(basis_set.size());
  for (const BasisIndex& b : basis_set) entries.push_back({b, amp});
  return SparseState::FromEntries(width, std::move(entries));
}

Histogram MeasureHistogram(const SparseState& state, long shots,
                           long long seed, int measured_width) {
  if (shots <= 0) throw QsimError("shots must be positive");
  const int width = measured_width < 0 ? state.width() : measured_width;
  if (width > state.width()) throw QsimError("measured width out of range");
  if (state.empty()) throw QsimError("cannot measure an empty state");
  const auto entries = state.entries();
  std::vector<double> cdf(entries.size());
  double acc = 0.0;
  for (std::size_t i = 0; i < entries.size(); ++i) {
    acc += std::norm(entries[i].amp);
    cdf[i] = acc;
  }
  std::mt19937_64 rng(static_cast<std::uint64_t>(seed));
  std::vector<long> hits(entries.size(), 0);
  for (long s = 0; s < shots; ++s) {
    // 53 random bits in [0, 1), scaled to the (possibly unnormalized) total.
    const double u = static_cast<double>(rng() >> 11) * 0x1.0p-53 * acc;
    auto it = std::upper_bound(cdf.begin(), cdf.end(), u);
    if (it == cdf.end()) --it;
    ++hits[static_cast<std::size_t>(it - cdf.begin())];
  }
  Histogram h;
  h.width = width;
  h.shots = shots;
  h.seed = seed;
  for (std::size_t i = 0; i < entries.size(); ++i) {
    if (hits[i] > 0) h.counts[entries[i].key.ToLabel(width)] += hits[i];
  }
  return h;
}

std::string HistogramToJson(const Histogram& histogram) {
  nlohmann::ordered_json j;
  j["width"] = histogram.width;
  j["shots"] = histogram.shots;
  j["seed"] = histogram.seed;
  j["counts"] = nlohmann::ordered_json::object();
  for (const auto& [label, count] : histogram.counts) j["counts"][label] = count;
  return j.dump();
}

std::string HistogramToCsv(const Histogram& histogram) {
  std::ostringstream os;
  os << "label,count\n";
  for (const auto& [label, count] : histogram.counts) {
    os << label << "," << count << "\n";
  }
  return os.str();
}

}  // namespace qskat::qsim
