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

// Quantum counting: phase estimation on the Grover iterate
// G = (2|psi><psi| - I) S_f, |psi> uniform over the preparation set.

#ifndef QSKAT_SCORING_COUNTING_H_
#define QSKAT_SCORING_COUNTING_H_

#include <functional>
#include <span>
#include <vector>

#include "qskat/qsim/basis_index.h"

namespace qskat::scoring {

inline constexpr int kMaxCountingQubits = 14;

struct CountEstimate {
  int t = 0;
  long outcome = 0;        // modal t-bit readout y
  double probability = 0;  // its probability
  double phase = 0;        // 2 pi y / 2^t
  double estimate = 0;     // M sin^2(phase / 2)
  std::vector<double> distribution;  // P(y) for every y
};

enum class CountBackend { kParallel, kSerial };

// Throws ScoringError for an empty or duplicated set, t < 1 or
// t > kMaxCountingQubits.
CountEstimate QuantumCount(
    const std::function<bool(const qsim::BasisIndex&)>& marked,
    std::span<const qsim::BasisIndex> prep_set, int t,
    CountBackend backend = CountBackend::kParallel);

// M (2 pi / 2^t + pi^2 / 2^2t).
double CountingErrorBound(std::size_t set_size, int t);

}  // namespace qskat::scoring

#endif  // QSKAT_SCORING_COUNTING_H_
