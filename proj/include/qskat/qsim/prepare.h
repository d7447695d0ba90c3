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

#ifndef QSKAT_QSIM_PREPARE_H_
#define QSKAT_QSIM_PREPARE_H_

#include <map>
#include <span>
#include <string>
#include <vector>

#include "qskat/qsim/gate.h"

namespace qskat::qsim {

enum class PrepBackend { kInjection, kCircuit };

// Equal superposition over `basis_set` with real positive amplitudes
// 1/sqrt(|basis_set|). Both backends produce the same state.
SparseState PrepareSuperposition(int width,
                                 std::span<const BasisIndex> basis_set,
                                 PrepBackend backend = PrepBackend::kInjection);

// Synthesizes a circuit mapping |0...0> to the uniform superposition over
// `basis_set`. Qubits are fixed in increasing order; each is split by a
// rotation controlled on the already-fixed prefix, so the indicator of the
// set is realized one cofactor at a time.
Circuit SynthesizePreparation(int width, std::span<const BasisIndex> basis_set);

struct Histogram {
  int width = 0;
  long shots = 0;
  long long seed = 0;
  std::map<std::string, long> counts;
};

// Multinomial sample of `shots` outcomes over |amplitude|^2. Deterministic
// for a fixed seed. Labels: character i is qubit i.
// Samples computational-basis outcomes of qubits [0, measured_width); the
// whole register when measured_width < 0.
Histogram MeasureHistogram(const SparseState& state, long shots,
                           long long seed, int measured_width = -1);

std::string HistogramToJson(const Histogram& histogram);
std::string HistogramToCsv(const Histogram& histogram);

}  // namespace qskat::qsim

#endif  // QSKAT_QSIM_PREPARE_H_
