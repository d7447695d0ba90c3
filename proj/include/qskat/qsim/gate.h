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

#ifndef QSKAT_QSIM_GATE_H_
#define QSKAT_QSIM_GATE_H_

#include <functional>
#include <unordered_map>
#include <variant>
#include <vector>

#include "qskat/qsim/sparse_state.h"

namespace qskat::qsim {

struct Control {
  int qubit;
  bool value;
};
using ControlSpec = std::vector<Control>;

struct PauliX {
  int target;
};
struct Hadamard {
  int target;
};
struct Cnot {
  int control;
  int target;
};
struct MultiControlledX {
  ControlSpec controls;
  int target;
};
// Equal one-hot superposition over `targets`, using `scratch` as workspace.
struct Sp {
  std::vector<int> targets;
  int scratch;
};
// Dense unitary on up to kMaxSmallTargets qubits, row-major. Local basis
// index bit j corresponds to targets[j].
struct SmallUnitary {
  static constexpr int kMaxSmallTargets = 6;
  std::vector<int> targets;
  std::vector<Amplitude> matrix;
};

using GateOp =
    std::variant<PauliX, Hadamard, Cnot, MultiControlledX, Sp, SmallUnitary>;

// When a gate fires on a basis key. Either a list of required bit values, a
// predicate over a declared set of read qubits, or both (conjunction). The
// predicate form realizes conditioned products such as C_i | (alpha = i).
class Condition {
 public:
  using Predicate = std::function<bool(const BasisIndex&)>;

  Condition() = default;
  Condition(ControlSpec controls) : controls_(std::move(controls)) {}  // NOLINT

  static Condition Pattern(std::vector<int> reads, Predicate predicate);

  // Conjunction with additional controls.
  Condition With(const ControlSpec& more) const;

  bool Fires(const BasisIndex& key) const;
  std::vector<int> ReadQubits() const;
  const ControlSpec& controls() const { return controls_; }

 private:
  ControlSpec controls_;
  std::vector<int> reads_;
  Predicate predicate_;
};

// Applies `gate` on every basis key where `condition` fires, identity
// elsewhere. Throws QsimError when a control/read qubit overlaps a target,
// when an index is out of range, or when a gate is malformed.
SparseState ApplyGate(const SparseState& state, const GateOp& gate,
                      const Condition& condition = {});

// One-hot superposition on `targets` (see Sp). Requires every target and
// the scratch qubit to be |0> on each branch where `condition` fires.
SparseState ApplySp(const SparseState& state, const std::vector<int>& targets,
                    int scratch, const Condition& condition = {});

// 2x2 real rotation exp(-i theta Y / 2) as a SmallUnitary.
SmallUnitary RyGate(int target, double theta);

bool IsUnitary(const SmallUnitary& gate, double tol = 1e-9);

struct CircuitStep {
  GateOp gate;
  ControlSpec controls;
};
using Circuit = std::vector<CircuitStep>;

SparseState RunCircuit(const SparseState& state, const Circuit& circuit);

}  // namespace qskat::qsim

#endif  // QSKAT_QSIM_GATE_H_
