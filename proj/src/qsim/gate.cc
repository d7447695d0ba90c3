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

#include "qskat/qsim/gate.h"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <set>

namespace qskat::qsim {
namespace {

struct LocalOp {
  std::vector<int> targets;
  std::vector<Amplitude> matrix;  // dim x dim, row-major
  ControlSpec extra_controls;     // controls carried by the gate itself
};

void CheckQubit(int q, int width) {
  if (q < 0 || q >= width) throw QsimError("qubit index out of range");
}

void CheckDistinct(const std::vector<int>& qubits) {
  std::set<int> seen(qubits.begin(), qubits.end());
  if (seen.size() != qubits.size()) {
    throw QsimError("target qubits must be distinct");
  }
}

std::vector<Amplitude> XMatrix() { return {0.0, 1.0, 1.0, 0.0}; }

LocalOp Lower(const GateOp& gate) {
  return std::visit(
      [](const auto& g) -> LocalOp {
        using T = std::decay_t<decltype(g)>;
        if constexpr (std::is_same_v<T, PauliX>) {
          return {{g.target}, XMatrix(), {}};
        } else if constexpr (std::is_same_v<T, Hadamard>) {
          const double h = 1.0 / std::numbers::sqrt2;
          return {{g.target}, {h, h, h, -h}, {}};
        } else if constexpr (std::is_same_v<T, Cnot>) {
          return {{g.target}, XMatrix(), {{g.control, true}}};
        } else if constexpr (std::is_same_v<T, MultiControlledX>) {
          return {{g.target}, XMatrix(), g.controls};
        } else if constexpr (std::is_same_v<T, SmallUnitary>) {
          return {g.targets, g.matrix, {}};
        } else {
          throw QsimError("SP gate has no single local matrix");
        }
      },
      gate);
}

SparseState ApplyLocal(const SparseState& state, const LocalOp& op,
                       const Condition& condition) {
  const int width = state.width();
  const int k = static_cast<int>(op.targets.size());
  if (k == 0 || k > SmallUnitary::kMaxSmallTargets) {
    throw QsimError("gate must act on 1..6 qubits");
  }
  for (int t : op.targets) CheckQubit(t, width);
  CheckDistinct(op.targets);
  const std::size_t dim = std::size_t{1} << k;
  if (op.matrix.size() != dim * dim) throw QsimError("matrix size mismatch");

  const Condition full = condition.With(op.extra_controls);
  for (int r : full.ReadQubits()) {
    CheckQubit(r, width);
    if (std::find(op.targets.begin(), op.targets.end(), r) !=
        op.targets.end()) {
      throw QsimError("control qubit overlaps a target qubit");
    }
  }

  return ExpandBranches(
      state, [&](const BasisIndex& key, std::vector<Child>& out) {
        if (!full.Fires(key)) {
          out.push_back({key, Amplitude(1.0, 0.0)});
          return;
        }
        std::size_t col = 0;
        for (int j = 0; j < k; ++j) {
          if (key.Get(op.targets[j])) col |= std::size_t{1} << j;
        }
        for (std::size_t row = 0; row < dim; ++row) {
          const Amplitude m = op.matrix[row * dim + col];
          if (m == Amplitude(0.0, 0.0)) continue;
          BasisIndex child = key;
          for (int j = 0; j < k; ++j) child.Set(op.targets[j], (row >> j) & 1);
          out.push_back({child, m});
        }
      });
}

}  // namespace

Condition Condition::Pattern(std::vector<int> reads, Predicate predicate) {
  Condition c;
  c.reads_ = std::move(reads);
  c.predicate_ = std::move(predicate);
  return c;
}

Condition Condition::With(const ControlSpec& more) const {
  Condition c = *this;
  c.controls_.insert(c.controls_.end(), more.begin(), more.end());
  return c;
}

bool Condition::Fires(const BasisIndex& key) const {
  for (const Control& c : controls_) {
    if (key.Get(c.qubit) != c.value) return false;
  }
  return !predicate_ || predicate_(key);
}

std::vector<int> Condition::ReadQubits() const {
  std::vector<int> q = reads_;
  for (const Control& c : controls_) q.push_back(c.qubit);
  return q;
}

SmallUnitary RyGate(int target, double theta) {
  const double c = std::cos(theta / 2.0);
  const double s = std::sin(theta / 2.0);
  return {{target}, {c, -s, s, c}};
}

bool IsUnitary(const SmallUnitary& gate, double tol) {
  const std::size_t dim = std::size_t{1} << gate.targets.size();
  if (gate.matrix.size() != dim * dim) return false;
  for (std::size_t i = 0; i < dim; ++i) {
    for (std::size_t j = 0; j < dim; ++j) {
      Amplitude dot = 0.0;
      for (std::size_t r = 0; r < dim; ++r) {
        dot += std::conj(gate.matrix[r * dim + i]) * gate.matrix[r * dim + j];
      }
      const Amplitude expect = (i == j) ? 1.0 : 0.0;
      if (std::abs(dot - expect) > tol) return false;
    }
  }
  return true;
}

SparseState ApplyGate(const SparseState& state, const GateOp& gate,
                      const Condition& condition) {
  if (const auto* sp = std::get_if<Sp>(&gate)) {
    return ApplySp(state, sp->targets, sp->scratch, condition);
  }
  if (const auto* u = std::get_if<SmallUnitary>(&gate)) {
    if (!IsUnitary(*u)) throw QsimError("SmallUnitary matrix is not unitary");
  }
  if (const auto* cx = std::get_if<Cnot>(&gate)) {
    if (cx->control == cx->target) {
      throw QsimError("control qubit overlaps a target qubit");
    }
  }
  return ApplyLocal(state, Lower(gate), condition);
}

SparseState ApplySp(const SparseState& state, const std::vector<int>& targets,
                    int scratch, const Condition& condition) {
  const int k = static_cast<int>(targets.size());
  if (k == 0) throw QsimError("SP needs at least one target");
  CheckDistinct(targets);
  CheckQubit(scratch, state.width());
  for (int t : targets) {
    CheckQubit(t, state.width());
    if (t == scratch) throw QsimError("scratch qubit overlaps a target");
  }
  for (int r : condition.ReadQubits()) {
    if (r == scratch || std::find(targets.begin(), targets.end(), r) !=
                            targets.end()) {
      throw QsimError("control qubit overlaps a target qubit");
    }
  }
  for (const Entry& e : state.entries()) {
    if (!condition.Fires(e.key)) continue;
    if (e.key.Get(scratch)) throw QsimError("SP scratch qubit not in |0>");
    for (int t : targets) {
      if (e.key.Get(t)) throw QsimError("SP targets not all |0> on a branch");
    }
  }

  // Scratch = 1 means "no target chosen yet". Target j is chosen with
  // probability 1/(k-j) among the remaining ones; choosing it clears the
  // scratch, which disables the later rotations.
  SparseState s = ApplyGate(state, PauliX{scratch}, condition);
  for (int j = 0; j < k; ++j) {
    const Condition active = condition.With({{scratch, true}});
    if (j + 1 < k) {
      const double p = 1.0 / static_cast<double>(k - j);
      s = ApplyGate(s, RyGate(targets[j], 2.0 * std::asin(std::sqrt(p))),
                    active);
    } else {
      s = ApplyGate(s, PauliX{targets[j]}, active);
    }
    s = ApplyGate(s, Cnot{targets[j], scratch}, condition);
  }
  return s;
}

SparseState RunCircuit(const SparseState& state, const Circuit& circuit) {
  SparseState s = state;
  for (const CircuitStep& step : circuit) {
    s = ApplyGate(s, step.gate, Condition(step.controls));
  }
  return s;
}

}  // namespace qskat::qsim
