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

#ifndef QSKAT_QSIM_SPARSE_STATE_H_
#define QSKAT_QSIM_SPARSE_STATE_H_

#include <complex>
#include <functional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "qskat/qsim/basis_index.h"

namespace qskat::qsim {

using Amplitude = std::complex<double>;

// Entries with |amplitude| below this are dropped after every operation.
inline constexpr double kPruneThreshold = 1e-12;

class QsimError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Entry {
  BasisIndex key;
  Amplitude amp;
};

enum class MergeMode {
  kSum,        // duplicate keys interfere (amplitudes add)
  kInjective,  // duplicate keys are an error: the map was not one-to-one
};

// Sorts by key, combines duplicates per `mode` and prunes small amplitudes.
// The relative order of duplicate contributions is preserved, so the result
// is bit-identical for identical inputs.
std::vector<Entry> Canonicalize(std::vector<Entry> emitted, MergeMode mode);

// Sparse statevector: sorted (key, amplitude) pairs over `width` qubits.
// Operations return new states; a state is never shared mutably.
class SparseState {
 public:
  explicit SparseState(int width);

  static SparseState Basis(int width, BasisIndex key);
  // Builds a state from arbitrary emissions (canonicalized here).
  static SparseState FromEntries(int width, std::vector<Entry> entries,
                                 MergeMode mode = MergeMode::kSum);

  int width() const { return width_; }
  std::size_t size() const { return entries_.size(); }
  bool empty() const { return entries_.empty(); }
  std::span<const Entry> entries() const { return entries_; }

  // Zero when `key` is absent.
  Amplitude amplitude(const BasisIndex& key) const;

  // Sum of |amplitude|^2.
  double Norm() const;
  double MaxImag() const;

  // Rescales to unit norm. Throws on an empty (zero) state.
  SparseState Normalized() const;

  std::string DebugString() const;

 private:
  int width_;
  std::vector<Entry> entries_;
};

// Per-branch expansion kernel: every input entry emits zero or more children,
// each carrying a factor on the parent amplitude. Runs in parallel over the
// input entries; output is schedule-independent.
struct Child {
  BasisIndex key;
  Amplitude factor;
};
using BranchFn =
    std::function<void(const BasisIndex& key, std::vector<Child>& out)>;

SparseState ExpandBranches(const SparseState& state, const BranchFn& fn,
                           MergeMode mode = MergeMode::kSum);

// Applies a basis-key map. The map must be one-to-one on the support of
// `state` (checked); it then acts as a partial isometry that extends to a
// permutation unitary on the full space.
SparseState ApplyBasisMap(
    const SparseState& state,
    const std::function<BasisIndex(const BasisIndex&)>& map);

// Sum over the support of |c_b|^2 * diag(b).
// Probability of each assignment to qubits [0, num_qubits), sorted by key.
// Branches that differ only in higher qubits add up.
std::vector<std::pair<BasisIndex, double>> Marginal(const SparseState& state,
                                                    int num_qubits);

double Expectation(const SparseState& state,
                   const std::function<double(const BasisIndex&)>& diag);

}  // namespace qskat::qsim

#endif  // QSKAT_QSIM_SPARSE_STATE_H_
