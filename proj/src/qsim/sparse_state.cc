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

#include "qskat/qsim/sparse_state.h"

#include <algorithm>
#include <cmath>
#include <exception>
#include <sstream>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace qskat::qsim {

BasisIndex BasisIndex::FromLabel(std::string_view label) {
  if (static_cast<int>(label.size()) > kMaxQubits) {
    throw QsimError("label wider than 128 qubits");
  }
  BasisIndex b;
  for (std::size_t i = 0; i < label.size(); ++i) {
    if (label[i] == '1') {
      b.Set(static_cast<int>(i), true);
    } else if (label[i] != '0') {
      throw QsimError("label must contain only 0 and 1");
    }
  }
  return b;
}

std::string BasisIndex::ToLabel(int width) const {
  std::string s(width, '0');
  for (int i = 0; i < width; ++i) {
    if (Get(i)) s[i] = '1';
  }
  return s;
}

std::vector<Entry> Canonicalize(std::vector<Entry> emitted, MergeMode mode) {
  std::stable_sort(emitted.begin(), emitted.end(),
                   [](const Entry& a, const Entry& b) { return a.key < b.key; });
  std::vector<Entry> out;
  out.reserve(emitted.size());
  for (std::size_t i = 0; i < emitted.size();) {
    std::size_t j = i + 1;
    Amplitude sum = emitted[i].amp;
    while (j < emitted.size() && emitted[j].key == emitted[i].key) {
      if (mode == MergeMode::kInjective) {
        throw QsimError("basis map is not one-to-one on the support");
      }
      sum += emitted[j].amp;
      ++j;
    }
    if (std::abs(sum) >= kPruneThreshold) out.push_back({emitted[i].key, sum});
    i = j;
  }
  return out;
}

SparseState::SparseState(int width) : width_(width) {
  if (width < 0 || width > BasisIndex::kMaxQubits) {
    throw QsimError("width must be in [0, 128]");
  }
}

SparseState SparseState::Basis(int width, BasisIndex key) {
  SparseState s(width);
  if (!key.FitsWidth(width)) throw QsimError("basis key exceeds width");
  s.entries_.push_back({key, Amplitude(1.0, 0.0)});
  return s;
}

SparseState SparseState::FromEntries(int width, std::vector<Entry> entries,
                                     MergeMode mode) {
  SparseState s(width);
  for (const Entry& e : entries) {
    if (!e.key.FitsWidth(width)) throw QsimError("basis key exceeds width");
    if (!std::isfinite(e.amp.real()) || !std::isfinite(e.amp.imag())) {
      throw QsimError("non-finite amplitude");
    }
  }
  s.entries_ = Canonicalize(std::move(entries), mode);
  return s;
}

Amplitude SparseState::amplitude(const BasisIndex& key) const {
  auto it = std::lower_bound(
      entries_.begin(), entries_.end(), key,
      [](const Entry& e, const BasisIndex& k) { return e.key < k; });
  if (it == entries_.end() || it->key != key) return {};
  return it->amp;
}

double SparseState::Norm() const {
  double n = 0.0;
  for (const Entry& e : entries_) n += std::norm(e.amp);
  return n;
}

double SparseState::MaxImag() const {
  double m = 0.0;
  for (const Entry& e : entries_) m = std::max(m, std::abs(e.amp.imag()));
  return m;
}

SparseState SparseState::Normalized() const {
  const double n = Norm();
  if (n <= 0.0) throw QsimError("cannot normalize an empty state");
  SparseState s(width_);
  const double scale = 1.0 / std::sqrt(n);
  s.entries_.reserve(entries_.size());
  for (const Entry& e : entries_) s.entries_.push_back({e.key, e.amp * scale});
  return s;
}

std::string SparseState::DebugString() const {
  std::ostringstream os;
  for (const Entry& e : entries_) {
    os << e.key.ToLabel(width_) << " " << e.amp.real();
    if (e.amp.imag() != 0.0) os << (e.amp.imag() < 0 ? "-" : "+")
                                << std::abs(e.amp.imag()) << "i";
    os << "\n";
  }
  return os.str();
}

SparseState ExpandBranches(const SparseState& state, const BranchFn& fn,
                           MergeMode mode) {
  const auto in = state.entries();
  const long n = static_cast<long>(in.size());
  int threads = 1;
#ifdef _OPENMP
  threads = omp_get_max_threads();
#endif
  std::vector<std::vector<Entry>> local(threads);
  // Exceptions must not cross the parallel region; the first one is kept.
  std::exception_ptr error;

#pragma omp parallel num_threads(threads)
  {
    int tid = 0;
#ifdef _OPENMP
    tid = omp_get_thread_num();
#endif
    std::vector<Child> children;
    auto& out = local[tid];
    // Static schedule: thread t owns a contiguous block, so concatenating
    // the blocks in thread order reproduces the serial emission order.
#pragma omp for schedule(static)
    for (long i = 0; i < n; ++i) {
      try {
        children.clear();
        fn(in[i].key, children);
        for (const Child& c : children) {
          out.push_back({c.key, in[i].amp * c.factor});
        }
      } catch (...) {
#pragma omp critical(qskat_expand_error)
        if (!error) error = std::current_exception();
      }
    }
  }
  if (error) std::rethrow_exception(error);

  std::vector<Entry> all;
  std::size_t total = 0;
  for (const auto& v : local) total += v.size();
  all.reserve(total);
  for (auto& v : local) all.insert(all.end(), v.begin(), v.end());
  return SparseState::FromEntries(state.width(), std::move(all), mode);
}

SparseState ApplyBasisMap(
    const SparseState& state,
    const std::function<BasisIndex(const BasisIndex&)>& map) {
  return ExpandBranches(
      state,
      [&map](const BasisIndex& key, std::vector<Child>& out) {
        out.push_back({map(key), Amplitude(1.0, 0.0)});
      },
      MergeMode::kInjective);
}

std::vector<std::pair<BasisIndex, double>> Marginal(const SparseState& state,
                                                    int num_qubits) {
  if (num_qubits < 0 || num_qubits > state.width()) {
    throw QsimError("marginal width out of range");
  }
  std::vector<std::pair<BasisIndex, double>> probs;
  for (const Entry& e : state.entries()) {
    BasisIndex k;
    for (int q = 0; q < num_qubits; ++q) k.Set(q, e.key.Get(q));
    probs.push_back({k, std::norm(e.amp)});
  }
  std::stable_sort(probs.begin(), probs.end(),
                   [](const auto& a, const auto& b) { return a.first < b.first; });
  std::vector<std::pair<BasisIndex, double>> out;
  for (const auto& [k, p] : probs) {
    if (!out.empty() && out.back().first == k) {
      out.back().second += p;
    } else {
      out.push_back({k, p});
    }
  }
  return out;
}

double Expectation(const SparseState& state,
                   const std::function<double(const BasisIndex&)>& diag) {
  double sum = 0.0;
  for (const Entry& e : state.entries()) sum += std::norm(e.amp) * diag(e.key);
  return sum;
}

}  // namespace qskat::qsim
