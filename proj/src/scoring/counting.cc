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

#include "qskat/scoring/counting.h"

#include <cmath>
#include <complex>
#include <map>
#include <numbers>
#include <set>

#include "qskat/scoring/score.h"

namespace qskat::scoring {

namespace {

// Readout distribution of the counting register. With |u_x> = G^x |psi>,
// outcome y has amplitude vector 2^-t sum_x exp(-2 pi i x y / 2^t) |u_x>.
// Components whose trajectories coincide are transformed once and weighted.
std::vector<double> ReadoutDistribution(
    const std::vector<std::vector<double>>& groups,
    const std::vector<double>& weights, int t, CountBackend backend) {
  const long T = 1L << t;
  std::vector<std::complex<double>> twiddle(T);
  for (long j = 0; j < T; ++j) {
    twiddle[j] = std::polar(1.0, -2.0 * std::numbers::pi * j / T);
  }
  std::vector<double> dist(T, 0.0);
  const double scale = 1.0 / static_cast<double>(T);
  const auto one = [&](long y) {
    double p = 0.0;
    for (std::size_t g = 0; g < groups.size(); ++g) {
      std::complex<double> acc = 0.0;
      for (long x = 0; x < T; ++x) acc += groups[g][x] * twiddle[(x * y) % T];
      p += weights[g] * std::norm(acc * scale);
    }
    dist[y] = p;
  };
  if (backend == CountBackend::kSerial) {
    for (long y = 0; y < T; ++y) one(y);
  } else {
#pragma omp parallel for schedule(static)
    for (long y = 0; y < T; ++y) one(y);
  }
  return dist;
}

}  // namespace

double CountingErrorBound(std::size_t set_size, int t) {
  const double T = std::ldexp(1.0, t);
  return static_cast<double>(set_size) *
         (2.0 * std::numbers::pi / T + std::numbers::pi * std::numbers::pi / (T * T));
}

CountEstimate QuantumCount(
    const std::function<bool(const qsim::BasisIndex&)>& marked,
    std::span<const qsim::BasisIndex> prep_set, int t, CountBackend backend) {
  if (prep_set.empty()) throw ScoringError("preparation set is empty");
  if (t < 1 || t > kMaxCountingQubits) {
    throw ScoringError("counting qubits must be in [1, " +
                       std::to_string(kMaxCountingQubits) + "]");
  }
  std::set<qsim::BasisIndex> seen(prep_set.begin(), prep_set.end());
  if (seen.size() != prep_set.size()) {
    throw ScoringError("preparation set has duplicates");
  }
  const std::size_t m = prep_set.size();
  std::vector<bool> flag(m);
  for (std::size_t i = 0; i < m; ++i) flag[i] = marked(prep_set[i]);

  // Trajectories u_x = G^x psi inside span(prep_set); G is real there.
  const long T = 1L << t;
  std::vector<std::vector<double>> traj(m, std::vector<double>(T));
  std::vector<double> v(m, 1.0 / std::sqrt(static_cast<double>(m)));
  const double inv_sqrt_m = 1.0 / std::sqrt(static_cast<double>(m));
  for (long x = 0; x < T; ++x) {
    for (std::size_t i = 0; i < m; ++i) traj[i][x] = v[i];
    double overlap = 0.0;
    for (std::size_t i = 0; i < m; ++i) {
      if (flag[i]) v[i] = -v[i];
      overlap += inv_sqrt_m * v[i];
    }
    for (std::size_t i = 0; i < m; ++i) v[i] = 2.0 * overlap * inv_sqrt_m - v[i];
  }

  std::map<std::vector<double>, double> grouped;
  for (auto& row : traj) grouped[std::move(row)] += 1.0;
  std::vector<std::vector<double>> groups;
  std::vector<double> weights;
  for (auto& [row, w] : grouped) {
    groups.push_back(row);
    weights.push_back(w);
  }

  CountEstimate out;
  out.t = t;
  out.distribution = ReadoutDistribution(groups, weights, t, backend);
  for (long y = 0; y < T; ++y) {
    if (out.distribution[y] > out.probability + 1e-15) {
      out.probability = out.distribution[y];
      out.outcome = y;
    }
  }
  out.phase = 2.0 * std::numbers::pi * static_cast<double>(out.outcome) / T;
  const double s = std::sin(out.phase / 2.0);
  out.estimate = static_cast<double>(m) * s * s;
  return out;
}

}  // namespace qskat::scoring
