// Copyright 2026 The evospec Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "evospec/grid.h"

#include <cmath>
#include <numbers>
#include <string>

#include "evospec/errors.h"

namespace evospec {

SimulationGrid make_grid(std::int64_t N, std::int64_t M, double omega_u,
                         double T) {
  if (N < 2) throw InvalidParameter("N must be >= 2, got " + std::to_string(N));
  if (M < 2) throw InvalidParameter("M must be >= 2, got " + std::to_string(M));
  if (!(omega_u > 0.0) || !std::isfinite(omega_u)) {
    throw InvalidParameter("omega_u must be positive and finite");
  }
  if (!(T > 0.0) || !std::isfinite(T)) {
    throw InvalidParameter("T must be positive and finite");
  }
  SimulationGrid g;
  g.N = static_cast<std::size_t>(N);
  g.M = static_cast<std::size_t>(M);
  g.omega_u = omega_u;
  g.T = T;
  g.dw = omega_u / static_cast<double>(N);
  g.dt = T / static_cast<double>(M);
  const double target = 2.0 * std::numbers::pi / static_cast<double>(M);
  g.fft_mismatch = std::abs(g.dw * g.dt - target) / target;
  g.fft_compatible = g.fft_mismatch < kFftTolerance && g.M >= 2 * g.N;
  return g;
}

bool same_grid(const SimulationGrid& a, const SimulationGrid& b) {
  return a.N == b.N && a.M == b.M && a.omega_u == b.omega_u && a.T == b.T;
}

void require_same_grid(const SimulationGrid& a, const SimulationGrid& b,
                       const char* what) {
  if (!same_grid(a, b)) {
    throw GridMismatch(std::string("grid mismatch: ") + what);
  }
}

std::size_t nearest_time_index(const SimulationGrid& grid, double t) {
  const double r = std::round(t / grid.dt);
  if (!(r > 0.0)) return 0;
  const auto m = static_cast<std::size_t>(r);
  return m >= grid.M ? grid.M - 1 : m;
}

}  // namespace evospec
