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

#ifndef EVOSPEC_GRID_H_
#define EVOSPEC_GRID_H_

#include <cstddef>
#include <cstdint>

namespace evospec {

// Relative tolerance on dw*dt == 2*pi/M for the FFT paths.
inline constexpr double kFftTolerance = 1e-3;

struct SimulationGrid {
  std::size_t N = 0;  // frequency intervals
  std::size_t M = 0;  // time points
  double omega_u = 0.0;
  double T = 0.0;
  double dw = 0.0;
  double dt = 0.0;
  // |dw*dt - 2*pi/M| / (2*pi/M).
  double fft_mismatch = 0.0;
  bool fft_compatible = false;

  double freq(std::size_t k) const { return static_cast<double>(k) * dw; }
  double time(std::size_t m) const { return static_cast<double>(m) * dt; }
};

// Throws InvalidParameter unless N >= 2, M >= 2, omega_u > 0 and T > 0.
SimulationGrid make_grid(std::int64_t N, std::int64_t M, double omega_u,
                         double T);

bool same_grid(const SimulationGrid& a, const SimulationGrid& b);

// Throws GridMismatch naming `what` when the grids differ.
void require_same_grid(const SimulationGrid& a, const SimulationGrid& b,
                       const char* what);

// Nearest grid index to time t, clamped to [0, M-1].
std::size_t nearest_time_index(const SimulationGrid& grid, double t);

// Triangular frequency-pair support {(i, j) : 0 <= j <= i, i + j <= N-1},
// stored by sum frequency k = i + j, then by j.
inline constexpr std::size_t tri_offset(std::size_t k) {
  const std::size_t a = k / 2;
  return (k % 2 == 0) ? a * (a + 1) : (a + 1) * (a + 1);
}

inline constexpr std::size_t tri_size(std::size_t N) { return tri_offset(N); }

inline constexpr std::size_t tri_index(std::size_t i, std::size_t j) {
  return tri_offset(i + j) + j;
}

inline constexpr bool in_triangle(std::size_t N, std::size_t i,
                                  std::size_t j) {
  return j <= i && i + j <= N - 1;
}

}  // namespace evospec

#endif  // EVOSPEC_GRID_H_
