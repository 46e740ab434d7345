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

#include "evospec/spectra.h"

#include <cmath>
#include <string>
#include <utility>

#include "evospec/errors.h"

namespace evospec {

EvolutionarySpectrum::EvolutionarySpectrum(SimulationGrid grid,
                                           std::vector<double> values)
    : grid_(grid) {
  if (values.size() != grid.M * grid.N) {
    throw InvalidParameter("spectrum has " + std::to_string(values.size()) +
                           " values, grid needs " +
                           std::to_string(grid.M * grid.N));
  }
  for (std::size_t m = 0; m < grid.M; ++m) {
    for (std::size_t k = 0; k < grid.N; ++k) {
      const double v = values[m * grid.N + k];
      if (!std::isfinite(v) || v < 0.0) {
        throw InvalidParameter("spectrum value at (" + std::to_string(m) +
                               ", " + std::to_string(k) +
                               ") is negative or not finite");
      }
      if (k == 0 && v != 0.0) {
        throw InvalidParameter("spectrum must vanish at k = 0 (time index " +
                               std::to_string(m) + ")");
      }
    }
  }
  values_ = std::make_shared<const std::vector<double>>(std::move(values));
}

EvolutionaryBispectrum EvolutionaryBispectrum::Materialized(
    SimulationGrid grid, std::vector<Complex> entries) {
  const std::size_t tri = tri_size(grid.N);
  if (entries.size() != grid.M * tri) {
    throw InvalidParameter("bispectrum has " + std::to_string(entries.size()) +
                           " entries, grid needs " +
                           std::to_string(grid.M * tri));
  }
  bool all_zero = true;
  for (std::size_t m = 0; m < grid.M; ++m) {
    const Complex* s = entries.data() + m * tri;
    for (std::size_t k = 0; k < grid.N; ++k) {
      if (s[tri_offset(k)] != Complex(0.0, 0.0)) {
        throw InvalidParameter("bispectrum entry with j = 0 must be zero");
      }
    }
    for (std::size_t p = 0; p < tri && all_zero; ++p) {
      if (s[p] != Complex(0.0, 0.0)) all_zero = false;
    }
  }
  EvolutionaryBispectrum b;
  b.grid_ = grid;
  b.entries_ = std::make_shared<const std::vector<Complex>>(std::move(entries));
  b.zero_ = all_zero;
  return b;
}

EvolutionaryBispectrum EvolutionaryBispectrum::Lazy(SimulationGrid grid,
                                                    PointFn fn) {
  EvolutionaryBispectrum b;
  b.grid_ = grid;
  b.fn_ = std::move(fn);
  return b;
}

EvolutionaryBispectrum EvolutionaryBispectrum::Zero(SimulationGrid grid) {
  EvolutionaryBispectrum b;
  b.grid_ = grid;
  b.fn_ = [](std::size_t, std::size_t, std::size_t) { return Complex(); };
  b.zero_ = true;
  return b;
}

Complex EvolutionaryBispectrum::at(std::size_t m, std::size_t i,
                                   std::size_t j) const {
  if (j == 0) return Complex();
  if (entries_) return (*entries_)[m * tri_size(grid_.N) + tri_index(i, j)];
  return fn_(m, i, j);
}

Complex EvolutionaryBispectrum::full(std::size_t m, std::size_t i,
                                     std::size_t j) const {
  if (j > i) std::swap(i, j);
  if (i + j > grid_.N - 1) return Complex();
  return at(m, i, j);
}

void EvolutionaryBispectrum::slice(std::size_t m, Complex* out) const {
  const std::size_t N = grid_.N;
  const std::size_t tri = tri_size(N);
  if (entries_) {
    const Complex* s = entries_->data() + m * tri;
    std::copy(s, s + tri, out);
    return;
  }
  for (std::size_t k = 0; k < N; ++k) {
    Complex* row = out + tri_offset(k);
    row[0] = Complex();
    for (std::size_t j = 1; j <= k / 2; ++j) {
      row[j] = zero_ ? Complex() : fn_(m, k - j, j);
    }
  }
}

EvolutionaryBispectrum EvolutionaryBispectrum::Materialize() const {
  if (entries_) return *this;
  const std::size_t tri = tri_size(grid_.N);
  std::vector<Complex> e(grid_.M * tri);
  for (std::size_t m = 0; m < grid_.M; ++m) slice(m, e.data() + m * tri);
  return Materialized(grid_, std::move(e));
}

}  // namespace evospec
