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

#ifndef EVOSPEC_SPECTRA_H_
#define EVOSPEC_SPECTRA_H_

#include <complex>
#include <cstddef>
#include <functional>
#include <memory>
#include <vector>

#include "evospec/grid.h"

namespace evospec {

using Complex = std::complex<double>;

// S(t_m, omega_k), row-major [m][k]. Validated on construction: finite,
// non-negative, and zero at k = 0.
class EvolutionarySpectrum {
 public:
  EvolutionarySpectrum(SimulationGrid grid, std::vector<double> values);

  const SimulationGrid& grid() const { return grid_; }
  double operator()(std::size_t m, std::size_t k) const {
    return (*values_)[m * grid_.N + k];
  }
  const double* row(std::size_t m) const {
    return values_->data() + m * grid_.N;
  }
  const std::vector<double>& values() const { return *values_; }
  std::shared_ptr<const std::vector<double>> shared_values() const {
    return values_;
  }

 private:
  SimulationGrid grid_;
  std::shared_ptr<const std::vector<double>> values_;
};

// B(t_m, omega_i, omega_j) on the triangular support. Either materialized
// (M * tri_size(N) entries) or a pure point function evaluated on demand.
// Entries with j = 0 are zero in both representations.
class EvolutionaryBispectrum {
 public:
  using PointFn = std::function<Complex(std::size_t m, std::size_t i,
                                        std::size_t j)>;

  // entries laid out [m][tri_index(i, j)]; throws InvalidParameter on size
  // mismatch or non-zero j = 0 entries.
  static EvolutionaryBispectrum Materialized(SimulationGrid grid,
                                             std::vector<Complex> entries);
  static EvolutionaryBispectrum Lazy(SimulationGrid grid, PointFn fn);
  static EvolutionaryBispectrum Zero(SimulationGrid grid);

  const SimulationGrid& grid() const { return grid_; }
  bool is_lazy() const { return entries_ == nullptr; }
  bool is_zero() const { return zero_; }

  // Triangle access: requires j <= i and i + j <= N - 1.
  Complex at(std::size_t m, std::size_t i, std::size_t j) const;
  // Symmetric extension to the full square; zero outside the support.
  Complex full(std::size_t m, std::size_t i, std::size_t j) const;
  // Writes the tri_size(N) entries of slice m.
  void slice(std::size_t m, Complex* out) const;

  EvolutionaryBispectrum Materialize() const;

 private:
  EvolutionaryBispectrum() = default;

  SimulationGrid grid_;
  std::shared_ptr<const std::vector<Complex>> entries_;
  PointFn fn_;
  bool zero_ = false;
};

struct SpectralModel {
  EvolutionarySpectrum S;
  EvolutionaryBispectrum B;
};

}  // namespace evospec

#endif  // EVOSPEC_SPECTRA_H_
