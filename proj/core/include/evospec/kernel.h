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

#ifndef EVOSPEC_KERNEL_H_
#define EVOSPEC_KERNEL_H_

#include <cstddef>
#include <vector>

#include "evospec/grid.h"
#include "evospec/spectra.h"

namespace evospec {

struct KernelOptions {
  double eps_denom = 1e-30;  // absolute guard on Sp(i) Sp(j) S(i+j)
  double feas_tol = 1e-9;    // tolerated undershoot of 1 - sum b_p^2
};

// Pure spectrum Sp, partial bicoherence b_p and biphase beta. Triangle
// arrays use the tri_index layout per time slice.
class ThirdOrderKernel {
 public:
  const SimulationGrid& grid() const { return grid_; }

  double s_pure(std::size_t m, std::size_t k) const {
    return s_pure_[m * grid_.N + k];
  }
  const double* s_pure_row(std::size_t m) const {
    return s_pure_.data() + m * grid_.N;
  }
  // The spectrum the kernel was built from.
  const double* spectrum_row(std::size_t m) const {
    return spectrum_.data() + m * grid_.N;
  }
  // 1 - sum_{i+j=k} b_p^2, before clamping.
  double margin(std::size_t m, std::size_t k) const {
    return margin_[m * grid_.N + k];
  }
  double bicoh(std::size_t m, std::size_t i, std::size_t j) const {
    return bicoh_[m * tri_ + tri_index(i, j)];
  }
  double biphase(std::size_t m, std::size_t i, std::size_t j) const {
    return biphase_[m * tri_ + tri_index(i, j)];
  }
  const double* bicoh_slice(std::size_t m) const {
    return bicoh_.data() + m * tri_;
  }
  const double* biphase_slice(std::size_t m) const {
    return biphase_.data() + m * tri_;
  }
  const std::vector<std::size_t>& clamp_counts() const { return clamped_; }
  const KernelOptions& options() const { return options_; }

 private:
  friend ThirdOrderKernel build_kernel(const EvolutionarySpectrum&,
                                       const EvolutionaryBispectrum&,
                                       const KernelOptions&, unsigned);

  SimulationGrid grid_;
  KernelOptions options_;
  std::size_t tri_ = 0;
  std::vector<double> spectrum_;
  std::vector<double> s_pure_;
  std::vector<double> margin_;
  std::vector<double> bicoh_;
  std::vector<double> biphase_;
  std::vector<std::size_t> clamped_;
};

// Recursion in increasing sum frequency, independently per time slice.
// Throws InfeasibleSkewness for the first (m, k) in row-major order whose
// margin is below -feas_tol; margins in [-feas_tol, 0) clamp Sp to 0.
ThirdOrderKernel build_kernel(const EvolutionarySpectrum& S,
                              const EvolutionaryBispectrum& B,
                              const KernelOptions& options = {},
                              unsigned workers = 1);

struct FeasibilityReport {
  std::vector<double> min_margin;            // per time slice
  std::vector<std::size_t> clamped;          // per time slice
  std::vector<double> max_bicoh;             // per time slice
  std::vector<double> interactive_fraction;  // sum(S - Sp) / sum(S)
  std::size_t total_clamped = 0;
  double worst_margin = 1.0;
  double max_interactive_fraction = 0.0;
};

FeasibilityReport kernel_report(const ThirdOrderKernel& kernel);

}  // namespace evospec

#endif  // EVOSPEC_KERNEL_H_
