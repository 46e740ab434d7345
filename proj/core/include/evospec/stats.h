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

#ifndef EVOSPEC_STATS_H_
#define EVOSPEC_STATS_H_

#include <cmath>
#include <cstddef>
#include <vector>

#include "evospec/batch.h"
#include "evospec/kernel.h"
#include "evospec/pod.h"
#include "evospec/spectra.h"

namespace evospec {

// Neumaier compensated summation.
class CompensatedSum {
 public:
  void add(double x) {
    const double t = sum_ + x;
    if (std::abs(sum_) >= std::abs(x)) {
      c_ += (sum_ - t) + x;
    } else {
      c_ += (x - t) + sum_;
    }
    sum_ = t;
  }
  double value() const { return sum_ + c_; }

 private:
  double sum_ = 0.0;
  double c_ = 0.0;
};

enum class Flavor { kEmpirical, kTheoretical };

struct MomentCurves {
  std::vector<double> t;
  std::vector<double> mean;
  std::vector<double> var;
  std::vector<double> m3;
  std::vector<double> skew;  // m3 / var^1.5, 0 where var <= var_floor
  std::size_t n_samples = 0;
  Flavor flavor = Flavor::kEmpirical;
};

inline constexpr double kVarFloorFactor = 1e-12;

// Central moments divided by n. var_floor < 0 selects
// kVarFloorFactor * max_t var.
MomentCurves empirical_moments(const Ensemble& ensemble, double var_floor = -1.0);

// var = 2 dw sum_k S; m3 = 6 dw^2 sum over the full square of Re B, i.e.
// 12 dw^2 sum_{i>j>=1} Re B + 6 dw^2 sum_{i=j} Re B.
MomentCurves theoretical_moments(const EvolutionarySpectrum& S,
                                 const EvolutionaryBispectrum& B);

// R2(t_m, t_m + tau) for lags given in time steps. Throws InvalidParameter
// when t_index + tau falls off the grid.
std::vector<double> theoretical_autocorrelation(
    const EvolutionarySpectrum& S, const EvolutionaryBispectrum& B,
    const ThirdOrderKernel& kernel, std::size_t t_index,
    const std::vector<std::ptrdiff_t>& tau_indices);

struct ConvergenceRow {
  std::size_t nq;
  double t;
  double varp_pod, vari_pod, var_pod, m3_pod, skew_pod;
  double varp_ref, vari_ref, var_ref, m3_ref, skew_ref;
};

// POD diagnostics at the probe slices for each n_q against the full-square
// grid forms: varp_ref = 2 dw sum Sp, vari_ref = dw^2 sum |G|^2,
// m3_ref = the theoretical third moment. Rows ordered by n_q, then probe.
std::vector<ConvergenceRow> convergence_study(
    const EvolutionarySpectrum& S, const EvolutionaryBispectrum& B,
    const ThirdOrderKernel& kernel, const std::vector<std::size_t>& nq_list,
    const std::vector<std::size_t>& probe_indices, unsigned workers = 1);
std::vector<ConvergenceRow> convergence_study(
    const NormalizedTensor& G, const PodBasis& basis,
    const std::vector<std::size_t>& nq_list,
    const std::vector<std::size_t>& probe_indices);

}  // namespace evospec

#endif  // EVOSPEC_STATS_H_
