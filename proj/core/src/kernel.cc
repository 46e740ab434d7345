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

#include "evospec/kernel.h"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <optional>

#include "evospec/errors.h"
#include "evospec/parallel.h"

namespace evospec {
namespace {

double wrap_phase(double a) { return a <= -std::numbers::pi ? std::numbers::pi : a; }

struct SliceFailure {
  std::size_t k;
  double overshoot;
};

}  // namespace

ThirdOrderKernel build_kernel(const EvolutionarySpectrum& S,
                              const EvolutionaryBispectrum& B,
                              const KernelOptions& options, unsigned workers) {
  require_same_grid(S.grid(), B.grid(), "spectrum vs bispectrum");
  const SimulationGrid& g = S.grid();
  const std::size_t N = g.N;
  const std::size_t tri = tri_size(N);

  ThirdOrderKernel K;
  K.grid_ = g;
  K.options_ = options;
  K.tri_ = tri;
  K.spectrum_ = S.values();
  K.s_pure_.assign(g.M * N, 0.0);
  K.margin_.assign(g.M * N, 1.0);
  K.bicoh_.assign(g.M * tri, 0.0);
  K.biphase_.assign(g.M * tri, 0.0);
  K.clamped_.assign(g.M, 0);

  std::vector<std::optional<SliceFailure>> failures(g.M);
  const bool zero = B.is_zero();

  parallel_for(g.M, workers, [&](std::size_t m) {
    const double* s = S.row(m);
    double* sp = K.s_pure_.data() + m * N;
    double* margin = K.margin_.data() + m * N;
    double* bic = K.bicoh_.data() + m * tri;
    double* bph = K.biphase_.data() + m * tri;
    std::vector<Complex> b(zero ? 0 : tri);
    if (!zero) B.slice(m, b.data());
    std::size_t clamped = 0;
    for (std::size_t k = 0; k < N; ++k) {
      double sum = 0.0;
      if (!zero) {
        const std::size_t off = tri_offset(k);
        for (std::size_t j = 1; j <= k / 2; ++j) {
          const std::size_t i = k - j;
          const double den = sp[i] * sp[j] * s[k];
          const Complex v = b[off + j];
          if (den < options.eps_denom || v == Complex()) continue;
          const double b2 = std::norm(v) * g.dw / den;
          bic[off + j] = std::sqrt(b2);
          bph[off + j] = wrap_phase(std::atan2(v.imag(), v.real()));
          sum += b2;
        }
      }
      const double mg = 1.0 - sum;
      margin[k] = mg;
      if (mg < -options.feas_tol) {
        failures[m] = SliceFailure{k, -mg};
        return;
      }
      if (mg < 0.0) {
        sp[k] = 0.0;
        if (s[k] > 0.0) ++clamped;
      } else {
        sp[k] = s[k] * mg;
      }
    }
    K.clamped_[m] = clamped;
  });

  for (std::size_t m = 0; m < g.M; ++m) {
    if (failures[m]) {
      throw InfeasibleSkewness(m, failures[m]->k, failures[m]->overshoot);
    }
  }
  return K;
}

FeasibilityReport kernel_report(const ThirdOrderKernel& kernel) {
  const SimulationGrid& g = kernel.grid();
  const std::size_t N = g.N;
  const std::size_t tri = tri_size(N);
  FeasibilityReport r;
  r.min_margin.assign(g.M, 1.0);
  r.clamped = kernel.clamp_counts();
  r.max_bicoh.assign(g.M, 0.0);
  r.interactive_fraction.assign(g.M, 0.0);
  for (std::size_t m = 0; m < g.M; ++m) {
    const double* s = kernel.spectrum_row(m);
    const double* sp = kernel.s_pure_row(m);
    double total = 0.0;
    double inter = 0.0;
    for (std::size_t k = 0; k < N; ++k) {
      if (s[k] > 0.0) r.min_margin[m] = std::min(r.min_margin[m], kernel.margin(m, k));
      total += s[k];
      inter += s[k] - sp[k];
    }
    r.interactive_fraction[m] = total > 0.0 ? inter / total : 0.0;
    const double* bic = kernel.bicoh_slice(m);
    r.max_bicoh[m] = tri > 0 ? *std::max_element(bic, bic + tri) : 0.0;
    r.total_clamped += r.clamped[m];
    r.worst_margin = std::min(r.worst_margin, r.min_margin[m]);
    r.max_interactive_fraction =
        std::max(r.max_interactive_fraction, r.interactive_fraction[m]);
  }
  return r;
}

}  // namespace evospec
