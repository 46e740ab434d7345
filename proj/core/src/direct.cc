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

#include "evospec/direct.h"

#include <cmath>

#include "evospec/errors.h"

namespace evospec {
namespace {

void check_phases(const SimulationGrid& g, const PhaseDraw& phases) {
  if (phases.size() != g.N) {
    throw InvalidParameter("phase draw has " + std::to_string(phases.size()) +
                           " entries, grid has N = " + std::to_string(g.N));
  }
}

// Pure cosine sum, common to both orders.
double pure_sum(const SimulationGrid& g, const double* s, const double* phi,
                std::size_t m) {
  const double t = g.time(m);
  double x = 0.0;
  for (std::size_t k = 0; k < g.N; ++k) {
    if (s[k] <= 0.0) continue;
    x += 2.0 * std::sqrt(s[k] * g.dw) * std::cos(g.freq(k) * t + phi[k]);
  }
  return x;
}

}  // namespace

void simulate2_direct(const EvolutionarySpectrum& S, const PhaseDraw& phases,
                      double* out) {
  const SimulationGrid& g = S.grid();
  check_phases(g, phases);
  const double* phi = phases.phases().data();
  for (std::size_t m = 0; m < g.M; ++m) out[m] = pure_sum(g, S.row(m), phi, m);
}

SamplePath simulate2_direct(const EvolutionarySpectrum& S,
                            const PhaseDraw& phases) {
  SamplePath p{S.grid(), std::vector<double>(S.grid().M)};
  simulate2_direct(S, phases, p.x.data());
  return p;
}

void simulate3_direct(const EvolutionarySpectrum& S,
                      const ThirdOrderKernel& kernel, const PhaseDraw& phases,
                      double* out) {
  const SimulationGrid& g = S.grid();
  require_same_grid(g, kernel.grid(), "spectrum vs kernel");
  check_phases(g, phases);
  const double* phi = phases.phases().data();
  for (std::size_t m = 0; m < g.M; ++m) {
    double x = pure_sum(g, kernel.s_pure_row(m), phi, m);
    const double t = g.time(m);
    const double* s = S.row(m);
    const double* bic = kernel.bicoh_slice(m);
    const double* bph = kernel.biphase_slice(m);
    double inter = 0.0;
    for (std::size_t k = 2; k < g.N; ++k) {
      if (s[k] <= 0.0) continue;
      const std::size_t off = tri_offset(k);
      const double wt = g.freq(k) * t;
      double acc = 0.0;
      for (std::size_t j = 1; j <= k / 2; ++j) {
        const double b = bic[off + j];
        if (b == 0.0) continue;
        acc += b * std::cos(wt + phi[k - j] + phi[j] + bph[off + j]);
      }
      inter += 2.0 * std::sqrt(s[k] * g.dw) * acc;
    }
    out[m] = x + inter;
  }
}

SamplePath simulate3_direct(const EvolutionarySpectrum& S,
                            const ThirdOrderKernel& kernel,
                            const PhaseDraw& phases) {
  SamplePath p{S.grid(), std::vector<double>(S.grid().M)};
  simulate3_direct(S, kernel, phases, p.x.data());
  return p;
}

}  // namespace evospec
