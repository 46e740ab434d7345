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

#ifndef EVOSPEC_DIRECT_H_
#define EVOSPEC_DIRECT_H_

#include <vector>

#include "evospec/grid.h"
#include "evospec/kernel.h"
#include "evospec/rng.h"
#include "evospec/spectra.h"

namespace evospec {

struct SamplePath {
  SimulationGrid grid;
  std::vector<double> x;  // x[m] = X(t_m)
};

// x[m] = sum_k 2 sqrt(S(t_m, w_k) dw) cos(w_k t_m + phi_k).
SamplePath simulate2_direct(const EvolutionarySpectrum& S,
                            const PhaseDraw& phases);
void simulate2_direct(const EvolutionarySpectrum& S, const PhaseDraw& phases,
                      double* out);

// x[m] = 2 sum_k sqrt(S dw) [ sqrt(1 - sum b^2) cos(w_k t + phi_k)
//          + sum_{i+j=k, i>=j>=1} b_p cos(w_k t + phi_i + phi_j + beta) ].
SamplePath simulate3_direct(const EvolutionarySpectrum& S,
                            const ThirdOrderKernel& kernel,
                            const PhaseDraw& phases);
void simulate3_direct(const EvolutionarySpectrum& S,
                      const ThirdOrderKernel& kernel, const PhaseDraw& phases,
                      double* out);

}  // namespace evospec

#endif  // EVOSPEC_DIRECT_H_
