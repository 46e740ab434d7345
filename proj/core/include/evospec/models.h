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

#ifndef EVOSPEC_MODELS_H_
#define EVOSPEC_MODELS_H_

#include "evospec/grid.h"
#include "evospec/spectra.h"

namespace evospec {

// Separable model: S = 100 (200 - t) exp(-w^2 / 2) and
// B = 2000 / (3 sqrt(3 (w1 + w2))) (200 - t)^(3/2)
//     * exp(-(w1^2 + w2^2 + w1 w2) / 2).
// Throws ModelDomainError when grid.T > 200.
SpectralModel model_example1(const SimulationGrid& grid);

struct CloughPenzienParams {
  double omega_g;
  double zeta_g;
  double omega_f;
  double zeta_f;
};

CloughPenzienParams clough_penzien_params(double t);
double kanai_tajimi(double t, double w);
double clough_penzien_filter(double t, double w);
// Kanai-Tajimi spectrum times the Clough-Penzien correction.
double clough_penzien(double t, double w);

// Time-varying ground motion model with
// B = 2 sqrt(S(wi) S(wj) S(wi + wj)) / (3 sqrt(3 (wi + wj))).
// Throws ModelDomainError when grid.T > 20.
SpectralModel model_clough_penzien(const SimulationGrid& grid);

}  // namespace evospec

#endif  // EVOSPEC_MODELS_H_
