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

#include "evospec/models.h"

#include <cmath>
#include <memory>
#include <string>
#include <vector>

#include "evospec/errors.h"

namespace evospec {

SpectralModel model_example1(const SimulationGrid& grid) {
  if (grid.T > 200.0) {
    throw ModelDomainError("example1 is defined for t in [0, 200], T = " +
                           std::to_string(grid.T));
  }
  const std::size_t N = grid.N;
  std::vector<double> s(grid.M * N, 0.0);
  for (std::size_t m = 0; m < grid.M; ++m) {
    const double amp = 100.0 * (200.0 - grid.time(m));
    for (std::size_t k = 1; k < N; ++k) {
      const double w = grid.freq(k);
      s[m * N + k] = amp * std::exp(-0.5 * w * w);
    }
  }
  const SimulationGrid g = grid;
  auto fn = [g](std::size_t m, std::size_t i, std::size_t j) -> Complex {
    const double w1 = g.freq(i);
    const double w2 = g.freq(j);
    const double mod = std::pow(200.0 - g.time(m), 1.5);
    return {2000.0 / (3.0 * std::sqrt(3.0 * (w1 + w2))) * mod *
                std::exp(-0.5 * (w1 * w1 + w2 * w2 + w1 * w2)),
            0.0};
  };
  return {EvolutionarySpectrum(grid, std::move(s)),
          EvolutionaryBispectrum::Lazy(grid, fn)};
}

CloughPenzienParams clough_penzien_params(double t) {
  CloughPenzienParams p;
  p.omega_g = 30.0 - 1.25 * t;
  p.zeta_g = 0.5 + 0.005 * t;
  p.omega_f = 0.1 * p.omega_g;
  p.zeta_f = 0.1 * p.zeta_g;
  return p;
}

double kanai_tajimi(double t, double w) {
  const CloughPenzienParams p = clough_penzien_params(t);
  const double r2 = (w / p.omega_g) * (w / p.omega_g);
  const double z = 4.0 * p.zeta_g * p.zeta_g * r2;
  return (1.0 + z) / ((1.0 - r2) * (1.0 - r2) + z);
}

double clough_penzien_filter(double t, double w) {
  const CloughPenzienParams p = clough_penzien_params(t);
  const double f2 = (w / p.omega_f) * (w / p.omega_f);
  return f2 * f2 /
         ((1.0 - f2) * (1.0 - f2) + 4.0 * p.zeta_f * p.zeta_f * f2);
}

double clough_penzien(double t, double w) {
  return kanai_tajimi(t, w) * clough_penzien_filter(t, w);
}

SpectralModel model_clough_penzien(const SimulationGrid& grid) {
  if (grid.T > 20.0) {
    throw ModelDomainError(
        "clough-penzien model is defined for T <= 20 (omega_g > 0), T = " +
        std::to_string(grid.T));
  }
  const std::size_t N = grid.N;
  std::vector<double> s(grid.M * N, 0.0);
  for (std::size_t m = 0; m < grid.M; ++m) {
    for (std::size_t k = 1; k < N; ++k) {
      s[m * N + k] = clough_penzien(grid.time(m), grid.freq(k));
    }
  }
  EvolutionarySpectrum S(grid, std::move(s));
  auto values = S.shared_values();
  const SimulationGrid g = grid;
  auto fn = [g, values](std::size_t m, std::size_t i,
                        std::size_t j) -> Complex {
    const double* row = values->data() + m * g.N;
    return {2.0 * std::sqrt(row[i] * row[j] * row[i + j]) /
                (3.0 * std::sqrt(3.0 * (g.freq(i) + g.freq(j)))),
            0.0};
  };
  return {std::move(S), EvolutionaryBispectrum::Lazy(grid, fn)};
}

}  // namespace evospec
