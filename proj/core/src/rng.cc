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

#include "evospec/rng.h"

#include <cmath>
#include <numbers>
#include <random>
#include <utility>

#include "evospec/errors.h"

namespace evospec {
namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;
const double kBelowTwoPi = std::nextafter(kTwoPi, 0.0);

void fill(std::uint64_t seed, std::vector<double>& out) {
  std::mt19937_64 eng(seed);
  for (double& p : out) p = phase_from_bits(eng());
}

}  // namespace

std::uint64_t splitmix64(std::uint64_t x) {
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

std::uint64_t mix_seed(std::uint64_t base, std::uint64_t sample) {
  return splitmix64(base + 0x9E3779B97F4A7C15ULL * (sample + 1));
}

double phase_from_bits(std::uint64_t x) {
  const double u = static_cast<double>(x >> 11) * 0x1.0p-53;
  const double p = kTwoPi * u;
  return p < kTwoPi ? p : kBelowTwoPi;
}

PhaseDraw::PhaseDraw(std::uint64_t seed, std::size_t n)
    : seed_(seed), phases_(n) {
  fill(seed, phases_);
}

PhaseDraw PhaseDraw::FromValues(std::vector<double> phases) {
  PhaseDraw d;
  d.phases_ = std::move(phases);
  return d;
}

PhaseMatrix::PhaseMatrix(std::uint64_t seed, std::size_t rows, std::size_t cols)
    : seed_(seed), rows_(rows), cols_(cols), phases_(rows * cols) {
  fill(seed, phases_);
}

PhaseMatrix PhaseMatrix::FromValues(std::size_t rows, std::size_t cols,
                                    std::vector<double> phases) {
  if (phases.size() != rows * cols) {
    throw InvalidParameter("phase matrix size mismatch");
  }
  PhaseMatrix p;
  p.rows_ = rows;
  p.cols_ = cols;
  p.phases_ = std::move(phases);
  return p;
}

}  // namespace evospec
