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

#ifndef EVOSPEC_RNG_H_
#define EVOSPEC_RNG_H_

#include <cstddef>
#include <cstdint>
#include <vector>

namespace evospec {

// Reproducibility contract:
//   mix_seed(base, s) = splitmix64(base + 0x9E3779B97F4A7C15 * (s + 1))
//   engine            = std::mt19937_64(mix_seed(base, s))
//   phase             = 2 pi * ((x >> 11) * 2^-53), x a raw 64-bit draw,
//                       clamped to the largest double below 2 pi.
std::uint64_t splitmix64(std::uint64_t x);
std::uint64_t mix_seed(std::uint64_t base, std::uint64_t sample);
double phase_from_bits(std::uint64_t x);

// i.i.d. uniform phases on [0, 2 pi), one per frequency index.
class PhaseDraw {
 public:
  PhaseDraw(std::uint64_t seed, std::size_t n);
  // Explicit phases (tests, phase-shift studies). Values are taken as given.
  static PhaseDraw FromValues(std::vector<double> phases);

  std::uint64_t seed() const { return seed_; }
  std::size_t size() const { return phases_.size(); }
  double operator[](std::size_t k) const { return phases_[k]; }
  const std::vector<double>& phases() const { return phases_; }

 private:
  PhaseDraw() = default;
  std::uint64_t seed_ = 0;
  std::vector<double> phases_;
};

// Per-component phases [q][k], drawn row-major from one engine.
class PhaseMatrix {
 public:
  PhaseMatrix(std::uint64_t seed, std::size_t rows, std::size_t cols);
  static PhaseMatrix FromValues(std::size_t rows, std::size_t cols,
                                std::vector<double> phases);

  std::uint64_t seed() const { return seed_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  double operator()(std::size_t q, std::size_t k) const {
    return phases_[q * cols_ + k];
  }
  const double* row(std::size_t q) const { return phases_.data() + q * cols_; }
  const std::vector<double>& values() const { return phases_; }

 private:
  PhaseMatrix() = default;
  std::uint64_t seed_ = 0;
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<double> phases_;
};

}  // namespace evospec

#endif  // EVOSPEC_RNG_H_
