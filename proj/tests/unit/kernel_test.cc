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

#include <cmath>
#include <numbers>
#include <vector>

#include <gtest/gtest.h>

#include "evospec/errors.h"
#include "evospec/models.h"
#include "test_util.h"

namespace evospec {
namespace {

using testing::rel_diff;

struct BruteKernel {
  std::vector<double> sp;    // [m][k]
  std::vector<double> b;     // [m][i][j] on the full N x N square, i >= j
  std::vector<double> beta;
};

// Straight transcription of the recursion, one slice at a time.
BruteKernel brute_force(const EvolutionarySpectrum& S,
                        const EvolutionaryBispectrum& B) {
  const SimulationGrid& g = S.grid();
  const std::size_t N = g.N;
  BruteKernel out;
  out.sp.assign(g.M * N, 0.0);
  out.b.assign(g.M * N * N, 0.0);
  out.beta.assign(g.M * N * N, 0.0);
  for (std::size_t m = 0; m < g.M; ++m) {
    double* sp = &out.sp[m * N];
    for (std::size_t k = 0; k < N; ++k) {
      double sum = 0.0;
      for (std::size_t j = 1; j <= k / 2; ++j) {
        const std::size_t i = k - j;
        const Complex v = B.at(m, i, j);
        const double den = sp[i] * sp[j] * S(m, k);
        if (den < 1e-30) continue;
        const double b2 = std::norm(v) * g.dw / den;
        out.b[(m * N + i) * N + j] = std::sqrt(b2);
        out.beta[(m * N + i) * N + j] = std::atan2(v.imag(), v.real());
        sum += b2;
      }
      sp[k] = S(m, k) * (1.0 - sum);
    }
  }
  return out;
}

EvolutionarySpectrum flat_spectrum(const SimulationGrid& g, double s0) {
  std::vector<double> s(g.M * g.N, s0);
  for (std::size_t m = 0; m < g.M; ++m) s[m * g.N] = 0.0;
  return EvolutionarySpectrum(g, std::move(s));
}

EvolutionaryBispectrum single_entry(const SimulationGrid& g, std::size_t i,
                                    std::size_t j, Complex v) {
  std::vector<Complex> e(g.M * tri_size(g.N));
  for (std::size_t m = 0; m < g.M; ++m) e[m * tri_size(g.N) + tri_index(i, j)] = v;
  return EvolutionaryBispectrum::Materialized(g, std::move(e));
}

TEST(KernelTest, ZeroBispectrumLeavesSpectrumIntact) {
  const SimulationGrid g = testing::exact_grid(16, 32, 4.0);
  const EvolutionarySpectrum S = testing::random_spectrum(g, 1);
  const ThirdOrderKernel K = build_kernel(S, EvolutionaryBispectrum::Zero(g));
  for (std::size_t m = 0; m < g.M; ++m) {
    for (std::size_t k = 0; k < g.N; ++k) {
      ASSERT_EQ(K.s_pure(m, k), S(m, k));
      ASSERT_EQ(K.margin(m, k), 1.0);
      for (std::size_t j = 0; 2 * j <= k; ++j) {
        ASSERT_EQ(K.bicoh(m, k - j, j), 0.0);
        ASSERT_EQ(K.biphase(m, k - j, j), 0.0);
      }
    }
  }
  const FeasibilityReport r = kernel_report(K);
  EXPECT_EQ(r.max_interactive_fraction, 0.0);
  EXPECT_EQ(r.total_clamped, 0u);
}

TEST(KernelTest, SingleEntryHandRecursion) {
  const SimulationGrid g = testing::exact_grid(8, 16, 2.0);
  const double s0 = 1.5, b0 = 0.4;
  const EvolutionarySpectrum S = flat_spectrum(g, s0);
  const EvolutionaryBispectrum B = single_entry(g, 1, 1, Complex(b0, 0.0));
  const ThirdOrderKernel K = build_kernel(S, B);
  const double expect = s0 * (1.0 - b0 * b0 * g.dw / (s0 * s0 * s0));
  for (std::size_t m = 0; m < g.M; ++m) {
    for (std::size_t k = 1; k < g.N; ++k) {
      if (k == 2) {
        EXPECT_LT(rel_diff(K.s_pure(m, k), expect), 1e-14);
      } else {
        EXPECT_EQ(K.s_pure(m, k), s0);
      }
    }
    EXPECT_NEAR(K.bicoh(m, 1, 1), b0 * std::sqrt(g.dw / (s0 * s0 * s0)), 1e-15);
    EXPECT_EQ(K.biphase(m, 1, 1), 0.0);
  }
  const BruteKernel ref = brute_force(S, B);
  EXPECT_LT(rel_diff(ref.sp[2], expect), 1e-14);
}

TEST(KernelTest, MatchesBruteForceOnRandomComplexModels) {
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    const SimulationGrid g = testing::exact_grid(12 + seed, 24 + 2 * seed, 3.0);
    const EvolutionarySpectrum S = testing::random_spectrum(g, 100 + seed);
    const EvolutionaryBispectrum B = testing::random_bispectrum(S, 200 + seed, 1.5);
    const ThirdOrderKernel K = build_kernel(S, B);
    const BruteKernel ref = brute_force(S, B);
    const std::size_t N = g.N;
    for (std::size_t m = 0; m < g.M; ++m) {
      for (std::size_t k = 0; k < N; ++k) {
        ASSERT_LT(rel_diff(K.s_pure(m, k), ref.sp[m * N + k]), 1e-12);
        ASSERT_LE(K.s_pure(m, k), S(m, k));
        ASSERT_GE(K.s_pure(m, k), 0.0);
        for (std::size_t j = 1; 2 * j <= k; ++j) {
          const std::size_t i = k - j;
          ASSERT_LT(rel_diff(K.bicoh(m, i, j), ref.b[(m * N + i) * N + j]), 1e-12);
          ASSERT_NEAR(K.biphase(m, i, j), ref.beta[(m * N + i) * N + j], 1e-14);
          ASSERT_GT(K.biphase(m, i, j), -std::numbers::pi);
          ASSERT_LE(K.biphase(m, i, j), std::numbers::pi);
        }
        if (S(m, k) > 0.0) {
          ASSERT_LT(rel_diff(K.margin(m, k), K.s_pure(m, k) / S(m, k)), 1e-12);
        }
      }
    }
  }
}

TEST(KernelTest, BuildsAreBitIdenticalAcrossWorkers) {
  const SimulationGrid g = testing::exact_grid(24, 48, 3.0);
  const EvolutionarySpectrum S = testing::random_spectrum(g, 9);
  const EvolutionaryBispectrum B = testing::random_bispectrum(S, 10);
  const ThirdOrderKernel a = build_kernel(S, B, {}, 1);
  const ThirdOrderKernel b = build_kernel(S, B, {}, 1);
  const ThirdOrderKernel c = build_kernel(S, B, {}, 8);
  for (std::size_t m = 0; m < g.M; ++m) {
    for (std::size_t k = 0; k < g.N; ++k) {
      ASSERT_EQ(a.s_pure(m, k), b.s_pure(m, k));
      ASSERT_EQ(a.s_pure(m, k), c.s_pure(m, k));
    }
    for (std::size_t t = 0; t < tri_size(g.N); ++t) {
      ASSERT_EQ(a.bicoh_slice(m)[t], c.bicoh_slice(m)[t]);
      ASSERT_EQ(a.biphase_slice(m)[t], c.biphase_slice(m)[t]);
    }
  }
}

TEST(KernelTest, AmplitudeScalingLeavesBicoherenceUnchanged) {
  const SimulationGrid g = make_grid(128, 256, 4.02, 200.0);
  const SpectralModel base = model_example1(g);
  const double c = 2.0;
  std::vector<double> s2 = base.S.values();
  for (double& v : s2) v *= c * c;
  const EvolutionarySpectrum S2(g, std::move(s2));
  const auto fn = base.B;
  const EvolutionaryBispectrum B2 = EvolutionaryBispectrum::Lazy(
      g, [fn, c](std::size_t m, std::size_t i, std::size_t j) {
        return c * c * c * fn.at(m, i, j);
      });
  const ThirdOrderKernel K1 = build_kernel(base.S, base.B);
  const ThirdOrderKernel K2 = build_kernel(S2, B2);
  for (std::size_t m : {0u, 100u}) {
    for (std::size_t k = 1; k < g.N; ++k) {
      ASSERT_LT(rel_diff(K2.s_pure(m, k), c * c * K1.s_pure(m, k)), 1e-10);
      for (std::size_t j = 1; 2 * j <= k; ++j) {
        ASSERT_LT(rel_diff(K2.bicoh(m, k - j, j), K1.bicoh(m, k - j, j)), 1e-10);
      }
    }
  }
}

TEST(KernelTest, LargerBispectrumNeverRaisesPureSpectrum) {
  const SimulationGrid g = testing::exact_grid(8, 16, 2.0);
  const EvolutionarySpectrum S = flat_spectrum(g, 2.0);
  // b^2 = b0^2 dw / 8 stays below 0.8
  double prev = 2.0;
  for (double b0 : {0.0, 0.2, 0.5, 0.8, 1.1, 1.4}) {
    const ThirdOrderKernel K =
        build_kernel(S, single_entry(g, 3, 2, Complex(0.0, b0)));
    EXPECT_LE(K.s_pure(0, 5), prev);
    prev = K.s_pure(0, 5);
    EXPECT_NEAR(K.biphase(0, 3, 2), b0 > 0 ? std::numbers::pi / 2 : 0.0, 1e-15);
  }
  EXPECT_LT(prev, 2.0);
}

TEST(KernelTest, InfeasibleInputNamesTheIndex) {
  const SimulationGrid g = testing::exact_grid(8, 16, 2.0);
  const double s0 = 1.0;
  const EvolutionarySpectrum S = flat_spectrum(g, s0);
  // b^2 = B^2 dw / s0^3 = 1.5 at (i, j) = (3, 1), from time index 6 on.
  const double b0 = std::sqrt(1.5 / g.dw);
  std::vector<Complex> e(g.M * tri_size(g.N));
  for (std::size_t m = 6; m < g.M; ++m) {
    e[m * tri_size(g.N) + tri_index(3, 1)] = Complex(b0, 0.0);
  }
  const EvolutionaryBispectrum B =
      EvolutionaryBispectrum::Materialized(g, std::move(e));
  try {
    build_kernel(S, B, {}, 4);
    FAIL() << "expected InfeasibleSkewness";
  } catch (const InfeasibleSkewness& err) {
    EXPECT_EQ(err.m(), 6u);
    EXPECT_EQ(err.k(), 4u);
    EXPECT_NEAR(err.overshoot(), 0.5, 1e-12);
    EXPECT_NE(std::string(err.what()).find("frequency index 4"), std::string::npos)
        << err.what();
  }
}

TEST(KernelTest, TinyUndershootIsClamped) {
  const SimulationGrid g = testing::exact_grid(8, 16, 2.0);
  const EvolutionarySpectrum S = flat_spectrum(g, 1.0);
  // 1 - b^2 = -1e-11
  const double b0 = std::sqrt((1.0 + 1e-11) / g.dw);
  const ThirdOrderKernel K = build_kernel(S, single_entry(g, 1, 1, Complex(b0, 0.0)));
  EXPECT_EQ(K.s_pure(0, 2), 0.0);
  EXPECT_LT(K.margin(0, 2), 0.0);
  EXPECT_EQ(K.clamp_counts()[0], 1u);
  const FeasibilityReport r = kernel_report(K);
  EXPECT_EQ(r.total_clamped, g.M);
  EXPECT_GE(r.clamped[3], 1u);
  EXPECT_LT(r.worst_margin, 0.0);
  // stricter tolerance turns the clamp into an error
  KernelOptions strict;
  strict.feas_tol = 1e-12;
  EXPECT_THROW(build_kernel(S, single_entry(g, 1, 1, Complex(b0, 0.0)), strict),
               InfeasibleSkewness);
}

TEST(KernelTest, Example1InteractiveFraction) {
  const SimulationGrid g = make_grid(128, 256, 4.02, 200.0);
  const SpectralModel model = model_example1(g);
  const ThirdOrderKernel K = build_kernel(model.S, model.B);
  const FeasibilityReport r = kernel_report(K);
  ASSERT_EQ(r.interactive_fraction.size(), g.M);
  // independent numpy transcription of the recursion
  EXPECT_NEAR(r.interactive_fraction[0], 0.0807959853354738, 1e-12);
  for (std::size_t m = 0; m < g.M; ++m) {
    EXPECT_GT(r.interactive_fraction[m], 0.0);
    EXPECT_LT(r.interactive_fraction[m], 1.0);
    EXPECT_NEAR(r.interactive_fraction[m], r.interactive_fraction[0], 1e-12);
  }
  EXPECT_EQ(r.total_clamped, 0u);
  EXPECT_GT(r.worst_margin, 0.9);
}

TEST(KernelTest, Example2BuildsOnPaperGrid) {
  const SimulationGrid g = make_grid(400, 800, 125.66, 20.0);
  const SpectralModel model = model_clough_penzien(g);
  ThirdOrderKernel K = build_kernel(model.S, model.B, {}, 0);
  const FeasibilityReport r = kernel_report(K);
  EXPECT_EQ(r.total_clamped, 0u);
  EXPECT_GT(r.worst_margin, 0.0);
  // independent numpy transcription
  EXPECT_NEAR(r.interactive_fraction[0], 0.0854179667889465, 1e-10);
  EXPECT_NEAR(r.interactive_fraction[200], 0.0849974902935724, 1e-10);
  EXPECT_NEAR(r.interactive_fraction[600], 0.0834168652043514, 1e-10);
}

TEST(KernelTest, GridMismatchIsRejected) {
  const SimulationGrid a = testing::exact_grid(8, 16, 2.0);
  const SimulationGrid b = testing::exact_grid(8, 32, 2.0);
  EXPECT_THROW(build_kernel(flat_spectrum(a, 1.0), EvolutionaryBispectrum::Zero(b)),
               GridMismatch);
}

}  // namespace
}  // namespace evospec
