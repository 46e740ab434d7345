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

#include "evospec/grid.h"

#include <cmath>
#include <limits>
#include <numbers>

#include <gtest/gtest.h>

#include "evospec/errors.h"

namespace evospec {
namespace {

TEST(GridTest, Example1Grid) {
  const SimulationGrid g = make_grid(128, 256, 4.02, 200.0);
  EXPECT_EQ(g.N, 128u);
  EXPECT_EQ(g.M, 256u);
  EXPECT_NEAR(g.dw, 0.0314, 1e-4);
  EXPECT_DOUBLE_EQ(g.dw, 4.02 / 128.0);
  EXPECT_DOUBLE_EQ(g.dt, 0.78125);
  EXPECT_TRUE(g.fft_compatible);
  EXPECT_NEAR(g.fft_mismatch, 3.08e-4, 1e-5);
}

TEST(GridTest, Example2Grid) {
  const SimulationGrid g = make_grid(400, 800, 125.66, 20.0);
  EXPECT_NEAR(g.dw, 0.31415, 1e-5);
  EXPECT_DOUBLE_EQ(g.dt, 0.025);
  EXPECT_TRUE(g.fft_compatible);
  EXPECT_LT(g.fft_mismatch, 3e-5);
}

TEST(GridTest, ExactGridHasNoMismatch) {
  const SimulationGrid g =
      make_grid(8, 16, 2.0 * std::numbers::pi * 8.0 / 3.0, 3.0);
  EXPECT_LT(g.fft_mismatch, 1e-14);
  EXPECT_TRUE(g.fft_compatible);
  EXPECT_DOUBLE_EQ(g.freq(3), 3.0 * g.dw);
  EXPECT_DOUBLE_EQ(g.time(5), 5.0 * g.dt);
}

TEST(GridTest, FftCompatibilityNeedsNyquistAndSpacing) {
  // M < 2N
  EXPECT_FALSE(make_grid(16, 16, 2.0 * std::numbers::pi * 16.0, 1.0)
                   .fft_compatible);
  // wrong spacing
  EXPECT_FALSE(make_grid(16, 64, 10.0, 1.0).fft_compatible);
}

TEST(GridTest, RejectsInvalidParameters) {
  const double nan = std::numeric_limits<double>::quiet_NaN();
  EXPECT_THROW(make_grid(0, 16, 1.0, 1.0), InvalidParameter);
  EXPECT_THROW(make_grid(8, 0, 1.0, 1.0), InvalidParameter);
  EXPECT_THROW(make_grid(-3, 16, 1.0, 1.0), InvalidParameter);
  EXPECT_THROW(make_grid(8, 16, 0.0, 1.0), InvalidParameter);
  EXPECT_THROW(make_grid(8, 16, -1.0, 1.0), InvalidParameter);
  EXPECT_THROW(make_grid(8, 16, 1.0, 0.0), InvalidParameter);
  EXPECT_THROW(make_grid(8, 16, nan, 1.0), InvalidParameter);
  EXPECT_THROW(make_grid(8, 16, 1.0, std::numeric_limits<double>::infinity()),
               InvalidParameter);
}

TEST(GridTest, TriangleIndexIsDenseInSumFrequencyOrder) {
  for (std::size_t N : {1u, 2u, 3u, 7u, 8u, 33u}) {
    std::size_t next = 0;
    for (std::size_t k = 0; k < N; ++k) {
      for (std::size_t j = 0; 2 * j <= k; ++j) {
        const std::size_t i = k - j;
        ASSERT_TRUE(in_triangle(N, i, j));
        ASSERT_EQ(tri_index(i, j), next) << "N=" << N << " i=" << i;
        ++next;
      }
    }
    EXPECT_EQ(tri_size(N), next);
  }
  EXPECT_FALSE(in_triangle(8, 3, 4));
  EXPECT_FALSE(in_triangle(8, 4, 4));
  EXPECT_TRUE(in_triangle(8, 4, 3));
}

TEST(GridTest, SameGridAndNearestTime) {
  const SimulationGrid a = make_grid(16, 32, 3.0, 2.0);
  const SimulationGrid b = make_grid(16, 32, 3.0, 2.0);
  const SimulationGrid c = make_grid(16, 64, 3.0, 2.0);
  EXPECT_TRUE(same_grid(a, b));
  EXPECT_FALSE(same_grid(a, c));
  EXPECT_NO_THROW(require_same_grid(a, b, "test"));
  EXPECT_THROW(require_same_grid(a, c, "test"), GridMismatch);

  const SimulationGrid g = make_grid(400, 800, 125.66, 20.0);
  EXPECT_EQ(nearest_time_index(g, 5.0), 200u);
  EXPECT_EQ(nearest_time_index(g, 10.0), 400u);
  EXPECT_EQ(nearest_time_index(g, 1e9), 799u);
  EXPECT_EQ(nearest_time_index(g, -1.0), 0u);
}

}  // namespace
}  // namespace evospec
