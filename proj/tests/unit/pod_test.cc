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

#include "evospec/pod.h"

#include <cmath>
#include <numbers>
#include <random>
#include <vector>

#include <Eigen/Dense>
#include <gtest/gtest.h>

#include "evospec/errors.h"
#include "evospec/kernel.h"
#include "evospec/models.h"
#include "test_util.h"

namespace evospec {
namespace {

using testing::rel_diff;

double correlation(const std::vector<double>& x, const std::vector<double>& y) {
  const double n = static_cast<double>(x.size());
  double mx = 0, my = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    mx += x[i] / n;
    my += y[i] / n;
  }
  double sxy = 0, sxx = 0, syy = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sxy += (x[i] - mx) * (y[i] - my);
    sxx += (x[i] - mx) * (x[i] - mx);
    syy += (y[i] - my) * (y[i] - my);
  }
  return sxy / std::sqrt(sxx * syy);
}

class RandomPodTest : public ::testing::Test {
 protected:
  SimulationGrid g = testing::exact_grid(12, 24, 3.0);
  EvolutionarySpectrum S = testing::random_spectrum(g, 31);
  EvolutionaryBispectrum B = testing::random_bispectrum(S, 32, 1.0);
  ThirdOrderKernel K = build_kernel(S, B);
  NormalizedTensor G{B, K};
};

TEST_F(RandomPodTest, TensorDefinitionAndSymmetry) {
  for (std::size_t m = 0; m < g.M; ++m) {
    for (std::size_t i = 0; i < g.N; ++i) {
      for (std::size_t j = 0; j < g.N; ++j) {
        ASSERT_EQ(G(m, i, j), G(m, j, i));
        if (i + j > g.N - 1 || i == 0 || j == 0) {
          ASSERT_EQ(G(m, i, j), Complex(0.0, 0.0));
          continue;
        }
        const Complex expect =
            B.full(m, i, j) / std::sqrt(K.s_pure(m, i) * K.s_pure(m, j));
        ASSERT_LT(std::abs(G(m, i, j) - expect), 1e-12 * std::abs(expect));
      }
    }
    Eigen::MatrixXcd slice;
    Eigen::MatrixXd mag;
    G.slice(m, slice);
    G.magnitude_slice(m, mag);
    ASSERT_EQ(slice.rows(), static_cast<Eigen::Index>(g.N));
    ASSERT_LT((slice.cwiseAbs() - mag).norm(), 1e-14);
    ASSERT_EQ(slice(3, 5), G(m, 3, 5));
  }
}

TEST_F(RandomPodTest, BasisInvariants) {
  const PodModel model = fit_pod(G, 6);
  const Eigen::MatrixXd gram = model.basis().transpose() * model.basis();
  EXPECT_LT((gram - Eigen::MatrixXd::Identity(6, 6)).cwiseAbs().maxCoeff(), 1e-10);
  const Eigen::VectorXd& sv = model.singular_values();
  for (Eigen::Index q = 1; q < sv.size(); ++q) EXPECT_LE(sv(q), sv(q - 1));
  for (std::size_t q = 0; q < 6; ++q) {
    // largest-magnitude entry positive
    Eigen::Index idx;
    model.basis().col(q).cwiseAbs().maxCoeff(&idx);
    EXPECT_GT(model.basis()(idx, q), 0.0);
  }
  for (std::size_t m = 0; m < g.M; ++m) {
    for (std::size_t r = 0; r < 6; ++r) {
      for (std::size_t s = 0; s < 6; ++s) {
        const double gm = model.gamma(r, s, m);
        ASSERT_GT(gm, -std::numbers::pi);
        ASSERT_LE(gm, std::numbers::pi);
        ASSERT_GE(model.b_abs(r, s, m), 0.0);
        ASSERT_LT(std::abs(std::polar(model.b_abs(r, s, m), gm) - model.b(r, s, m)),
                  1e-12 * (1.0 + model.b_abs(r, s, m)));
        ASSERT_LT(std::abs(model.b(r, s, m) - model.b(s, r, m)), 1e-12);
      }
    }
  }
}

TEST_F(RandomPodTest, ProjectionsAreInnerProducts) {
  const PodModel model = fit_pod(G, 4);
  for (std::size_t m = 0; m < g.M; m += 5) {
    for (std::size_t r = 0; r < 4; ++r) {
      double a = 0.0;
      for (std::size_t k = 0; k < g.N; ++k) {
        a += std::sqrt(K.s_pure(m, k)) * model.phi(r, k);
      }
      EXPECT_NEAR(model.a(r, m), a, 1e-12);
      for (std::size_t s = 0; s < 4; ++s) {
        Complex b = 0.0;
        for (std::size_t i = 0; i < g.N; ++i) {
          for (std::size_t j = 0; j < g.N; ++j) {
            b += model.phi(r, i) * model.phi(s, j) * G(m, i, j);
          }
        }
        EXPECT_LT(std::abs(model.b(r, s, m) - b), 1e-12);
      }
    }
  }
}

TEST_F(RandomPodTest, GramMatchesNaiveUnfoldingsAndWorkers) {
  const auto N = static_cast<Eigen::Index>(g.N);
  Eigen::MatrixXd gram2 = Eigen::MatrixXd::Zero(N, N);
  Eigen::MatrixXd gram3 = Eigen::MatrixXd::Zero(N, N);
  double frob = 0.0;
  for (std::size_t m = 0; m < g.M; ++m) {
    for (Eigen::Index i = 0; i < N; ++i) {
      for (Eigen::Index j = 0; j < N; ++j) {
        const double v = std::abs(G(m, i, j));
        frob += v * v;
        for (Eigen::Index l = 0; l < N; ++l) {
          // mode 2: rows indexed by i, columns by (m, j)
          gram2(i, l) += v * std::abs(G(m, l, j));
          // mode 3: rows indexed by j, columns by (m, i)
          gram3(j, l) += v * std::abs(G(m, i, l));
        }
      }
    }
  }
  const Eigen::MatrixXd gram = mode3_gram(G, 1);
  EXPECT_LT((gram - gram3).norm(), 1e-12 * gram3.norm());
  EXPECT_EQ(gram, mode3_gram(G, 8));

  const PodBasis basis = fit_pod_basis(G);
  // energy accounting
  EXPECT_LT(rel_diff(basis.singular_values.squaredNorm(), frob), 1e-8);

  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(gram2);
  const Eigen::VectorXd lam = es.eigenvalues().reverse();
  for (Eigen::Index q = 0; q < N; ++q) {
    const bool separated =
        (q == 0 || lam(q - 1) - lam(q) > 1e-6 * lam(0)) &&
        (q + 1 == N || lam(q) - lam(q + 1) > 1e-6 * lam(0));
    if (!separated || lam(q) < 1e-10 * lam(0)) continue;
    const double ip =
        std::abs(es.eigenvectors().col(N - 1 - q).dot(basis.phi.col(q)));
    EXPECT_GE(ip, 1.0 - 1e-8) << "column " << q;
  }
}

TEST_F(RandomPodTest, ReconstructionImprovesWithComponents) {
  const PodBasis basis = fit_pod_basis(G);
  double prev_g = 1e300, prev_mag = 1e300;
  for (std::size_t nq = 1; nq <= g.N; ++nq) {
    const PodModel model = fit_pod(G, basis, nq);
    const ReconstructionError e = reconstruction_error(model, G);
    EXPECT_LE(e.tensor, prev_g + 1e-12);
    prev_g = e.tensor;
    // the magnitude tensor under the same projection
    const Eigen::MatrixXd& phi = model.basis();
    double num = 0.0, den = 0.0;
    Eigen::MatrixXd mag;
    for (std::size_t m = 0; m < g.M; ++m) {
      G.magnitude_slice(m, mag);
      const Eigen::MatrixXd rec = phi * (phi.transpose() * mag * phi) * phi.transpose();
      num += (mag - rec).squaredNorm();
      den += mag.squaredNorm();
    }
    const double err = std::sqrt(num / den);
    EXPECT_LE(err, prev_mag + 1e-12);
    prev_mag = err;
  }
  EXPECT_LT(prev_g, 1e-12);
  EXPECT_LT(prev_mag, 1e-12);
}

TEST_F(RandomPodTest, FullRankIsExact) {
  const PodModel model = fit_pod(G, g.N);
  const ReconstructionError e = reconstruction_error(model, G);
  EXPECT_LT(e.sqrt_sp, 1e-8);
  EXPECT_LT(e.tensor, 1e-6);
  const PodDiagnostics d = pod_diagnostics(model);
  for (std::size_t m = 0; m < g.M; ++m) {
    double varp = 0.0, vari = 0.0, m3 = 0.0;
    for (std::size_t k = 0; k < g.N; ++k) varp += 2.0 * g.dw * K.s_pure(m, k);
    for (std::size_t i = 0; i < g.N; ++i) {
      for (std::size_t j = 0; j < g.N; ++j) {
        vari += g.dw * g.dw * std::norm(G(m, i, j));
        m3 += 6.0 * g.dw * g.dw * B.full(m, i, j).real();
      }
    }
    EXPECT_LT(rel_diff(d.varp[m], varp), 1e-10);
    EXPECT_LT(rel_diff(d.vari[m], vari), 1e-10);
    EXPECT_LT(rel_diff(d.m3[m], m3), 1e-9);
  }
}

TEST_F(RandomPodTest, ComponentCountRange) {
  EXPECT_THROW(fit_pod(G, 0), InvalidParameter);
  EXPECT_THROW(fit_pod(G, g.N + 1), InvalidParameter);
  EXPECT_THROW(fit_pod2(S, 0), InvalidParameter);
  EXPECT_THROW(fit_pod2(S, g.N + 1), InvalidParameter);
}

TEST(PodTest, ZeroBispectrumStillReconstructsPureSpectrum) {
  const SimulationGrid g = testing::exact_grid(10, 20, 2.0);
  const EvolutionarySpectrum S = testing::random_spectrum(g, 4);
  const EvolutionaryBispectrum B = EvolutionaryBispectrum::Zero(g);
  const ThirdOrderKernel K = build_kernel(S, B);
  const NormalizedTensor G(B, K);
  for (std::size_t i = 0; i < g.N; ++i) EXPECT_EQ(G(3, i, 1), Complex(0.0, 0.0));
  const PodBasis basis = fit_pod_basis(G);
  EXPECT_EQ(basis.rank, 0u);
  const Eigen::MatrixXd I = Eigen::MatrixXd::Identity(10, 10);
  EXPECT_LT((basis.phi.transpose() * basis.phi - I).norm(), 1e-12);
  const PodModel model = fit_pod(G, basis, g.N);
  for (std::size_t m = 0; m < g.M; ++m) {
    EXPECT_EQ(model.b_slice(m).norm(), 0.0);
  }
  EXPECT_LT(reconstruction_error(model, G).sqrt_sp, 1e-12);
  const PodDiagnostics d = pod_diagnostics(model);
  for (std::size_t m = 0; m < g.M; ++m) {
    EXPECT_EQ(d.vari[m], 0.0);
    EXPECT_EQ(d.m3[m], 0.0);
  }
}

TEST(PodTest, RankDeficientBasisIsCompleted) {
  const SimulationGrid g = testing::exact_grid(8, 16, 2.0);
  std::vector<double> s(g.M * g.N, 1.0);
  for (std::size_t m = 0; m < g.M; ++m) s[m * g.N] = 0.0;
  const EvolutionarySpectrum S(g, std::move(s));
  std::vector<Complex> e(g.M * tri_size(g.N));
  for (std::size_t m = 0; m < g.M; ++m) e[m * tri_size(g.N) + tri_index(2, 1)] = 0.3;
  const EvolutionaryBispectrum B = EvolutionaryBispectrum::Materialized(g, e);
  const ThirdOrderKernel K = build_kernel(S, B);
  const PodBasis basis = fit_pod_basis(NormalizedTensor(B, K));
  EXPECT_EQ(basis.rank, 2u);
  const Eigen::MatrixXd I = Eigen::MatrixXd::Identity(8, 8);
  EXPECT_LT((basis.phi.transpose() * basis.phi - I).norm(), 1e-12);
  const PodModel full = fit_pod(NormalizedTensor(B, K), basis, g.N);
  const ReconstructionError err = reconstruction_error(full, NormalizedTensor(B, K));
  EXPECT_LT(err.sqrt_sp, 1e-12);
  EXPECT_LT(err.tensor, 1e-12);
}

class Example1PodTest : public ::testing::Test {
 protected:
  SimulationGrid g = make_grid(128, 256, 4.02, 200.0);
  SpectralModel model = model_example1(g);
  ThirdOrderKernel K = build_kernel(model.S, model.B);
  NormalizedTensor G{model.B, K};
};

TEST_F(Example1PodTest, TensorScalesWithSquareRootOfModulation) {
  std::mt19937_64 rng(17);
  for (int n = 0; n < 20; ++n) {
    const std::size_t m = rng() % (g.M - 1);
    const std::size_t k = 2 + rng() % (g.N - 2);
    const std::size_t j = 1 + rng() % (k - 1);
    const std::size_t i = k - j;
    const double r = G(m, i, j).real() / G(0, i, j).real();
    ASSERT_LT(rel_diff(r, std::sqrt((200.0 - g.time(m)) / 200.0)), 1e-10);
  }
}

TEST_F(Example1PodTest, LeadingComponentsFollowModulation) {
  const PodModel pod = fit_pod(G, 4);
  std::vector<double> a1, b11, mod;
  for (std::size_t m = 0; m < g.M; ++m) {
    a1.push_back(pod.a(0, m));
    b11.push_back(pod.b_abs(0, 0, m));
    mod.push_back(std::sqrt(200.0 - g.time(m)));
  }
  EXPECT_GE(correlation(a1, mod), 0.999);
  EXPECT_GE(correlation(b11, mod), 0.999);
}

TEST_F(Example1PodTest, SecondOrderPodIsRankOne) {
  const SecondOrderPod pod = fit_pod2(model.S, 1);
  // singular values come from Gram eigenvalues, so zeros sit at sqrt(eps)
  EXPECT_LT(pod.singular_values(1), 1e-6 * pod.singular_values(0));
  double num = 0.0, den = 0.0;
  for (std::size_t m = 0; m < g.M; ++m) {
    for (std::size_t k = 0; k < g.N; ++k) {
      const double root = std::sqrt(model.S(m, k));
      const double rec = pod.a(0, m) * pod.basis(k, 0);
      num += (root - rec) * (root - rec);
      den += root * root;
    }
  }
  EXPECT_LT(std::sqrt(num / den), 1e-12);
}

}  // namespace
}  // namespace evospec
