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

#ifndef EVOSPEC_POD_H_
#define EVOSPEC_POD_H_

#include <cstddef>
#include <vector>

#include <Eigen/Dense>

#include "evospec/grid.h"
#include "evospec/kernel.h"
#include "evospec/spectra.h"

namespace evospec {

// G[m][i][j] = B(t_m, w_i, w_j) / sqrt(Sp(t_m, w_i) Sp(t_m, w_j)) on the full
// square (symmetric extension), zero outside the support and wherever the
// kernel guard Sp(i) Sp(j) S(i+j) < eps_denom fires. Slices are evaluated on
// demand; the kernel must outlive the tensor.
class NormalizedTensor {
 public:
  NormalizedTensor(const EvolutionaryBispectrum& B,
                   const ThirdOrderKernel& kernel);

  const SimulationGrid& grid() const { return B_.grid(); }
  const ThirdOrderKernel& kernel() const { return *kernel_; }
  const EvolutionaryBispectrum& bispectrum() const { return B_; }

  void slice(std::size_t m, Eigen::MatrixXcd& out) const;
  void magnitude_slice(std::size_t m, Eigen::MatrixXd& out) const;
  Complex operator()(std::size_t m, std::size_t i, std::size_t j) const;

 private:
  template <class Store>
  void fill(std::size_t m, Store&& store) const;

  EvolutionaryBispectrum B_;
  const ThirdOrderKernel* kernel_;
};

// Complete orthonormal frequency basis from the mode-3 unfolding of |G|.
struct PodBasis {
  Eigen::MatrixXd phi;              // N x N, column q is Phi_q
  Eigen::VectorXd singular_values;  // non-increasing
  std::size_t rank = 0;             // columns not produced by completion
};

// Symmetric positive semi-definite Gram matrix -> sorted, sign-normalized,
// completed basis. Shared by both decomposition orders.
PodBasis basis_from_gram(const Eigen::MatrixXd& gram);

// Gram sum_m |G_m|^T |G_m|, accumulated over fixed chunks of time slices and
// reduced in chunk order, so the result does not depend on `workers`.
Eigen::MatrixXd mode3_gram(const NormalizedTensor& G, unsigned workers = 1);
PodBasis fit_pod_basis(const NormalizedTensor& G, unsigned workers = 1);

class PodModel {
 public:
  // basis: N x n_q, a: n_q x M, b: M matrices of n_q x n_q.
  PodModel(SimulationGrid grid, Eigen::MatrixXd basis, Eigen::MatrixXd a,
           std::vector<Eigen::MatrixXcd> b, Eigen::VectorXd singular_values);

  const SimulationGrid& grid() const { return grid_; }
  std::size_t n_q() const { return static_cast<std::size_t>(basis_.cols()); }
  const Eigen::MatrixXd& basis() const { return basis_; }
  double phi(std::size_t q, std::size_t k) const { return basis_(k, q); }
  double a(std::size_t q, std::size_t m) const { return a_(q, m); }
  const Eigen::MatrixXd& a() const { return a_; }
  Complex b(std::size_t r, std::size_t s, std::size_t m) const {
    return b_[m](r, s);
  }
  const Eigen::MatrixXcd& b_slice(std::size_t m) const { return b_[m]; }
  double b_abs(std::size_t r, std::size_t s, std::size_t m) const;
  double gamma(std::size_t r, std::size_t s, std::size_t m) const;
  const Eigen::VectorXd& singular_values() const { return singular_values_; }

 private:
  SimulationGrid grid_;
  Eigen::MatrixXd basis_;
  Eigen::MatrixXd a_;
  std::vector<Eigen::MatrixXcd> b_;
  Eigen::VectorXd singular_values_;
};

struct SliceProjection {
  Eigen::VectorXd a;   // Phi^T sqrt(Sp(t_m))
  Eigen::MatrixXcd b;  // Phi^T G_m Phi
};

SliceProjection project_slice(const NormalizedTensor& G,
                              const Eigen::MatrixXd& phi, std::size_t m);

// Throws InvalidParameter unless 1 <= n_q <= N.
PodModel fit_pod(const NormalizedTensor& G, std::size_t n_q,
                 unsigned workers = 1);
PodModel fit_pod(const NormalizedTensor& G, const PodBasis& basis,
                 std::size_t n_q, unsigned workers = 1);

struct PodDiagnostics {
  std::vector<double> varp;  // 2 dw sum_q a_q^2
  std::vector<double> vari;  // dw^2 sum_rs |b_rs|^2
  std::vector<double> m3;    // 6 dw^2 sum_rs |b_rs| a_r a_s cos(gamma_rs)
};

struct DiagnosticValues {
  double varp;
  double vari;
  double m3;
};

DiagnosticValues diagnostics_from(const Eigen::VectorXd& a,
                                  const Eigen::MatrixXcd& b, double dw);
PodDiagnostics pod_diagnostics(const PodModel& model);

// Relative Frobenius errors over all time slices of the reconstructions of
// sqrt(Sp) and of G from the model.
struct ReconstructionError {
  double sqrt_sp = 0.0;
  double tensor = 0.0;
};
ReconstructionError reconstruction_error(const PodModel& model,
                                         const NormalizedTensor& G);

// Second-order decomposition sqrt(S(t, w)) ~ sum_q a_q(t) Phi_q(w).
struct SecondOrderPod {
  SimulationGrid grid;
  Eigen::MatrixXd basis;            // N x n_q
  Eigen::MatrixXd a;                // n_q x M
  Eigen::VectorXd singular_values;  // min(M, N), non-increasing
  std::size_t n_q() const { return static_cast<std::size_t>(basis.cols()); }
};

// Throws InvalidParameter unless 1 <= n_q <= min(M, N).
SecondOrderPod fit_pod2(const EvolutionarySpectrum& S, std::size_t n_q);

}  // namespace evospec

#endif  // EVOSPEC_POD_H_
