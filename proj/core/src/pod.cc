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

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "evospec/errors.h"
#include "evospec/parallel.h"

namespace evospec {
namespace {

constexpr std::size_t kChunkSlices = 16;
constexpr std::size_t kRowBlock = 32;
constexpr double kRankTol = 1e-13;

void normalize_sign(Eigen::Ref<Eigen::VectorXd> v) {
  Eigen::Index best = 0;
  for (Eigen::Index i = 1; i < v.size(); ++i) {
    if (std::abs(v(i)) > std::abs(v(best))) best = i;
  }
  if (v(best) < 0.0) v = -v;
}

void check_nq(std::size_t n_q, std::size_t limit, const char* what) {
  if (n_q < 1 || n_q > limit) {
    throw InvalidParameter(std::string(what) + ": n_q must be in [1, " +
                           std::to_string(limit) + "], got " +
                           std::to_string(n_q));
  }
}

}  // namespace

NormalizedTensor::NormalizedTensor(const EvolutionaryBispectrum& B,
                                   const ThirdOrderKernel& kernel)
    : B_(B), kernel_(&kernel) {
  require_same_grid(B.grid(), kernel.grid(), "bispectrum vs kernel");
}

template <class Store>
void NormalizedTensor::fill(std::size_t m, Store&& store) const {
  const SimulationGrid& g = grid();
  const std::size_t N = g.N;
  if (B_.is_zero()) return;
  std::vector<Complex> tri(tri_size(N));
  B_.slice(m, tri.data());
  const double* sp = kernel_->s_pure_row(m);
  const double* s = kernel_->spectrum_row(m);
  const double eps = kernel_->options().eps_denom;
  for (std::size_t k = 2; k < N; ++k) {
    const std::size_t off = tri_offset(k);
    for (std::size_t j = 1; j <= k / 2; ++j) {
      const std::size_t i = k - j;
      const Complex v = tri[off + j];
      if (v == Complex() || sp[i] * sp[j] * s[k] < eps) continue;
      store(i, j, v / std::sqrt(sp[i] * sp[j]));
    }
  }
}

void NormalizedTensor::slice(std::size_t m, Eigen::MatrixXcd& out) const {
  const auto N = static_cast<Eigen::Index>(grid().N);
  out.setZero(N, N);
  fill(m, [&](std::size_t i, std::size_t j, Complex v) {
    out(i, j) = v;
    out(j, i) = v;
  });
}

void NormalizedTensor::magnitude_slice(std::size_t m, Eigen::MatrixXd& out) const {
  const auto N = static_cast<Eigen::Index>(grid().N);
  out.setZero(N, N);
  fill(m, [&](std::size_t i, std::size_t j, Complex v) {
    const double a = std::abs(v);
    out(i, j) = a;
    out(j, i) = a;
  });
}

Complex NormalizedTensor::operator()(std::size_t m, std::size_t i,
                                     std::size_t j) const {
  if (j > i) std::swap(i, j);
  const SimulationGrid& g = grid();
  if (j == 0 || i + j > g.N - 1) return Complex();
  const Complex v = B_.at(m, i, j);
  const double* sp = kernel_->s_pure_row(m);
  const double* s = kernel_->spectrum_row(m);
  if (v == Complex() || sp[i] * sp[j] * s[i + j] < kernel_->options().eps_denom) {
    return Complex();
  }
  return v / std::sqrt(sp[i] * sp[j]);
}

PodBasis basis_from_gram(const Eigen::MatrixXd& gram) {
  const Eigen::Index n = gram.rows();
  if (!gram.allFinite()) {
    throw Error("decomposition failure: non-finite Gram matrix");
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(gram);
  if (es.info() != Eigen::Success) {
    throw Error("decomposition failure: eigensolver did not converge");
  }
  PodBasis out;
  out.phi.resize(n, n);
  out.singular_values.resize(n);
  const Eigen::VectorXd& lam = es.eigenvalues();
  const double lmax = n > 0 ? std::max(lam(n - 1), 0.0) : 0.0;
  Eigen::Index rank = 0;
  for (Eigen::Index q = 0; q < n; ++q) {
    const double l = lam(n - 1 - q);
    out.singular_values(q) = std::sqrt(std::max(l, 0.0));
    if (lmax > 0.0 && l > kRankTol * lmax) {
      out.phi.col(rank++) = es.eigenvectors().col(n - 1 - q);
    }
  }
  // Deterministic completion against the identity columns.
  for (Eigen::Index c = 0; c < n && rank < n; ++c) {
    Eigen::VectorXd v = Eigen::VectorXd::Unit(n, c);
    for (int pass = 0; pass < 2; ++pass) {
      for (Eigen::Index q = 0; q < rank; ++q) {
        v -= out.phi.col(q).dot(v) * out.phi.col(q);
      }
    }
    const double nv = v.norm();
    if (nv > 1e-6) out.phi.col(rank++) = v / nv;
  }
  for (Eigen::Index q = 0; q < n; ++q) normalize_sign(out.phi.col(q));
  out.rank = 0;
  for (Eigen::Index q = 0; q < n; ++q) {
    if (lmax > 0.0 && lam(n - 1 - q) > kRankTol * lmax) ++out.rank;
  }
  return out;
}

Eigen::MatrixXd mode3_gram(const NormalizedTensor& G, unsigned workers) {
  const SimulationGrid& g = G.grid();
  const std::size_t N = g.N;
  const std::size_t chunks = (g.M + kChunkSlices - 1) / kChunkSlices;
  std::vector<Eigen::MatrixXd> partial(chunks);
  parallel_for(chunks, workers, [&](std::size_t c) {
    const std::size_t m0 = c * kChunkSlices;
    const std::size_t m1 = std::min(g.M, m0 + kChunkSlices);
    const std::size_t ns = m1 - m0;
    std::vector<Eigen::MatrixXd> slices(ns);
    for (std::size_t s = 0; s < ns; ++s) {
      G.magnitude_slice(m0 + s, slices[s]);
      if (!slices[s].allFinite()) {
        throw Error("decomposition failure: non-finite tensor entry at time index " +
                    std::to_string(m0 + s));
      }
    }
    Eigen::MatrixXd acc = Eigen::MatrixXd::Zero(N, N);
    Eigen::MatrixXd At;
    // Rows i >= i0 vanish beyond column N - 1 - i0.
    for (std::size_t i0 = 0; i0 < N; i0 += kRowBlock) {
      const std::size_t i1 = std::min(N, i0 + kRowBlock);
      const auto L = static_cast<Eigen::Index>(N - i0);
      At.resize(L, static_cast<Eigen::Index>((i1 - i0) * ns));
      Eigen::Index col = 0;
      for (std::size_t s = 0; s < ns; ++s) {
        for (std::size_t i = i0; i < i1; ++i) {
          At.col(col++) = slices[s].row(i).head(L).transpose();
        }
      }
      acc.topLeftCorner(L, L).selfadjointView<Eigen::Lower>().rankUpdate(At);
    }
    partial[c] = std::move(acc);
  });
  Eigen::MatrixXd gram = Eigen::MatrixXd::Zero(N, N);
  for (const auto& p : partial) gram += p;
  gram.triangularView<Eigen::StrictlyUpper>() = gram.transpose().eval();
  return gram;
}

PodBasis fit_pod_basis(const NormalizedTensor& G, unsigned workers) {
  return basis_from_gram(mode3_gram(G, workers));
}

PodModel::PodModel(SimulationGrid grid, Eigen::MatrixXd basis, Eigen::MatrixXd a,
                   std::vector<Eigen::MatrixXcd> b,
                   Eigen::VectorXd singular_values)
    : grid_(grid),
      basis_(std::move(basis)),
      a_(std::move(a)),
      b_(std::move(b)),
      singular_values_(std::move(singular_values)) {
  const auto nq = basis_.cols();
  if (basis_.rows() != static_cast<Eigen::Index>(grid_.N) || nq < 1 ||
      a_.rows() != nq || a_.cols() != static_cast<Eigen::Index>(grid_.M) ||
      b_.size() != grid_.M) {
    throw InvalidParameter("pod model shape mismatch");
  }
  for (const auto& bm : b_) {
    if (bm.rows() != nq || bm.cols() != nq) {
      throw InvalidParameter("pod model interaction block shape mismatch");
    }
  }
}

double PodModel::b_abs(std::size_t r, std::size_t s, std::size_t m) const {
  return std::abs(b_[m](r, s));
}

double PodModel::gamma(std::size_t r, std::size_t s, std::size_t m) const {
  const double g = std::arg(b_[m](r, s));
  return g <= -std::numbers::pi ? std::numbers::pi : g;
}

SliceProjection project_slice(const NormalizedTensor& G,
                              const Eigen::MatrixXd& phi, std::size_t m) {
  const SimulationGrid& g = G.grid();
  const auto N = static_cast<Eigen::Index>(g.N);
  Eigen::Map<const Eigen::VectorXd> sp(G.kernel().s_pure_row(m), N);
  SliceProjection p;
  p.a = phi.transpose() * sp.cwiseSqrt();
  Eigen::MatrixXcd Gm;
  G.slice(m, Gm);
  const Eigen::MatrixXd gr = Gm.real();
  const Eigen::MatrixXd br = phi.transpose() * (gr * phi);
  Eigen::MatrixXd bi = Eigen::MatrixXd::Zero(phi.cols(), phi.cols());
  if (!Gm.imag().isZero(0.0)) {
    const Eigen::MatrixXd gi = Gm.imag();
    bi = phi.transpose() * (gi * phi);
  }
  p.b.resize(phi.cols(), phi.cols());
  p.b.real() = br;
  p.b.imag() = bi;
  return p;
}

PodModel fit_pod(const NormalizedTensor& G, const PodBasis& basis,
                 std::size_t n_q, unsigned workers) {
  const SimulationGrid& g = G.grid();
  check_nq(n_q, g.N, "fit_pod");
  const auto nq = static_cast<Eigen::Index>(n_q);
  Eigen::MatrixXd phi = basis.phi.leftCols(nq);
  Eigen::MatrixXd a(nq, static_cast<Eigen::Index>(g.M));
  std::vector<Eigen::MatrixXcd> b(g.M);
  parallel_for(g.M, workers, [&](std::size_t m) {
    SliceProjection p = project_slice(G, phi, m);
    a.col(static_cast<Eigen::Index>(m)) = p.a;
    b[m] = std::move(p.b);
  });
  return PodModel(g, std::move(phi), std::move(a), std::move(b),
                  basis.singular_values);
}

PodModel fit_pod(const NormalizedTensor& G, std::size_t n_q, unsigned workers) {
  check_nq(n_q, G.grid().N, "fit_pod");
  return fit_pod(G, fit_pod_basis(G, workers), n_q, workers);
}

DiagnosticValues diagnostics_from(const Eigen::VectorXd& a,
                                  const Eigen::MatrixXcd& b, double dw) {
  DiagnosticValues d;
  d.varp = 2.0 * dw * a.squaredNorm();
  d.vari = dw * dw * b.cwiseAbs2().sum();
  d.m3 = 6.0 * dw * dw * a.dot(b.real() * a);
  return d;
}

PodDiagnostics pod_diagnostics(const PodModel& model) {
  const SimulationGrid& g = model.grid();
  PodDiagnostics d;
  d.varp.resize(g.M);
  d.vari.resize(g.M);
  d.m3.resize(g.M);
  for (std::size_t m = 0; m < g.M; ++m) {
    const DiagnosticValues v = diagnostics_from(
        model.a().col(static_cast<Eigen::Index>(m)), model.b_slice(m), g.dw);
    d.varp[m] = v.varp;
    d.vari[m] = v.vari;
    d.m3[m] = v.m3;
  }
  return d;
}

ReconstructionError reconstruction_error(const PodModel& model,
                                         const NormalizedTensor& G) {
  const SimulationGrid& g = model.grid();
  require_same_grid(g, G.grid(), "model vs tensor");
  const auto N = static_cast<Eigen::Index>(g.N);
  const Eigen::MatrixXd& phi = model.basis();
  double num_a = 0.0, den_a = 0.0, num_b = 0.0, den_b = 0.0;
  Eigen::MatrixXcd Gm;
  for (std::size_t m = 0; m < g.M; ++m) {
    Eigen::Map<const Eigen::VectorXd> sp(G.kernel().s_pure_row(m), N);
    const Eigen::VectorXd root = sp.cwiseSqrt();
    const Eigen::VectorXd rec = phi * model.a().col(static_cast<Eigen::Index>(m));
    num_a += (root - rec).squaredNorm();
    den_a += root.squaredNorm();
    G.slice(m, Gm);
    const Eigen::MatrixXcd& bm = model.b_slice(m);
    Eigen::MatrixXcd recg(N, N);
    recg.real() = phi * bm.real() * phi.transpose();
    recg.imag() = phi * bm.imag() * phi.transpose();
    num_b += (Gm - recg).squaredNorm();
    den_b += Gm.squaredNorm();
  }
  ReconstructionError e;
  e.sqrt_sp = den_a > 0.0 ? std::sqrt(num_a / den_a) : std::sqrt(num_a);
  e.tensor = den_b > 0.0 ? std::sqrt(num_b / den_b) : std::sqrt(num_b);
  return e;
}

SecondOrderPod fit_pod2(const EvolutionarySpectrum& S, std::size_t n_q) {
  const SimulationGrid& g = S.grid();
  check_nq(n_q, std::min(g.M, g.N), "fit_pod2");
  const auto M = static_cast<Eigen::Index>(g.M);
  const auto N = static_cast<Eigen::Index>(g.N);
  Eigen::Map<const Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic,
                                 Eigen::RowMajor>>
      s(S.values().data(), M, N);
  const Eigen::MatrixXd R = s.cwiseSqrt();
  Eigen::MatrixXd gram = Eigen::MatrixXd::Zero(N, N);
  gram.selfadjointView<Eigen::Lower>().rankUpdate(R.transpose());
  gram.triangularView<Eigen::StrictlyUpper>() = gram.transpose().eval();
  PodBasis basis = basis_from_gram(gram);
  SecondOrderPod pod;
  pod.grid = g;
  const auto nq = static_cast<Eigen::Index>(n_q);
  pod.basis = basis.phi.leftCols(nq);
  pod.a = pod.basis.transpose() * R.transpose();
  pod.singular_values = basis.singular_values.head(std::min(M, N));
  return pod;
}

}  // namespace evospec
