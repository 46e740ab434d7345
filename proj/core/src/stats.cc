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

#include "evospec/stats.h"

#include <algorithm>
#include <cmath>
#include <string>

#include "evospec/errors.h"

namespace evospec {
namespace {

double skew_of(double m3, double var, double floor) {
  return var > floor ? m3 / std::pow(var, 1.5) : 0.0;
}

void fill_skew(MomentCurves& c, double var_floor) {
  double floor = var_floor;
  if (floor < 0.0) {
    const double vmax = c.var.empty() ? 0.0 : *std::max_element(c.var.begin(), c.var.end());
    floor = kVarFloorFactor * vmax;
  }
  c.skew.resize(c.var.size());
  for (std::size_t m = 0; m < c.var.size(); ++m) {
    c.skew[m] = skew_of(c.m3[m], c.var[m], floor);
  }
}

double third_moment_slice(const EvolutionaryBispectrum& B, std::size_t m,
                          std::vector<Complex>& tri) {
  const SimulationGrid& g = B.grid();
  B.slice(m, tri.data());
  CompensatedSum off, diag;
  for (std::size_t k = 2; k < g.N; ++k) {
    const std::size_t o = tri_offset(k);
    for (std::size_t j = 1; j <= k / 2; ++j) {
      const double re = tri[o + j].real();
      if (2 * j == k) {
        diag.add(re);
      } else {
        off.add(re);
      }
    }
  }
  return g.dw * g.dw * (12.0 * off.value() + 6.0 * diag.value());
}

}  // namespace

MomentCurves empirical_moments(const Ensemble& e, double var_floor) {
  if (e.n_samples < 1) throw InvalidParameter("empty ensemble");
  const std::size_t M = e.grid.M;
  const double n = static_cast<double>(e.n_samples);
  MomentCurves c;
  c.flavor = Flavor::kEmpirical;
  c.n_samples = e.n_samples;
  c.t.resize(M);
  c.mean.resize(M);
  c.var.resize(M);
  c.m3.resize(M);
  std::vector<CompensatedSum> s1(M), s2(M), s3(M);
  for (std::size_t s = 0; s < e.n_samples; ++s) {
    const double* x = e.path(s);
    for (std::size_t m = 0; m < M; ++m) s1[m].add(x[m]);
  }
  for (std::size_t m = 0; m < M; ++m) {
    c.t[m] = e.grid.time(m);
    c.mean[m] = s1[m].value() / n;
  }
  for (std::size_t s = 0; s < e.n_samples; ++s) {
    const double* x = e.path(s);
    for (std::size_t m = 0; m < M; ++m) {
      const double d = x[m] - c.mean[m];
      s2[m].add(d * d);
      s3[m].add(d * d * d);
    }
  }
  for (std::size_t m = 0; m < M; ++m) {
    c.var[m] = s2[m].value() / n;
    c.m3[m] = s3[m].value() / n;
  }
  fill_skew(c, var_floor);
  return c;
}

MomentCurves theoretical_moments(const EvolutionarySpectrum& S,
                                 const EvolutionaryBispectrum& B) {
  require_same_grid(S.grid(), B.grid(), "spectrum vs bispectrum");
  const SimulationGrid& g = S.grid();
  MomentCurves c;
  c.flavor = Flavor::kTheoretical;
  c.t.resize(g.M);
  c.mean.assign(g.M, 0.0);
  c.var.resize(g.M);
  c.m3.assign(g.M, 0.0);
  std::vector<Complex> tri(B.is_zero() ? 0 : tri_size(g.N));
  for (std::size_t m = 0; m < g.M; ++m) {
    c.t[m] = g.time(m);
    CompensatedSum v;
    const double* s = S.row(m);
    for (std::size_t k = 0; k < g.N; ++k) v.add(s[k]);
    c.var[m] = 2.0 * g.dw * v.value();
    if (!B.is_zero()) c.m3[m] = third_moment_slice(B, m, tri);
  }
  fill_skew(c, -1.0);
  return c;
}

std::vector<double> theoretical_autocorrelation(
    const EvolutionarySpectrum& S, const EvolutionaryBispectrum& B,
    const ThirdOrderKernel& kernel, std::size_t t_index,
    const std::vector<std::ptrdiff_t>& tau_indices) {
  require_same_grid(S.grid(), B.grid(), "spectrum vs bispectrum");
  require_same_grid(S.grid(), kernel.grid(), "spectrum vs kernel");
  const SimulationGrid& g = S.grid();
  if (t_index >= g.M) throw InvalidParameter("time index off grid");
  std::vector<double> out;
  out.reserve(tau_indices.size());
  const double* s1 = S.row(t_index);
  const double* p1 = kernel.s_pure_row(t_index);
  const double* b1 = kernel.bicoh_slice(t_index);
  const double* f1 = kernel.biphase_slice(t_index);
  for (std::ptrdiff_t lag : tau_indices) {
    const std::ptrdiff_t m2 = static_cast<std::ptrdiff_t>(t_index) + lag;
    if (m2 < 0 || m2 >= static_cast<std::ptrdiff_t>(g.M)) {
      throw InvalidParameter("lag " + std::to_string(lag) + " falls off the grid");
    }
    const auto u = static_cast<std::size_t>(m2);
    const double* s2 = S.row(u);
    const double* p2 = kernel.s_pure_row(u);
    const double* b2 = kernel.bicoh_slice(u);
    const double* f2 = kernel.biphase_slice(u);
    const double tau = static_cast<double>(lag) * g.dt;
    CompensatedSum r;
    for (std::size_t k = 0; k < g.N; ++k) {
      const double wt = g.freq(k) * tau;
      r.add(std::sqrt(p1[k] * p2[k]) * g.dw * std::cos(wt));
      const double ss = std::sqrt(s1[k] * s2[k]) * g.dw;
      const std::size_t o = tri_offset(k);
      for (std::size_t j = 1; j <= k / 2; ++j) {
        const double bb = b1[o + j] * b2[o + j];
        if (bb == 0.0) continue;
        r.add(ss * bb * std::cos(wt + f2[o + j] - f1[o + j]));
      }
    }
    out.push_back(2.0 * r.value());
  }
  return out;
}

std::vector<ConvergenceRow> convergence_study(
    const NormalizedTensor& G, const PodBasis& basis,
    const std::vector<std::size_t>& nq_list,
    const std::vector<std::size_t>& probe_indices) {
  const SimulationGrid& g = G.grid();
  std::size_t nq_max = 0;
  for (std::size_t nq : nq_list) {
    if (nq < 1 || nq > g.N) {
      throw InvalidParameter("convergence_study: n_q must be in [1, N], got " +
                             std::to_string(nq));
    }
    nq_max = std::max(nq_max, nq);
  }
  for (std::size_t m : probe_indices) {
    if (m >= g.M) throw InvalidParameter("probe index off grid");
  }
  const Eigen::MatrixXd phi = basis.phi.leftCols(static_cast<Eigen::Index>(nq_max));
  const ThirdOrderKernel& K = G.kernel();
  std::vector<SliceProjection> proj;
  std::vector<double> varp_ref, vari_ref, m3_ref;
  std::vector<Complex> tri(tri_size(g.N));
  Eigen::MatrixXcd Gm;
  for (std::size_t m : probe_indices) {
    proj.push_back(project_slice(G, phi, m));
    CompensatedSum sp;
    for (std::size_t k = 0; k < g.N; ++k) sp.add(K.s_pure(m, k));
    varp_ref.push_back(2.0 * g.dw * sp.value());
    G.slice(m, Gm);
    vari_ref.push_back(g.dw * g.dw * Gm.squaredNorm());
    m3_ref.push_back(third_moment_slice(G.bispectrum(), m, tri));
  }
  std::vector<ConvergenceRow> rows;
  for (std::size_t nq : nq_list) {
    const auto n = static_cast<Eigen::Index>(nq);
    for (std::size_t p = 0; p < probe_indices.size(); ++p) {
      const DiagnosticValues d =
          diagnostics_from(proj[p].a.head(n), proj[p].b.topLeftCorner(n, n), g.dw);
      ConvergenceRow r;
      r.nq = nq;
      r.t = g.time(probe_indices[p]);
      r.varp_pod = d.varp;
      r.vari_pod = d.vari;
      r.var_pod = d.varp + d.vari;
      r.m3_pod = d.m3;
      r.skew_pod = r.var_pod > 0.0 ? r.m3_pod / std::pow(r.var_pod, 1.5) : 0.0;
      r.varp_ref = varp_ref[p];
      r.vari_ref = vari_ref[p];
      r.var_ref = varp_ref[p] + vari_ref[p];
      r.m3_ref = m3_ref[p];
      r.skew_ref = r.var_ref > 0.0 ? r.m3_ref / std::pow(r.var_ref, 1.5) : 0.0;
      rows.push_back(r);
    }
  }
  return rows;
}

std::vector<ConvergenceRow> convergence_study(
    const EvolutionarySpectrum& S, const EvolutionaryBispectrum& B,
    const ThirdOrderKernel& kernel, const std::vector<std::size_t>& nq_list,
    const std::vector<std::size_t>& probe_indices, unsigned workers) {
  require_same_grid(S.grid(), kernel.grid(), "spectrum vs kernel");
  NormalizedTensor G(B, kernel);
  return convergence_study(G, fit_pod_basis(G, workers), nq_list, probe_indices);
}

}  // namespace evospec
