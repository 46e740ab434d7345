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

#include "evospec/fft_sim.h"

#include <fftw3.h>

#include <cmath>
#include <map>
#include <mutex>
#include <string>
#include <utility>
#include <vector>

#include "evospec/errors.h"

namespace evospec {
namespace {

// In-place batch of `howmany` backward transforms of length n:
// y[m] = sum_k c[k] exp(+2 pi i k m / n). Plans are created once under a
// lock and executed through the thread-safe new-array interface.
fftw_plan batch_plan(int n, int howmany) {
  static std::mutex mu;
  static std::map<std::pair<int, int>, fftw_plan> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find({n, howmany});
  if (it != cache.end()) return it->second;
  fftw_complex* tmp = fftw_alloc_complex(static_cast<std::size_t>(n) * howmany);
  fftw_plan p = fftw_plan_many_dft(1, &n, howmany, tmp, nullptr, 1, n, tmp,
                                   nullptr, 1, n, FFTW_BACKWARD,
                                   FFTW_ESTIMATE | FFTW_UNALIGNED);
  fftw_free(tmp);
  if (!p) throw Error("fftw planning failed");
  cache.emplace(std::make_pair(n, howmany), p);
  return p;
}

void inverse_dft(std::vector<Complex>& data, std::size_t n, std::size_t howmany) {
  fftw_plan p = batch_plan(static_cast<int>(n), static_cast<int>(howmany));
  auto* d = reinterpret_cast<fftw_complex*>(data.data());
  fftw_execute_dft(p, d, d);
}

void require_fft(const SimulationGrid& g) {
  if (!g.fft_compatible) {
    throw PreconditionError(
        "grid is not FFT compatible (need dw*dt = 2*pi/M and M >= 2N); "
        "use the direct method");
  }
}

void require_phases(const PhaseMatrix& p, std::size_t rows, std::size_t cols) {
  if (p.rows() != rows || p.cols() != cols) {
    throw InvalidParameter("phase matrix is " + std::to_string(p.rows()) + " x " +
                           std::to_string(p.cols()) + ", expected " +
                           std::to_string(rows) + " x " + std::to_string(cols));
  }
}

// w[r][k] = Phi_r(w_k) exp(-i phi_rk), split into real and imaginary parts.
void weights(const Eigen::MatrixXd& basis, const PhaseMatrix& phases,
             std::vector<double>& wr, std::vector<double>& wi) {
  const std::size_t N = static_cast<std::size_t>(basis.rows());
  const std::size_t nq = static_cast<std::size_t>(basis.cols());
  wr.resize(nq * N);
  wi.resize(nq * N);
  for (std::size_t r = 0; r < nq; ++r) {
    const double* ph = phases.row(r);
    for (std::size_t k = 0; k < N; ++k) {
      const double f = basis(static_cast<Eigen::Index>(k), static_cast<Eigen::Index>(r));
      wr[r * N + k] = f * std::cos(ph[k]);
      wi[r * N + k] = -f * std::sin(ph[k]);
    }
  }
}

}  // namespace

void simulate2_pod_fft(const SecondOrderPod& pod, const PhaseMatrix& phases,
                       double* out) {
  const SimulationGrid& g = pod.grid;
  require_fft(g);
  const std::size_t nq = pod.n_q();
  const std::size_t N = g.N, M = g.M;
  require_phases(phases, nq, N);
  std::vector<double> wr, wi;
  weights(pod.basis, phases, wr, wi);
  const double root = std::sqrt(g.dw);
  std::vector<Complex> buf(nq * M);
  for (std::size_t q = 0; q < nq; ++q) {
    for (std::size_t k = 0; k < N; ++k) {
      buf[q * M + k] = Complex(root * wr[q * N + k], root * wi[q * N + k]);
    }
  }
  inverse_dft(buf, M, nq);
  for (std::size_t m = 0; m < M; ++m) {
    double x = 0.0;
    for (std::size_t q = 0; q < nq; ++q) {
      x += 2.0 * pod.a(static_cast<Eigen::Index>(q), static_cast<Eigen::Index>(m)) *
           buf[q * M + m].real();
    }
    out[m] = x;
  }
}

SamplePath simulate2_pod_fft(const SecondOrderPod& pod, const PhaseMatrix& phases) {
  SamplePath p{pod.grid, std::vector<double>(pod.grid.M)};
  simulate2_pod_fft(pod, phases, p.x.data());
  return p;
}

SamplePath simulate2_pod_fft(const EvolutionarySpectrum& S, std::size_t n_q,
                             const PhaseMatrix& phases) {
  require_fft(S.grid());
  return simulate2_pod_fft(fit_pod2(S, n_q), phases);
}

void simulate3_pod_fft(const PodModel& model, const PhaseMatrix& pure,
                       const PhaseMatrix& interactive, double* out) {
  const SimulationGrid& g = model.grid();
  require_fft(g);
  const std::size_t nq = model.n_q();
  const std::size_t N = g.N, M = g.M;
  require_phases(pure, nq, N);
  require_phases(interactive, nq, N);

  std::vector<double> pr, pi, ir, ii;
  weights(model.basis(), pure, pr, pi);
  const bool shared = &pure == &interactive;
  if (!shared) weights(model.basis(), interactive, ir, ii);
  const std::vector<double>& xr = shared ? pr : ir;
  const std::vector<double>& xi = shared ? pi : ii;

  const std::size_t H = nq + nq * nq;
  std::vector<Complex> buf(H * M);
  const double root = std::sqrt(g.dw);
  for (std::size_t r = 0; r < nq; ++r) {
    for (std::size_t k = 0; k < N; ++k) {
      buf[r * M + k] = Complex(root * pr[r * N + k], root * pi[r * N + k]);
    }
  }
  for (std::size_t r = 0; r < nq; ++r) {
    const double* ar = xr.data() + r * N;
    const double* ai = xi.data() + r * N;
    for (std::size_t s = 0; s < nq; ++s) {
      const double* br = xr.data() + s * N;
      const double* bi = xi.data() + s * N;
      Complex* E = buf.data() + (nq + r * nq + s) * M;
      for (std::size_t k = 2; k < N; ++k) {
        double sr = 0.0, si = 0.0;
        for (std::size_t j = 1; j <= k / 2; ++j) {
          const std::size_t i = k - j;
          sr += ar[i] * br[j] - ai[i] * bi[j];
          si += ar[i] * bi[j] + ai[i] * br[j];
        }
        E[k] = Complex(g.dw * sr, g.dw * si);
      }
    }
  }
  inverse_dft(buf, M, H);
  for (std::size_t m = 0; m < M; ++m) {
    const Eigen::MatrixXcd& b = model.b_slice(m);
    double x = 0.0;
    for (std::size_t r = 0; r < nq; ++r) {
      double xr_m = model.a(r, m) * buf[r * M + m].real();
      for (std::size_t s = 0; s < nq; ++s) {
        const Complex e = buf[(nq + r * nq + s) * M + m];
        const Complex c = b(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(s));
        xr_m += c.real() * e.real() - c.imag() * e.imag();
      }
      x += 2.0 * xr_m;
    }
    out[m] = x;
  }
}

void simulate3_pod_fft(const PodModel& model, const PhaseMatrix& phases,
                       double* out) {
  simulate3_pod_fft(model, phases, phases, out);
}

SamplePath simulate3_pod_fft(const PodModel& model, const PhaseMatrix& phases) {
  SamplePath p{model.grid(), std::vector<double>(model.grid().M)};
  simulate3_pod_fft(model, phases, p.x.data());
  return p;
}

SamplePath simulate3_pod_fft(const EvolutionarySpectrum& S,
                             const ThirdOrderKernel& kernel,
                             const PodModel& model, const PhaseMatrix& phases) {
  require_same_grid(S.grid(), kernel.grid(), "spectrum vs kernel");
  require_same_grid(S.grid(), model.grid(), "spectrum vs pod model");
  return simulate3_pod_fft(model, phases);
}

}  // namespace evospec
