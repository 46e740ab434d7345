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

#ifndef EVOSPEC_FFT_SIM_H_
#define EVOSPEC_FFT_SIM_H_

#include <cstddef>

#include "evospec/direct.h"
#include "evospec/kernel.h"
#include "evospec/pod.h"
#include "evospec/rng.h"
#include "evospec/spectra.h"

namespace evospec {

// X(t) = sum_q 2 a_q(t) sum_k Phi_q(w_k) sqrt(dw) cos(w_k t - phi_qk), one
// length-M inverse DFT per component. Requires grid.fft_compatible and a
// phase matrix of n_q rows by N columns.
SamplePath simulate2_pod_fft(const SecondOrderPod& pod, const PhaseMatrix& phases);
void simulate2_pod_fft(const SecondOrderPod& pod, const PhaseMatrix& phases,
                       double* out);
// Decomposes sqrt(S) first; use the SecondOrderPod overload for ensembles.
SamplePath simulate2_pod_fft(const EvolutionarySpectrum& S, std::size_t n_q,
                             const PhaseMatrix& phases);

// X(t) = 2 sum_r [ a_r(t) p_r(t) + sum_s q_rs(t) ] with
//   p_r  = Re IDFT( Phi_r(w_k) sqrt(dw) e^{-i phi_rk} ),
//   E_rs[k] = dw sum_{i+j=k, i>=j>=1} Phi_r(w_i) Phi_s(w_j) e^{-i(phi_ri + phi_sj)},
//   q_rs = |b_rs(t)| Re( e^{i gamma_rs(t)} IDFT(E_rs) ).
SamplePath simulate3_pod_fft(const PodModel& model, const PhaseMatrix& phases);
void simulate3_pod_fft(const PodModel& model, const PhaseMatrix& phases,
                       double* out);
// Interactive terms drawn from `interactive` instead of `pure`. With
// independent matrices the third moment decouples.
void simulate3_pod_fft(const PodModel& model, const PhaseMatrix& pure,
                       const PhaseMatrix& interactive, double* out);
SamplePath simulate3_pod_fft(const EvolutionarySpectrum& S,
                             const ThirdOrderKernel& kernel,
                             const PodModel& model, const PhaseMatrix& phases);

}  // namespace evospec

#endif  // EVOSPEC_FFT_SIM_H_
