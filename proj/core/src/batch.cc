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

#include "evospec/batch.h"

#include "evospec/direct.h"
#include "evospec/errors.h"
#include "evospec/fft_sim.h"
#include "evospec/parallel.h"
#include "evospec/rng.h"

namespace evospec {
namespace {

class Direct2 : public Simulator {
 public:
  explicit Direct2(const EvolutionarySpectrum& S) : S_(S) {}
  const SimulationGrid& grid() const override { return S_.grid(); }
  Method method() const override { return Method::kDirect2; }
  void sample(std::uint64_t seed, double* out) const override {
    simulate2_direct(S_, PhaseDraw(seed, S_.grid().N), out);
  }

 private:
  const EvolutionarySpectrum& S_;
};

class Direct3 : public Simulator {
 public:
  Direct3(const EvolutionarySpectrum& S, const ThirdOrderKernel& K)
      : S_(S), K_(K) {
    require_same_grid(S.grid(), K.grid(), "spectrum vs kernel");
  }
  const SimulationGrid& grid() const override { return S_.grid(); }
  Method method() const override { return Method::kDirect3; }
  void sample(std::uint64_t seed, double* out) const override {
    simulate3_direct(S_, K_, PhaseDraw(seed, S_.grid().N), out);
  }

 private:
  const EvolutionarySpectrum& S_;
  const ThirdOrderKernel& K_;
};

class Pod2 : public Simulator {
 public:
  explicit Pod2(const SecondOrderPod& pod) : pod_(pod) {}
  const SimulationGrid& grid() const override { return pod_.grid; }
  Method method() const override { return Method::kPod2Fft; }
  void sample(std::uint64_t seed, double* out) const override {
    simulate2_pod_fft(pod_, PhaseMatrix(seed, pod_.n_q(), pod_.grid.N), out);
  }

 private:
  const SecondOrderPod& pod_;
};

class Pod3 : public Simulator {
 public:
  explicit Pod3(const PodModel& model) : model_(model) {}
  const SimulationGrid& grid() const override { return model_.grid(); }
  Method method() const override { return Method::kPod3Fft; }
  void sample(std::uint64_t seed, double* out) const override {
    simulate3_pod_fft(model_, PhaseMatrix(seed, model_.n_q(), model_.grid().N),
                      out);
  }

 private:
  const PodModel& model_;
};

}  // namespace

std::string method_name(Method m) {
  switch (m) {
    case Method::kDirect2: return "direct2";
    case Method::kDirect3: return "direct3";
    case Method::kPod2Fft: return "pod2";
    case Method::kPod3Fft: return "pod3";
  }
  return "unknown";
}

std::unique_ptr<Simulator> make_direct2(const EvolutionarySpectrum& S) {
  return std::make_unique<Direct2>(S);
}
std::unique_ptr<Simulator> make_direct3(const EvolutionarySpectrum& S,
                                        const ThirdOrderKernel& kernel) {
  return std::make_unique<Direct3>(S, kernel);
}
std::unique_ptr<Simulator> make_pod2(const SecondOrderPod& pod) {
  return std::make_unique<Pod2>(pod);
}
std::unique_ptr<Simulator> make_pod3(const PodModel& model) {
  return std::make_unique<Pod3>(model);
}

Ensemble simulate_batch(const Simulator& sim, std::size_t n_samples,
                        std::uint64_t base_seed, unsigned workers) {
  if (n_samples < 1) throw InvalidParameter("n_samples must be >= 1");
  Ensemble e;
  e.grid = sim.grid();
  e.n_samples = n_samples;
  e.data.assign(n_samples * e.grid.M, 0.0);
  parallel_for(n_samples, workers, [&](std::size_t s) {
    sim.sample(mix_seed(base_seed, s), e.path(s));
  });
  return e;
}

}  // namespace evospec
