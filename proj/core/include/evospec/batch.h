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

#ifndef EVOSPEC_BATCH_H_
#define EVOSPEC_BATCH_H_

#include <cstddef>
#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "evospec/grid.h"
#include "evospec/kernel.h"
#include "evospec/pod.h"
#include "evospec/spectra.h"

namespace evospec {

enum class Method { kDirect2, kDirect3, kPod2Fft, kPod3Fft };

std::string method_name(Method m);

// Sample paths stored sample-major: data[s * M + m].
struct Ensemble {
  SimulationGrid grid;
  std::size_t n_samples = 0;
  std::vector<double> data;

  const double* path(std::size_t s) const { return data.data() + s * grid.M; }
  double* path(std::size_t s) { return data.data() + s * grid.M; }
  double operator()(std::size_t s, std::size_t m) const {
    return data[s * grid.M + m];
  }
};

// One sample path from a per-sample seed.
class Simulator {
 public:
  virtual ~Simulator() = default;
  virtual const SimulationGrid& grid() const = 0;
  virtual Method method() const = 0;
  virtual void sample(std::uint64_t seed, double* out) const = 0;
};

// The referenced inputs must outlive the simulator.
std::unique_ptr<Simulator> make_direct2(const EvolutionarySpectrum& S);
std::unique_ptr<Simulator> make_direct3(const EvolutionarySpectrum& S,
                                        const ThirdOrderKernel& kernel);
std::unique_ptr<Simulator> make_pod2(const SecondOrderPod& pod);
std::unique_ptr<Simulator> make_pod3(const PodModel& model);

// Sample s uses seed mix_seed(base_seed, s) and is written to slot s, so the
// ensemble is identical for any worker count or execution order.
Ensemble simulate_batch(const Simulator& sim, std::size_t n_samples,
                        std::uint64_t base_seed, unsigned workers = 1);

}  // namespace evospec

#endif  // EVOSPEC_BATCH_H_
