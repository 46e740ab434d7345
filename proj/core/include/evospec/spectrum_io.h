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

#ifndef EVOSPEC_SPECTRUM_IO_H_
#define EVOSPEC_SPECTRUM_IO_H_

#include <string>

#include "evospec/kernel.h"
#include "evospec/spectra.h"

namespace evospec {

// Spectrum file:   "EPS,N,M,omega_u,T" then M rows of N values.
// Bispectrum file: "EBS,N,M,omega_u,T" then rows "m,i,j,re,im" for
// triangle indices; absent entries are zero. Throws FormatError naming the
// offending line, IoError when a file cannot be read.
SpectralModel load_spectrum_files(const std::string& spectrum_path,
                                  const std::string& bispectrum_path);

void write_spectrum_csv(const std::string& path, const EvolutionarySpectrum& S);
// Writes non-zero entries only.
void write_bispectrum_csv(const std::string& path,
                          const EvolutionaryBispectrum& B);
// Debug dump: "KER,N,M,omega_u,T" then rows "m,i,j,bicoh,biphase".
void write_kernel_csv(const std::string& path, const ThirdOrderKernel& kernel);

std::string grid_header(const char* tag, const SimulationGrid& grid);

}  // namespace evospec

#endif  // EVOSPEC_SPECTRUM_IO_H_
