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

#ifndef EVOSPEC_FORMATS_H_
#define EVOSPEC_FORMATS_H_

#include <cstdint>
#include <string>
#include <vector>

#include "evospec/batch.h"
#include "evospec/pod.h"
#include "evospec/stats.h"

namespace evospec {

// "EVOSRAW1" as a little-endian 64-bit word.
inline constexpr std::uint64_t kRawMagic = 0x31574152534F5645ULL;

// Header "t,s0,s1,..."; one row per time point.
void write_samples_csv(const std::string& path, const Ensemble& e);
// 24-byte header (magic, M, n_samples) as little-endian uint64, then the
// M x n_samples matrix of little-endian doubles, row-major by time.
void write_samples_raw(const std::string& path, const Ensemble& e);
// Returns the matrix sample-major; throws FormatError on a bad header.
Ensemble read_samples_raw(const std::string& path, const SimulationGrid& grid);

void write_stats_csv(const std::string& path, const MomentCurves& emp,
                     const MomentCurves& th);
void write_convergence_csv(const std::string& path,
                           const std::vector<ConvergenceRow>& rows);

// basis.csv (N rows x n_q), a.csv (M rows x n_q), b.csv rows "r,s,m,re,im".
// Indices are 0-based; no header lines.
void write_pod_bundle(const std::string& dir, const PodModel& model);
void write_pod2_bundle(const std::string& dir, const SecondOrderPod& pod);

}  // namespace evospec

#endif  // EVOSPEC_FORMATS_H_
