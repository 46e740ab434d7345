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

#ifndef EVOSPEC_EVOSPEC_H_
#define EVOSPEC_EVOSPEC_H_

#include "evospec/batch.h"
#include "evospec/direct.h"
#include "evospec/errors.h"
#include "evospec/fft_sim.h"
#include "evospec/formats.h"
#include "evospec/grid.h"
#include "evospec/kernel.h"
#include "evospec/models.h"
#include "evospec/parallel.h"
#include "evospec/pod.h"
#include "evospec/rng.h"
#include "evospec/spectra.h"
#include "evospec/spectrum_io.h"
#include "evospec/stats.h"
#include "evospec/text_io.h"

namespace evospec {

const char* version();

}  // namespace evospec

#endif  // EVOSPEC_EVOSPEC_H_
