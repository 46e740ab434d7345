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

#include "evospec/errors.h"

namespace evospec {

FormatError::FormatError(std::size_t line, const std::string& what)
    : Error(line > 0 ? "line " + std::to_string(line) + ": " + what : what),
      line_(line) {}

InfeasibleSkewness::InfeasibleSkewness(std::size_t m, std::size_t k,
                                       double overshoot)
    : Error("infeasible skewness at time index " + std::to_string(m) +
            ", frequency index " + std::to_string(k) +
            ": sum of squared bicoherences exceeds 1 by " +
            std::to_string(overshoot)),
      m_(m),
      k_(k),
      overshoot_(overshoot) {}

ConfigError::ConfigError(const std::string& field, const std::string& what)
    : Error(field + ": " + what), field_(field) {}

}  // namespace evospec
