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

#ifndef EVOSPEC_ERRORS_H_
#define EVOSPEC_ERRORS_H_

#include <cstddef>
#include <stdexcept>
#include <string>

namespace evospec {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InvalidParameter : public Error {
 public:
  using Error::Error;
};

class ModelDomainError : public Error {
 public:
  using Error::Error;
};

class GridMismatch : public Error {
 public:
  using Error::Error;
};

class PreconditionError : public Error {
 public:
  using Error::Error;
};

class IoError : public Error {
 public:
  using Error::Error;
};

// Malformed spectrum or bispectrum input. line() is 1-based; 0 means the
// problem is not tied to a single line (for example a missing row).
class FormatError : public Error {
 public:
  FormatError(std::size_t line, const std::string& what);
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

// The prescribed bispectrum demands more power at (m, k) than the spectrum
// holds: 1 - sum b_p^2 = -overshoot.
class InfeasibleSkewness : public Error {
 public:
  InfeasibleSkewness(std::size_t m, std::size_t k, double overshoot);
  std::size_t m() const { return m_; }
  std::size_t k() const { return k_; }
  double overshoot() const { return overshoot_; }

 private:
  std::size_t m_;
  std::size_t k_;
  double overshoot_;
};

class ConfigError : public Error {
 public:
  ConfigError(const std::string& field, const std::string& what);
  const std::string& field() const { return field_; }

 private:
  std::string field_;
};

}  // namespace evospec

#endif  // EVOSPEC_ERRORS_H_
