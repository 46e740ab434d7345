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

#ifndef EVOSPEC_TEXT_IO_H_
#define EVOSPEC_TEXT_IO_H_

#include <cstdint>
#include <cstdio>
#include <string>
#include <string_view>

namespace evospec {

// Shortest decimal form that parses back to the same double.
std::string format_double(double v);
// Appends format_double(v) to out without allocating a temporary.
void append_double(std::string& out, double v);
void append_uint(std::string& out, std::uint64_t v);

bool parse_double(std::string_view s, double& out);
bool parse_uint(std::string_view s, std::uint64_t& out);

// Writes to a sibling temporary file and renames it over `path` on commit.
// An uncommitted writer removes its temporary, so failures never leave a
// partial file behind. All failures throw IoError.
class AtomicFile {
 public:
  explicit AtomicFile(std::string path);
  ~AtomicFile();
  AtomicFile(const AtomicFile&) = delete;
  AtomicFile& operator=(const AtomicFile&) = delete;

  void write(std::string_view data);
  void write(const void* data, std::size_t bytes);
  void commit();

  const std::string& path() const { return path_; }

 private:
  std::string path_;
  std::string tmp_;
  std::FILE* f_ = nullptr;
};

// Reads a whole file; throws IoError.
std::string read_file(const std::string& path);

}  // namespace evospec

#endif  // EVOSPEC_TEXT_IO_H_
