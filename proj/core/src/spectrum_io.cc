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

#include "evospec/spectrum_io.h"

#include <cmath>
#include <fstream>
#include <string_view>
#include <vector>

#include "evospec/errors.h"
#include "evospec/text_io.h"

namespace evospec {
namespace {

std::vector<std::string_view> split(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  for (std::size_t p = 0; p <= line.size(); ++p) {
    if (p == line.size() || line[p] == ',') {
      out.push_back(line.substr(start, p - start));
      start = p + 1;
    }
  }
  return out;
}

bool blank(std::string_view s) {
  for (char c : s) {
    if (c != ' ' && c != '\t' && c != '\r') return false;
  }
  return true;
}

SimulationGrid parse_header(std::string_view line, std::string_view tag) {
  const auto f = split(line);
  if (f.size() != 5 || f[0] != tag) {
    throw FormatError(1, "expected header " + std::string(tag) +
                             ",N,M,omega_u,T");
  }
  std::uint64_t N = 0, M = 0;
  double wu = 0.0, T = 0.0;
  if (!parse_uint(f[1], N) || !parse_uint(f[2], M) || !parse_double(f[3], wu) ||
      !parse_double(f[4], T)) {
    throw FormatError(1, "malformed header field");
  }
  try {
    return make_grid(static_cast<std::int64_t>(N), static_cast<std::int64_t>(M),
                     wu, T);
  } catch (const InvalidParameter& e) {
    throw FormatError(1, e.what());
  }
}

std::ifstream open(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open " + path);
  return in;
}

EvolutionarySpectrum read_spectrum(const std::string& path) {
  std::ifstream in = open(path);
  std::string line;
  if (!std::getline(in, line)) throw FormatError(1, "missing header");
  const SimulationGrid g = parse_header(line, "EPS");
  std::vector<double> values(g.M * g.N);
  std::size_t lineno = 1;
  std::size_t rows = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (blank(line)) continue;
    if (rows == g.M) throw FormatError(lineno, "more than M spectrum rows");
    const auto f = split(line);
    if (f.size() != g.N) {
      throw FormatError(lineno, "expected " + std::to_string(g.N) +
                                    " values, found " + std::to_string(f.size()));
    }
    for (std::size_t k = 0; k < g.N; ++k) {
      double v = 0.0;
      if (!parse_double(f[k], v) || !std::isfinite(v)) {
        throw FormatError(lineno, "malformed value in column " + std::to_string(k));
      }
      if (v < 0.0) {
        throw FormatError(lineno, "negative spectrum value in column " +
                                      std::to_string(k));
      }
      if (k == 0 && v != 0.0) {
        throw FormatError(lineno, "spectrum must be zero at k = 0");
      }
      values[rows * g.N + k] = v;
    }
    ++rows;
  }
  if (in.bad()) throw IoError("read failed: " + path);
  if (rows != g.M) {
    throw FormatError(lineno, "expected " + std::to_string(g.M) +
                                  " spectrum rows, found " + std::to_string(rows));
  }
  return EvolutionarySpectrum(g, std::move(values));
}

EvolutionaryBispectrum read_bispectrum(const std::string& path,
                                       const SimulationGrid& expected) {
  std::ifstream in = open(path);
  std::string line;
  if (!std::getline(in, line)) throw FormatError(1, "missing header");
  const SimulationGrid g = parse_header(line, "EBS");
  if (!same_grid(g, expected)) {
    throw FormatError(1, "bispectrum grid differs from spectrum grid");
  }
  const std::size_t tri = tri_size(g.N);
  std::vector<Complex> entries(g.M * tri);
  std::vector<bool> seen(g.M * tri, false);
  std::size_t lineno = 1;
  while (std::getline(in, line)) {
    ++lineno;
    if (blank(line)) continue;
    const auto f = split(line);
    if (f.size() != 5) throw FormatError(lineno, "expected m,i,j,re,im");
    std::uint64_t m = 0, i = 0, j = 0;
    double re = 0.0, im = 0.0;
    if (!parse_uint(f[0], m) || !parse_uint(f[1], i) || !parse_uint(f[2], j) ||
        !parse_double(f[3], re) || !parse_double(f[4], im) ||
        !std::isfinite(re) || !std::isfinite(im)) {
      throw FormatError(lineno, "malformed bispectrum row");
    }
    if (m >= g.M) throw FormatError(lineno, "time index out of range");
    if (i >= g.N || j > i || i + j > g.N - 1) {
      throw FormatError(lineno, "index out of triangle (need j <= i, i + j <= N - 1)");
    }
    if (j == 0 && (re != 0.0 || im != 0.0)) {
      throw FormatError(lineno, "bispectrum must be zero at j = 0");
    }
    const std::size_t p = m * tri + tri_index(i, j);
    if (seen[p]) throw FormatError(lineno, "duplicate entry");
    seen[p] = true;
    entries[p] = Complex(re, im);
  }
  if (in.bad()) throw IoError("read failed: " + path);
  return EvolutionaryBispectrum::Materialized(g, std::move(entries));
}

}  // namespace

std::string grid_header(const char* tag, const SimulationGrid& g) {
  std::string h = tag;
  h += ',';
  append_uint(h, g.N);
  h += ',';
  append_uint(h, g.M);
  h += ',';
  append_double(h, g.omega_u);
  h += ',';
  append_double(h, g.T);
  h += '\n';
  return h;
}

SpectralModel load_spectrum_files(const std::string& spectrum_path,
                                  const std::string& bispectrum_path) {
  EvolutionarySpectrum S = read_spectrum(spectrum_path);
  EvolutionaryBispectrum B = read_bispectrum(bispectrum_path, S.grid());
  return {std::move(S), std::move(B)};
}

void write_spectrum_csv(const std::string& path, const EvolutionarySpectrum& S) {
  const SimulationGrid& g = S.grid();
  AtomicFile out(path);
  out.write(grid_header("EPS", g));
  std::string line;
  for (std::size_t m = 0; m < g.M; ++m) {
    line.clear();
    const double* row = S.row(m);
    for (std::size_t k = 0; k < g.N; ++k) {
      if (k) line += ',';
      append_double(line, row[k]);
    }
    line += '\n';
    out.write(line);
  }
  out.commit();
}

void write_bispectrum_csv(const std::string& path,
                          const EvolutionaryBispectrum& B) {
  const SimulationGrid& g = B.grid();
  const std::size_t tri = tri_size(g.N);
  AtomicFile out(path);
  out.write(grid_header("EBS", g));
  std::vector<Complex> slice(tri);
  std::string buf;
  for (std::size_t m = 0; m < g.M; ++m) {
    B.slice(m, slice.data());
    buf.clear();
    for (std::size_t k = 2; k < g.N; ++k) {
      for (std::size_t j = 1; j <= k / 2; ++j) {
        const Complex v = slice[tri_offset(k) + j];
        if (v == Complex()) continue;
        append_uint(buf, m);
        buf += ',';
        append_uint(buf, k - j);
        buf += ',';
        append_uint(buf, j);
        buf += ',';
        append_double(buf, v.real());
        buf += ',';
        append_double(buf, v.imag());
        buf += '\n';
      }
    }
    out.write(buf);
  }
  out.commit();
}

void write_kernel_csv(const std::string& path, const ThirdOrderKernel& kernel) {
  const SimulationGrid& g = kernel.grid();
  AtomicFile out(path);
  out.write(grid_header("KER", g));
  std::string buf;
  for (std::size_t m = 0; m < g.M; ++m) {
    buf.clear();
    for (std::size_t k = 2; k < g.N; ++k) {
      for (std::size_t j = 1; j <= k / 2; ++j) {
        const double b = kernel.bicoh(m, k - j, j);
        if (b == 0.0) continue;
        append_uint(buf, m);
        buf += ',';
        append_uint(buf, k - j);
        buf += ',';
        append_uint(buf, j);
        buf += ',';
        append_double(buf, b);
        buf += ',';
        append_double(buf, kernel.biphase(m, k - j, j));
        buf += '\n';
      }
    }
    out.write(buf);
  }
  out.commit();
}

}  // namespace evospec
