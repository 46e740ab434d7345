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

#include "evospec/formats.h"

#include <bit>
#include <cstring>
#include <fstream>

#include "evospec/errors.h"
#include "evospec/text_io.h"

namespace evospec {
namespace {

static_assert(std::endian::native == std::endian::little,
              "raw sample format assumes a little-endian host");

void append_row(std::string& line, const double* v, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) {
    if (i) line += ',';
    append_double(line, v[i]);
  }
  line += '\n';
}

void write_matrix_csv(const std::string& path, const Eigen::MatrixXd& m) {
  AtomicFile out(path);
  std::string line;
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    line.clear();
    for (Eigen::Index c = 0; c < m.cols(); ++c) {
      if (c) line += ',';
      append_double(line, m(r, c));
    }
    line += '\n';
    out.write(line);
  }
  out.commit();
}

}  // namespace

void write_samples_csv(const std::string& path, const Ensemble& e) {
  AtomicFile out(path);
  std::string line = "t";
  for (std::size_t s = 0; s < e.n_samples; ++s) {
    line += ",s";
    append_uint(line, s);
  }
  line += '\n';
  out.write(line);
  for (std::size_t m = 0; m < e.grid.M; ++m) {
    line.clear();
    append_double(line, e.grid.time(m));
    for (std::size_t s = 0; s < e.n_samples; ++s) {
      line += ',';
      append_double(line, e(s, m));
    }
    line += '\n';
    out.write(line);
  }
  out.commit();
}

void write_samples_raw(const std::string& path, const Ensemble& e) {
  AtomicFile out(path);
  const std::uint64_t header[3] = {kRawMagic, e.grid.M, e.n_samples};
  out.write(header, sizeof(header));
  std::vector<double> row(e.n_samples);
  for (std::size_t m = 0; m < e.grid.M; ++m) {
    for (std::size_t s = 0; s < e.n_samples; ++s) row[s] = e(s, m);
    out.write(row.data(), row.size() * sizeof(double));
  }
  out.commit();
}

Ensemble read_samples_raw(const std::string& path, const SimulationGrid& grid) {
  const std::string bytes = read_file(path);
  if (bytes.size() < 24) throw FormatError(0, "raw sample file too short");
  std::uint64_t header[3];
  std::memcpy(header, bytes.data(), sizeof(header));
  if (header[0] != kRawMagic) throw FormatError(0, "bad raw sample magic");
  if (header[1] != grid.M) throw FormatError(0, "raw sample M differs from grid");
  const std::uint64_t n = header[2];
  if (bytes.size() != 24 + n * grid.M * sizeof(double)) {
    throw FormatError(0, "raw sample payload size mismatch");
  }
  Ensemble e;
  e.grid = grid;
  e.n_samples = n;
  e.data.resize(n * grid.M);
  const char* p = bytes.data() + 24;
  for (std::size_t m = 0; m < grid.M; ++m) {
    for (std::size_t s = 0; s < n; ++s) {
      std::memcpy(&e.data[s * grid.M + m], p, sizeof(double));
      p += sizeof(double);
    }
  }
  return e;
}

void write_stats_csv(const std::string& path, const MomentCurves& emp,
                     const MomentCurves& th) {
  if (emp.t.size() != th.t.size()) throw InvalidParameter("stats length mismatch");
  AtomicFile out(path);
  out.write("t,mean_emp,var_emp,var_th,m3_emp,m3_th,skew_emp,skew_th\n");
  std::string line;
  for (std::size_t m = 0; m < emp.t.size(); ++m) {
    const double v[8] = {emp.t[m],  emp.mean[m], emp.var[m], th.var[m],
                         emp.m3[m], th.m3[m],    emp.skew[m], th.skew[m]};
    line.clear();
    append_row(line, v, 8);
    out.write(line);
  }
  out.commit();
}

void write_convergence_csv(const std::string& path,
                           const std::vector<ConvergenceRow>& rows) {
  AtomicFile out(path);
  out.write("nq,t,varp_pod,vari_pod,var_pod,m3_pod,skew_pod,varp_ref,vari_ref,"
            "var_ref,m3_ref,skew_ref\n");
  std::string line;
  for (const auto& r : rows) {
    line.clear();
    append_uint(line, r.nq);
    line += ',';
    const double v[11] = {r.t,        r.varp_pod, r.vari_pod, r.var_pod,
                          r.m3_pod,   r.skew_pod, r.varp_ref, r.vari_ref,
                          r.var_ref,  r.m3_ref,   r.skew_ref};
    append_row(line, v, 11);
    out.write(line);
  }
  out.commit();
}

void write_pod_bundle(const std::string& dir, const PodModel& model) {
  write_matrix_csv(dir + "/basis.csv", model.basis());
  write_matrix_csv(dir + "/a.csv", model.a().transpose());
  AtomicFile out(dir + "/b.csv");
  std::string line;
  const std::size_t nq = model.n_q();
  for (std::size_t r = 0; r < nq; ++r) {
    for (std::size_t s = 0; s < nq; ++s) {
      line.clear();
      for (std::size_t m = 0; m < model.grid().M; ++m) {
        const Complex b = model.b(r, s, m);
        append_uint(line, r);
        line += ',';
        append_uint(line, s);
        line += ',';
        append_uint(line, m);
        line += ',';
        append_double(line, b.real());
        line += ',';
        append_double(line, b.imag());
        line += '\n';
      }
      out.write(line);
    }
  }
  out.commit();
}

void write_pod2_bundle(const std::string& dir, const SecondOrderPod& pod) {
  write_matrix_csv(dir + "/basis.csv", pod.basis);
  write_matrix_csv(dir + "/a.csv", pod.a.transpose());
}

}  // namespace evospec
