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

#include "evospec_cli/commands.h"

#include <algorithm>
#include <chrono>
#include <filesystem>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <unistd.h>

#include "evospec/evospec.h"

namespace evospec::cli {
namespace {

namespace fs = std::filesystem;
using nlohmann::json;
using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

void make_out_dir(const std::string& dir) {
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec || !fs::is_directory(dir)) {
    throw IoError("cannot create output directory " + dir + ": " + ec.message());
  }
}

std::string join(const std::string& dir, const std::string& name) {
  return (fs::path(dir) / name).string();
}

void write_manifest(const std::string& dir, const std::string& command,
                    const RunConfig& cfg, const SimulationGrid& g,
                    const json& times, const std::vector<std::string>& artifacts,
                    const json& extra = json::object()) {
  json m{{"command", command},
         {"version", version()},
         {"config", to_json(cfg)},
         {"grid", grid_json(g)},
         {"wall_times", times},
         {"artifacts", artifacts}};
  for (auto it = extra.begin(); it != extra.end(); ++it) m[it.key()] = it.value();
  AtomicFile out(join(dir, "manifest.json"));
  out.write(m.dump(2) + "\n");
  out.commit();
}

json report_json(const FeasibilityReport& r) {
  return json{{"worst_margin", r.worst_margin},
              {"total_clamped", r.total_clamped},
              {"max_interactive_fraction", r.max_interactive_fraction}};
}

void check_components(const RunConfig& cfg, const SimulationGrid& g) {
  if (cfg.n_q > g.N) throw ConfigError("n_q", "must not exceed N = " + std::to_string(g.N));
  if (cfg.order == 2 && cfg.method == "pod" && cfg.n_q > std::min(g.M, g.N)) {
    throw ConfigError("n_q", "must not exceed min(M, N) for order 2");
  }
}

void require_fft(const SimulationGrid& g) {
  if (!g.fft_compatible) {
    throw PreconditionError(
        "grid is not FFT compatible (need dw*dt = 2 pi / M and M >= 2N); use the "
        "direct method");
  }
}

// Everything a simulator needs, kept alive together.
struct Pipeline {
  explicit Pipeline(SpectralModel m) : model(std::move(m)) {}
  SpectralModel model;
  std::optional<ThirdOrderKernel> kernel;
  std::optional<NormalizedTensor> tensor;
  std::optional<PodModel> pod3;
  std::optional<SecondOrderPod> pod2;
  std::unique_ptr<Simulator> sim;
  double t_model = 0.0, t_kernel = 0.0, t_fit = 0.0;
};

void prepare(Pipeline& p, const RunConfig& cfg, int order, const std::string& method) {
  const SimulationGrid& g = p.model.S.grid();
  if (method == "pod") require_fft(g);
  auto t0 = Clock::now();
  if (order == 3) {
    p.kernel.emplace(build_kernel(p.model.S, p.model.B, cfg.kernel_options(), cfg.threads));
  }
  p.t_kernel = seconds_since(t0);
  t0 = Clock::now();
  if (method == "direct") {
    p.sim = order == 2 ? make_direct2(p.model.S) : make_direct3(p.model.S, *p.kernel);
  } else if (order == 2) {
    p.pod2.emplace(fit_pod2(p.model.S, cfg.n_q));
    p.sim = make_pod2(*p.pod2);
  } else {
    p.tensor.emplace(p.model.B, *p.kernel);
    p.pod3.emplace(fit_pod(*p.tensor, cfg.n_q, cfg.threads));
    p.sim = make_pod3(*p.pod3);
  }
  p.t_fit = seconds_since(t0);
}

std::unique_ptr<Pipeline> timed_pipeline(const RunConfig& cfg, int order,
                                         const std::string& method) {
  const auto t0 = Clock::now();
  auto p = std::make_unique<Pipeline>(load_model(cfg));
  p->t_model = seconds_since(t0);
  check_components(cfg, p->model.S.grid());
  prepare(*p, cfg, order, method);
  return p;
}

template <class T>
T median_by_total(std::vector<T> v) {
  std::sort(v.begin(), v.end(),
            [](const T& a, const T& b) { return a.t_total < b.t_total; });
  return v[v.size() / 2];
}

void write_bench_csv(const std::string& path, const std::vector<BenchRow>& rows) {
  std::string s = "method,order,n_samples,t_decompose,t_simulate,t_total\n";
  for (const BenchRow& r : rows) {
    s += r.method + ",";
    append_uint(s, static_cast<std::uint64_t>(r.order));
    s += ',';
    append_uint(s, r.n_samples);
    s += ',';
    append_double(s, r.t_decompose);
    s += ',';
    append_double(s, r.t_simulate);
    s += ',';
    append_double(s, r.t_total);
    s += '\n';
  }
  AtomicFile out(path);
  out.write(s);
  out.commit();
}

std::vector<std::size_t> probe_indices(const RunConfig& cfg, const SimulationGrid& g) {
  std::vector<std::size_t> idx;
  for (double t : cfg.probe_times) {
    if (t >= g.T) throw ConfigError("probe_times", "entries must be in [0, T)");
    idx.push_back(nearest_time_index(g, t));
  }
  return idx;
}

}  // namespace

int exit_code_for(const std::exception& e) {
  if (dynamic_cast<const InfeasibleSkewness*>(&e)) return kExitInfeasible;
  if (dynamic_cast<const IoError*>(&e)) return kExitIo;
  if (dynamic_cast<const ConfigError*>(&e) || dynamic_cast<const FormatError*>(&e) ||
      dynamic_cast<const PreconditionError*>(&e) ||
      dynamic_cast<const InvalidParameter*>(&e) ||
      dynamic_cast<const ModelDomainError*>(&e) ||
      dynamic_cast<const GridMismatch*>(&e) ||
      dynamic_cast<const nlohmann::json::exception*>(&e)) {
    return kExitConfig;
  }
  return kExitFailure;
}

SpectralModel load_model(const RunConfig& cfg) {
  if (cfg.model == "files") {
    return load_spectrum_files(cfg.spectrum_file, cfg.bispectrum_file);
  }
  const SimulationGrid g = make_grid(cfg.N, cfg.M, cfg.omega_u, cfg.T);
  return cfg.model == "example1" ? model_example1(g) : model_clough_penzien(g);
}

void cmd_simulate(const RunConfig& cfg, std::ostream& log) {
  auto p = timed_pipeline(cfg, cfg.order, cfg.method);
  const SimulationGrid& g = p->model.S.grid();
  auto t0 = Clock::now();
  const Ensemble e = simulate_batch(*p->sim, cfg.n_samples, cfg.seed, cfg.threads);
  const double t_sim = seconds_since(t0);

  make_out_dir(cfg.out_dir);
  t0 = Clock::now();
  std::vector<std::string> artifacts;
  for (const std::string& f : cfg.formats) {
    if (f == "csv") {
      write_samples_csv(join(cfg.out_dir, "samples.csv"), e);
      artifacts.push_back("samples.csv");
    } else {
      write_samples_raw(join(cfg.out_dir, "samples.bin"), e);
      artifacts.push_back("samples.bin");
    }
  }
  json extra = json::object();
  if (cfg.stats) {
    const MomentCurves emp = empirical_moments(e);
    const MomentCurves th = theoretical_moments(
        p->model.S, cfg.order == 3 ? p->model.B : EvolutionaryBispectrum::Zero(g));
    write_stats_csv(join(cfg.out_dir, "stats.csv"), emp, th);
    artifacts.push_back("stats.csv");
  }
  if (cfg.export_pod && cfg.method == "pod") {
    make_out_dir(join(cfg.out_dir, "pod"));
    if (p->pod3) {
      write_pod_bundle(join(cfg.out_dir, "pod"), *p->pod3);
      artifacts.push_back("pod/b.csv");
    } else {
      write_pod2_bundle(join(cfg.out_dir, "pod"), *p->pod2);
    }
    artifacts.push_back("pod/basis.csv");
    artifacts.push_back("pod/a.csv");
  }
  if (p->kernel) extra["kernel_report"] = report_json(kernel_report(*p->kernel));
  if (p->pod3) {
    const ReconstructionError r = reconstruction_error(*p->pod3, *p->tensor);
    extra["reconstruction_error"] = {{"sqrt_sp", r.sqrt_sp}, {"tensor", r.tensor}};
  }
  const json times{{"model", p->t_model},   {"kernel", p->t_kernel},
                   {"decompose", p->t_fit}, {"simulate", t_sim},
                   {"write", seconds_since(t0)}};
  write_manifest(cfg.out_dir, "simulate", cfg, g, times, artifacts, extra);
  log << "simulate: " << method_name(p->sim->method()) << ", " << cfg.n_samples
      << " samples on N=" << g.N << " M=" << g.M << " in " << t_sim << " s -> "
      << cfg.out_dir << "\n";
}

std::vector<BenchRow> run_bench(const RunConfig& cfg, std::ostream& log) {
  std::vector<BenchRow> rows;
  for (int order : cfg.bench_orders) {
    for (const std::string method : {"direct", "pod"}) {
      for (std::size_t count : cfg.counts) {
        const std::size_t reps = count <= 100 ? cfg.bench_repeats : 1;
        std::vector<BenchRow> trial;
        for (std::size_t r = 0; r < reps; ++r) {
          const auto t0 = Clock::now();
          auto p = timed_pipeline(cfg, order, method);
          const auto t1 = Clock::now();
          const Ensemble e = simulate_batch(*p->sim, count, cfg.seed, cfg.threads);
          BenchRow row;
          row.method = method;
          row.order = order;
          row.n_samples = count;
          row.t_decompose = method == "pod" ? p->t_kernel + p->t_fit : 0.0;
          row.t_simulate = seconds_since(t1);
          row.t_total = seconds_since(t0);
          if (e.data.empty()) throw Error("empty ensemble");
          trial.push_back(row);
        }
        rows.push_back(median_by_total(trial));
        const BenchRow& b = rows.back();
        log << "bench: order " << order << " " << method << " n=" << count
            << " decompose " << b.t_decompose << " s, simulate " << b.t_simulate
            << " s, total " << b.t_total << " s\n";
      }
    }
  }
  return rows;
}

void cmd_bench(const RunConfig& cfg, std::ostream& log) {
  // Output location is checked up front.
  make_out_dir(cfg.out_dir);
  const auto t0 = Clock::now();
  const std::vector<BenchRow> rows = run_bench(cfg, log);
  const double total = seconds_since(t0);
  write_bench_csv(join(cfg.out_dir, "bench.csv"), rows);
  const SimulationGrid g = load_model(cfg).S.grid();
  write_manifest(cfg.out_dir, "bench", cfg, g, json{{"bench", total}}, {"bench.csv"});
}

void cmd_convergence(const RunConfig& cfg, std::ostream& log) {
  auto t0 = Clock::now();
  const SpectralModel model = load_model(cfg);
  const SimulationGrid& g = model.S.grid();
  for (std::size_t q : cfg.nq_list) {
    if (q > g.N) throw ConfigError("nq_list", "entries must be in [1, N]");
  }
  const std::vector<std::size_t> probes = probe_indices(cfg, g);
  const double t_model = seconds_since(t0);
  t0 = Clock::now();
  const ThirdOrderKernel K = build_kernel(model.S, model.B, cfg.kernel_options(), cfg.threads);
  const double t_kernel = seconds_since(t0);
  t0 = Clock::now();
  const std::vector<ConvergenceRow> rows =
      convergence_study(model.S, model.B, K, cfg.nq_list, probes, cfg.threads);
  const double t_study = seconds_since(t0);
  make_out_dir(cfg.out_dir);
  write_convergence_csv(join(cfg.out_dir, "convergence.csv"), rows);
  write_manifest(cfg.out_dir, "convergence", cfg, g,
                 json{{"model", t_model}, {"kernel", t_kernel}, {"study", t_study}},
                 {"convergence.csv"},
                 json{{"kernel_report", report_json(kernel_report(K))}});
  log << "convergence: " << rows.size() << " rows -> " << cfg.out_dir << "\n";
  for (const ConvergenceRow& r : rows) {
    log << "  nq=" << r.nq << " t=" << r.t << " var " << r.var_pod / r.var_ref - 1.0
        << " m3 " << r.m3_pod / r.m3_ref - 1.0 << " skew "
        << r.skew_pod - r.skew_ref << "\n";
  }
}

void cmd_export(const RunConfig& cfg, std::ostream& log) {
  const auto t0 = Clock::now();
  const SpectralModel model = load_model(cfg);
  const SimulationGrid& g = model.S.grid();
  auto has = [&](const char* part) {
    return std::find(cfg.parts.begin(), cfg.parts.end(), part) != cfg.parts.end();
  };
  std::optional<ThirdOrderKernel> K;
  if (has("kernel") || has("pod")) {
    K.emplace(build_kernel(model.S, model.B, cfg.kernel_options(), cfg.threads));
  }
  std::optional<PodModel> pod;
  if (has("pod")) {
    check_components(cfg, g);
    pod.emplace(fit_pod(NormalizedTensor(model.B, *K), cfg.n_q, cfg.threads));
  }
  make_out_dir(cfg.out_dir);
  std::vector<std::string> artifacts;
  if (has("spectrum")) {
    write_spectrum_csv(join(cfg.out_dir, "spectrum.csv"), model.S);
    artifacts.push_back("spectrum.csv");
  }
  if (has("bispectrum")) {
    write_bispectrum_csv(join(cfg.out_dir, "bispectrum.csv"), model.B);
    artifacts.push_back("bispectrum.csv");
  }
  if (has("kernel")) {
    write_kernel_csv(join(cfg.out_dir, "kernel.csv"), *K);
    artifacts.push_back("kernel.csv");
  }
  if (pod) {
    make_out_dir(join(cfg.out_dir, "pod"));
    write_pod_bundle(join(cfg.out_dir, "pod"), *pod);
    for (const char* f : {"pod/basis.csv", "pod/a.csv", "pod/b.csv"}) artifacts.push_back(f);
  }
  write_manifest(cfg.out_dir, "export", cfg, g, json{{"export", seconds_since(t0)}},
                 artifacts);
  log << "export: " << artifacts.size() << " files -> " << cfg.out_dir << "\n";
}

bool cmd_verify(const std::string& dir, std::ostream& log) {
  const json manifest = json::parse(read_file(join(dir, "manifest.json")));
  const std::string command = manifest.at("command").get<std::string>();
  if (command == "bench") {
    throw ConfigError("command", "bench timings are not reproducible; nothing to verify");
  }
  RunConfig cfg = config_from_json(manifest.at("config"));
  validate(cfg);
  const std::string scratch = join(dir, ".verify-" + std::to_string(::getpid()));
  cfg.out_dir = scratch;
  struct Cleanup {
    std::string path;
    ~Cleanup() {
      std::error_code ec;
      fs::remove_all(path, ec);
    }
  } cleanup{scratch};
  std::ostringstream quiet;
  if (command == "simulate") {
    cmd_simulate(cfg, quiet);
  } else if (command == "convergence") {
    cmd_convergence(cfg, quiet);
  } else if (command == "export") {
    cmd_export(cfg, quiet);
  } else {
    throw ConfigError("command", "unknown manifest command " + command);
  }
  bool same = true;
  for (const auto& a : manifest.at("artifacts")) {
    const std::string name = a.get<std::string>();
    const bool eq = read_file(join(dir, name)) == read_file(join(scratch, name));
    log << "verify: " << name << (eq ? " identical" : " DIFFERS") << "\n";
    same = same && eq;
  }
  return same;
}

int run_command(const std::string& command, const json& config, std::ostream& log) {
  try {
    if (command == "verify") {
      if (!config.contains("out_dir")) throw ConfigError("out_dir", "required for verify");
      const bool ok = cmd_verify(config.at("out_dir").get<std::string>(), log);
      log << (ok ? "verify: OK\n" : "verify: MISMATCH\n");
      return ok ? kExitOk : kExitFailure;
    }
    RunConfig cfg = config_from_json(config);
    validate(cfg);
    if (command == "simulate") {
      cmd_simulate(cfg, log);
    } else if (command == "bench") {
      cmd_bench(cfg, log);
    } else if (command == "convergence") {
      cmd_convergence(cfg, log);
    } else if (command == "export") {
      cmd_export(cfg, log);
    } else {
      throw ConfigError("command", "unknown command " + command);
    }
    return kExitOk;
  } catch (const InfeasibleSkewness& e) {
    log << "error: " << e.what() << "\n"
        << "kernel report: time index " << e.m() << ", frequency index " << e.k()
        << ", overshoot " << e.overshoot() << "\n";
    return kExitInfeasible;
  } catch (const std::exception& e) {
    log << "error: " << e.what() << "\n";
    return exit_code_for(e);
  }
}

}  // namespace evospec::cli
