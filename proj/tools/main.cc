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

// evospec: simulate non-Gaussian, non-stationary processes from a spectrum
// and bispectrum.
#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "evospec/errors.h"
#include "evospec/evospec.h"
#include "evospec/text_io.h"
#include "evospec_cli/commands.h"

namespace {

using nlohmann::json;

enum class Kind { kString, kInt, kUint, kDouble, kBool, kUintList, kIntList, kDoubleList, kStringList };

struct Override {
  const char* flag;
  const char* key;
  Kind kind;
  const char* help;
  std::string value;
  CLI::Option* option = nullptr;
};

std::vector<std::string> split_list(const std::string& s) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (start <= s.size()) {
    const std::size_t p = std::min(s.find(',', start), s.size());
    if (p > start) out.push_back(s.substr(start, p - start));
    start = p + 1;
  }
  return out;
}

json convert(const Override& o) {
  const std::string& v = o.value;
  auto as_uint = [&](const std::string& s) {
    std::uint64_t u = 0;
    if (!evospec::parse_uint(s, u)) {
      throw evospec::ConfigError(o.key, "expected a non-negative integer, got '" + s + "'");
    }
    return u;
  };
  auto as_int = [&](const std::string& s) -> std::int64_t {
    if (!s.empty() && s[0] == '-') return -static_cast<std::int64_t>(as_uint(s.substr(1)));
    return static_cast<std::int64_t>(as_uint(s));
  };
  auto as_double = [&](const std::string& s) {
    double d = 0.0;
    if (!evospec::parse_double(s, d)) {
      throw evospec::ConfigError(o.key, "expected a number, got '" + s + "'");
    }
    return d;
  };
  switch (o.kind) {
    case Kind::kString: return v;
    case Kind::kInt: return as_int(v);
    case Kind::kUint: return as_uint(v);
    case Kind::kDouble: return as_double(v);
    case Kind::kBool:
      if (v == "true" || v == "1") return true;
      if (v == "false" || v == "0") return false;
      throw evospec::ConfigError(o.key, "expected true or false");
    case Kind::kUintList: {
      json a = json::array();
      for (const auto& s : split_list(v)) a.push_back(as_uint(s));
      return a;
    }
    case Kind::kIntList: {
      json a = json::array();
      for (const auto& s : split_list(v)) a.push_back(as_int(s));
      return a;
    }
    case Kind::kDoubleList: {
      json a = json::array();
      for (const auto& s : split_list(v)) a.push_back(as_double(s));
      return a;
    }
    case Kind::kStringList: return split_list(v);
  }
  return nullptr;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"evospec: third-order spectral representation simulator"};
  app.set_version_flag("--version", std::string(evospec::version()));
  app.require_subcommand(1);

  std::string config_path;
  std::vector<Override> overrides = {
      {"--model", "model", Kind::kString, "example1 | example2 | files", {}},
      {"--spectrum-file", "spectrum_file", Kind::kString, "EPS spectrum file", {}},
      {"--bispectrum-file", "bispectrum_file", Kind::kString, "EBS bispectrum file", {}},
      {"--N", "N", Kind::kInt, "frequency intervals", {}},
      {"--M", "M", Kind::kInt, "time points", {}},
      {"--omega-u", "omega_u", Kind::kDouble, "upper cutoff frequency", {}},
      {"--T", "T", Kind::kDouble, "duration", {}},
      {"--order", "order", Kind::kInt, "2 or 3", {}},
      {"--method", "method", Kind::kString, "direct | pod", {}},
      {"--nq", "n_q", Kind::kUint, "POD components", {}},
      {"--n", "n_samples", Kind::kUint, "sample count", {}},
      {"--seed", "seed", Kind::kUint, "base seed", {}},
      {"--threads", "threads", Kind::kUint, "worker threads (0: all)", {}},
      {"--out", "out_dir", Kind::kString, "output directory", {}},
      {"--formats", "formats", Kind::kStringList, "csv,raw", {}},
      {"--stats", "stats", Kind::kBool, "write stats.csv", {}},
      {"--export-pod", "export_pod", Kind::kBool, "write the POD bundle", {}},
      {"--eps-denom", "eps_denom", Kind::kDouble, "kernel denominator guard", {}},
      {"--feas-tol", "feas_tol", Kind::kDouble, "tolerated margin undershoot", {}},
      {"--counts", "counts", Kind::kUintList, "bench sample counts, ascending", {}},
      {"--bench-orders", "bench_orders", Kind::kIntList, "bench orders, e.g. 2,3", {}},
      {"--repeats", "bench_repeats", Kind::kUint, "bench repetitions at counts <= 100", {}},
      {"--nq-list", "nq_list", Kind::kUintList, "convergence component counts", {}},
      {"--probes", "probe_times", Kind::kDoubleList, "convergence probe times", {}},
      {"--parts", "parts", Kind::kStringList, "spectrum,bispectrum,kernel,pod", {}},
  };

  const char* commands[][2] = {
      {"simulate", "generate an ensemble, its statistics and a manifest"},
      {"bench", "time direct and POD methods across sample counts"},
      {"convergence", "POD diagnostics against grid references versus n_q"},
      {"export", "write the model spectrum and bispectrum files"},
      {"verify", "re-run the manifest in --out and compare artifacts"},
  };
  std::vector<CLI::App*> subs;
  for (const auto& c : commands) {
    CLI::App* sub = app.add_subcommand(c[0], c[1]);
    sub->add_option("-c,--config", config_path, "JSON config file");
    subs.push_back(sub);
  }
  // Options are registered on every subcommand and share storage; only one
  // subcommand runs per invocation.
  for (Override& o : overrides) {
    for (CLI::App* sub : subs) {
      CLI::Option* opt = sub->add_option(o.flag, o.value, o.help);
      if (sub->get_name() == "verify" && std::string(o.key) != "out_dir") {
        opt->group("");
      }
    }
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : evospec::cli::kExitConfig;
  }

  CLI::App* chosen = nullptr;
  for (CLI::App* sub : subs) {
    if (sub->parsed()) chosen = sub;
  }

  json config = json::object();
  try {
    if (!config_path.empty()) config = json::parse(evospec::read_file(config_path));
    if (!config.is_object()) throw evospec::ConfigError("config", "expected a JSON object");
    for (const Override& o : overrides) {
      if (chosen->get_option(o.flag)->count() > 0) config[o.key] = convert(o);
    }
  } catch (const json::exception& e) {
    std::cerr << "error: config: " << e.what() << "\n";
    return evospec::cli::kExitConfig;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return evospec::cli::exit_code_for(e);
  }
  return evospec::cli::run_command(chosen->get_name(), config, std::cerr);
}
