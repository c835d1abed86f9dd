// Copyright 2026 The qmshape Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include "qmshape/cli/app.hpp"

#include <filesystem>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "qmshape/cli/commands.hpp"
#include "qmshape/cli/output.hpp"
#include "qmshape/cli/run_config.hpp"
#include "qmshape/error.hpp"

namespace qmshape::cli {
namespace {

constexpr const char* kFooter = R"(Exit codes: 0 success, 1 numerical failure, 2 configuration error.

Precedence: built-in defaults < --config file < individual flags. The config
layout is described by run_config.schema.json (installed under
share/qmshape); --dry-run prints the effective config without computing.

Output files (CSV with a header row, numbers as %.17g):
  shape     driving_<i>.csv           t,F,Q
            shape_report.json         residuals, fidelity, leakage per mode
  spectrum  spectrum_<i>.csv          k,lambda,amplitude
            schmidt_modes_<i>.csv     t,phi_1..phi_6
            spin_wave_<i>.csv         z,B
            spectrum_report.json
  convert   conversion_<i>_<j>.csv    t,A_in,A_out
            fidelity.csv              input,output,fidelity,efficiency,cross_talk
            conversion_report.json    amplitude maps, spin-wave identity check
  cluster   cluster_report.json       U, residuals, nullifiers, Duan sums)";

struct Overrides {
  std::optional<std::string> config;
  std::optional<std::string> out;
  std::optional<std::size_t> n_t;
  std::optional<std::size_t> n_z;
  std::optional<double> t_w;
  std::optional<double> l_phys;
  std::optional<double> l_search;
  std::optional<int> max_steps;
  std::optional<std::uint64_t> seed;
  std::vector<int> modes;
  bool dry_run = false;
};

template <class T>
void take(const std::optional<T>& from, T& to) {
  if (from) to = *from;
}

RunConfig effective_config(const Overrides& o) {
  RunConfig c = o.config ? load_config(*o.config) : RunConfig{};
  take(o.n_t, c.n_t);
  take(o.n_z, c.n_z);
  take(o.t_w, c.t_w);
  take(o.l_phys, c.l_phys);
  take(o.l_search, c.l_search);
  take(o.max_steps, c.max_steps);
  take(o.seed, c.seed);
  if (o.out) c.out = *o.out;
  if (!o.modes.empty()) c.modes = o.modes;
  validate(c);
  return c;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"qmshape: driving-field shaping, mode conversion and cluster-state checks for a "
               "Raman quantum memory"};
  app.footer(kFooter);
  app.require_subcommand(1);
  app.fallthrough();

  Overrides o;
  app.add_option("--config", o.config, "JSON run configuration")->check(CLI::ExistingFile);
  app.add_option("--out", o.out, "Output directory (default: out)");
  app.add_option("--n-t", o.n_t, "Time samples (default 513)");
  app.add_option("--n-z", o.n_z, "Space samples (default 513)");
  app.add_option("--t-w", o.t_w, "Writing time T_W (default 9)");
  app.add_option("--l-phys", o.l_phys, "Physical cell length (default 10)");
  app.add_option("--l-search", o.l_search, "Length used inside the shaping iteration (default 5)");
  app.add_option("--modes", o.modes, "Comma-separated supermode indices (default 1,2,3,4)")
      ->delimiter(',');
  app.add_option("--max-steps", o.max_steps, "Shaping iteration limit (default 15)");
  app.add_option("--seed", o.seed, "Reserved; no command draws random numbers");
  app.add_flag("--dry-run", o.dry_run, "Print the effective configuration and exit");

  using Command = std::function<OutputBundle(const RunConfig&)>;
  Command command;
  auto add = [&](const char* name, const char* help, Command fn) {
    app.add_subcommand(name, help)->callback([&command, fn] { command = fn; });
  };
  add("shape", "Shape the driving fields for the selected supermodes", cmd_shape);
  add("spectrum", "Schmidt spectrum of the full write-read kernel", cmd_spectrum);
  add("convert", "Write-then-read shape conversion between supermodes", cmd_convert);
  add("cluster", "Four-node cluster unitary, nullifiers and Duan sums", cmd_cluster);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitSuccess : kExitConfig;
  }

  RunConfig config;
  try {
    config = effective_config(o);
  } catch (const ConfigError& e) {
    err << "config error: " << e.what() << '\n';
    return kExitConfig;
  }
  if (o.dry_run) {
    out << dump_json(to_json(config));
    return kExitSuccess;
  }

  OutputBundle files;
  try {
    files = command(config);
  } catch (const NumericalError& e) {
    err << "numerical failure: " << e.what() << '\n';
    return kExitNumerical;
  } catch (const InvalidArgument& e) {
    err << "config error: " << e.what() << '\n';
    return kExitConfig;
  }
  try {
    write_bundle(config.out, files);
  } catch (const std::exception& e) {
    err << "cannot write outputs: " << e.what() << '\n';
    return kExitNumerical;
  }
  out << "wrote " << files.size() << " files to " << config.out.string() << '\n';
  return kExitSuccess;
}

}  // namespace qmshape::cli
