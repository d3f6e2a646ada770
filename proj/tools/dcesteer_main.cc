// Copyright 2026 The dcesteer Authors
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

// dcesteer: correlations of dynamical-Casimir radiation as CSV.
//
//   dcesteer state    [params]                 one row for a parameter point
//   dcesteer sweep    --var X --from A --to B  1-D (or 2-D with --var2) grid
//   dcesteer figure   fig1|fig2|fig3           preset grids
//   dcesteer critical steering|entanglement    zero-crossing temperature
//
// Exit codes: 0 success, 1 invalid input or usage, 2 numerical failure.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "dcesteer/config.h"
#include "dcesteer/correlations.h"
#include "dcesteer/errors.h"
#include "dcesteer/sweep.h"

namespace {

constexpr int kExitUsage = 1;
constexpr int kExitNumerical = 2;

struct Options {
  dcesteer::KeyValues flags;
  std::optional<std::string> config;
};

void add_value_flag(CLI::App* app, Options& opts, const std::string& key, const std::string& help) {
  app->add_option_function<std::string>(
      "--" + key, [&opts, key](const std::string& v) { opts.flags[key] = v; }, help);
}

void add_point_flags(CLI::App* app, Options& opts) {
  add_value_flag(app, opts, "epsilon", "normalised drive amplitude, [0, 1) (default 0.15)");
  add_value_flag(app, opts, "temperature-mK", "temperature in millikelvin (default 50)");
  add_value_flag(app, opts, "drive-GHz", "drive frequency w_d / 2pi in GHz (default 10)");
  add_value_flag(app, opts, "leff-mm", "SQUID effective length L_eff(0) in mm (default 0.5)");
  add_value_flag(app, opts, "speed", "speed of light in the waveguide, m/s (default 1.2e8)");
  add_value_flag(app, opts, "detuning-GHz", "mode detuning dw / 2pi in GHz (default 0)");
  add_value_flag(app, opts, "out", "output CSV path (default: standard output)");
  add_value_flag(app, opts, "threads", "worker threads for row evaluation (0 = all cores)");
  app->add_option_function<std::string>(
      "--config", [&opts](const std::string& v) { opts.config = v; },
      "key = value file; flags override its entries");
}

void add_sweep_flags(CLI::App* app, Options& opts) {
  add_value_flag(app, opts, "var", "swept variable: epsilon, temperature (K), n_th, f");
  add_value_flag(app, opts, "from", "first grid value");
  add_value_flag(app, opts, "to", "last grid value");
  add_value_flag(app, opts, "steps", "number of grid points, >= 2 (default 101)");
  add_value_flag(app, opts, "var2", "inner variable of a 2-D grid");
  add_value_flag(app, opts, "from2", "first value of the inner axis");
  add_value_flag(app, opts, "to2", "last value of the inner axis");
  add_value_flag(app, opts, "steps2", "points on the inner axis (default 101)");
}

dcesteer::Settings resolve(const Options& opts) {
  std::optional<std::filesystem::path> config;
  if (opts.config) config = *opts.config;
  return dcesteer::parse_config(opts.flags, config);
}

// The payload is fully rendered before the output file is opened.
void emit(const dcesteer::Settings& settings, const std::string& payload) {
  if (!settings.out) {
    std::cout << payload << std::flush;
    if (!std::cout) throw std::runtime_error("failed writing to standard output");
    return;
  }
  std::ofstream file(*settings.out, std::ios::binary | std::ios::trunc);
  if (!file) throw std::runtime_error("cannot open '" + *settings.out + "' for writing");
  file << payload;
  file.close();
  if (!file) throw std::runtime_error("failed writing '" + *settings.out + "'");
}

std::string render_sweep(const dcesteer::SweepSpec& spec, unsigned threads) {
  std::ostringstream out;
  dcesteer::run_sweep(spec, out, threads);
  return out.str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Gaussian steering, interferometric power and entanglement of DCE radiation"};
  app.require_subcommand(1);

  Options state_opts;
  CLI::App* state = app.add_subcommand("state", "evaluate one parameter point");
  add_point_flags(state, state_opts);

  Options sweep_opts;
  CLI::App* sweep = app.add_subcommand("sweep", "evaluate a 1-D or 2-D parameter grid");
  add_point_flags(sweep, sweep_opts);
  add_sweep_flags(sweep, sweep_opts);

  Options figure_opts;
  std::string figure_name;
  CLI::App* figure = app.add_subcommand("figure", "preset grids fig1, fig2, fig3");
  figure->add_option("name", figure_name, "fig1 | fig2 | fig3")
      ->required()
      ->check(CLI::IsMember({"fig1", "fig2", "fig3"}));
  add_value_flag(figure, figure_opts, "out", "output CSV path (default: standard output)");
  add_value_flag(figure, figure_opts, "threads", "worker threads (0 = all cores)");

  Options critical_opts;
  std::string measure_name;
  CLI::App* critical = app.add_subcommand("critical", "temperature where a measure vanishes");
  critical->add_option("measure", measure_name, "steering | entanglement")
      ->required()
      ->check(CLI::IsMember({"steering", "entanglement"}));
  add_point_flags(critical, critical_opts);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (state->parsed()) {
      const dcesteer::Settings s = resolve(state_opts);
      const dcesteer::CsvRow row = dcesteer::run_point(s.params);
      emit(s, std::string(dcesteer::kCsvHeader) + "\n" + dcesteer::format_row(row) + "\n");
    } else if (sweep->parsed()) {
      const dcesteer::Settings s = resolve(sweep_opts);
      emit(s, render_sweep(s.sweep_spec(), s.threads));
    } else if (figure->parsed()) {
      const dcesteer::Settings s = resolve(figure_opts);
      emit(s, render_sweep(dcesteer::figure_preset(figure_name), s.threads));
    } else if (critical->parsed()) {
      const dcesteer::Settings s = resolve(critical_opts);
      const auto measure = measure_name == "steering" ? dcesteer::Measure::Steering
                                                      : dcesteer::Measure::Entanglement;
      const std::optional<double> t = dcesteer::critical_temperature(s.params, measure);
      std::string payload = "measure,epsilon,f,critical_temperature_K\n" + measure_name + "," +
                            dcesteer::format_double(s.params.amplitude) + "," +
                            dcesteer::format_double(dcesteer::small_parameter(s.params)) + "," +
                            (t ? dcesteer::format_double(*t) : "") + "\n";
      emit(s, payload);
    }
  } catch (const dcesteer::InvalidArgument& e) {
    std::cerr << "dcesteer: " << e.what() << "\n";
    return kExitUsage;
  } catch (const dcesteer::NumericalError& e) {
    std::cerr << "dcesteer: numerical failure: " << e.what() << "\n";
    return kExitNumerical;
  } catch (const std::exception& e) {
    std::cerr << "dcesteer: " << e.what() << "\n";
    return kExitUsage;
  }
  return 0;
}
