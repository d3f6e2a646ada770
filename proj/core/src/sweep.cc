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

#include "dcesteer/sweep.h"

#include <array>
#include <atomic>
#include <charconv>
#include <cmath>
#include <exception>
#include <mutex>
#include <ostream>
#include <thread>

#include "dcesteer/errors.h"

namespace dcesteer {

namespace {

constexpr std::array<std::pair<Axis, std::string_view>, 4> kAxisNames = {{
    {Axis::Epsilon, "epsilon"},
    {Axis::Temperature, "temperature"},
    {Axis::NTh, "n_th"},
    {Axis::F, "f"},
}};

struct GridPoint {
  DceParams params;
  PointOverrides overrides;
};

void apply(Axis axis, double value, GridPoint& point) {
  switch (axis) {
    case Axis::Epsilon:
      point.params.amplitude = value;
      break;
    case Axis::Temperature:
      point.params.temperature = value;
      break;
    case Axis::NTh:
      point.overrides.n_th = value;
      break;
    case Axis::F:
      point.overrides.f = value;
      break;
  }
}

GridPoint grid_point(const SweepSpec& spec, std::size_t index) {
  GridPoint point{spec.fixed, {}};
  if (spec.second_axis) {
    const auto inner = static_cast<std::size_t>(spec.second_axis->steps);
    apply(spec.axis.axis, spec.axis.value(static_cast<int>(index / inner)), point);
    apply(spec.second_axis->axis, spec.second_axis->value(static_cast<int>(index % inner)), point);
  } else {
    apply(spec.axis.axis, spec.axis.value(static_cast<int>(index)), point);
  }
  return point;
}

}  // namespace

std::string_view axis_name(Axis axis) {
  for (const auto& [a, name] : kAxisNames) {
    if (a == axis) return name;
  }
  return "?";
}

std::optional<Axis> parse_axis(std::string_view name) {
  for (const auto& [a, n] : kAxisNames) {
    if (n == name) return a;
  }
  return std::nullopt;
}

double AxisRange::value(int index) const {
  if (index <= 0) return start;
  if (index >= steps - 1) return stop;
  return start + (stop - start) * static_cast<double>(index) / static_cast<double>(steps - 1);
}

void AxisRange::validate() const {
  const std::string name(axis_name(axis));
  if (!(std::isfinite(start) && std::isfinite(stop) && start < stop)) {
    throw UsageError("sweep over " + name + ": need finite start < stop");
  }
  if (steps < 2) throw UsageError("sweep over " + name + ": steps must be >= 2");
  if (start < 0.0) throw UsageError("sweep over " + name + ": values must be >= 0");
  if ((axis == Axis::Epsilon || axis == Axis::F) && stop >= 1.0) {
    throw UsageError("sweep over " + name + ": values must be < 1");
  }
}

void SweepSpec::validate() const {
  axis.validate();
  if (second_axis) {
    second_axis->validate();
    if (second_axis->axis == axis.axis) {
      throw UsageError("the two sweep axes must differ");
    }
  }
  try {
    fixed.validate();
  } catch (const InvalidArgument& e) {
    throw UsageError(e.what());
  }
}

std::size_t SweepSpec::size() const {
  const auto outer = static_cast<std::size_t>(axis.steps);
  return second_axis ? outer * static_cast<std::size_t>(second_axis->steps) : outer;
}

CsvRow run_point(const DceParams& p, const PointOverrides& overrides) {
  p.validate();
  const double f = overrides.f ? *overrides.f : small_parameter(p);
  const ThermalOccupations occ =
      overrides.n_th ? ThermalOccupations{*overrides.n_th, *overrides.n_th} : occupations(p);
  const CorrelationReport r = evaluate_state(f, occ);

  CsvRow row;
  if (overrides.f) {
    const double eps = f * p.speed / (p.effective_length * std::sqrt(p.omega_plus() * p.omega_minus()));
    if (eps < 1.0) row.epsilon = eps;
  } else {
    row.epsilon = p.amplitude;
  }
  row.temperature_k = overrides.n_th
                          ? temperature_for_occupation(0.5 * p.drive_angular_freq, *overrides.n_th)
                          : p.temperature;
  row.n_th = occ.mean();
  row.f = f;
  row.steering_ab = r.steering_a_to_b;
  row.steering_ba = r.steering_b_to_a;
  row.steering_pert = r.steering_perturbative;
  row.ip_a = r.ip_probe_a;
  row.ip_b = r.ip_probe_b;
  row.ip_pert = r.ip_perturbative;
  row.log_neg = r.log_negativity;
  row.physicality_deficit = r.physicality_deficit;
  row.flags = r.flags.tokens();
  return row;
}

std::vector<CsvRow> evaluate_sweep(const SweepSpec& spec, unsigned threads) {
  spec.validate();
  const std::size_t total = spec.size();
  std::vector<CsvRow> rows(total);

  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, total));

  std::atomic<std::size_t> next{0};
  std::mutex error_mutex;
  std::size_t error_index = total;
  std::exception_ptr error;

  auto worker = [&] {
    for (std::size_t i = next++; i < total; i = next++) {
      try {
        const GridPoint point = grid_point(spec, i);
        rows[i] = run_point(point.params, point.overrides);
      } catch (...) {
        // Report the lowest failing index so the error is reproducible.
        std::lock_guard lock(error_mutex);
        if (i < error_index) {
          error_index = i;
          error = std::current_exception();
        }
      }
    }
  };

  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(threads);
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
  }
  if (error) std::rethrow_exception(error);
  return rows;
}

void run_sweep(const SweepSpec& spec, std::ostream& out, unsigned threads) {
  const std::vector<CsvRow> rows = evaluate_sweep(spec, threads);
  std::string buffer;
  buffer.reserve(rows.size() * 256);
  buffer.append(kCsvHeader);
  buffer.push_back('\n');
  for (const CsvRow& row : rows) {
    buffer.append(format_row(row));
    buffer.push_back('\n');
  }
  out.write(buffer.data(), static_cast<std::streamsize>(buffer.size()));
}

std::string format_double(double x) {
  if (x == 0.0) return "0";
  std::array<char, 32> buf{};
  const auto [end, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), x);
  if (ec != std::errc{}) throw NumericalError("cannot format floating-point value");
  return std::string(buf.data(), end);
}

std::string format_row(const CsvRow& row) {
  std::string line = row.epsilon ? format_double(*row.epsilon) : "";
  line.push_back(',');
  if (row.temperature_k) line.append(format_double(*row.temperature_k));
  for (double v : {row.n_th, row.f, row.steering_ab, row.steering_ba, row.steering_pert, row.ip_a,
                   row.ip_b, row.ip_pert, row.log_neg, row.physicality_deficit}) {
    line.push_back(',');
    line.append(format_double(v));
  }
  line.push_back(',');
  for (std::size_t i = 0; i < row.flags.size(); ++i) {
    if (i > 0) line.push_back(';');
    line.append(row.flags[i]);
  }
  return line;
}

SweepSpec figure_preset(std::string_view name) {
  SweepSpec spec;
  spec.fixed = standard_params();
  if (name == "fig1") {
    spec.axis = {Axis::Epsilon, 0.0, 0.25, 251};
    spec.fixed.temperature = 0.05;
  } else if (name == "fig2") {
    spec.axis = {Axis::NTh, 0.0, 0.02, 251};
    spec.fixed.amplitude = 0.15;
  } else if (name == "fig3") {
    spec.axis = {Axis::Temperature, 0.0, 0.035, 101};
    spec.second_axis = AxisRange{Axis::F, 0.0, 0.05, 101};
  } else {
    throw UsageError("unknown figure preset '" + std::string(name) + "' (fig1, fig2, fig3)");
  }
  return spec;
}

}  // namespace dcesteer
