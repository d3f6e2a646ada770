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

#ifndef DCESTEER_SWEEP_H_
#define DCESTEER_SWEEP_H_

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "dcesteer/correlations.h"
#include "dcesteer/dce_model.h"

namespace dcesteer {

enum class Axis { Epsilon, Temperature, NTh, F };

std::string_view axis_name(Axis axis);
std::optional<Axis> parse_axis(std::string_view name);

/// Uniform grid with inclusive endpoints. Temperature is in kelvin.
struct AxisRange {
  Axis axis = Axis::Epsilon;
  double start = 0.0;
  double stop = 1.0;
  int steps = 2;

  double value(int index) const;
  void validate() const;
};

/// One- or two-dimensional grid over a fixed parameter point. Sweeping n_th
/// or f overrides the value derived from `fixed`.
struct SweepSpec {
  AxisRange axis;
  std::optional<AxisRange> second_axis;
  DceParams fixed;

  void validate() const;
  std::size_t size() const;
};

inline constexpr std::string_view kCsvHeader =
    "epsilon,temperature_K,n_th,f,steering_ab,steering_ba,steering_pert,ip_a,ip_b,ip_pert,"
    "log_neg,physicality_deficit,flags";

struct CsvRow {
  std::optional<double> epsilon;
  std::optional<double> temperature_k;
  double n_th = 0.0;
  double f = 0.0;
  double steering_ab = 0.0;
  double steering_ba = 0.0;
  double steering_pert = 0.0;
  double ip_a = 0.0;
  double ip_b = 0.0;
  double ip_pert = 0.0;
  double log_neg = 0.0;
  double physicality_deficit = 0.0;
  std::vector<std::string> flags;
};

/// Direct parameterisation: replaces the derived mean occupation and/or small
/// parameter of a point.
struct PointOverrides {
  std::optional<double> n_th;
  std::optional<double> f;
};

CsvRow run_point(const DceParams& p, const PointOverrides& overrides = {});

/// Rows in grid order (row-major: the first axis is the outer loop). Rows are
/// evaluated on `threads` workers (0 = hardware concurrency); the result does
/// not depend on the thread count.
std::vector<CsvRow> evaluate_sweep(const SweepSpec& spec, unsigned threads = 0);

/// Header plus one line per grid point.
void run_sweep(const SweepSpec& spec, std::ostream& out, unsigned threads = 0);

/// Shortest decimal string that round-trips to the same double.
std::string format_double(double x);
std::string format_row(const CsvRow& row);

/// Figure presets "fig1", "fig2", "fig3". Throws UsageError otherwise.
SweepSpec figure_preset(std::string_view name);

}  // namespace dcesteer

#endif  // DCESTEER_SWEEP_H_
