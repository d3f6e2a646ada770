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

#include "dcesteer/config.h"

#include <algorithm>
#include <array>
#include <charconv>
#include <cmath>
#include <fstream>
#include <numbers>
#include <sstream>

#include "dcesteer/errors.h"

namespace dcesteer {

namespace {

constexpr std::array<std::string_view, 16> kKnownKeys = {
    "epsilon", "temperature-mK", "drive-GHz", "leff-mm", "speed", "detuning-GHz",
    "out",     "steps",          "from",      "to",      "var",   "steps2",
    "from2",   "to2",            "var2",      "threads",
};

std::string_view trim(std::string_view s) {
  constexpr std::string_view kSpace = " \t\r\n";
  const auto first = s.find_first_not_of(kSpace);
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(kSpace);
  return s.substr(first, last - first + 1);
}

double to_double(const std::string& key, std::string_view raw) {
  const std::string_view text = trim(raw);
  double value = 0.0;
  const auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (text.empty() || ec != std::errc{} || end != text.data() + text.size() || !std::isfinite(value)) {
    throw UsageError("--" + key + ": '" + std::string(raw) + "' is not a number");
  }
  return value;
}

long to_integer(const std::string& key, std::string_view raw) {
  const std::string_view text = trim(raw);
  long value = 0;
  const auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (text.empty() || ec != std::errc{} || end != text.data() + text.size()) {
    throw UsageError("--" + key + ": '" + std::string(raw) + "' is not an integer");
  }
  return value;
}

void require(bool ok, const std::string& key, const std::string& what) {
  if (!ok) throw UsageError("--" + key + ": " + what);
}

std::optional<AxisRange> axis_from(const KeyValues& kv, const std::string& suffix) {
  const std::string var_key = "var" + suffix;
  const std::string from_key = "from" + suffix;
  const std::string to_key = "to" + suffix;
  const std::string steps_key = "steps" + suffix;
  const auto var = kv.find(var_key);
  if (var == kv.end()) {
    for (const auto& k : {from_key, to_key, steps_key}) {
      if (kv.contains(k)) throw UsageError("--" + k + " given without --" + var_key);
    }
    return std::nullopt;
  }
  const auto axis = parse_axis(trim(var->second));
  require(axis.has_value(), var_key, "expected one of epsilon, temperature, n_th, f");
  for (const auto& k : {from_key, to_key}) {
    if (!kv.contains(k)) throw UsageError("--" + var_key + " needs --" + k);
  }
  AxisRange range;
  range.axis = *axis;
  range.start = to_double(from_key, kv.at(from_key));
  range.stop = to_double(to_key, kv.at(to_key));
  range.steps = 101;
  if (kv.contains(steps_key)) {
    const long steps = to_integer(steps_key, kv.at(steps_key));
    require(steps >= 2 && steps <= 1'000'000, steps_key, "must be in [2, 1000000]");
    range.steps = static_cast<int>(steps);
  }
  try {
    range.validate();
  } catch (const UsageError& e) {
    throw UsageError("--" + var_key + ": " + e.what());
  }
  return range;
}

}  // namespace

bool is_known_key(std::string_view key) {
  return std::find(kKnownKeys.begin(), kKnownKeys.end(), key) != kKnownKeys.end();
}

KeyValues parse_config_text(std::string_view text) {
  KeyValues kv;
  std::size_t line_no = 0;
  while (!text.empty()) {
    ++line_no;
    const auto eol = text.find('\n');
    std::string_view line = text.substr(0, eol);
    text = eol == std::string_view::npos ? std::string_view{} : text.substr(eol + 1);

    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;

    const auto eq = line.find('=');
    const std::string where = "config line " + std::to_string(line_no);
    if (eq == std::string_view::npos) throw UsageError(where + ": expected 'key = value'");
    const std::string key(trim(line.substr(0, eq)));
    const std::string value(trim(line.substr(eq + 1)));
    if (key.empty() || value.empty()) throw UsageError(where + ": expected 'key = value'");
    if (!is_known_key(key)) throw UsageError(where + ": unknown key '" + key + "'");
    if (!kv.emplace(key, value).second) throw UsageError(where + ": duplicate key '" + key + "'");
  }
  return kv;
}

KeyValues read_config_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot read config file '" + path.string() + "'");
  std::ostringstream contents;
  contents << in.rdbuf();
  return parse_config_text(contents.str());
}

SweepSpec Settings::sweep_spec() const {
  if (!axis) throw UsageError("sweep needs --var, --from and --to");
  SweepSpec spec{*axis, second_axis, params};
  spec.validate();
  return spec;
}

Settings parse_config(const KeyValues& flags, const std::optional<std::filesystem::path>& config_file) {
  for (const auto& [key, value] : flags) {
    if (!is_known_key(key)) throw UsageError("unknown option --" + key);
  }
  KeyValues kv = config_file ? read_config_file(*config_file) : KeyValues{};
  for (const auto& [key, value] : flags) kv[key] = value;

  Settings s;
  s.params = standard_params();
  constexpr double kTwoPi = 2.0 * std::numbers::pi;

  if (const auto it = kv.find("epsilon"); it != kv.end()) {
    const double eps = to_double(it->first, it->second);
    require(eps >= 0.0 && eps < 1.0, it->first, "epsilon must lie in [0, 1)");
    s.params.amplitude = eps;
  }
  if (const auto it = kv.find("temperature-mK"); it != kv.end()) {
    const double mk = to_double(it->first, it->second);
    require(mk >= 0.0, it->first, "temperature must be >= 0");
    s.params.temperature = mk * 1e-3;
  }
  if (const auto it = kv.find("drive-GHz"); it != kv.end()) {
    const double ghz = to_double(it->first, it->second);
    require(ghz > 0.0, it->first, "drive frequency must be > 0");
    s.params.drive_angular_freq = kTwoPi * ghz * 1e9;
  }
  if (const auto it = kv.find("leff-mm"); it != kv.end()) {
    const double mm = to_double(it->first, it->second);
    require(mm > 0.0, it->first, "effective length must be > 0");
    s.params.effective_length = mm * 1e-3;
  }
  if (const auto it = kv.find("speed"); it != kv.end()) {
    const double v = to_double(it->first, it->second);
    require(v > 0.0, it->first, "speed must be > 0");
    s.params.speed = v;
  }
  if (const auto it = kv.find("detuning-GHz"); it != kv.end()) {
    s.params.detuning = kTwoPi * to_double(it->first, it->second) * 1e9;
    require(std::abs(s.params.detuning) < 0.5 * s.params.drive_angular_freq, it->first,
            "|detuning| must be below half the drive frequency");
  }
  if (const auto it = kv.find("out"); it != kv.end()) s.out = it->second;
  if (const auto it = kv.find("threads"); it != kv.end()) {
    const long t = to_integer(it->first, it->second);
    require(t >= 0 && t <= 4096, it->first, "must be in [0, 4096]");
    s.threads = static_cast<unsigned>(t);
  }

  s.axis = axis_from(kv, "");
  s.second_axis = axis_from(kv, "2");
  if (s.second_axis && !s.axis) throw UsageError("--var2 needs --var");
  if (s.axis && s.second_axis && s.axis->axis == s.second_axis->axis) {
    throw UsageError("--var2: must differ from --var");
  }
  return s;
}

}  // namespace dcesteer
