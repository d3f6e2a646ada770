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

#ifndef DCESTEER_CONFIG_H_
#define DCESTEER_CONFIG_H_

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <string_view>

#include "dcesteer/dce_model.h"
#include "dcesteer/sweep.h"

namespace dcesteer {

/// Option name (long flag without dashes) to raw value.
using KeyValues = std::map<std::string, std::string>;

/// Recognised keys: epsilon, temperature-mK, drive-GHz, leff-mm, speed,
/// detuning-GHz, out, steps, from, to, var, steps2, from2, to2, var2, threads.
bool is_known_key(std::string_view key);

/// Parses `key = value` lines. Blank lines and `#` comments are skipped.
/// Throws UsageError on malformed lines or unknown keys.
KeyValues parse_config_text(std::string_view text);
KeyValues read_config_file(const std::filesystem::path& path);

struct Settings {
  DceParams params;
  std::optional<AxisRange> axis;
  std::optional<AxisRange> second_axis;
  std::optional<std::string> out;
  unsigned threads = 0;

  /// Requires `axis`; throws UsageError otherwise.
  SweepSpec sweep_spec() const;
};

/// Merges command-line values over config-file values (flags win), converts
/// units (mK -> K, GHz -> rad/s, mm -> m) and validates. Unset physical keys
/// keep the standard parameter point. Throws UsageError naming the offending
/// key.
Settings parse_config(const KeyValues& flags,
                      const std::optional<std::filesystem::path>& config_file = std::nullopt);

}  // namespace dcesteer

#endif  // DCESTEER_CONFIG_H_
