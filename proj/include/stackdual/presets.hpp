#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "stackdual/session.hpp"

namespace stackdual {

using PresetParams = std::map<std::string, std::int64_t>;

struct Preset {
  std::string name;
  std::string summary;
  std::string expectation;
  /// Parameter names with their defaults.
  PresetParams defaults;
  std::function<std::string(const PresetParams&)> session;
  /// Failure messages; empty when the report meets the expectation.
  std::function<std::vector<std::string>(const RunReport&, const PresetParams&)> check;
};

/// Catalog of worked examples, sorted by name.
const std::vector<Preset>& presets();
const Preset* find_preset(const std::string& name);

struct PresetRun {
  std::string session;
  RunReport report;
  std::vector<std::string> failures;
  int exit_code = kExitOk;
};

/// Unknown parameter names raise InvalidArgument.
PresetRun run_preset(const Preset& preset, const PresetParams& overrides, const RunOptions& options);

}  // namespace stackdual
