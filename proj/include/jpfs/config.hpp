// Copyright 2026 The jpfs Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Scenario configuration documents (JSON, `//` and `/* */` comments allowed)
// and the JSON form of run results.
//
// Parsing is strict: unknown keys and wrong types are SchemaError, out of
// range values are SchemaError, infeasible scenarios are ScenarioError.
// Every omitted field resolves to its default, and config_to_json writes the
// fully resolved document back, so an echoed config reproduces its run.

#pragma once

#include <string>
#include <string_view>

#include <json.hpp>

#include "jpfs/sim.hpp"

namespace jpfs {

ScenarioConfig parse_config_text(std::string_view text);
ScenarioConfig parse_config_json(const nlohmann::json& doc);
// Throws FileNotFoundError when the file cannot be opened.
ScenarioConfig parse_config_file(const std::string& path);

nlohmann::json config_to_json(const ScenarioConfig& config);
nlohmann::json run_result_to_json(const RunResult& result);

}  // namespace jpfs
