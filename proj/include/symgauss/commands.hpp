// Copyright 2026 The symgauss Authors
//
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

#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>

#include "json.hpp"
#include "symgauss/error.hpp"
#include "symgauss/estimation.hpp"
#include "symgauss/model_file.hpp"

namespace symgauss::cli {

using Json = nlohmann::ordered_json;

inline constexpr std::string_view kToolName = "symgauss";
inline constexpr std::string_view kToolVersion = "0.1.0";

// Exit codes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitValidation = 2;
inline constexpr int kExitConvergence = 3;
inline constexpr int kExitInconsistent = 4;

int exit_code_for(ErrorKind kind);

struct ModelInput {
  std::string path;
  std::string digest;
  ModelSpec spec;

  static ModelInput load(const std::string& path);
  static ModelInput from_text(std::string path, std::string_view text);
};

struct DataInput {
  std::string path;
  std::string digest;
  std::string text;

  static DataInput load(const std::string& path);
  static DataInput from_text(std::string path, std::string text);
};

struct CommandOutput {
  Json report;
  int exit_code = kExitOk;
};

CommandOutput cmd_check(const ModelInput& model, const std::optional<std::string>& mean);
CommandOutput cmd_refine(const ModelInput& model);
CommandOutput cmd_orbits(const ModelInput& model);
CommandOutput cmd_fit(const ModelInput& model, const DataInput& data, const std::optional<std::string>& mean,
                      const FitOptions& opts = {});
CommandOutput cmd_lrt(const ModelInput& model, const DataInput& data, const std::optional<std::string>& null_mean,
                      const std::optional<std::string>& alt_mean, const FitOptions& opts = {});
CommandOutput cmd_oracle(const ModelInput& model, const std::optional<std::string>& mean, int samples,
                         std::uint64_t seed);

// Runs `body`; a thrown Error becomes a report with an "error" member and the
// mapped exit code.
CommandOutput guarded(std::string_view command, const std::function<CommandOutput()>& body);

std::string render_structured(const Json& report);
std::string render_human(const Json& report);

}  // namespace symgauss::cli
