// Copyright 2026 The aphase Authors
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

#ifndef APHASE_TOOLS_CLI_H
#define APHASE_TOOLS_CLI_H

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

namespace aphase::cli {

enum ExitCode : int {
    kSuccess = 0,
    kConfigError = 1,
    kInvariantViolation = 2,
    kIoError = 3,
};

/// Everything a subcommand can be configured with. Populated from an optional
/// JSON config file, then overridden by command-line flags.
struct RunConfig {
    uint64_t seed = 1;
    int trials = 1000;
    int trials_per_plan = 2000;
    std::vector<int> N = {4, 9, 15, 25, 37, 48};
    std::string fixtures = "experimental";
    std::string policy = "adaptive";
    int bootstrap_samples = 10000;
    std::string out;
    int workers = 0;
    int grid = 256;
    int policy_grid = 1024;
    double visibility = 0.976;
    std::string heisenberg = "tan";
    std::string plan;
    std::string J;
    std::string phi = "random";
    bool state_loss = false;
    int copies = 1;
    int resource_cap = 64;

    void validate() const;
    /// Resolved configuration recorded in result files. Excludes `workers`,
    /// which changes scheduling but never results.
    nlohmann::json to_json() const;
    /// Applies keys present in `j`; unknown keys are a config error.
    void merge(const nlohmann::json &j);
};

/// Runs the tool with argv-style arguments (args[0] is the program name).
int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

}  // namespace aphase::cli

#endif
