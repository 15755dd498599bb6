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

#ifndef APHASE_ERRORS_H
#define APHASE_ERRORS_H

#include <stdexcept>
#include <string>

namespace aphase {

/// Bad user-facing input: malformed config, out-of-range parameters,
/// inconsistent shapes.
class ConfigError : public std::invalid_argument {
   public:
    using std::invalid_argument::invalid_argument;
};

/// A model or numerical invariant failed (normalization, nonnegativity,
/// impossible outcome, singular calibration).
class InvariantViolation : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

}  // namespace aphase

#endif
