// Copyright 2026 The qreading Authors
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

#ifndef QREADING_CLI_H
#define QREADING_CLI_H

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "qreading/design.h"

namespace qreading {

enum ExitCode : int {
    kExitOk = 0,
    kExitVerifyFailed = 1,
    kExitUsage = 2,
    kExitDevice = 3,
    kExitIo = 4,
};

/// Parses an angle in radians: plain numbers ("0.5") or multiples of pi
/// ("pi", "pi/12", "3pi/4", "3*pi/4", "-pi/2"). Throws InvalidArgs.
double parse_angle(std::string_view text);

/// DesignResult as the JSON object printed by `design`.
nlohmann::ordered_json design_to_json(const DesignResult &result);

/// Entry point shared by the executable and the tests. `args` excludes the
/// program name.
int run_cli(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

}  // namespace qreading

#endif
