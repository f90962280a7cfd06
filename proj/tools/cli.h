// Copyright 2026 The symdetect Authors
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

#ifndef SYMDETECT_TOOLS_CLI_H
#define SYMDETECT_TOOLS_CLI_H

#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

namespace symdetect::cli {

inline constexpr std::uint64_t kDefaultSeed = 20260101;
inline constexpr const char *kSeedEnv = "SYMDETECT_SEED";

enum ExitCode : int {
    kOk = 0,
    kDetectionFailure = 1,
    kUsageError = 2,
};

/// Runs one command line. args excludes the program name. Results go to out
/// (or to --out), diagnostics to err.
int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

}  // namespace symdetect::cli

#endif  // SYMDETECT_TOOLS_CLI_H
