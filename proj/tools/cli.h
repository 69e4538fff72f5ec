// Copyright 2026 The qtel Authors
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

#ifndef QTEL_TOOLS_CLI_H
#define QTEL_TOOLS_CLI_H

#include <iosfwd>
#include <string>
#include <vector>

namespace qtel::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitAssertion = 1;
inline constexpr int kExitUsage = 2;

/// Parses `args` (without the program name), runs the subcommand and writes
/// the report to `out`. Returns the process exit status.
int dispatch(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

}  // namespace qtel::cli

#endif  // QTEL_TOOLS_CLI_H
