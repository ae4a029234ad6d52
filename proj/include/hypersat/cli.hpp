// Copyright 2026 The hypersat Authors
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

#include <iosfwd>
#include <string>
#include <vector>

#include "hypersat/hypergraph.hpp"

namespace hypersat {

/// Exit statuses of run_cli.
inline constexpr int kExitOk = 0;
inline constexpr int kExitDomain = 1;
inline constexpr int kExitUsage = 2;

/// Runs one CLI invocation; args excludes the program name. Reports go to
/// out (or to --output), diagnostics and usage text to err.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Pattern named on the command line: edge:R, cycle:R:L, path:R:L,
/// complete:R:N, sts9, or a path to a hypergraph file.
Hypergraph resolve_pattern(const std::string& spec);

}  // namespace hypersat
