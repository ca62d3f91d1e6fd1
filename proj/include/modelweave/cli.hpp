/*
 * Copyright 2026 the modelweave authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#ifndef MODELWEAVE_CLI_HPP
#define MODELWEAVE_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

namespace modelweave {

// Process exit codes shared by every subcommand.
inline constexpr int kExitSuccess = 0; // inputs processed, nothing failed
inline constexpr int kExitFailure = 1; // domain failure: invalid model, conflict, ...
inline constexpr int kExitUsage = 2;   // bad invocation or I/O problem

/// Runs the command line tool in-process. `args` excludes the program name.
/// Reports go to `out`, diagnostics and errors to `err`; returns the exit
/// code. The real binary is a thin wrapper around this.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace modelweave

#endif // MODELWEAVE_CLI_HPP
