// Copyright 2026 The dsqlt Authors
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

#ifndef DSQLT_TOOLS_CLI_H_
#define DSQLT_TOOLS_CLI_H_

#include <iosfwd>
#include <string>
#include <vector>

namespace dsqlt::cli {

// Exit codes. No other values are ever returned.
inline constexpr int kExitOk = 0;
inline constexpr int kExitScriptError = 1;  // diagnostics or failed statements
inline constexpr int kExitEnvironment = 2;  // I/O, usage, connection

// Runs `dsqlt <args...>`; `args` excludes the program name. Payload goes to
// `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace dsqlt::cli

#endif  // DSQLT_TOOLS_CLI_H_
