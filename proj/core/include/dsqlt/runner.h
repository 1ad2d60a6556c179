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

// Sequential execution of emitted statements against a Session.
//
// Statements run one at a time, in script order, in a single session.
// Blocks routinely depend on the effects of earlier ones (create before
// insert, insert before update), so nothing is reordered or parallelized.

#ifndef DSQLT_RUNNER_H_
#define DSQLT_RUNNER_H_

#include <chrono>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "dsqlt/ast.h"
#include "dsqlt/diagnostic.h"
#include "dsqlt/emitter.h"
#include "dsqlt/session.h"

namespace dsqlt {

struct RunOptions {
  bool stop_on_error = true;
  bool transactional = false;  // wrap the whole batch in begin/commit
};

// `<engine>:<path-or-dsn>`, e.g. `sqlite::memory:` or `sqlite:/tmp/x.db`.
struct ConnectionSpec {
  std::string locator;
  Dialect dialect = Dialect::portable();
  RunOptions options;
};

// Throws ConnectionError for unknown engines, unreachable targets, or a
// dialect that does not match the engine family.
std::unique_ptr<Session> open_session(const ConnectionSpec& spec);

// percent(a, b) = a / b as a real number; NULL if either argument is NULL or
// b is zero (the same result SQLite gives for division by zero).
SqlValue percent_function(std::span<const SqlValue> args);

// Registers the script helper functions (currently `percent`). Returns a
// RegistrationUnsupported warning instead of throwing when the session
// cannot take user functions.
std::optional<Diagnostic> register_helpers(Session& session);

struct RunEntry {
  SqlStatement statement;
  bool ok = true;
  std::int64_t rows_affected = 0;
  std::string error;
  std::chrono::nanoseconds elapsed{0};

  double millis() const {
    return std::chrono::duration<double, std::milli>(elapsed).count();
  }
};

struct RunReport {
  std::vector<RunEntry> entries;  // same order as the statements
  Diagnostics warnings;

  bool all_ok() const;
};

RunReport run_statements(std::span<const SqlStatement> statements,
                         Session& session, const RunOptions& options = {});

// Emits `script` for the session's capabilities and runs it.
RunReport run_script(const Script& script, Session& session,
                     const Dialect& dialect, const RunOptions& options = {});

// Opens a session from `spec`, registers helpers and runs `script`.
// Throws ConnectionError.
RunReport run_script(const Script& script, const ConnectionSpec& spec);

// Dialect adjusted to what the session can execute.
Dialect dialect_for(const Session& session, Dialect requested);

// Human-readable table, one row per statement.
std::string render_report_table(const RunReport& report);

// One JSON object per line: index, kind, rows, millis, outcome.
std::string render_report_jsonl(const RunReport& report);

}  // namespace dsqlt

#endif  // DSQLT_RUNNER_H_
