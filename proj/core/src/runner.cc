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

#include "dsqlt/runner.h"

#include <algorithm>
#include <cstdio>
#include <nlohmann/json.hpp>

#include "dsqlt/sqlite_session.h"

namespace dsqlt {
namespace {

std::optional<double> as_real(const SqlValue& v) {
  if (auto* i = std::get_if<std::int64_t>(&v)) return static_cast<double>(*i);
  if (auto* d = std::get_if<double>(&v)) return *d;
  if (auto* s = std::get_if<std::string>(&v)) {
    try {
      return std::stod(*s);
    } catch (const std::exception&) {
      return std::nullopt;
    }
  }
  return std::nullopt;
}

std::string location(const SqlStatement& s) {
  return "line " + std::to_string(s.source_span.begin.line);
}

}  // namespace

std::unique_ptr<Session> open_session(const ConnectionSpec& spec) {
  const size_t colon = spec.locator.find(':');
  if (colon == std::string::npos) {
    throw ConnectionError("connection locator '" + spec.locator +
                          "' is not of the form <engine>:<path-or-dsn>");
  }
  const std::string engine = spec.locator.substr(0, colon);
  const std::string target = spec.locator.substr(colon + 1);
  std::unique_ptr<Session> session;
  if (engine == "sqlite") {
    if (target.empty()) throw ConnectionError("sqlite locator needs a path");
    session = SqliteSession::open(target);
  } else {
    throw ConnectionError("no driver for engine '" + engine + "'");
  }
  if (session->dialect_family() != spec.dialect.kind) {
    throw ConnectionError("dialect '" + std::string(to_string(spec.dialect.kind)) +
                          "' does not match engine '" + engine + "'");
  }
  return session;
}

SqlValue percent_function(std::span<const SqlValue> args) {
  if (args.size() != 2) throw std::invalid_argument("percent() takes 2 arguments");
  auto num = as_real(args[0]);
  auto den = as_real(args[1]);
  if (!num || !den || *den == 0.0) return std::monostate{};
  return *num / *den;
}

std::optional<Diagnostic> register_helpers(Session& session) {
  if (!session.supports_functions()) {
    return Diagnostic{Severity::kWarning, std::string(code::kRegistrationUnsupported),
                      std::string(session.engine()) +
                          " session does not accept user functions; percent() "
                          "must already exist in the engine",
                      {}};
  }
  session.register_function("percent", 2, &percent_function);
  return std::nullopt;
}

bool RunReport::all_ok() const {
  return std::all_of(entries.begin(), entries.end(),
                     [](const RunEntry& e) { return e.ok; });
}

RunReport run_statements(std::span<const SqlStatement> statements,
                         Session& session, const RunOptions& options) {
  RunReport report;
  if (options.transactional) {
    ExecOutcome begin = session.execute("begin");
    if (!begin.ok) {
      report.warnings.warning(code::kUnsupportedInDialect, {},
                              "cannot open a transaction: " + begin.error);
    }
  }
  bool failed = false;
  for (const SqlStatement& stmt : statements) {
    if (stmt.truncate_degraded) {
      report.warnings.warning(code::kTruncateDegraded, stmt.source_span,
                              std::string(session.engine()) +
                                  " has no TRUNCATE; ran '" + stmt.text + "'");
    }
    const auto start = std::chrono::steady_clock::now();
    ExecOutcome outcome = session.execute(stmt.text);
    RunEntry entry;
    entry.elapsed = std::chrono::steady_clock::now() - start;
    entry.statement = stmt;
    entry.ok = outcome.ok;
    entry.rows_affected = outcome.rows_affected;
    if (!outcome.ok) entry.error = location(stmt) + ": " + outcome.error;
    report.entries.push_back(std::move(entry));
    if (!outcome.ok) {
      failed = true;
      if (options.stop_on_error) break;
    }
  }
  if (options.transactional) {
    session.execute(failed && options.stop_on_error ? "rollback" : "commit");
  }
  return report;
}

Dialect dialect_for(const Session& session, Dialect requested) {
  if (requested.kind == DialectKind::kPortable) {
    requested.truncate_supported = session.supports_truncate();
  }
  return requested;
}

RunReport run_script(const Script& script, Session& session,
                     const Dialect& dialect, const RunOptions& options) {
  const std::vector<SqlStatement> statements =
      emit_script(script, dialect_for(session, dialect));
  return run_statements(statements, session, options);
}

RunReport run_script(const Script& script, const ConnectionSpec& spec) {
  std::unique_ptr<Session> session = open_session(spec);
  std::optional<Diagnostic> warning = register_helpers(*session);
  RunReport report = run_script(script, *session, spec.dialect, spec.options);
  if (warning) report.warnings.add(*warning);
  return report;
}

std::string render_report_table(const RunReport& report) {
  std::string out;
  char line[160];
  std::snprintf(line, sizeof line, "%4s  %-18s  %8s  %10s  %s\n", "#", "kind",
                "rows", "ms", "outcome");
  out.append(line);
  for (size_t i = 0; i < report.entries.size(); ++i) {
    const RunEntry& e = report.entries[i];
    const std::string kind(to_string(e.statement.kind));
    std::snprintf(line, sizeof line, "%4zu  %-18s  %8lld  %10.3f  ", i + 1,
                  kind.c_str(), static_cast<long long>(e.rows_affected),
                  e.millis());
    out.append(line);
    out.append(e.ok ? "OK" : "ERROR " + e.error);
    out.push_back('\n');
  }
  for (const Diagnostic& w : report.warnings) {
    out.append(render(w, "run"));
    out.push_back('\n');
  }
  return out;
}

std::string render_report_jsonl(const RunReport& report) {
  std::string out;
  for (size_t i = 0; i < report.entries.size(); ++i) {
    const RunEntry& e = report.entries[i];
    nlohmann::json record = {
        {"index", i + 1},
        {"kind", std::string(to_string(e.statement.kind))},
        {"rows", e.rows_affected},
        {"millis", e.millis()},
        {"outcome", e.ok ? "OK" : "ERROR"},
        {"line", e.statement.source_span.begin.line},
        {"sql", e.statement.text},
    };
    if (!e.ok) record["error"] = e.error;
    out.append(record.dump());
    out.push_back('\n');
  }
  return out;
}

}  // namespace dsqlt
