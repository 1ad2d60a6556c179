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

#include "cli.h"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "dsqlt/analyzer.h"
#include "dsqlt/emitter.h"
#include "dsqlt/runner.h"

namespace dsqlt::cli {
namespace {

struct LoadedScript {
  std::string path;
  CompileResult compiled;
};

std::optional<std::string> read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return std::nullopt;
  std::ostringstream buf;
  buf << in.rdbuf();
  if (in.bad()) return std::nullopt;
  return buf.str();
}

// Loads and compiles every file, printing diagnostics. Returns an exit code
// if processing must stop.
std::optional<int> load_all(const std::vector<std::string>& paths,
                            std::vector<LoadedScript>& scripts, std::ostream& err) {
  bool any_error = false;
  for (const auto& path : paths) {
    auto text = read_file(path);
    if (!text) {
      err << "dsqlt: cannot read '" << path << "'\n";
      return kExitEnvironment;
    }
    LoadedScript loaded{path, compile(*text, path)};
    err << render(loaded.compiled.diagnostics, path);
    any_error |= !loaded.compiled.ok();
    scripts.push_back(std::move(loaded));
  }
  if (any_error) return kExitScriptError;
  return std::nullopt;
}

Dialect make_dialect(const std::string& name) {
  return name == "oracle" ? Dialect::oracle() : Dialect::portable();
}

int cmd_check(const std::vector<std::string>& paths, std::ostream& err) {
  std::vector<LoadedScript> scripts;
  if (auto code = load_all(paths, scripts, err)) return *code;
  return kExitOk;
}

struct EmitFlags {
  std::string dialect = "portable";
  std::string out_path;
  bool terminator = false;
  bool pretty = false;
};

int cmd_emit(const std::vector<std::string>& paths, const EmitFlags& flags,
             std::ostream& out, std::ostream& err) {
  std::vector<LoadedScript> scripts;
  if (auto code = load_all(paths, scripts, err)) return *code;

  std::vector<SqlStatement> statements;
  try {
    for (const auto& s : scripts) {
      auto emitted = emit_script(s.compiled.script, make_dialect(flags.dialect),
                                 EmitOptions{flags.pretty});
      statements.insert(statements.end(), emitted.begin(), emitted.end());
    }
  } catch (const EmitError& e) {
    err << render(e.to_diagnostic(), "emit") << '\n';
    return kExitScriptError;
  }
  const std::string text = format_statements(statements, flags.terminator);
  if (flags.out_path.empty()) {
    out << text;
    return out ? kExitOk : kExitEnvironment;
  }
  std::ofstream file(flags.out_path, std::ios::binary | std::ios::trunc);
  file << text;
  file.close();
  if (!file) {
    err << "dsqlt: cannot write '" << flags.out_path << "'\n";
    return kExitEnvironment;
  }
  return kExitOk;
}

struct RunFlags {
  std::string connect;
  std::string dialect = "portable";
  bool keep_going = false;
  bool transactional = false;
  std::string report_path;
};

int cmd_run(const std::vector<std::string>& paths, RunFlags flags,
            std::ostream& out, std::ostream& err) {
  if (flags.connect.empty()) {
    if (const char* env = std::getenv("DSQLT_CONNECT")) flags.connect = env;
  }
  if (flags.connect.empty()) {
    err << "dsqlt: no connection given (use --connect or DSQLT_CONNECT)\n";
    return kExitEnvironment;
  }
  std::vector<LoadedScript> scripts;
  if (auto code = load_all(paths, scripts, err)) return *code;

  ConnectionSpec spec{flags.connect, make_dialect(flags.dialect),
                      RunOptions{!flags.keep_going, flags.transactional}};
  std::unique_ptr<Session> session;
  try {
    session = open_session(spec);
  } catch (const ConnectionError& e) {
    err << "dsqlt: " << e.what() << '\n';
    return kExitEnvironment;
  }
  std::optional<Diagnostic> helper_warning = register_helpers(*session);

  // All files form one batch in one session.
  const Dialect dialect = dialect_for(*session, spec.dialect);
  std::vector<SqlStatement> statements;
  try {
    for (const auto& s : scripts) {
      auto emitted = emit_script(s.compiled.script, dialect);
      statements.insert(statements.end(), emitted.begin(), emitted.end());
    }
  } catch (const EmitError& e) {
    err << render(e.to_diagnostic(), "emit") << '\n';
    return kExitScriptError;
  }
  RunReport report = run_statements(statements, *session, spec.options);
  if (helper_warning) report.warnings.add(*helper_warning);

  out << render_report_table(report);
  if (!flags.report_path.empty()) {
    std::ofstream file(flags.report_path, std::ios::binary | std::ios::trunc);
    file << render_report_jsonl(report);
    file.close();
    if (!file) {
      err << "dsqlt: cannot write '" << flags.report_path << "'\n";
      return kExitEnvironment;
    }
  }
  return report.all_ok() ? kExitOk : kExitScriptError;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Translate data-integration scripts to SQL and run them", "dsqlt"};
  app.require_subcommand(1);

  std::vector<std::string> paths;

  auto* check = app.add_subcommand("check", "Parse and validate script files");
  check->add_option("files", paths, "Script files")->required();

  EmitFlags emit_flags;
  auto* emit = app.add_subcommand("emit", "Print the SQL for script files");
  emit->add_option("files", paths, "Script files")->required();
  emit->add_option("--dialect", emit_flags.dialect, "SQL dialect")
      ->transform(CLI::IsMember({"oracle", "portable"}, CLI::ignore_case));
  emit->add_option("--out", emit_flags.out_path, "Write SQL to FILE");
  emit->add_flag("--terminator", emit_flags.terminator, "End statements with ';'");
  emit->add_flag("--pretty", emit_flags.pretty, "Multi-line statements");

  RunFlags run_flags;
  auto* run_cmd = app.add_subcommand("run", "Execute script files in order");
  run_cmd->add_option("files", paths, "Script files")->required();
  run_cmd->add_option("--connect", run_flags.connect,
                      "<engine>:<path-or-dsn>; defaults to $DSQLT_CONNECT");
  run_cmd->add_option("--dialect", run_flags.dialect, "SQL dialect")
      ->transform(CLI::IsMember({"oracle", "portable"}, CLI::ignore_case));
  auto* stop = run_cmd->add_flag("--stop-on-error",
                                 "Stop at the first failing statement (default)");
  auto* keep = run_cmd->add_flag("--keep-going", run_flags.keep_going,
                                 "Run every statement even after a failure");
  stop->excludes(keep);
  run_cmd->add_flag("--transactional", run_flags.transactional,
                    "Wrap the batch in one transaction");
  run_cmd->add_option("--report", run_flags.report_path,
                      "Write a JSON-lines report to FILE");

  std::vector<const char*> argv{"dsqlt"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitEnvironment;
  }

  if (check->parsed()) return cmd_check(paths, err);
  if (emit->parsed()) return cmd_emit(paths, emit_flags, out, err);
  return cmd_run(paths, run_flags, out, err);
}

}  // namespace dsqlt::cli
