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

#ifndef DSQLT_SQLITE_SESSION_H_
#define DSQLT_SQLITE_SESSION_H_

#include <memory>
#include <string>
#include <vector>

#include "dsqlt/session.h"

struct sqlite3;

namespace dsqlt {

// Embedded SQLite engine. Portable dialect; no TRUNCATE.
class SqliteSession final : public Session {
 public:
  // `path` is a file name or ":memory:". Throws ConnectionError.
  static std::unique_ptr<SqliteSession> open(const std::string& path);

  ~SqliteSession() override;
  SqliteSession(const SqliteSession&) = delete;
  SqliteSession& operator=(const SqliteSession&) = delete;

  std::string_view engine() const override { return "sqlite"; }
  DialectKind dialect_family() const override { return DialectKind::kPortable; }
  ExecOutcome execute(std::string_view sql) override;
  bool supports_truncate() const override { return false; }
  bool supports_functions() const override { return true; }
  void register_function(const std::string& name, int arity,
                         ScalarFunction fn) override;

  // Runs a query and returns all rows. Throws std::runtime_error on failure.
  std::vector<SqlRow> query(const std::string& sql);

  sqlite3* handle() const { return db_; }

 private:
  explicit SqliteSession(sqlite3* db) : db_(db) {}

  sqlite3* db_;
};

}  // namespace dsqlt

#endif  // DSQLT_SQLITE_SESSION_H_
