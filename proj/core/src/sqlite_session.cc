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

#include "dsqlt/sqlite_session.h"

#include <sqlite3.h>

#include <cctype>

namespace dsqlt {
namespace {

struct StmtCloser {
  void operator()(sqlite3_stmt* s) const { sqlite3_finalize(s); }
};
using StmtPtr = std::unique_ptr<sqlite3_stmt, StmtCloser>;

bool only_trailing_junk(const char* tail) {
  for (; tail && *tail; ++tail) {
    if (!std::isspace(static_cast<unsigned char>(*tail)) && *tail != ';') {
      return false;
    }
  }
  return true;
}

SqlValue read_value(sqlite3_value* v) {
  switch (sqlite3_value_type(v)) {
    case SQLITE_INTEGER: return static_cast<std::int64_t>(sqlite3_value_int64(v));
    case SQLITE_FLOAT: return sqlite3_value_double(v);
    case SQLITE_TEXT:
      return std::string(reinterpret_cast<const char*>(sqlite3_value_text(v)),
                         static_cast<size_t>(sqlite3_value_bytes(v)));
    default: return std::monostate{};
  }
}

SqlValue read_column(sqlite3_stmt* s, int i) {
  switch (sqlite3_column_type(s, i)) {
    case SQLITE_INTEGER: return static_cast<std::int64_t>(sqlite3_column_int64(s, i));
    case SQLITE_FLOAT: return sqlite3_column_double(s, i);
    case SQLITE_TEXT:
    case SQLITE_BLOB:
      return std::string(reinterpret_cast<const char*>(sqlite3_column_text(s, i)),
                         static_cast<size_t>(sqlite3_column_bytes(s, i)));
    default: return std::monostate{};
  }
}

void call_function(sqlite3_context* ctx, int argc, sqlite3_value** argv) {
  auto* fn = static_cast<ScalarFunction*>(sqlite3_user_data(ctx));
  std::vector<SqlValue> args;
  args.reserve(static_cast<size_t>(argc));
  for (int i = 0; i < argc; ++i) args.push_back(read_value(argv[i]));
  try {
    SqlValue result = (*fn)(args);
    if (auto* i = std::get_if<std::int64_t>(&result)) {
      sqlite3_result_int64(ctx, *i);
    } else if (auto* d = std::get_if<double>(&result)) {
      sqlite3_result_double(ctx, *d);
    } else if (auto* s = std::get_if<std::string>(&result)) {
      sqlite3_result_text(ctx, s->data(), static_cast<int>(s->size()),
                          SQLITE_TRANSIENT);
    } else {
      sqlite3_result_null(ctx);
    }
  } catch (const std::exception& e) {
    sqlite3_result_error(ctx, e.what(), -1);
  }
}

void destroy_function(void* p) { delete static_cast<ScalarFunction*>(p); }

}  // namespace

std::unique_ptr<SqliteSession> SqliteSession::open(const std::string& path) {
  sqlite3* db = nullptr;
  const int rc = sqlite3_open_v2(path.c_str(), &db,
                                 SQLITE_OPEN_READWRITE | SQLITE_OPEN_CREATE,
                                 nullptr);
  if (rc != SQLITE_OK) {
    std::string msg = db ? sqlite3_errmsg(db) : sqlite3_errstr(rc);
    sqlite3_close(db);
    throw ConnectionError("cannot open sqlite database '" + path + "': " + msg);
  }
  return std::unique_ptr<SqliteSession>(new SqliteSession(db));
}

SqliteSession::~SqliteSession() { sqlite3_close_v2(db_); }

ExecOutcome SqliteSession::execute(std::string_view sql) {
  sqlite3_stmt* raw = nullptr;
  const char* tail = nullptr;
  const std::int64_t before = sqlite3_total_changes64(db_);
  if (sqlite3_prepare_v2(db_, sql.data(), static_cast<int>(sql.size()), &raw,
                         &tail) != SQLITE_OK) {
    return {false, 0, sqlite3_errmsg(db_)};
  }
  StmtPtr stmt(raw);
  if (!stmt) return {false, 0, "empty statement"};
  if (!only_trailing_junk(tail)) {
    return {false, 0, "more than one statement in a single execute call"};
  }
  int rc;
  while ((rc = sqlite3_step(stmt.get())) == SQLITE_ROW) {
  }
  if (rc != SQLITE_DONE) return {false, 0, sqlite3_errmsg(db_)};
  return {true, sqlite3_total_changes64(db_) - before, {}};
}

void SqliteSession::register_function(const std::string& name, int arity,
                                      ScalarFunction fn) {
  auto* holder = new ScalarFunction(std::move(fn));
  const int rc = sqlite3_create_function_v2(
      db_, name.c_str(), arity, SQLITE_UTF8 | SQLITE_DETERMINISTIC, holder,
      &call_function, nullptr, nullptr, &destroy_function);
  if (rc != SQLITE_OK) {
    // sqlite calls the destructor on failure too.
    throw std::runtime_error("cannot register function '" + name +
                             "': " + sqlite3_errmsg(db_));
  }
}

std::vector<SqlRow> SqliteSession::query(const std::string& sql) {
  sqlite3_stmt* raw = nullptr;
  if (sqlite3_prepare_v2(db_, sql.c_str(), -1, &raw, nullptr) != SQLITE_OK) {
    throw std::runtime_error(sqlite3_errmsg(db_));
  }
  StmtPtr stmt(raw);
  std::vector<SqlRow> rows;
  int rc;
  while ((rc = sqlite3_step(stmt.get())) == SQLITE_ROW) {
    SqlRow row;
    const int n = sqlite3_column_count(stmt.get());
    for (int i = 0; i < n; ++i) row.push_back(read_column(stmt.get(), i));
    rows.push_back(std::move(row));
  }
  if (rc != SQLITE_DONE) throw std::runtime_error(sqlite3_errmsg(db_));
  return rows;
}

}  // namespace dsqlt
