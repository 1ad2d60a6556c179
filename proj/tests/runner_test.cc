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

#include <gtest/gtest.h>
#include <sqlite3.h>

#include <algorithm>
#include <fstream>
#include <nlohmann/json.hpp>
#include <sstream>

#include "dsqlt/analyzer.h"
#include "dsqlt/sqlite_session.h"

namespace dsqlt {
namespace {

std::string slurp(const std::string& rel) {
  std::ifstream in(std::string(DSQLT_TEST_DATA_DIR) + "/" + rel, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

Script compiled(std::string_view text) {
  CompileResult r = compile(text, "t");
  EXPECT_TRUE(r.ok()) << render(r.diagnostics, "t");
  return r.script;
}

// Sorted text rendering of every row, read through the raw C API.
std::vector<std::string> table_rows(sqlite3* db, const std::string& table) {
  std::vector<std::string> rows;
  sqlite3_stmt* st = nullptr;
  const std::string sql = "select * from " + table;
  if (sqlite3_prepare_v2(db, sql.c_str(), -1, &st, nullptr) != SQLITE_OK) return {"<missing>"};
  while (sqlite3_step(st) == SQLITE_ROW) {
    std::string row;
    for (int c = 0; c < sqlite3_column_count(st); ++c) {
      const unsigned char* v = sqlite3_column_text(st, c);
      row += v ? reinterpret_cast<const char*>(v) : "NULL";
      row += '|';
    }
    rows.push_back(row);
  }
  sqlite3_finalize(st);
  std::sort(rows.begin(), rows.end());
  return rows;
}

void raw_exec(sqlite3* db, const std::string& sql) {
  char* err = nullptr;
  ASSERT_EQ(sqlite3_exec(db, sql.c_str(), nullptr, nullptr, &err), SQLITE_OK)
      << sql << ": " << (err ? err : "");
}

long long raw_count(sqlite3* db, const std::string& sql) {
  sqlite3_stmt* st = nullptr;
  sqlite3_prepare_v2(db, sql.c_str(), -1, &st, nullptr);
  long long n = -1;
  if (sqlite3_step(st) == SQLITE_ROW) n = sqlite3_column_int64(st, 0);
  sqlite3_finalize(st);
  return n;
}

constexpr const char* kSeed =
    "create table table_n_1(id integer, source_item_1 integer, source_item_2 integer, "
    "source_item_3 integer, source_item_4 integer, source_item_5 integer, "
    "source_item_6 text);"
    "insert into table_n_1 values"
    "(1,1,2,10,1,95,'a'),(2,0,5,20,2,90,'b'),(3,7,7,30,3,89,'c'),"
    "(4,3,0,40,4,100,'d'),(5,9,3,50,5,12,'e'),(6,4,8,60,6,50,'f');";

std::unique_ptr<SqliteSession> seeded() {
  auto s = SqliteSession::open(":memory:");
  raw_exec(s->handle(), kSeed);
  register_helpers(*s);
  return s;
}

TEST(Percent, Values) {
  auto call = [](SqlValue a, SqlValue b) {
    const SqlValue args[] = {std::move(a), std::move(b)};
    return percent_function(args);
  };
  EXPECT_EQ(call(std::int64_t{1}, std::int64_t{2}), SqlValue(0.5));
  EXPECT_EQ(call(std::int64_t{0}, std::int64_t{5}), SqlValue(0.0));
  EXPECT_EQ(call(std::int64_t{7}, std::int64_t{7}), SqlValue(1.0));
  EXPECT_EQ(call(2.5, std::string("5")), SqlValue(0.5));
  EXPECT_TRUE(std::holds_alternative<std::monostate>(call(std::int64_t{1}, std::int64_t{0})));
  EXPECT_TRUE(std::holds_alternative<std::monostate>(call(std::monostate{}, std::int64_t{3})));
}

TEST(Percent, RegisteredInSqlite) {
  auto s = seeded();
  auto rows = s->query("select percent(1,2), percent(0,5), percent(7,7), percent(1,0)");
  ASSERT_EQ(rows.size(), 1u);
  EXPECT_EQ(rows[0][0], SqlValue(0.5));
  EXPECT_EQ(rows[0][1], SqlValue(0.0));
  EXPECT_EQ(rows[0][2], SqlValue(1.0));
  EXPECT_TRUE(std::holds_alternative<std::monostate>(rows[0][3]));
}

TEST(Run, Example4DeletesMatchingRows) {
  auto s = seeded();
  const long long expected =
      raw_count(s->handle(), "select count(*) from table_n_1 where source_item_5>89");
  ASSERT_EQ(expected, 3);
  RunReport r = run_script(compiled(slurp("examples/example4.dsql")), *s, Dialect::portable());
  ASSERT_EQ(r.entries.size(), 1u);
  EXPECT_TRUE(r.entries[0].ok) << r.entries[0].error;
  EXPECT_EQ(r.entries[0].rows_affected, expected);
  EXPECT_EQ(raw_count(s->handle(), "select count(*) from table_n_1"), 3);
}

TEST(Run, FourStepScriptMatchesHandWrittenSql) {
  constexpr const char* kScript = R"(
{TABLE: summary
COMMAND: only create
id==integer
ratio==real
total==integer
}
{TABLE: summary
COMMAND: insert
id==id
ratio==percent(source_item_1,source_item_2)
total==source_item_3+source_item_4
FROM: table_n_1
WHERE: source_item_5>40
}
{TABLE: summary
COMMAND: update
total==total*2
WHERE: id<3
}
{TABLE: summary
COMMAND: delete
WHERE: ratio IS NULL
}
)";
  auto s = seeded();
  RunReport r = run_script(compiled(kScript), *s, Dialect::portable());
  ASSERT_EQ(r.entries.size(), 4u);
  for (const auto& e : r.entries) EXPECT_TRUE(e.ok) << e.error;

  sqlite3* oracle = nullptr;
  sqlite3_open(":memory:", &oracle);
  raw_exec(oracle, kSeed);
  raw_exec(oracle, "create table summary(id integer, ratio real, total integer)");
  raw_exec(oracle,
           "insert into summary select id, case when source_item_2=0 then null else "
           "1.0*source_item_1/source_item_2 end, source_item_3+source_item_4 "
           "from table_n_1 where source_item_5>40");
  const long long inserted = sqlite3_changes(oracle);
  raw_exec(oracle, "update summary set total=total*2 where id<3");
  const long long updated = sqlite3_changes(oracle);
  raw_exec(oracle, "delete from summary where ratio is null");
  const long long deleted = sqlite3_changes(oracle);

  EXPECT_EQ(table_rows(s->handle(), "summary"), table_rows(oracle, "summary"));
  EXPECT_EQ(r.entries[1].rows_affected, inserted);
  EXPECT_EQ(r.entries[2].rows_affected, updated);
  EXPECT_EQ(r.entries[3].rows_affected, deleted);
  sqlite3_close(oracle);
}

TEST(Run, EmptyScriptGivesEmptyReport) {
  auto s = seeded();
  RunReport r = run_script(Script{}, *s, Dialect::portable());
  EXPECT_TRUE(r.entries.empty());
  EXPECT_TRUE(r.all_ok());
  EXPECT_EQ(render_report_jsonl(r), "");
}

constexpr const char* kFailsSecond = R"(
{TABLE: t
COMMAND: only create
id==integer primary key
}
{TABLE: t
COMMAND: insert
id==1
}
{TABLE: t
COMMAND: insert
id==1
}
{TABLE: t
COMMAND: insert
id==2
}
)";

TEST(Run, StopOnErrorStopsAfterTheFailure) {
  auto s = seeded();
  RunReport r = run_script(compiled(kFailsSecond), *s, Dialect::portable());
  ASSERT_EQ(r.entries.size(), 3u);
  EXPECT_TRUE(r.entries[1].ok);
  EXPECT_FALSE(r.entries[2].ok);
  EXPECT_NE(r.entries[2].error.find("line 10"), std::string::npos) << r.entries[2].error;
  EXPECT_FALSE(r.all_ok());
}

TEST(Run, KeepGoingRunsEverything) {
  auto s = seeded();
  RunReport r = run_script(compiled(kFailsSecond), *s, Dialect::portable(),
                           RunOptions{false, false});
  ASSERT_EQ(r.entries.size(), 4u);
  EXPECT_FALSE(r.entries[2].ok);
  EXPECT_TRUE(r.entries[3].ok);
  EXPECT_EQ(raw_count(s->handle(), "select count(*) from t"), 2);
}

TEST(Run, TransactionalRollsBackOnStop) {
  auto s = seeded();
  raw_exec(s->handle(), "create table t(id integer primary key)");
  const std::string text = std::string(kFailsSecond).substr(std::string(kFailsSecond).find("}") + 1);
  RunReport r = run_script(compiled(text), *s, Dialect::portable(), RunOptions{true, true});
  ASSERT_EQ(r.entries.size(), 2u);
  EXPECT_EQ(raw_count(s->handle(), "select count(*) from t"), 0);
}

TEST(Run, TruncateDegradesWithWarning) {
  auto s = seeded();
  RunReport r = run_script(compiled("{TABLE: table_n_1\nCOMMAND: truncate\n}"), *s,
                           Dialect::portable());
  ASSERT_EQ(r.entries.size(), 1u);
  EXPECT_TRUE(r.entries[0].ok);
  EXPECT_EQ(r.entries[0].statement.text, "delete from table_n_1");
  EXPECT_EQ(r.entries[0].rows_affected, 6);
  ASSERT_EQ(r.warnings.size(), 1u);
  EXPECT_EQ(r.warnings.items()[0].code, code::kTruncateDegraded);
}

TEST(Run, EntriesFollowStatementOrderAndAreDeterministic) {
  auto script = compiled(R"(
{TABLE: a
COMMAND: create
*==*
FROM: table_n_1
}
{TABLE: a
COMMAND: update
source_item_6=='z'
WHERE: id>2
}
{TABLE: a
COMMAND: delete
WHERE: id=1
}
)");
  std::vector<std::int64_t> first;
  for (int run = 0; run < 2; ++run) {
    auto s = seeded();
    RunReport r = run_script(script, *s, Dialect::portable());
    auto stmts = emit_script(script, dialect_for(*s, Dialect::portable()));
    ASSERT_EQ(r.entries.size(), stmts.size());
    std::vector<std::int64_t> counts;
    for (size_t i = 0; i < stmts.size(); ++i) {
      EXPECT_EQ(r.entries[i].statement, stmts[i]);
      counts.push_back(r.entries[i].rows_affected);
    }
    if (run == 0) first = counts;
    EXPECT_EQ(counts, first);
  }
  EXPECT_EQ(first, (std::vector<std::int64_t>{0, 4, 1}));
}

TEST(Connect, Errors) {
  auto open = [](std::string locator, Dialect d = Dialect::portable()) {
    return open_session(ConnectionSpec{std::move(locator), d, {}});
  };
  EXPECT_THROW(open("nocolon"), ConnectionError);
  EXPECT_THROW(open("postgres:db"), ConnectionError);
  EXPECT_THROW(open("sqlite:"), ConnectionError);
  EXPECT_THROW(open("sqlite:/nonexistent/dir/x.db"), ConnectionError);
  EXPECT_THROW(open("sqlite::memory:", Dialect::oracle()), ConnectionError);
  EXPECT_NO_THROW(open("sqlite::memory:"));
}

TEST(Connect, RunScriptBySpec) {
  RunReport r = run_script(compiled("{TABLE: t\nCOMMAND: only create\nx==integer\n}\n"
                                    "{TABLE: t\nCOMMAND: insert\nx==percent(7,7)\n}"),
                           ConnectionSpec{"sqlite::memory:", Dialect::portable(), {}});
  ASSERT_EQ(r.entries.size(), 2u);
  EXPECT_TRUE(r.all_ok());
}

class NoFunctionsSession final : public Session {
 public:
  std::string_view engine() const override { return "stub"; }
  DialectKind dialect_family() const override { return DialectKind::kOracleStyle; }
  ExecOutcome execute(std::string_view) override { return {true, 0, ""}; }
  bool supports_truncate() const override { return true; }
};

TEST(Helpers, UnsupportedRegistrationWarns) {
  NoFunctionsSession s;
  auto w = register_helpers(s);
  ASSERT_TRUE(w);
  EXPECT_EQ(w->code, code::kRegistrationUnsupported);
  EXPECT_EQ(w->severity, Severity::kWarning);
  EXPECT_THROW(s.register_function("f", 1, percent_function), RegistrationUnsupported);
}

TEST(Report, TableAndJsonLines) {
  auto s = seeded();
  RunReport r = run_script(compiled(kFailsSecond), *s, Dialect::portable());
  const std::string table = render_report_table(r);
  EXPECT_NE(table.find("CREATE_TABLE_BASIC"), std::string::npos);
  EXPECT_NE(table.find("ERROR"), std::string::npos);

  std::istringstream lines(render_report_jsonl(r));
  std::string line;
  int n = 0;
  while (std::getline(lines, line)) {
    auto j = nlohmann::json::parse(line);
    ++n;
    EXPECT_EQ(j.at("index").get<int>(), n);
    for (const char* key : {"kind", "rows", "millis", "outcome"}) EXPECT_TRUE(j.contains(key));
  }
  EXPECT_EQ(n, 3);
}

}  // namespace
}  // namespace dsqlt
