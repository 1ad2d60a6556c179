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

// SQL generation from validated, normalized scripts.
//
// Output keywords are lower case; identifiers, literals and function names
// pass through unchanged. Qualified names lose the space after the dot
// (`A. NAME` becomes `A.NAME`). Multiple WHERE/HAVING conditions are joined
// with AND.
//
//   command          SQL
//   INSERT (FROM)    insert into t(c1,c2) select ...      (no column list for `*`)
//   INSERT (values)  insert into t(c1,c2) values(v1,v2)
//   UPDATE           update t set c1=v1,c2=v2 where ...
//   UPDATE nested    update t set (c1,c2) = (select ... from ... where ...) where ...
//   DELETE           delete from t where ...
//   TRUNCATE         truncate table t                     (portable fallback: delete from t)
//   CREATE VIEW      create view t as select ...
//   ONLY CREATE      create table t(c1 NUMBER,c2 VARCHAR(20))
//   CREATE           create table t as select ...
//   DROP / DROP VIEW drop table t / drop view t
//   CREATE INDEX     create index ix on t(c1,c2)
//
// A chain of blocks joined by set operators becomes one statement: the
// first block supplies the insert/create prefix and every block supplies a
// select body.

#ifndef DSQLT_EMITTER_H_
#define DSQLT_EMITTER_H_

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "dsqlt/ast.h"
#include "dsqlt/diagnostic.h"

namespace dsqlt {

enum class DialectKind { kOracleStyle, kPortable };

struct Dialect {
  DialectKind kind = DialectKind::kPortable;
  // Only consulted for kPortable. Oracle-style output always uses
  // `truncate table`.
  bool truncate_supported = false;

  static Dialect oracle() { return {DialectKind::kOracleStyle, true}; }
  static Dialect portable(bool truncate_supported = false) {
    return {DialectKind::kPortable, truncate_supported};
  }

  friend bool operator==(const Dialect&, const Dialect&) = default;
};

std::string_view to_string(DialectKind kind);

struct SqlStatement {
  std::string text;  // one statement, no terminator
  SourceSpan source_span;
  CommandKind kind = CommandKind::kInsertSelect;
  bool truncate_degraded = false;  // TRUNCATE emitted as `delete from`

  friend bool operator==(const SqlStatement&, const SqlStatement&) = default;
};

struct EmitOptions {
  bool pretty = false;  // break lines before major clauses
};

class EmitError : public ScriptError {
 public:
  using ScriptError::ScriptError;
};

std::string render_expression(const Expression& expr);

// `select [distinct] items from ... [where ...] [group by ...] [having ...]
// [order by ...]` for a query-family block.
std::string emit_query_body(const OperationBlock& block,
                            const EmitOptions& options = {});

SqlStatement emit_statement(const OperationBlock& block, const Dialect& dialect,
                            const EmitOptions& options = {});

// Throws EmitError(OrderByInNonFinalBlock) if a non-final block has ORDER BY.
SqlStatement emit_chain(const Chain& chain, const Dialect& dialect,
                        const EmitOptions& options = {});

// One statement per chain, in source order.
std::vector<SqlStatement> emit_script(const Script& script,
                                      const Dialect& dialect,
                                      const EmitOptions& options = {});

// One statement per line (or per paragraph when pretty), optionally with `;`.
std::string format_statements(std::span<const SqlStatement> statements,
                              bool terminator);

}  // namespace dsqlt

#endif  // DSQLT_EMITTER_H_
