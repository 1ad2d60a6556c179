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

#include "dsqlt/emitter.h"

namespace dsqlt {
namespace {

std::string sep(const EmitOptions& options) {
  return options.pretty ? "\n" : " ";
}

template <typename T, typename F>
std::string join(const std::vector<T>& items, std::string_view delim, F&& fn) {
  std::string out;
  for (size_t i = 0; i < items.size(); ++i) {
    if (i > 0) out.append(delim);
    out.append(fn(items[i]));
  }
  return out;
}

std::string select_item(const Assignment& a) {
  std::string out = render_expression(a.expr);
  if (a.alias) {
    out.push_back(' ');
    out.append(*a.alias);
  }
  return out;
}

std::string select_list(const std::vector<Assignment>& items) {
  std::string out = "select ";
  if (!items.empty() && items.front().distinct) out.append("distinct ");
  out.append(join(items, ",", select_item));
  return out;
}

std::string from_list(const std::vector<TableRef>& from) {
  return join(from, ",", [](const TableRef& r) {
    return r.alias ? r.name.str() + " " + *r.alias : r.name.str();
  });
}

std::string conditions(const std::vector<Condition>& conds) {
  return join(conds, " AND ", [](const Condition& c) { return c.str(); });
}

std::string target_list(const std::vector<Assignment>& items) {
  return join(items, ",", [](const Assignment& a) { return a.target.name.str(); });
}

bool named_targets(const std::vector<Assignment>& items) {
  return !items.empty() && items.front().target.kind == TargetKind::kColumn;
}

std::string where_suffix(const std::vector<Condition>& where,
                         const EmitOptions& options) {
  if (where.empty()) return {};
  return sep(options) + "where " + conditions(where);
}

std::string insert_prefix(const OperationBlock& b) {
  std::string out = "insert into " + b.table.str();
  if (named_targets(b.assignments)) out += "(" + target_list(b.assignments) + ")";
  return out;
}

std::string update_sql(const OperationBlock& b, const EmitOptions& options) {
  std::string out = "update " + b.table.str() + sep(options) + "set ";
  if (!b.nested) {
    out.append(join(b.assignments, ",", [](const Assignment& a) {
      return a.target.name.str() + "=" + render_expression(a.expr);
    }));
  } else {
    const NestedSelect& inner = *b.nested;
    const auto& tuple = b.assignments.empty() ? inner.items : b.assignments;
    out.append("(" + target_list(tuple) + ") = (" + select_list(inner.items));
    if (!inner.from.empty()) out.append(sep(options) + "from " + from_list(inner.from));
    out.append(where_suffix(inner.where, options));
    out.push_back(')');
  }
  out.append(where_suffix(b.where, options));
  return out;
}

std::string_view connector(SetOperator op, const Dialect& dialect) {
  switch (op) {
    case SetOperator::kUnion: return "union";
    case SetOperator::kIntersect: return "intersect";
    case SetOperator::kMinus:
      return dialect.kind == DialectKind::kPortable ? "except" : "minus";
  }
  return "";
}

// Statement prefix for a query-family block, including the trailing space or
// newline before its select body.
std::string query_prefix(const OperationBlock& b, const EmitOptions& options) {
  switch (b.command) {
    case CommandKind::kInsertSelect: return insert_prefix(b) + sep(options);
    case CommandKind::kCreateTableAs: return "create table " + b.table.str() + " as" + sep(options);
    case CommandKind::kCreateView: return "create view " + b.table.str() + " as" + sep(options);
    default: return {};
  }
}

}  // namespace

std::string_view to_string(DialectKind kind) {
  return kind == DialectKind::kOracleStyle ? "oracle" : "portable";
}

std::string render_expression(const Expression& expr) { return to_text(expr); }

std::string emit_query_body(const OperationBlock& b, const EmitOptions& options) {
  std::string out = select_list(b.assignments);
  if (!b.from.empty()) out.append(sep(options) + "from " + from_list(b.from));
  out.append(where_suffix(b.where, options));
  if (!b.group_by.empty()) {
    out.append(sep(options) + "group by " +
               join(b.group_by, ",", [](const GroupItem& g) {
                 return render_expression(g.expr);
               }));
  }
  if (!b.having.empty()) out.append(sep(options) + "having " + conditions(b.having));
  if (!b.order_by.empty()) {
    out.append(sep(options) + "order by " +
               join(b.order_by, ",", [](const OrderItem& o) {
                 std::string item = render_expression(o.expr);
                 if (o.direction == SortDirection::kAsc) item.append(" asc");
                 if (o.direction == SortDirection::kDesc) item.append(" desc");
                 return item;
               }));
  }
  return out;
}

SqlStatement emit_statement(const OperationBlock& b, const Dialect& dialect,
                            const EmitOptions& options) {
  SqlStatement stmt;
  stmt.source_span = b.span;
  stmt.kind = b.command;
  const std::string table = b.table.str();
  switch (b.command) {
    case CommandKind::kInsertSelect:
    case CommandKind::kCreateTableAs:
    case CommandKind::kCreateView:
      stmt.text = query_prefix(b, options) + emit_query_body(b, options);
      break;
    case CommandKind::kInsertValues:
      stmt.text = insert_prefix(b) + sep(options) + "values(" +
                  join(b.assignments, ",", [](const Assignment& a) {
                    return render_expression(a.expr);
                  }) +
                  ")";
      break;
    case CommandKind::kUpdate:
      stmt.text = update_sql(b, options);
      break;
    case CommandKind::kDelete:
      // normalize() has folded a single FROM table into b.table.
      stmt.text = "delete from " +
                  (b.from.empty() ? table : from_list(b.from)) +
                  where_suffix(b.where, options);
      break;
    case CommandKind::kTruncate:
      if (dialect.kind == DialectKind::kPortable && !dialect.truncate_supported) {
        stmt.text = "delete from " + table;
        stmt.truncate_degraded = true;
      } else {
        stmt.text = "truncate table " + table;
      }
      break;
    case CommandKind::kCreateTableBasic:
      stmt.text = "create table " + table + "(" +
                  join(b.assignments, ",", [](const Assignment& a) {
                    return a.target.name.str() + " " + render_expression(a.expr);
                  }) +
                  ")";
      break;
    case CommandKind::kDropTable:
      stmt.text = "drop table " + table;
      break;
    case CommandKind::kDropView:
      stmt.text = "drop view " + table;
      break;
    case CommandKind::kCreateIndex:
      stmt.text = "create index " + table + sep(options) + "on " +
                  b.assignments.front().target.name.str() + "(" +
                  join(b.assignments, ",", [](const Assignment& a) {
                    return render_expression(a.expr);
                  }) +
                  ")";
      break;
  }
  return stmt;
}

SqlStatement emit_chain(const Chain& chain, const Dialect& dialect,
                        const EmitOptions& options) {
  if (chain.blocks.size() == 1) {
    return emit_statement(chain.blocks.front(), dialect, options);
  }
  const OperationBlock& first = chain.blocks.front();
  SqlStatement stmt;
  stmt.source_span = first.span;
  stmt.kind = first.command;
  stmt.text = query_prefix(first, options);
  for (size_t i = 0; i < chain.blocks.size(); ++i) {
    const OperationBlock& b = chain.blocks[i];
    if (i + 1 < chain.blocks.size() && !b.order_by.empty()) {
      throw EmitError(code::kOrderByInNonFinalBlock, b.span,
                      "ORDER BY is only allowed on the last block of a chain");
    }
    if (i > 0) {
      stmt.text.append(sep(options));
      stmt.text.append(connector(chain.connectors[i - 1], dialect));
      stmt.text.append(sep(options));
    }
    stmt.text.append(emit_query_body(b, options));
  }
  return stmt;
}

std::vector<SqlStatement> emit_script(const Script& script,
                                      const Dialect& dialect,
                                      const EmitOptions& options) {
  std::vector<SqlStatement> out;
  out.reserve(script.chains.size());
  for (const Chain& chain : script.chains) {
    out.push_back(emit_chain(chain, dialect, options));
  }
  return out;
}

std::string format_statements(std::span<const SqlStatement> statements,
                              bool terminator) {
  std::string out;
  for (const SqlStatement& s : statements) {
    out.append(s.text);
    if (terminator) out.push_back(';');
    out.push_back('\n');
  }
  return out;
}

}  // namespace dsqlt
