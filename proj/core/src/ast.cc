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

#include "dsqlt/ast.h"

#include <algorithm>

namespace dsqlt {

std::string QualifiedName::str() const {
  std::string out;
  for (size_t i = 0; i < parts.size(); ++i) {
    if (i > 0) out.push_back('.');
    out.append(parts[i]);
  }
  return out;
}

Term Term::column(QualifiedName name) {
  Term t;
  t.kind = TermKind::kColumnRef;
  t.name = std::move(name);
  return t;
}

Term Term::number(std::string text) {
  Term t;
  t.kind = TermKind::kNumber;
  t.text = std::move(text);
  return t;
}

Term Term::string(std::string quoted) {
  Term t;
  t.kind = TermKind::kString;
  t.text = std::move(quoted);
  return t;
}

Term Term::call(QualifiedName name, std::vector<Expression> args) {
  Term t;
  t.kind = TermKind::kFunctionCall;
  t.name = std::move(name);
  t.args = std::move(args);
  return t;
}

Term Term::star() {
  Term t;
  t.kind = TermKind::kStar;
  return t;
}

Term Term::type_decl(std::string text) {
  Term t;
  t.kind = TermKind::kTypeDecl;
  t.text = std::move(text);
  return t;
}

bool Term::operator==(const Term& other) const = default;

char to_char(ArithOp op) {
  switch (op) {
    case ArithOp::kAdd: return '+';
    case ArithOp::kSub: return '-';
    case ArithOp::kMul: return '*';
    case ArithOp::kDiv: return '/';
  }
  return '?';
}

std::string to_text(const Term& term) {
  switch (term.kind) {
    case TermKind::kColumnRef:
      return term.name.str();
    case TermKind::kNumber:
    case TermKind::kString:
    case TermKind::kTypeDecl:
      return term.text;
    case TermKind::kStar:
      return "*";
    case TermKind::kFunctionCall: {
      std::string out = term.name.str();
      out.push_back('(');
      for (size_t i = 0; i < term.args.size(); ++i) {
        if (i > 0) out.push_back(',');
        out.append(to_text(term.args[i]));
      }
      out.push_back(')');
      return out;
    }
  }
  return {};
}

std::string to_text(const Expression& expr) {
  std::string out = to_text(expr.first);
  for (const auto& [op, term] : expr.rest) {
    out.push_back(to_char(op));
    std::string rhs = to_text(term);
    // "a- -1", never "a--1" (a SQL comment).
    if (!rhs.empty() && rhs.front() == '-') out.push_back(' ');
    out.append(rhs);
  }
  return out;
}

bool Condition::operator==(const Condition& other) const {
  return std::equal(raw.begin(), raw.end(), other.raw.begin(), other.raw.end(),
                    [](const Token& a, const Token& b) {
                      return a.kind == b.kind && a.lexeme == b.lexeme;
                    });
}

std::string_view to_string(CommandKind kind) {
  switch (kind) {
    case CommandKind::kInsertSelect: return "INSERT_SELECT";
    case CommandKind::kInsertValues: return "INSERT_VALUES";
    case CommandKind::kUpdate: return "UPDATE";
    case CommandKind::kDelete: return "DELETE";
    case CommandKind::kTruncate: return "TRUNCATE";
    case CommandKind::kCreateView: return "CREATE_VIEW";
    case CommandKind::kCreateTableBasic: return "CREATE_TABLE_BASIC";
    case CommandKind::kCreateTableAs: return "CREATE_TABLE_AS";
    case CommandKind::kDropTable: return "DROP_TABLE";
    case CommandKind::kDropView: return "DROP_VIEW";
    case CommandKind::kCreateIndex: return "CREATE_INDEX";
  }
  return "?";
}

std::string_view command_spelling(CommandKind kind) {
  switch (kind) {
    case CommandKind::kInsertSelect:
    case CommandKind::kInsertValues: return "INSERT";
    case CommandKind::kUpdate: return "UPDATE";
    case CommandKind::kDelete: return "DELETE";
    case CommandKind::kTruncate: return "TRUNCATE";
    case CommandKind::kCreateView: return "CREATE VIEW";
    case CommandKind::kCreateTableBasic: return "ONLY CREATE";
    case CommandKind::kCreateTableAs: return "CREATE";
    case CommandKind::kDropTable: return "DROP";
    case CommandKind::kDropView: return "DROP VIEW";
    case CommandKind::kCreateIndex: return "CREATE INDEX";
  }
  return "?";
}

bool is_query_family(CommandKind kind) {
  return kind == CommandKind::kInsertSelect ||
         kind == CommandKind::kCreateTableAs ||
         kind == CommandKind::kCreateView;
}

bool OperationBlock::operator==(const OperationBlock& other) const {
  return table == other.table && command == other.command &&
         assignments == other.assignments &&
         same_marker == other.same_marker && nested == other.nested &&
         from == other.from && where == other.where &&
         group_by == other.group_by && having == other.having &&
         order_by == other.order_by;
}

std::string_view to_string(SetOperator op) {
  switch (op) {
    case SetOperator::kUnion: return "UNION";
    case SetOperator::kIntersect: return "INTERSECT";
    case SetOperator::kMinus: return "MINUS";
  }
  return "?";
}

size_t Script::block_count() const {
  size_t n = 0;
  for (const auto& chain : chains) n += chain.blocks.size();
  return n;
}

bool equals(const Script& a, const Script& b) { return a == b; }

namespace {

void print_assignment(const Assignment& a, std::string& out) {
  out.append(a.target.kind == TargetKind::kWildcard ? "*" : a.target.name.str());
  out.append("==");
  if (a.distinct) out.append("DISTINCT ");
  out.append(to_text(a.expr));
  if (a.alias) {
    out.push_back(' ');
    out.append(*a.alias);
  }
  out.push_back('\n');
}

void print_from(const std::vector<TableRef>& from, std::string& out) {
  if (from.empty()) return;
  out.append("FROM: ");
  for (size_t i = 0; i < from.size(); ++i) {
    if (i > 0) out.append(", ");
    out.append(from[i].name.str());
    if (from[i].alias) {
      out.push_back(' ');
      out.append(*from[i].alias);
    }
  }
  out.push_back('\n');
}

void print_conditions(std::string_view keyword,
                      const std::vector<Condition>& conds, std::string& out) {
  if (conds.empty()) return;
  out.append(keyword);
  out.append(": ");
  for (size_t i = 0; i < conds.size(); ++i) {
    if (i > 0) out.append(", ");
    out.append(conds[i].str());
  }
  out.push_back('\n');
}

void print_block(const OperationBlock& block, std::string& out) {
  out.append("{\nTABLE: ");
  out.append(block.table.str());
  out.append("\nCOMMAND: ");
  out.append(command_spelling(block.command));
  out.push_back('\n');
  for (const auto& a : block.assignments) print_assignment(a, out);
  if (block.nested) {
    out.append("{\n");
    for (const auto& a : block.nested->items) print_assignment(a, out);
    print_from(block.nested->from, out);
    print_conditions("WHERE", block.nested->where, out);
    out.append("}\n");
  }
  if (block.same_marker) out.append("SAME:==SAME:\n");
  print_from(block.from, out);
  print_conditions("WHERE", block.where, out);
  if (!block.group_by.empty()) {
    out.append("GROUP BY: ");
    for (size_t i = 0; i < block.group_by.size(); ++i) {
      if (i > 0) out.append(", ");
      out.append(to_text(block.group_by[i].expr));
    }
    out.push_back('\n');
  }
  print_conditions("HAVING", block.having, out);
  if (!block.order_by.empty()) {
    out.append("ORDER BY: ");
    for (size_t i = 0; i < block.order_by.size(); ++i) {
      if (i > 0) out.append(", ");
      out.append(to_text(block.order_by[i].expr));
      if (block.order_by[i].direction == SortDirection::kAsc) out.append(" ASC");
      if (block.order_by[i].direction == SortDirection::kDesc) out.append(" DESC");
    }
    out.push_back('\n');
  }
  out.append("}\n");
}

}  // namespace

std::string emit_script_text(const Script& script) {
  std::string out;
  for (const auto& chain : script.chains) {
    for (size_t i = 0; i < chain.blocks.size(); ++i) {
      if (i > 0) {
        out.append(to_string(chain.connectors[i - 1]));
        out.push_back('\n');
      }
      print_block(chain.blocks[i], out);
    }
  }
  return out;
}

}  // namespace dsqlt
