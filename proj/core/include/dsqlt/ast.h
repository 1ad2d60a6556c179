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

// Syntax tree shared by the parser, analyzer and emitter.
//
// All equality operators are structural and ignore source spans, so two
// parses of the same script with different comments or line breaks compare
// equal.

#ifndef DSQLT_AST_H_
#define DSQLT_AST_H_

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "dsqlt/diagnostic.h"
#include "dsqlt/lexer.h"

namespace dsqlt {

// `OMC.TEMP_TRAFFIC`, `A.NAME`, or a bare `item1`.
struct QualifiedName {
  std::vector<std::string> parts;

  QualifiedName() = default;
  explicit QualifiedName(std::string single) : parts{std::move(single)} {}
  explicit QualifiedName(std::vector<std::string> p) : parts(std::move(p)) {}

  bool empty() const { return parts.empty(); }
  std::string str() const;  // dot-joined, no spaces

  friend bool operator==(const QualifiedName&, const QualifiedName&) = default;
};

enum class TermKind {
  kColumnRef,
  kNumber,
  kString,
  kFunctionCall,
  kStar,
  kTypeDecl,
};

struct Expression;

struct Term {
  TermKind kind = TermKind::kColumnRef;
  QualifiedName name;            // column reference or function name
  std::string text;              // number, quoted string, or type declaration
  std::vector<Expression> args;  // function arguments

  static Term column(QualifiedName name);
  static Term number(std::string text);
  static Term string(std::string quoted);
  static Term call(QualifiedName name, std::vector<Expression> args);
  static Term star();
  static Term type_decl(std::string text);

  bool operator==(const Term& other) const;
};

enum class ArithOp { kAdd, kSub, kMul, kDiv };

char to_char(ArithOp op);

// Flat left-to-right operator chain. There is no precedence: the chain is
// rendered back verbatim and the SQL engine applies its own.
struct Expression {
  Term first;
  std::vector<std::pair<ArithOp, Term>> rest;

  Expression() = default;
  explicit Expression(Term t) : first(std::move(t)) {}

  bool is_single_term() const { return rest.empty(); }

  friend bool operator==(const Expression&, const Expression&) = default;
};

// `A.X-A.Y`, `f(a,b)`, `'text'`. Shared by the SQL emitter and the script
// printer since both languages spell expressions the same way.
std::string to_text(const Expression& expr);
std::string to_text(const Term& term);

enum class TargetKind { kColumn, kWildcard };

struct TargetSpec {
  TargetKind kind = TargetKind::kColumn;
  QualifiedName name;  // empty for kWildcard

  static TargetSpec column(QualifiedName name) {
    return {TargetKind::kColumn, std::move(name)};
  }
  static TargetSpec wildcard() { return {TargetKind::kWildcard, {}}; }

  friend bool operator==(const TargetSpec&, const TargetSpec&) = default;
};

struct Assignment {
  TargetSpec target;
  Expression expr;
  std::optional<std::string> alias;
  bool distinct = false;

  friend bool operator==(const Assignment&, const Assignment&) = default;
};

struct TableRef {
  QualifiedName name;
  std::optional<std::string> alias;

  friend bool operator==(const TableRef&, const TableRef&) = default;
};

// One boolean condition kept as its token sequence. Spans are ignored when
// comparing.
struct Condition {
  std::vector<Token> raw;

  std::string str() const { return join_tokens(raw); }
  bool operator==(const Condition& other) const;
};

struct GroupItem {
  Expression expr;
  friend bool operator==(const GroupItem&, const GroupItem&) = default;
};

enum class SortDirection { kNone, kAsc, kDesc };

struct OrderItem {
  Expression expr;
  SortDirection direction = SortDirection::kNone;
  friend bool operator==(const OrderItem&, const OrderItem&) = default;
};

// Inner `{...}` of a tuple-assignment UPDATE.
struct NestedSelect {
  std::vector<Assignment> items;
  std::vector<TableRef> from;
  std::vector<Condition> where;

  friend bool operator==(const NestedSelect&, const NestedSelect&) = default;
};

enum class CommandKind {
  kInsertSelect,
  kInsertValues,
  kUpdate,
  kDelete,
  kTruncate,
  kCreateView,
  kCreateTableBasic,
  kCreateTableAs,
  kDropTable,
  kDropView,
  kCreateIndex,
};

inline constexpr CommandKind kAllCommandKinds[] = {
    CommandKind::kInsertSelect,   CommandKind::kInsertValues,
    CommandKind::kUpdate,         CommandKind::kDelete,
    CommandKind::kTruncate,       CommandKind::kCreateView,
    CommandKind::kCreateTableBasic, CommandKind::kCreateTableAs,
    CommandKind::kDropTable,      CommandKind::kDropView,
    CommandKind::kCreateIndex,
};

// Stable identifier, e.g. "INSERT_SELECT".
std::string_view to_string(CommandKind kind);
// Script keyword(s) that produce the kind, e.g. "ONLY CREATE".
std::string_view command_spelling(CommandKind kind);

// Kinds whose body is a select list that can take part in a set chain.
bool is_query_family(CommandKind kind);

struct OperationBlock {
  QualifiedName table;
  CommandKind command = CommandKind::kInsertSelect;
  std::vector<Assignment> assignments;
  bool same_marker = false;
  std::optional<NestedSelect> nested;
  std::vector<TableRef> from;
  std::vector<Condition> where;
  std::vector<GroupItem> group_by;
  std::vector<Condition> having;
  std::vector<OrderItem> order_by;
  SourceSpan span;

  bool operator==(const OperationBlock& other) const;
};

enum class SetOperator { kUnion, kIntersect, kMinus };

std::string_view to_string(SetOperator op);

struct Chain {
  std::vector<OperationBlock> blocks;
  std::vector<SetOperator> connectors;  // connectors[i] joins blocks[i], blocks[i+1]

  friend bool operator==(const Chain&, const Chain&) = default;
};

struct Script {
  std::vector<Chain> chains;

  size_t block_count() const;
  friend bool operator==(const Script&, const Script&) = default;
};

// Structural equality ignoring spans.
bool equals(const Script& a, const Script& b);

// Canonical script text: one clause per line, `==` assignments, upper-case
// keywords, no comments or continuations. Parsing the result yields a script
// equal to `script`.
std::string emit_script_text(const Script& script);

}  // namespace dsqlt

#endif  // DSQLT_AST_H_
