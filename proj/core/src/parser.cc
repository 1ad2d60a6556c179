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

#include "dsqlt/parser.h"

#include <algorithm>
#include <cctype>
#include <optional>
#include <string>

namespace dsqlt {
namespace {

[[noreturn]] void fail(std::string_view code, SourceSpan span,
                       const std::string& message) {
  throw ScriptError(code, span, message);
}

bool is(const Token& t, TokenKind kind) { return t.kind == kind; }

bool is_keyword(const Token& t, Keyword kw) {
  auto k = keyword_of(t);
  return k && *k == kw;
}

bool is_clause_keyword(const Token& t) {
  auto k = keyword_of(t);
  return k && (*k == Keyword::kFrom || *k == Keyword::kWhere ||
               *k == Keyword::kGroupBy || *k == Keyword::kHaving ||
               *k == Keyword::kOrderBy);
}

bool is_brace_unit(const TokenLine& unit, TokenKind kind) {
  return unit.size() == 1 && unit[0].kind == kind;
}

std::string upper(std::string_view s) {
  std::string out(s);
  for (char& c : out) c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
  return out;
}

void check_parens(std::span<const Token> tokens) {
  int depth = 0;
  for (const auto& t : tokens) {
    if (is(t, TokenKind::kLParen)) ++depth;
    if (is(t, TokenKind::kRParen) && --depth < 0) {
      fail(code::kUnbalancedParens, t.span, "')' without matching '('");
    }
  }
  if (depth != 0) {
    auto open = std::find_if(tokens.rbegin(), tokens.rend(), [](const Token& t) {
      return is(t, TokenKind::kLParen);
    });
    fail(code::kUnbalancedParens, open->span, "'(' without matching ')'");
  }
}

// Splits at top-level commas. Parentheses must already be balanced.
std::vector<std::span<const Token>> split_commas(std::span<const Token> tokens) {
  std::vector<std::span<const Token>> parts;
  int depth = 0;
  size_t start = 0;
  for (size_t i = 0; i < tokens.size(); ++i) {
    if (is(tokens[i], TokenKind::kLParen)) ++depth;
    if (is(tokens[i], TokenKind::kRParen)) --depth;
    if (depth == 0 && is(tokens[i], TokenKind::kComma)) {
      parts.push_back(tokens.subspan(start, i - start));
      start = i + 1;
    }
  }
  parts.push_back(tokens.subspan(start));
  return parts;
}

// IDENT (DOT IDENT)* starting at `pos`; advances `pos`.
std::optional<QualifiedName> take_qualified(std::span<const Token> t, size_t& pos) {
  if (pos >= t.size() || !is(t[pos], TokenKind::kIdent)) return std::nullopt;
  QualifiedName name(t[pos].lexeme);
  ++pos;
  while (pos + 1 < t.size() && is(t[pos], TokenKind::kDot) &&
         is(t[pos + 1], TokenKind::kIdent)) {
    name.parts.push_back(t[pos + 1].lexeme);
    pos += 2;
  }
  return name;
}

class ExpressionParser {
 public:
  explicit ExpressionParser(std::span<const Token> tokens) : t_(tokens) {}

  // Parses the longest expression prefix.
  Expression parse() {
    Expression expr(term());
    while (pos_ < t_.size()) {
      std::optional<ArithOp> op = arith_op(t_[pos_]);
      if (!op) break;
      const Token& op_token = t_[pos_++];
      if (pos_ >= t_.size() || !starts_term()) {
        fail(code::kDanglingOperator, op_token.span,
             "operator '" + op_token.lexeme + "' has no right operand");
      }
      expr.rest.emplace_back(*op, term());
    }
    return expr;
  }

  size_t position() const { return pos_; }

 private:
  static std::optional<ArithOp> arith_op(const Token& t) {
    if (is(t, TokenKind::kStar)) return ArithOp::kMul;
    if (!is(t, TokenKind::kOperator)) return std::nullopt;
    if (t.lexeme == "+") return ArithOp::kAdd;
    if (t.lexeme == "-") return ArithOp::kSub;
    if (t.lexeme == "/") return ArithOp::kDiv;
    return std::nullopt;
  }

  bool starts_term() const {
    const Token& t = t_[pos_];
    switch (t.kind) {
      case TokenKind::kIdent:
      case TokenKind::kNumber:
      case TokenKind::kString:
      case TokenKind::kStar:
        return true;
      case TokenKind::kOperator:
        return t.lexeme == "-" && pos_ + 1 < t_.size() &&
               is(t_[pos_ + 1], TokenKind::kNumber);
      default:
        return false;
    }
  }

  Term term() {
    if (pos_ >= t_.size()) {
      SourceSpan at = t_.empty() ? SourceSpan{} : t_.back().span;
      fail(code::kEmptyExpression, at, "expected an expression");
    }
    const Token& t = t_[pos_];
    switch (t.kind) {
      case TokenKind::kNumber:
        ++pos_;
        return Term::number(t.lexeme);
      case TokenKind::kString:
        ++pos_;
        return Term::string(t.lexeme);
      case TokenKind::kStar:
        ++pos_;
        return Term::star();
      case TokenKind::kOperator:
        if (t.lexeme == "-" && pos_ + 1 < t_.size() &&
            is(t_[pos_ + 1], TokenKind::kNumber)) {
          pos_ += 2;
          return Term::number("-" + t_[pos_ - 1].lexeme);
        }
        break;
      case TokenKind::kIdent: {
        QualifiedName name = *take_qualified(t_, pos_);
        if (pos_ < t_.size() && is(t_[pos_], TokenKind::kLParen)) {
          return Term::call(std::move(name), call_args());
        }
        return Term::column(std::move(name));
      }
      default:
        break;
    }
    fail(code::kUnexpectedToken, t.span,
         "unexpected '" + t.lexeme + "' in expression");
  }

  std::vector<Expression> call_args() {
    const size_t open = pos_;
    int depth = 0;
    size_t close = open;
    for (; close < t_.size(); ++close) {
      if (is(t_[close], TokenKind::kLParen)) ++depth;
      if (is(t_[close], TokenKind::kRParen) && --depth == 0) break;
    }
    if (close >= t_.size()) {
      fail(code::kUnbalancedParens, t_[open].span, "'(' without matching ')'");
    }
    std::span<const Token> inner = t_.subspan(open + 1, close - open - 1);
    pos_ = close + 1;
    std::vector<Expression> args;
    if (inner.empty()) return args;
    for (auto part : split_commas(inner)) {
      if (part.empty()) {
        fail(code::kEmptyExpression, t_[open].span, "empty function argument");
      }
      args.push_back(parse_expression(part));
    }
    return args;
  }

  std::span<const Token> t_;
  size_t pos_ = 0;
};

// Accumulates clause tokens until the block decides the clause is complete.
struct PendingClause {
  Keyword keyword;
  SourceSpan at;
  std::vector<Token> tokens;
};

class BlockParser {
 public:
  BlockParser(std::span<const TokenLine> units, Diagnostics* sink)
      : units_(units), sink_(sink) {}

  OperationBlock parse() {
    OperationBlock block;
    block.span.begin = units_.front().front().span.begin;
    block.span.end = units_.back().front().span.end;
    pos_ = 1;  // past '{'

    parse_headers(block);
    parse_body(block, /*nested=*/false);

    if (block.command == CommandKind::kInsertSelect && block.from.empty() &&
        !block.same_marker) {
      block.command = CommandKind::kInsertValues;
    }
    return block;
  }

 private:
  const TokenLine& unit() const { return units_[pos_]; }
  bool at_close() const { return is_brace_unit(unit(), TokenKind::kRBrace); }

  void warn_missing_colon(const Token& keyword) {
    if (sink_ && !has_colon(keyword)) {
      sink_->warning(code::kMissingColon, keyword.span,
                     "'" + keyword.lexeme + "' should be followed by ':'");
    }
  }

  void parse_headers(OperationBlock& block) {
    const SourceSpan open = units_.front().front().span;
    if (at_close() || !is_keyword(unit().front(), Keyword::kTable)) {
      fail(code::kMissingTable, at_close() ? open : unit().front().span,
           "block must start with 'TABLE:'");
    }
    {
      const TokenLine& line = unit();
      warn_missing_colon(line.front());
      size_t p = 1;
      auto name = take_qualified(line, p);
      if (!name) fail(code::kMissingTable, line.front().span, "'TABLE:' needs a name");
      if (p != line.size()) {
        fail(code::kUnexpectedToken, line[p].span,
             "unexpected '" + line[p].lexeme + "' after table name");
      }
      block.table = std::move(*name);
      ++pos_;
    }
    if (at_close() || !is_keyword(unit().front(), Keyword::kCommand)) {
      fail(code::kMissingCommand, unit().front().span,
           "'TABLE:' must be followed by 'COMMAND:'");
    }
    const TokenLine& line = unit();
    warn_missing_colon(line.front());
    block.command = resolve_command(line);
    ++pos_;
  }

  static CommandKind resolve_command(const TokenLine& line) {
    std::vector<std::optional<Keyword>> words;
    std::string text;
    for (size_t i = 1; i < line.size(); ++i) {
      words.push_back(keyword_of(line[i]));
      if (!text.empty()) text.push_back(' ');
      text.append(line[i].lexeme);
    }
    auto matches = [&](std::initializer_list<Keyword> pattern) {
      if (words.size() != pattern.size()) return false;
      size_t i = 0;
      for (Keyword kw : pattern) {
        if (!words[i] || *words[i] != kw) return false;
        ++i;
      }
      return true;
    };
    // Multi-word forms first.
    if (matches({Keyword::kOnly, Keyword::kCreate})) return CommandKind::kCreateTableBasic;
    if (matches({Keyword::kCreate, Keyword::kView})) return CommandKind::kCreateView;
    if (matches({Keyword::kCreate, Keyword::kIndex})) return CommandKind::kCreateIndex;
    if (matches({Keyword::kDrop, Keyword::kView})) return CommandKind::kDropView;
    if (matches({Keyword::kDrop, Keyword::kTable})) return CommandKind::kDropTable;
    if (matches({Keyword::kInsert})) return CommandKind::kInsertSelect;
    if (matches({Keyword::kUpdate})) return CommandKind::kUpdate;
    if (matches({Keyword::kDelete})) return CommandKind::kDelete;
    if (matches({Keyword::kTruncate})) return CommandKind::kTruncate;
    if (matches({Keyword::kCreate})) return CommandKind::kCreateTableAs;
    if (matches({Keyword::kDrop})) return CommandKind::kDropTable;
    if (words.empty()) {
      fail(code::kMissingCommand, line.front().span, "'COMMAND:' needs a command name");
    }
    fail(code::kUnknownCommand, line[1].span, "unknown command '" + text + "'");
  }

  enum class Phase { kAssignments, kAfterNested, kClauses };

  void parse_body(OperationBlock& block, bool nested) {
    Phase phase = Phase::kAssignments;
    std::optional<PendingClause> clause;
    std::vector<Keyword> seen;
    std::vector<Assignment>& assignments =
        nested ? block.nested->items : block.assignments;

    auto flush = [&] {
      if (!clause) return;
      apply_clause(block, nested, *clause);
      clause.reset();
    };

    while (true) {
      if (pos_ >= units_.size()) {
        fail(code::kUnbalancedBraces, units_.front().front().span,
             "'{' without matching '}'");
      }
      const TokenLine& u = unit();
      if (at_close()) {
        flush();
        ++pos_;
        return;
      }
      if (is_brace_unit(u, TokenKind::kLBrace)) {
        if (nested || block.command != CommandKind::kUpdate || block.nested ||
            phase == Phase::kClauses) {
          fail(code::kNestedBlockOutsideUpdate, u.front().span,
               "a nested '{' block is only allowed once, inside an UPDATE, "
               "before its clauses");
        }
        ++pos_;
        block.nested.emplace();
        parse_body(block, /*nested=*/true);
        if (block.nested->items.empty()) {
          fail(code::kEmptyExpression, u.front().span,
               "nested select has no items");
        }
        phase = Phase::kAfterNested;
        continue;
      }
      const Token& head = u.front();
      if (is_clause_keyword(head)) {
        flush();
        const Keyword kw = *keyword_of(head);
        if (std::find(seen.begin(), seen.end(), kw) != seen.end()) {
          fail(code::kDuplicateClause, head.span,
               std::string(keyword_spelling(kw)) + " appears more than once");
        }
        if (nested && kw != Keyword::kFrom && kw != Keyword::kWhere) {
          fail(code::kUnexpectedClause, head.span,
               std::string(keyword_spelling(kw)) +
                   " is not allowed in a nested select");
        }
        seen.push_back(kw);
        warn_missing_colon(head);
        clause = PendingClause{kw, head.span, {u.begin() + 1, u.end()}};
        phase = Phase::kClauses;
        ++pos_;
        continue;
      }
      if (phase == Phase::kClauses) {
        clause->tokens.insert(clause->tokens.end(), u.begin(), u.end());
        ++pos_;
        continue;
      }
      if (is_keyword(head, Keyword::kSame)) {
        if (nested || phase != Phase::kAssignments || block.same_marker ||
            u.size() != 3 || !is(u[1], TokenKind::kAssign) ||
            !is_keyword(u[2], Keyword::kSame) || !assignments.empty()) {
          fail(code::kInvalidSameMarker, head.span,
               "expected a single 'SAME:==SAME:' line in place of the "
               "assignments");
        }
        block.same_marker = true;
        ++pos_;
        continue;
      }
      if (phase == Phase::kAfterNested) {
        fail(code::kUnexpectedToken, head.span,
             "only clauses may follow a nested select");
      }
      if (block.same_marker) {
        fail(code::kInvalidSameMarker, head.span,
             "'SAME:==SAME:' cannot be combined with assignments");
      }
      const bool type_decl = block.command == CommandKind::kCreateTableBasic;
      assignments.push_back(
          parse_assignment(u, assignments.size(), type_decl, sink_));
      ++pos_;
    }
  }

  static void apply_clause(OperationBlock& block, bool nested,
                           const PendingClause& clause) {
    ClausePayload payload = parse_clause(clause.keyword, clause.tokens, clause.at);
    switch (clause.keyword) {
      case Keyword::kFrom:
        (nested ? block.nested->from : block.from) =
            std::get<std::vector<TableRef>>(std::move(payload));
        break;
      case Keyword::kWhere:
        (nested ? block.nested->where : block.where) =
            std::get<std::vector<Condition>>(std::move(payload));
        break;
      case Keyword::kHaving:
        block.having = std::get<std::vector<Condition>>(std::move(payload));
        break;
      case Keyword::kGroupBy:
        block.group_by = std::get<std::vector<GroupItem>>(std::move(payload));
        break;
      case Keyword::kOrderBy:
        block.order_by = std::get<std::vector<OrderItem>>(std::move(payload));
        break;
      default:
        break;
    }
  }

  std::span<const TokenLine> units_;
  Diagnostics* sink_;
  size_t pos_ = 0;
};

}  // namespace

Expression parse_expression(std::span<const Token> tokens) {
  check_parens(tokens);
  ExpressionParser parser(tokens);
  Expression expr = parser.parse();
  if (parser.position() != tokens.size()) {
    const Token& t = tokens[parser.position()];
    fail(code::kUnexpectedToken, t.span,
         "unexpected '" + t.lexeme + "' after expression");
  }
  return expr;
}

Assignment parse_assignment(std::span<const Token> tokens, size_t index,
                            bool type_decl, Diagnostics* sink) {
  auto assign = std::find_if(tokens.begin(), tokens.end(), [](const Token& t) {
    return is(t, TokenKind::kAssign);
  });
  if (assign == tokens.end()) {
    fail(code::kExpectedAssignment, tokens.front().span,
         "expected 'target==expression', a clause keyword or '}'");
  }
  const size_t eq = static_cast<size_t>(assign - tokens.begin());
  std::span<const Token> lhs = tokens.first(eq);
  std::span<const Token> rhs = tokens.subspan(eq + 1);

  Assignment out;
  if (lhs.size() == 1 && is(lhs[0], TokenKind::kStar)) {
    out.target = TargetSpec::wildcard();
  } else {
    size_t p = 0;
    auto name = take_qualified(lhs, p);
    if (!name || p != lhs.size()) {
      fail(code::kInvalidTarget, lhs.empty() ? assign->span : lhs.front().span,
           "assignment target must be a column name or '*'");
    }
    out.target = TargetSpec::column(std::move(*name));
  }
  if (assign->lexeme == "=" && sink) {
    sink->warning(code::kSingleEquals, assign->span,
                  "'=' accepted as assignment; prefer '=='");
  }

  if (!rhs.empty() && is_keyword(rhs.front(), Keyword::kDistinct)) {
    if (index > 0) {
      fail(code::kDistinctNotFirst, rhs.front().span,
           "DISTINCT is only allowed on the first assignment");
    }
    out.distinct = true;
    rhs = rhs.subspan(1);
  }
  if (rhs.empty()) {
    fail(code::kEmptyExpression, assign->span, "assignment has no expression");
  }

  if (type_decl) {
    if (out.distinct) {
      fail(code::kUnexpectedToken, tokens[eq + 1].span,
           "DISTINCT is not allowed in a column declaration");
    }
    check_parens(rhs);
    out.expr = Expression(Term::type_decl(join_tokens(rhs)));
    return out;
  }

  check_parens(rhs);
  ExpressionParser parser(rhs);
  out.expr = parser.parse();
  std::span<const Token> rest = rhs.subspan(parser.position());
  if (rest.empty()) return out;
  const bool all_idents = std::all_of(rest.begin(), rest.end(), [](const Token& t) {
    return is(t, TokenKind::kIdent);
  });
  if (!all_idents) {
    fail(code::kUnexpectedToken, rest.front().span,
         "unexpected '" + rest.front().lexeme + "' after expression");
  }
  if (rest.size() > 1) {
    fail(code::kMultipleAliases, rest[1].span,
         "only one alias may follow an expression");
  }
  out.alias = rest.front().lexeme;
  return out;
}

ClausePayload parse_clause(Keyword keyword, std::span<const Token> tokens,
                           SourceSpan at) {
  const std::string name(keyword_spelling(keyword));
  if (tokens.empty()) fail(code::kEmptyClause, at, name + " clause is empty");
  check_parens(tokens);
  auto parts = split_commas(tokens);
  for (auto part : parts) {
    if (part.empty()) {
      fail(code::kEmptyClause, at, name + " clause has an empty item");
    }
  }

  switch (keyword) {
    case Keyword::kFrom: {
      std::vector<TableRef> refs;
      for (auto part : parts) {
        size_t p = 0;
        auto table = take_qualified(part, p);
        TableRef ref;
        if (table) ref.name = std::move(*table);
        if (table && p + 1 == part.size() && is(part[p], TokenKind::kIdent)) {
          ref.alias = part[p].lexeme;
          ++p;
        }
        if (!table || p != part.size()) {
          fail(code::kInvalidTableRef, part.front().span,
               "expected 'table [alias]' in FROM clause");
        }
        refs.push_back(std::move(ref));
      }
      return refs;
    }
    case Keyword::kWhere:
    case Keyword::kHaving: {
      std::vector<Condition> conds;
      for (auto part : parts) {
        for (const Token& t : part) {
          if (is(t, TokenKind::kLBrace) || is(t, TokenKind::kRBrace) ||
              is(t, TokenKind::kSetOp) ||
              (is(t, TokenKind::kKeyword) && !is_keyword(t, Keyword::kDistinct))) {
            fail(code::kUnexpectedToken, t.span,
                 "unexpected '" + t.lexeme + "' in condition");
          }
        }
        conds.push_back(Condition{{part.begin(), part.end()}});
      }
      return conds;
    }
    case Keyword::kGroupBy: {
      std::vector<GroupItem> items;
      for (auto part : parts) items.push_back({parse_expression(part)});
      return items;
    }
    case Keyword::kOrderBy: {
      std::vector<OrderItem> items;
      for (auto part : parts) {
        OrderItem item;
        if (part.size() > 1 && is(part.back(), TokenKind::kIdent)) {
          const std::string dir = upper(part.back().lexeme);
          if (dir == "ASC") item.direction = SortDirection::kAsc;
          if (dir == "DESC") item.direction = SortDirection::kDesc;
          if (item.direction != SortDirection::kNone) {
            part = part.first(part.size() - 1);
          }
        }
        item.expr = parse_expression(part);
        items.push_back(std::move(item));
      }
      return items;
    }
    default:
      fail(code::kUnexpectedToken, at, name + " is not a clause keyword");
  }
}

std::vector<TokenLine> split_units(std::span<const LogicalLine> lines) {
  std::vector<TokenLine> units;
  for (const auto& line : lines) {
    TokenLine current;
    for (Token& t : tokenize(line)) {
      if (is(t, TokenKind::kLBrace) || is(t, TokenKind::kRBrace)) {
        if (!current.empty()) units.push_back(std::move(current));
        current.clear();
        units.push_back({std::move(t)});
      } else {
        current.push_back(std::move(t));
      }
    }
    if (!current.empty()) units.push_back(std::move(current));
  }
  return units;
}

OperationBlock parse_block(std::span<const TokenLine> units, Diagnostics* sink) {
  if (units.empty() || !is_brace_unit(units.front(), TokenKind::kLBrace)) {
    fail(code::kUnexpectedToken,
         units.empty() || units.front().empty() ? SourceSpan{}
                                                : units.front().front().span,
         "a block must start with '{'");
  }
  return BlockParser(units, sink).parse();
}

ParseResult parse_script(std::span<const LogicalLine> lines) {
  ParseResult result;
  std::vector<TokenLine> units;
  try {
    units = split_units(lines);
  } catch (const ScriptError& e) {
    result.diagnostics.add(e.to_diagnostic());
    return result;
  }

  std::optional<Chain> chain;
  std::optional<SetOperator> pending;
  SourceSpan pending_span;
  bool have_block = false;

  auto close_chain = [&] {
    if (chain) result.script.chains.push_back(std::move(*chain));
    chain.reset();
  };

  size_t i = 0;
  while (i < units.size()) {
    const TokenLine& u = units[i];
    if (is_brace_unit(u, TokenKind::kLBrace)) {
      size_t depth = 0;
      size_t end = i;
      for (; end < units.size(); ++end) {
        if (is_brace_unit(units[end], TokenKind::kLBrace)) ++depth;
        if (is_brace_unit(units[end], TokenKind::kRBrace) && --depth == 0) break;
      }
      if (end == units.size()) {
        result.diagnostics.error(code::kUnbalancedBraces, u.front().span,
                                 "'{' without matching '}'");
        break;
      }
      std::span<const TokenLine> block_units(units.data() + i, end - i + 1);
      Diagnostics block_diags;
      try {
        OperationBlock block = parse_block(block_units, &block_diags);
        if (pending && chain) {
          chain->connectors.push_back(*pending);
          chain->blocks.push_back(std::move(block));
        } else {
          close_chain();
          chain.emplace();
          chain->blocks.push_back(std::move(block));
        }
      } catch (const ScriptError& e) {
        block_diags.add(e.to_diagnostic());
        close_chain();
      }
      result.diagnostics.append(block_diags);
      pending.reset();
      have_block = true;
      i = end + 1;
      continue;
    }
    if (is_brace_unit(u, TokenKind::kRBrace)) {
      result.diagnostics.error(code::kUnbalancedBraces, u.front().span,
                               "'}' without matching '{'");
      ++i;
      continue;
    }
    if (u.size() == 1 && is(u[0], TokenKind::kSetOp) && have_block && !pending) {
      switch (*keyword_of(u[0])) {
        case Keyword::kUnion: pending = SetOperator::kUnion; break;
        case Keyword::kIntersect: pending = SetOperator::kIntersect; break;
        default: pending = SetOperator::kMinus; break;
      }
      pending_span = u[0].span;
      ++i;
      continue;
    }
    result.diagnostics.error(code::kJunkBetweenBlocks, u.front().span,
                             "unexpected '" + u.front().lexeme +
                                 "' outside a block");
    ++i;
  }
  if (pending) {
    result.diagnostics.error(code::kTrailingSetOperator, pending_span,
                             "set operator is not followed by a block");
  }
  close_chain();
  result.diagnostics.sort_by_span();
  return result;
}

ParseResult parse_text(std::string_view text, std::string_view name) {
  std::vector<LogicalLine> lines;
  try {
    lines = preprocess(RawSource{std::string(text), std::string(name)});
  } catch (const ScriptError& e) {
    ParseResult result;
    result.diagnostics.add(e.to_diagnostic());
    return result;
  }
  return parse_script(lines);
}

}  // namespace dsqlt
