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

#include "dsqlt/analyzer.h"

#include <algorithm>
#include <string>

#include "dsqlt/parser.h"

namespace dsqlt {
namespace {

std::string describe(const OperationBlock& b) {
  return std::string(to_string(b.command)) + " block on '" + b.table.str() + "'";
}

bool has_wildcard(const std::vector<Assignment>& items) {
  return std::any_of(items.begin(), items.end(), [](const Assignment& a) {
    return a.target.kind == TargetKind::kWildcard;
  });
}

bool has_column(const std::vector<Assignment>& items) {
  return std::any_of(items.begin(), items.end(), [](const Assignment& a) {
    return a.target.kind == TargetKind::kColumn;
  });
}

bool has_any_clause(const OperationBlock& b) {
  return !b.from.empty() || !b.where.empty() || !b.group_by.empty() ||
         !b.having.empty() || !b.order_by.empty() || b.nested.has_value();
}

bool has_select_clauses(const OperationBlock& b) {
  return !b.from.empty() || !b.group_by.empty() || !b.having.empty() ||
         !b.order_by.empty();
}

void check_no_alias_or_distinct(const OperationBlock& b, Diagnostics& d) {
  for (const auto& a : b.assignments) {
    if (a.alias || a.distinct) {
      d.error(code::kUnexpectedToken, b.span,
              describe(b) + ": aliases and DISTINCT belong to select lists only");
      return;
    }
  }
}

void check_nested_update(const OperationBlock& b, Diagnostics& d) {
  const NestedSelect& inner = *b.nested;
  if (b.assignments.empty()) {
    if (has_wildcard(inner.items)) {
      d.error(code::kWildcardNotAllowed, b.span,
              describe(b) + ": nested select items need named targets when "
                            "the outer block declares no tuple");
    }
    return;
  }
  for (const auto& a : b.assignments) {
    if (a.target.kind != TargetKind::kColumn ||
        !(a.expr.is_single_term() && a.expr.first.kind == TermKind::kStar) ||
        a.alias || a.distinct) {
      d.error(code::kInvalidTupleTarget, b.span,
              describe(b) + ": outer tuple lines must read 'column==*'");
      return;
    }
  }
  if (has_column(inner.items)) {
    d.error(code::kInvalidTupleTarget, b.span,
            describe(b) + ": with an outer tuple, nested items use '*' targets");
    return;
  }
  if (b.assignments.size() != inner.items.size()) {
    d.error(code::kArityMismatch, b.span,
            describe(b) + ": tuple has " + std::to_string(b.assignments.size()) +
                " columns but the nested select has " +
                std::to_string(inner.items.size()) + " items");
  }
}

void validate_block(const OperationBlock& b, Diagnostics& d) {
  if (has_wildcard(b.assignments) && has_column(b.assignments)) {
    d.error(code::kMixedWildcard, b.span,
            describe(b) + ": '*' targets cannot be mixed with named targets");
  }
  if (b.nested && has_wildcard(b.nested->items) && has_column(b.nested->items)) {
    d.error(code::kMixedWildcard, b.span,
            describe(b) + ": '*' targets cannot be mixed with named targets");
  }

  switch (b.command) {
    case CommandKind::kInsertSelect:
    case CommandKind::kCreateTableAs:
    case CommandKind::kCreateView:
      if (b.from.empty()) {
        d.error(code::kMissingFrom, b.span, describe(b) + " needs a FROM clause");
      }
      if (b.assignments.empty() && !b.same_marker) {
        d.error(code::kEmptySelectList, b.span, describe(b) + " selects nothing");
      }
      break;

    case CommandKind::kInsertValues:
      if (has_select_clauses(b) || !b.where.empty()) {
        d.error(code::kValuesWithClauses, b.span,
                describe(b) + ": an INSERT without FROM inserts literal values "
                              "and takes no clauses");
      }
      if (b.assignments.empty()) {
        d.error(code::kEmptySelectList, b.span, describe(b) + " has no values");
      }
      check_no_alias_or_distinct(b, d);
      break;

    case CommandKind::kUpdate:
      if (has_select_clauses(b)) {
        d.error(code::kUnexpectedClause, b.span,
                describe(b) + " only takes a WHERE clause");
      }
      if (b.nested) {
        check_nested_update(b, d);
        break;
      }
      if (b.assignments.empty()) {
        d.error(code::kEmptySelectList, b.span, describe(b) + " sets nothing");
      }
      if (has_wildcard(b.assignments)) {
        d.error(code::kWildcardNotAllowed, b.span,
                describe(b) + ": UPDATE targets must be named columns");
      }
      check_no_alias_or_distinct(b, d);
      break;

    case CommandKind::kDelete:
      if (!b.assignments.empty()) {
        d.error(code::kUnexpectedAssignments, b.span,
                describe(b) + " takes no assignments");
      }
      if (!b.group_by.empty() || !b.having.empty() || !b.order_by.empty()) {
        d.error(code::kUnexpectedClause, b.span,
                describe(b) + " only takes FROM and WHERE");
      }
      if (b.from.size() > 1) {
        d.error(code::kDeleteMultipleTables, b.span,
                describe(b) + ": FROM may name only one table");
      } else if (b.from.size() == 1 && b.from[0].name != b.table) {
        d.warning(code::kDeleteFromMismatch, b.span,
                  "DELETE names table '" + b.table.str() + "' but FROM names '" +
                      b.from[0].name.str() + "'; deleting from '" +
                      b.from[0].name.str() + "'");
      }
      break;

    case CommandKind::kTruncate:
    case CommandKind::kDropTable:
    case CommandKind::kDropView:
      if (!b.assignments.empty()) {
        d.error(code::kUnexpectedAssignments, b.span,
                describe(b) + " takes no assignments");
      }
      if (has_any_clause(b)) {
        d.error(code::kUnexpectedClause, b.span, describe(b) + " takes no clauses");
      }
      break;

    case CommandKind::kCreateTableBasic:
      if (has_any_clause(b)) {
        d.error(code::kUnexpectedClause, b.span, describe(b) + " takes no clauses");
      }
      if (b.assignments.empty()) {
        d.error(code::kEmptySelectList, b.span, describe(b) + " declares no columns");
      }
      if (has_wildcard(b.assignments)) {
        d.error(code::kWildcardNotAllowed, b.span,
                describe(b) + ": column declarations need names");
      }
      break;

    case CommandKind::kCreateIndex: {
      if (has_any_clause(b)) {
        d.error(code::kUnexpectedClause, b.span, describe(b) + " takes no clauses");
      }
      if (b.assignments.empty()) {
        d.error(code::kEmptySelectList, b.span, describe(b) + " lists no columns");
        break;
      }
      if (has_wildcard(b.assignments)) {
        d.error(code::kWildcardNotAllowed, b.span,
                describe(b) + ": index lines read 'table==column'");
        break;
      }
      const QualifiedName& table = b.assignments.front().target.name;
      for (const auto& a : b.assignments) {
        if (a.target.name != table) {
          d.error(code::kIndexTableMismatch, b.span,
                  describe(b) + ": index lines name both '" + table.str() +
                      "' and '" + a.target.name.str() + "'");
          break;
        }
      }
      for (const auto& a : b.assignments) {
        const Term& t = a.expr.first;
        if (!a.expr.is_single_term() || t.kind != TermKind::kColumnRef ||
            t.name.parts.size() != 1 || a.alias || a.distinct) {
          d.error(code::kInvalidIndexColumn, b.span,
                  describe(b) + ": '" + to_text(a.expr) +
                      "' is not a plain column name");
          break;
        }
      }
      break;
    }
  }
}

size_t select_arity(const OperationBlock& b) { return b.assignments.size(); }

void validate_chain(const Chain& chain, Diagnostics& d) {
  if (chain.blocks.size() < 2) return;
  const OperationBlock& first = chain.blocks.front();
  for (size_t i = 0; i < chain.blocks.size(); ++i) {
    const OperationBlock& b = chain.blocks[i];
    if (!is_query_family(b.command)) {
      d.error(code::kChainCommandMismatch, b.span,
              describe(b) + ": set operators only combine INSERT ... FROM, "
                            "CREATE and CREATE VIEW blocks");
    } else if (b.command != first.command) {
      d.error(code::kChainCommandMismatch, b.span,
              describe(b) + ": chained blocks must use the same command as "
                            "the first block");
    }
    if (i > 0 && b.table != first.table) {
      d.warning(code::kChainTableMismatch, b.span,
                "chained block targets '" + b.table.str() +
                    "'; the combined statement writes to '" + first.table.str() +
                    "'");
    }
    if (i > 0 && !b.same_marker && !first.same_marker &&
        select_arity(b) != select_arity(first)) {
      d.error(code::kSetChainShapeMismatch, b.span,
              describe(b) + " selects " + std::to_string(select_arity(b)) +
                  " items but the first block in its chain selects " +
                  std::to_string(select_arity(first)));
    }
    if (i + 1 < chain.blocks.size() && !b.order_by.empty()) {
      d.error(code::kOrderByInNonFinalBlock, b.span,
              describe(b) + ": ORDER BY is only allowed on the last block of a "
                            "set chain");
    }
  }
}

}  // namespace

Script expand_same(const Script& script, Diagnostics* diags) {
  Script out = script;
  for (Chain& chain : out.chains) {
    for (size_t i = 0; i < chain.blocks.size(); ++i) {
      OperationBlock& b = chain.blocks[i];
      if (!b.same_marker) continue;
      if (chain.blocks.size() == 1) {
        if (diags) {
          diags->error(code::kSameOutsideChain, b.span,
                       "'SAME:==SAME:' needs a preceding block joined by a set "
                       "operator");
        }
        continue;
      }
      if (i == 0) {
        if (diags) {
          diags->error(code::kSameInFirstBlock, b.span,
                       "the first block of a chain cannot use 'SAME:==SAME:'");
        }
        continue;
      }
      const OperationBlock& source = chain.blocks.front();
      if (source.same_marker) continue;  // reported at the first block
      b.assignments = source.assignments;
      b.same_marker = false;
    }
  }
  return out;
}

Diagnostics validate(const Script& script) {
  Diagnostics d;
  for (const Chain& chain : script.chains) {
    for (const OperationBlock& b : chain.blocks) validate_block(b, d);
    validate_chain(chain, d);
  }
  d.sort_by_span();
  return d;
}

Script normalize(const Script& script) {
  Script out = script;
  for (Chain& chain : out.chains) {
    for (OperationBlock& b : chain.blocks) {
      if (b.command == CommandKind::kDelete && b.from.size() == 1) {
        b.table = b.from.front().name;
        b.from.clear();
      }
    }
  }
  return out;
}

CompileResult compile(std::string_view text, std::string_view name) {
  CompileResult result;
  ParseResult parsed = parse_text(text, name);
  result.diagnostics = std::move(parsed.diagnostics);
  if (result.diagnostics.has_errors()) {
    result.script = std::move(parsed.script);
    return result;
  }
  Script expanded = expand_same(parsed.script, &result.diagnostics);
  result.diagnostics.append(validate(expanded));
  result.diagnostics.sort_by_span();
  result.script = result.diagnostics.has_errors() ? std::move(expanded)
                                                  : normalize(expanded);
  return result;
}

}  // namespace dsqlt
