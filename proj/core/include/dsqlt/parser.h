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

// Recursive-descent parser for scripts.
//
// The grammar is line oriented. Each logical line is split further at `{`
// and `}` so that `{TABLE: t` and `x==1}` work; the resulting token runs are
// called units. A block is
//
//   {
//   TABLE: name
//   COMMAND: words
//   target==expression [alias]      (zero or more)
//   SAME:==SAME:                    (instead of assignments)
//   { nested select }               (UPDATE only)
//   FROM: / WHERE: / GROUP BY: / HAVING: / ORDER BY:   (any order, once each)
//   }
//
// Once a clause has started, units that do not begin with another clause
// keyword continue it, so a WHERE condition may run over several lines.

#ifndef DSQLT_PARSER_H_
#define DSQLT_PARSER_H_

#include <span>
#include <string_view>
#include <variant>
#include <vector>

#include "dsqlt/ast.h"
#include "dsqlt/diagnostic.h"
#include "dsqlt/lexer.h"

namespace dsqlt {

using TokenLine = std::vector<Token>;

struct ParseResult {
  Script script;            // successfully parsed blocks only
  Diagnostics diagnostics;  // errors and warnings, in source order
};

// Tokenizes and parses. A failing block is reported and skipped; later
// blocks are still parsed. Never throws ScriptError.
ParseResult parse_script(std::span<const LogicalLine> lines);

// preprocess + parse_script, with lexer errors folded into the diagnostics.
ParseResult parse_text(std::string_view text, std::string_view name = "<input>");

// Tokenizes logical lines and splits them at braces.
std::vector<TokenLine> split_units(std::span<const LogicalLine> lines);

// `units` spans one `{ ... }` region, braces included. Warnings go to `sink`
// when given; the first error is thrown as ScriptError.
OperationBlock parse_block(std::span<const TokenLine> units,
                           Diagnostics* sink = nullptr);

// `tokens` is one assignment line. `index` is its position in the block
// (DISTINCT is only allowed at index 0). For ONLY CREATE blocks pass
// `type_decl = true`: the right-hand side is kept as raw type text.
Assignment parse_assignment(std::span<const Token> tokens, size_t index = 0,
                            bool type_decl = false, Diagnostics* sink = nullptr);

// Parses a complete expression; trailing tokens are an error.
Expression parse_expression(std::span<const Token> tokens);

using ClausePayload =
    std::variant<std::vector<TableRef>, std::vector<Condition>,
                 std::vector<GroupItem>, std::vector<OrderItem>>;

// `keyword` is one of FROM, WHERE, GROUP BY, HAVING, ORDER BY; `tokens` is
// the clause body. `at` locates the keyword for EmptyClause.
ClausePayload parse_clause(Keyword keyword, std::span<const Token> tokens,
                           SourceSpan at = {});

}  // namespace dsqlt

#endif  // DSQLT_PARSER_H_
