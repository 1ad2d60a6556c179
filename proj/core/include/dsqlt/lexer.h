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

// Script lexer.
//
// Scripts are processed in two stages. `preprocess` strips comments and joins
// continued lines, producing logical lines; `tokenize` splits one logical
// line into tokens.
//
// Comment and continuation conventions:
//   #  ...        comment to end of line (not inside a '...' string)
//   /* ... */     block comment, may span lines, does not nest
//   ... //        the next physical line continues this one
//   ... \\        same as //
//
// Note that `//` is *only* a continuation marker. It is never a line
// comment, unlike in C-family languages.

#ifndef DSQLT_LEXER_H_
#define DSQLT_LEXER_H_

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "dsqlt/diagnostic.h"

namespace dsqlt {

struct RawSource {
  std::string text;  // UTF-8, LF or CRLF line endings
  std::string name;  // label used in diagnostics
};

struct LogicalLine {
  std::string text;
  int first_line = 0;  // physical line span, 1-based, inclusive
  int last_line = 0;
  // Physical position of every byte of `text`.
  std::vector<SourcePos> origins;

  SourceSpan span() const {
    return {{first_line, 1}, {last_line, 1}};
  }
};

enum class TokenKind {
  kLBrace,
  kRBrace,
  kKeyword,
  kIdent,
  kNumber,
  kString,
  kAssign,
  kOperator,
  kComma,
  kLParen,
  kRParen,
  kDot,
  kStar,
  kSetOp,
};

std::string_view to_string(TokenKind kind);

struct Token {
  TokenKind kind = TokenKind::kIdent;
  std::string lexeme;
  SourceSpan span;
};

enum class Keyword {
  kTable,
  kCommand,
  kFrom,
  kWhere,
  kGroupBy,
  kHaving,
  kOrderBy,
  kSame,
  kDistinct,
  kInsert,
  kUpdate,
  kDelete,
  kTruncate,
  kCreate,
  kOnly,
  kView,
  kIndex,
  kDrop,
  kUnion,
  kIntersect,
  kMinus,
};

// Resolves a KEYWORD or SET_OP token to its keyword, ignoring case and any
// absorbed trailing colon. Returns nullopt for every other token kind.
std::optional<Keyword> keyword_of(const Token& token);

// True if the keyword token was written with its trailing `:`.
bool has_colon(const Token& token);

// Canonical upper-case spelling, without colon ("GROUP BY", "SAME").
std::string_view keyword_spelling(Keyword keyword);

// Throws ScriptError with InvalidEncoding, UnterminatedBlockComment or
// DanglingContinuation.
std::vector<LogicalLine> preprocess(const RawSource& source);

// Throws ScriptError with IllegalCharacter or UnterminatedString.
std::vector<Token> tokenize(const LogicalLine& line);

// Convenience for tests and tools: tokenizes free text as a single line.
std::vector<Token> tokenize(std::string_view text);

// Renders tokens with minimal spacing: a space only where two adjacent
// tokens would otherwise fuse or read badly (`A.NAME`, `f(a,b)`,
// `x>1 AND y<2`, `a- -1`). Re-tokenizing the result yields the same
// kind/lexeme sequence.
std::string join_tokens(std::span<const Token> tokens);

}  // namespace dsqlt

#endif  // DSQLT_LEXER_H_
