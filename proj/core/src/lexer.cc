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

#include "dsqlt/lexer.h"

#include <algorithm>
#include <array>
#include <cctype>
#include <utility>

namespace dsqlt {
namespace {

constexpr std::array<std::pair<std::string_view, Keyword>, 21> kKeywords = {{
    {"TABLE", Keyword::kTable},
    {"COMMAND", Keyword::kCommand},
    {"FROM", Keyword::kFrom},
    {"WHERE", Keyword::kWhere},
    {"GROUP BY", Keyword::kGroupBy},
    {"HAVING", Keyword::kHaving},
    {"ORDER BY", Keyword::kOrderBy},
    {"SAME", Keyword::kSame},
    {"DISTINCT", Keyword::kDistinct},
    {"INSERT", Keyword::kInsert},
    {"UPDATE", Keyword::kUpdate},
    {"DELETE", Keyword::kDelete},
    {"TRUNCATE", Keyword::kTruncate},
    {"CREATE", Keyword::kCreate},
    {"ONLY", Keyword::kOnly},
    {"VIEW", Keyword::kView},
    {"INDEX", Keyword::kIndex},
    {"DROP", Keyword::kDrop},
    {"UNION", Keyword::kUnion},
    {"INTERSECT", Keyword::kIntersect},
    {"MINUS", Keyword::kMinus},
}};

bool is_space(char c) { return c == ' ' || c == '\t' || c == '\f' || c == '\v'; }
bool is_ident_start(char c) {
  return std::isalpha(static_cast<unsigned char>(c)) || c == '_';
}
bool is_ident_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
}
bool is_digit(char c) { return c >= '0' && c <= '9'; }

std::string upper(std::string_view s) {
  std::string out(s);
  for (char& c : out) c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
  return out;
}

// Returns the offset of the first invalid byte, or npos.
size_t find_invalid_utf8(std::string_view s) {
  size_t i = 0;
  while (i < s.size()) {
    const auto b = static_cast<unsigned char>(s[i]);
    size_t len = 0;
    unsigned min = 0;
    unsigned cp = 0;
    if (b < 0x80) {
      ++i;
      continue;
    } else if ((b & 0xE0) == 0xC0) {
      len = 2, min = 0x80, cp = b & 0x1F;
    } else if ((b & 0xF0) == 0xE0) {
      len = 3, min = 0x800, cp = b & 0x0F;
    } else if ((b & 0xF8) == 0xF0) {
      len = 4, min = 0x10000, cp = b & 0x07;
    } else {
      return i;
    }
    if (i + len > s.size()) return i;
    for (size_t k = 1; k < len; ++k) {
      const auto c = static_cast<unsigned char>(s[i + k]);
      if ((c & 0xC0) != 0x80) return i;
      cp = (cp << 6) | (c & 0x3F);
    }
    if (cp < min || cp > 0x10FFFF || (cp >= 0xD800 && cp <= 0xDFFF)) return i;
    i += len;
  }
  return std::string_view::npos;
}

SourcePos pos_of_offset(std::string_view text, size_t offset) {
  SourcePos pos{1, 1};
  for (size_t i = 0; i < offset && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++pos.line;
      pos.column = 1;
    } else {
      ++pos.column;
    }
  }
  return pos;
}

// One physical line with comments removed.
struct StrippedLine {
  std::string text;
  std::vector<SourcePos> origins;
  bool ends_in_string = false;
};

bool ends_with_continuation(const StrippedLine& line, size_t* marker_at) {
  if (line.ends_in_string) return false;
  size_t end = line.text.size();
  while (end > 0 && is_space(line.text[end - 1])) --end;
  if (end < 2) return false;
  std::string_view tail(line.text.data() + end - 2, 2);
  if (tail == "//" || tail == "\\\\") {
    *marker_at = end - 2;
    return true;
  }
  return false;
}

}  // namespace

std::string_view to_string(TokenKind kind) {
  switch (kind) {
    case TokenKind::kLBrace: return "LBRACE";
    case TokenKind::kRBrace: return "RBRACE";
    case TokenKind::kKeyword: return "KEYWORD";
    case TokenKind::kIdent: return "IDENT";
    case TokenKind::kNumber: return "NUMBER";
    case TokenKind::kString: return "STRING";
    case TokenKind::kAssign: return "ASSIGN";
    case TokenKind::kOperator: return "OPERATOR";
    case TokenKind::kComma: return "COMMA";
    case TokenKind::kLParen: return "LPAREN";
    case TokenKind::kRParen: return "RPAREN";
    case TokenKind::kDot: return "DOT";
    case TokenKind::kStar: return "STAR";
    case TokenKind::kSetOp: return "SET_OP";
  }
  return "?";
}

std::optional<Keyword> keyword_of(const Token& token) {
  if (token.kind != TokenKind::kKeyword && token.kind != TokenKind::kSetOp) {
    return std::nullopt;
  }
  // Collapse internal whitespace ("group   by") and drop the colon.
  std::string word;
  bool pending_space = false;
  for (char c : token.lexeme) {
    if (c == ':') break;
    if (is_space(c)) {
      pending_space = !word.empty();
      continue;
    }
    if (pending_space) word.push_back(' ');
    pending_space = false;
    word.push_back(static_cast<char>(std::toupper(static_cast<unsigned char>(c))));
  }
  for (const auto& [spelling, kw] : kKeywords) {
    if (spelling == word) return kw;
  }
  return std::nullopt;
}

bool has_colon(const Token& token) {
  return (token.kind == TokenKind::kKeyword || token.kind == TokenKind::kSetOp) &&
         !token.lexeme.empty() && token.lexeme.back() == ':';
}

std::string_view keyword_spelling(Keyword keyword) {
  for (const auto& [spelling, kw] : kKeywords) {
    if (kw == keyword) return spelling;
  }
  return "";
}

std::vector<LogicalLine> preprocess(const RawSource& source) {
  const std::string_view text = source.text;
  if (size_t bad = find_invalid_utf8(text); bad != std::string_view::npos) {
    throw ScriptError(code::kInvalidEncoding, span_at(pos_of_offset(text, bad)),
                      "input is not valid UTF-8");
  }

  // Split into physical lines. A trailing newline does not open a new line.
  std::vector<std::string_view> physical;
  size_t start = 0;
  while (start < text.size()) {
    size_t nl = text.find('\n', start);
    if (nl == std::string_view::npos) nl = text.size();
    std::string_view line = text.substr(start, nl - start);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    physical.push_back(line);
    start = nl + 1;
  }

  // Strip comments. Block comments carry over between lines; strings do not.
  std::vector<StrippedLine> stripped(physical.size());
  bool in_block = false;
  SourcePos block_start;
  for (size_t li = 0; li < physical.size(); ++li) {
    const std::string_view line = physical[li];
    const int line_no = static_cast<int>(li) + 1;
    StrippedLine& out = stripped[li];
    bool in_string = false;
    size_t i = 0;
    while (i < line.size()) {
      if (in_block) {
        size_t close = line.find("*/", i);
        if (close == std::string_view::npos) {
          i = line.size();
          break;
        }
        in_block = false;
        i = close + 2;
        continue;
      }
      const char c = line[i];
      if (in_string) {
        if (c == '\'') in_string = false;
      } else if (c == '\'') {
        in_string = true;
      } else if (c == '#') {
        break;
      } else if (c == '/' && i + 1 < line.size() && line[i + 1] == '*') {
        in_block = true;
        block_start = {line_no, static_cast<int>(i) + 1};
        i += 2;
        continue;
      }
      out.text.push_back(c);
      out.origins.push_back({line_no, static_cast<int>(i) + 1});
      ++i;
    }
    out.ends_in_string = in_string;
  }
  if (in_block) {
    throw ScriptError(code::kUnterminatedBlockComment, span_at(block_start),
                      "'/*' has no matching '*/'");
  }

  // Join continuations, trim, drop blank lines.
  std::vector<LogicalLine> lines;
  LogicalLine current;
  bool continuing = false;
  for (size_t li = 0; li < stripped.size(); ++li) {
    const int line_no = static_cast<int>(li) + 1;
    StrippedLine& piece = stripped[li];
    if (!continuing) {
      current = LogicalLine{};
      current.first_line = line_no;
    }
    current.last_line = line_no;
    size_t marker_at = 0;
    const bool continues = ends_with_continuation(piece, &marker_at);
    const size_t keep = continues ? marker_at : piece.text.size();
    current.text.append(piece.text, 0, keep);
    current.origins.insert(current.origins.end(), piece.origins.begin(),
                           piece.origins.begin() + static_cast<long>(keep));
    if (continues) {
      if (li + 1 == stripped.size()) {
        throw ScriptError(code::kDanglingContinuation,
                          span_at(piece.origins[marker_at]),
                          "continuation marker on the last line of the file");
      }
      continuing = true;
      continue;
    }
    continuing = false;

    size_t b = 0;
    size_t e = current.text.size();
    while (b < e && is_space(current.text[b])) ++b;
    while (e > b && is_space(current.text[e - 1])) --e;
    if (b == e) continue;
    current.text = current.text.substr(b, e - b);
    current.origins = std::vector<SourcePos>(
        current.origins.begin() + static_cast<long>(b),
        current.origins.begin() + static_cast<long>(e));
    lines.push_back(std::move(current));
  }
  return lines;
}

std::vector<Token> tokenize(const LogicalLine& line) {
  const std::string& s = line.text;
  auto origin = [&](size_t i) {
    if (i < line.origins.size()) return line.origins[i];
    return SourcePos{line.first_line, static_cast<int>(i) + 1};
  };
  std::vector<Token> tokens;
  auto push = [&](TokenKind kind, size_t begin, size_t end) {
    tokens.push_back(
        {kind, s.substr(begin, end - begin), {origin(begin), origin(end - 1)}});
  };

  size_t i = 0;
  while (i < s.size()) {
    const char c = s[i];
    if (is_space(c) || c == '\r' || c == '\n') {
      ++i;
      continue;
    }
    const size_t begin = i;
    switch (c) {
      case '{': push(TokenKind::kLBrace, i, i + 1); ++i; continue;
      case '}': push(TokenKind::kRBrace, i, i + 1); ++i; continue;
      case '(': push(TokenKind::kLParen, i, i + 1); ++i; continue;
      case ')': push(TokenKind::kRParen, i, i + 1); ++i; continue;
      case ',': push(TokenKind::kComma, i, i + 1); ++i; continue;
      case '.': push(TokenKind::kDot, i, i + 1); ++i; continue;
      case '*': push(TokenKind::kStar, i, i + 1); ++i; continue;
      case '+':
      case '-':
      case '/':
        push(TokenKind::kOperator, i, i + 1);
        ++i;
        continue;
      case '=': {
        const size_t len = (i + 1 < s.size() && s[i + 1] == '=') ? 2 : 1;
        push(TokenKind::kAssign, i, i + len);
        i += len;
        continue;
      }
      case '<':
      case '>':
      case '!': {
        size_t len = 1;
        if (i + 1 < s.size()) {
          const char n = s[i + 1];
          if (n == '=' || (c == '<' && n == '>')) len = 2;
        }
        if (c == '!' && len == 1) break;  // lone '!' is illegal
        push(TokenKind::kOperator, i, i + len);
        i += len;
        continue;
      }
      case '\'': {
        size_t close = s.find('\'', i + 1);
        if (close == std::string::npos) {
          throw ScriptError(code::kUnterminatedString, span_at(origin(i)),
                            "string literal is not terminated on this line");
        }
        push(TokenKind::kString, i, close + 1);
        i = close + 1;
        continue;
      }
      default:
        break;
    }

    if (is_digit(c)) {
      while (i < s.size() && is_digit(s[i])) ++i;
      if (i + 1 < s.size() && s[i] == '.' && is_digit(s[i + 1])) {
        ++i;
        while (i < s.size() && is_digit(s[i])) ++i;
      }
      push(TokenKind::kNumber, begin, i);
      continue;
    }

    if (is_ident_start(c)) {
      while (i < s.size() && is_ident_char(s[i])) ++i;
      std::string word = upper(std::string_view(s).substr(begin, i - begin));
      // GROUP BY / ORDER BY are single two-word keywords.
      if (word == "GROUP" || word == "ORDER") {
        size_t j = i;
        while (j < s.size() && is_space(s[j])) ++j;
        size_t k = j;
        while (k < s.size() && is_ident_char(s[k])) ++k;
        if (j > i && upper(std::string_view(s).substr(j, k - j)) == "BY") {
          word += " BY";
          i = k;
        }
      }
      auto it = std::find_if(kKeywords.begin(), kKeywords.end(),
                             [&](const auto& kw) { return kw.first == word; });
      if (it == kKeywords.end()) {
        push(TokenKind::kIdent, begin, i);
        continue;
      }
      size_t j = i;
      while (j < s.size() && is_space(s[j])) ++j;
      if (j < s.size() && s[j] == ':') i = j + 1;
      const bool set_op = it->second == Keyword::kUnion ||
                          it->second == Keyword::kIntersect ||
                          it->second == Keyword::kMinus;
      push(set_op ? TokenKind::kSetOp : TokenKind::kKeyword, begin, i);
      continue;
    }

    // Report the whole UTF-8 sequence, not a single byte.
    size_t len = 1;
    const auto b = static_cast<unsigned char>(c);
    if (b >= 0xF0) len = 4;
    else if (b >= 0xE0) len = 3;
    else if (b >= 0xC0) len = 2;
    throw ScriptError(code::kIllegalCharacter, span_at(origin(begin)),
                      "illegal character '" + s.substr(begin, len) + "'");
  }
  return tokens;
}

std::vector<Token> tokenize(std::string_view text) {
  LogicalLine line;
  line.text = std::string(text);
  line.first_line = line.last_line = 1;
  for (size_t i = 0; i < text.size(); ++i) {
    line.origins.push_back({1, static_cast<int>(i) + 1});
  }
  return tokenize(line);
}

namespace {

bool is_wordish(TokenKind k) {
  return k == TokenKind::kIdent || k == TokenKind::kNumber ||
         k == TokenKind::kString || k == TokenKind::kKeyword ||
         k == TokenKind::kSetOp;
}

bool is_symbolic_operator(TokenKind k) {
  return k == TokenKind::kOperator || k == TokenKind::kAssign ||
         k == TokenKind::kStar;
}

bool is_logical_word(const Token& t) {
  if (t.kind != TokenKind::kIdent) return false;
  const std::string w = upper(t.lexeme);
  return w == "AND" || w == "OR" || w == "NOT" || w == "IN" || w == "EXISTS";
}

bool needs_space(const Token& prev, const Token& next) {
  if (is_wordish(next.kind) &&
      (is_wordish(prev.kind) || prev.kind == TokenKind::kRParen)) {
    return true;
  }
  if (next.kind == TokenKind::kLParen && is_logical_word(prev)) return true;
  return is_symbolic_operator(prev.kind) && is_symbolic_operator(next.kind);
}

}  // namespace

std::string join_tokens(std::span<const Token> tokens) {
  std::string out;
  for (size_t i = 0; i < tokens.size(); ++i) {
    if (i > 0 && needs_space(tokens[i - 1], tokens[i])) out.push_back(' ');
    out.append(tokens[i].lexeme);
  }
  return out;
}

}  // namespace dsqlt
