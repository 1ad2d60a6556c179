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

#ifndef DSQLT_DIAGNOSTIC_H_
#define DSQLT_DIAGNOSTIC_H_

#include <compare>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace dsqlt {

// 1-based physical position in a script file. line == 0 means "unknown".
struct SourcePos {
  int line = 0;
  int column = 0;

  friend auto operator<=>(const SourcePos&, const SourcePos&) = default;
};

struct SourceSpan {
  SourcePos begin;
  SourcePos end;

  friend bool operator==(const SourceSpan&, const SourceSpan&) = default;
};

inline SourceSpan span_at(SourcePos pos) { return {pos, pos}; }

enum class Severity { kError, kWarning };

std::string_view to_string(Severity severity);

// Stable diagnostic codes. These strings are part of the tool's output
// contract; never rename one.
namespace code {
// lexer
inline constexpr std::string_view kInvalidEncoding = "InvalidEncoding";
inline constexpr std::string_view kUnterminatedBlockComment =
    "UnterminatedBlockComment";
inline constexpr std::string_view kDanglingContinuation = "DanglingContinuation";
inline constexpr std::string_view kIllegalCharacter = "IllegalCharacter";
inline constexpr std::string_view kUnterminatedString = "UnterminatedString";
// parser
inline constexpr std::string_view kUnbalancedBraces = "UnbalancedBraces";
inline constexpr std::string_view kTrailingSetOperator = "TrailingSetOperator";
inline constexpr std::string_view kJunkBetweenBlocks = "JunkBetweenBlocks";
inline constexpr std::string_view kMissingTable = "MissingTable";
inline constexpr std::string_view kMissingCommand = "MissingCommand";
inline constexpr std::string_view kUnknownCommand = "UnknownCommand";
inline constexpr std::string_view kDuplicateClause = "DuplicateClause";
inline constexpr std::string_view kNestedBlockOutsideUpdate =
    "NestedBlockOutsideUpdate";
inline constexpr std::string_view kExpectedAssignment = "ExpectedAssignment";
inline constexpr std::string_view kInvalidTarget = "InvalidTarget";
inline constexpr std::string_view kInvalidSameMarker = "InvalidSameMarker";
inline constexpr std::string_view kEmptyExpression = "EmptyExpression";
inline constexpr std::string_view kDistinctNotFirst = "DistinctNotFirst";
inline constexpr std::string_view kMultipleAliases = "MultipleAliases";
inline constexpr std::string_view kDanglingOperator = "DanglingOperator";
inline constexpr std::string_view kUnbalancedParens = "UnbalancedParens";
inline constexpr std::string_view kUnexpectedToken = "UnexpectedToken";
inline constexpr std::string_view kEmptyClause = "EmptyClause";
inline constexpr std::string_view kInvalidTableRef = "InvalidTableRef";
inline constexpr std::string_view kSingleEquals = "SingleEquals";
inline constexpr std::string_view kMissingColon = "MissingColon";
// analyzer
inline constexpr std::string_view kSameInFirstBlock = "SameInFirstBlock";
inline constexpr std::string_view kSameOutsideChain = "SameOutsideChain";
inline constexpr std::string_view kMixedWildcard = "MixedWildcard";
inline constexpr std::string_view kArityMismatch = "ArityMismatch";
inline constexpr std::string_view kMissingFrom = "MissingFrom";
inline constexpr std::string_view kIndexTableMismatch = "IndexTableMismatch";
inline constexpr std::string_view kInvalidIndexColumn = "InvalidIndexColumn";
inline constexpr std::string_view kDeleteFromMismatch = "DeleteFromMismatch";
inline constexpr std::string_view kDeleteMultipleTables = "DeleteMultipleTables";
inline constexpr std::string_view kSetChainShapeMismatch =
    "SetChainShapeMismatch";
inline constexpr std::string_view kChainCommandMismatch = "ChainCommandMismatch";
inline constexpr std::string_view kChainTableMismatch = "ChainTableMismatch";
inline constexpr std::string_view kValuesWithClauses = "ValuesWithClauses";
inline constexpr std::string_view kUnexpectedClause = "UnexpectedClause";
inline constexpr std::string_view kUnexpectedAssignments = "UnexpectedAssignments";
inline constexpr std::string_view kEmptySelectList = "EmptySelectList";
inline constexpr std::string_view kWildcardNotAllowed = "WildcardNotAllowed";
inline constexpr std::string_view kInvalidTupleTarget = "InvalidTupleTarget";
inline constexpr std::string_view kOrderByInNonFinalBlock =
    "OrderByInNonFinalBlock";
// emitter / runner
inline constexpr std::string_view kUnsupportedInDialect = "UnsupportedInDialect";
inline constexpr std::string_view kRegistrationUnsupported =
    "RegistrationUnsupported";
inline constexpr std::string_view kTruncateDegraded = "TruncateDegraded";
}  // namespace code

struct Diagnostic {
  Severity severity = Severity::kError;
  std::string code;
  std::string message;
  SourceSpan span;

  friend bool operator==(const Diagnostic&, const Diagnostic&) = default;
};

// Ordered collection of diagnostics produced by one or more passes.
class Diagnostics {
 public:
  void error(std::string_view code, SourceSpan span, std::string message);
  void warning(std::string_view code, SourceSpan span, std::string message);
  void add(Diagnostic d) { items_.push_back(std::move(d)); }
  void append(const Diagnostics& other);

  bool has_errors() const;
  size_t error_count() const;
  bool empty() const { return items_.empty(); }
  size_t size() const { return items_.size(); }

  // Stable sort by span start; equal spans keep insertion order.
  void sort_by_span();

  const std::vector<Diagnostic>& items() const { return items_; }
  auto begin() const { return items_.begin(); }
  auto end() const { return items_.end(); }

 private:
  std::vector<Diagnostic> items_;
};

// `SEVERITY CODE file:line: message`
std::string render(const Diagnostic& d, std::string_view file);
std::string render(const Diagnostics& diags, std::string_view file);

// Thrown by the lexer and parser for a single hard error. The parser catches
// these per block so later blocks still get checked.
class ScriptError : public std::runtime_error {
 public:
  ScriptError(std::string_view code, SourceSpan span, const std::string& message)
      : std::runtime_error(message), code_(code), span_(span) {}

  const std::string& code() const { return code_; }
  SourceSpan span() const { return span_; }
  Diagnostic to_diagnostic() const {
    return {Severity::kError, code_, what(), span_};
  }

 private:
  std::string code_;
  SourceSpan span_;
};

}  // namespace dsqlt

#endif  // DSQLT_DIAGNOSTIC_H_
