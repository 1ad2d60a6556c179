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

#ifndef DSQLT_ANALYZER_H_
#define DSQLT_ANALYZER_H_

#include <string_view>

#include "dsqlt/ast.h"
#include "dsqlt/diagnostic.h"

namespace dsqlt {

/// Replaces every `SAME:==SAME:` marker with a deep copy of the first
/// block's assignments in the same chain. Blocks that cannot be expanded
/// (SameInFirstBlock, SameOutsideChain) keep their marker and are reported
/// to `diags`.
Script expand_same(const Script& script, Diagnostics* diags = nullptr);

/// Checks a SAME-expanded script. Returns diagnostics sorted by span.
///
/// Besides the per-command shape rules this enforces:
///  - `*` targets never mix with named targets;
///  - a nested UPDATE's tuple and select list have the same length;
///  - chained blocks share a query-family command and select-list arity,
///    and only the last one may carry ORDER BY.
///
/// In a nested UPDATE the tuple is normally the list of inner targets. It
/// may instead be declared in the outer block with `column==*` lines, in
/// which case the inner items use `*` targets and are matched by position.
Diagnostics validate(const Script& script);

/// Canonicalizes a validated script: a DELETE whose FROM names a single
/// table is rewritten to target that table, with FROM cleared. Idempotent.
Script normalize(const Script& script);

struct CompileResult {
  Script script;  // expanded and normalized when ok()
  Diagnostics diagnostics;

  bool ok() const { return !diagnostics.has_errors(); }
};

/// preprocess + parse + expand_same + validate + normalize.
CompileResult compile(std::string_view text, std::string_view name = "<input>");

}  // namespace dsqlt

#endif  // DSQLT_ANALYZER_H_
