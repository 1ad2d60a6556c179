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

#include "dsqlt/diagnostic.h"

#include <algorithm>

namespace dsqlt {

std::string_view to_string(Severity severity) {
  return severity == Severity::kError ? "ERROR" : "WARNING";
}

void Diagnostics::error(std::string_view code, SourceSpan span,
                        std::string message) {
  items_.push_back(
      {Severity::kError, std::string(code), std::move(message), span});
}

void Diagnostics::warning(std::string_view code, SourceSpan span,
                          std::string message) {
  items_.push_back(
      {Severity::kWarning, std::string(code), std::move(message), span});
}

void Diagnostics::append(const Diagnostics& other) {
  items_.insert(items_.end(), other.items_.begin(), other.items_.end());
}

bool Diagnostics::has_errors() const { return error_count() > 0; }

size_t Diagnostics::error_count() const {
  return static_cast<size_t>(
      std::count_if(items_.begin(), items_.end(), [](const Diagnostic& d) {
        return d.severity == Severity::kError;
      }));
}

void Diagnostics::sort_by_span() {
  std::stable_sort(items_.begin(), items_.end(),
                   [](const Diagnostic& a, const Diagnostic& b) {
                     return a.span.begin < b.span.begin;
                   });
}

std::string render(const Diagnostic& d, std::string_view file) {
  std::string out;
  out.append(to_string(d.severity));
  out.push_back(' ');
  out.append(d.code);
  out.push_back(' ');
  out.append(file);
  out.push_back(':');
  out.append(std::to_string(d.span.begin.line));
  out.append(": ");
  out.append(d.message);
  return out;
}

std::string render(const Diagnostics& diags, std::string_view file) {
  std::string out;
  for (const auto& d : diags) {
    out.append(render(d, file));
    out.push_back('\n');
  }
  return out;
}

}  // namespace dsqlt
