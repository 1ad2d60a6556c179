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

#ifndef DSQLT_SESSION_H_
#define DSQLT_SESSION_H_

#include <cstdint>
#include <functional>
#include <memory>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "dsqlt/emitter.h"

namespace dsqlt {

using SqlValue = std::variant<std::monostate, std::int64_t, double, std::string>;
using SqlRow = std::vector<SqlValue>;

// Scalar SQL function implemented in C++.
using ScalarFunction = std::function<SqlValue(std::span<const SqlValue>)>;

struct ExecOutcome {
  bool ok = true;
  std::int64_t rows_affected = 0;
  std::string error;
};

class ConnectionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class RegistrationUnsupported : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A connection to one SQL engine. Not thread-safe; use from one thread at a
// time.
class Session {
 public:
  virtual ~Session() = default;

  virtual std::string_view engine() const = 0;
  virtual DialectKind dialect_family() const = 0;

  // Executes exactly one statement. Never retries.
  virtual ExecOutcome execute(std::string_view sql) = 0;

  virtual bool supports_truncate() const = 0;
  virtual bool supports_functions() const { return false; }

  // Throws RegistrationUnsupported unless supports_functions().
  virtual void register_function(const std::string& name, int arity,
                                 ScalarFunction fn) {
    (void)name, (void)arity, (void)fn;
    throw RegistrationUnsupported(std::string(engine()) +
                                  " sessions do not accept user functions");
  }
};

}  // namespace dsqlt

#endif  // DSQLT_SESSION_H_
