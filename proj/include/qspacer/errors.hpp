// Copyright 2026 The qspacer Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace qspacer {

/* Base of every error raised by the library. The CLI maps subclasses onto
 * process exit codes (see tools/qspacer.cpp). */
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string &msg) : std::runtime_error(msg) {}
};

// Argument outside the mathematical domain of an operation.
class DomainError : public Error {
 public:
  explicit DomainError(const std::string &msg) : Error(msg) {}
};

// Sizes or matrix shapes that do not line up.
class ShapeError : public Error {
 public:
  explicit ShapeError(const std::string &msg) : Error(msg) {}
};

// Dual-rail geometry where the rails would overlap.
class GeometryError : public DomainError {
 public:
  explicit GeometryError(const std::string &msg) : DomainError(msg) {}
};

class UnsupportedGateError : public Error {
 public:
  explicit UnsupportedGateError(const std::string &msg) : Error(msg) {}
};

// Register too large for dense amplitude storage.
class CapacityError : public Error {
 public:
  explicit CapacityError(const std::string &msg) : Error(msg) {}
};

/* Malformed input document. line/column are 1-based; 0 means the position
 * is unknown (schema errors found after a successful syntactic parse). */
class ParseError : public Error {
 public:
  ParseError(const std::string &msg, std::size_t line = 0,
             std::size_t column = 0)
      : Error(format(msg, line, column)), line_(line), column_(column) {}

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  static std::string format(const std::string &msg, std::size_t line,
                            std::size_t column) {
    if (line == 0) return msg;
    return "line " + std::to_string(line) + ", column " +
           std::to_string(column) + ": " + msg;
  }

  std::size_t line_;
  std::size_t column_;
};

}  // namespace qspacer
