// Copyright 2026 The hypersat Authors
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
#include <cstdint>
#include <stdexcept>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace hypersat {

using Vertex = std::uint32_t;
using EdgeId = std::uint32_t;

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Base class of every error raised by the library. The CLI maps these to
/// exit status 1.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Input violates an operation's precondition.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// An oracle or size cap refused its input.
class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

/// Malformed hypergraph text or configuration. Line and column are 1-based;
/// 0 means "not applicable".
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t line, std::size_t column = 0)
      : Error(format(what, line, column)), line_(line), column_(column) {}

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  static std::string format(const std::string& what, std::size_t line, std::size_t column) {
    std::string out = "line " + std::to_string(line);
    if (column != 0) out += ", column " + std::to_string(column);
    return out + ": " + what;
  }

  std::size_t line_;
  std::size_t column_;
};

/// Natural logarithm of a positive arbitrary-precision integer.
double log_big(const BigInt& x);

/// n! as an arbitrary-precision integer.
BigInt factorial(unsigned n);

/// Exact power base^exp.
BigInt ipow(const BigInt& base, unsigned exp);

/// "p/q" with q > 0, always with the denominator (1 is written as "1/1").
std::string rational_string(const Rational& q);

/// Fixed-precision decimal rendering used in reports.
std::string decimal_string(double x, int digits = 12);

}  // namespace hypersat
