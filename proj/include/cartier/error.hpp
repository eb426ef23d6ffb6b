// Copyright 2026 The Cartier Authors
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

#ifndef CARTIER_ERROR_HPP
#define CARTIER_ERROR_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace cartier {

/// Base class of every error raised by the library.  All of them are
/// "domain" errors from the point of view of the command line tool.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed polynomial, ideal or integer expression text.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : Error(what + " at position " + std::to_string(position)), position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

class OverflowError : public Error {
 public:
  using Error::Error;
};

/// Operands live in different polynomial rings.
class ContextMismatch : public Error {
 public:
  ContextMismatch() : Error("operands belong to different polynomial rings") {}
};

/// Invalid argument to a mathematical operation (e.g. a non-prime
/// characteristic or a zero divisor ideal).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// The ideal is neither monomial, principal nor homogeneous, so degree-wise
/// minimal generator counts are not well defined.
class UnsupportedIdealClass : public Error {
 public:
  using Error::Error;
};

/// The configured Groebner work budget was exhausted.
class ResourceError : public Error {
 public:
  using Error::Error;
};

/// Semantic or syntactic problem in a spec file.  Carries a 1-based line
/// number when one is known (0 otherwise).
class SpecError : public Error {
 public:
  SpecError(const std::string& what, std::size_t line)
      : Error(line == 0 ? what : "line " + std::to_string(line) + ": " + what), line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

}  // namespace cartier

#endif  // CARTIER_ERROR_HPP
