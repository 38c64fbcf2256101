// Copyright 2026 The Schinzel Authors
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

#pragma once

#include <stdexcept>
#include <string>

namespace schinzel {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Operands live in different rings or different variable sets.
class RingMismatch : public Error {
 public:
  using Error::Error;
};

/// An operation received an argument outside its domain (zero input,
/// non-prime modulus, degree too large for a Kronecker fold, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// A bounded computation hit its cap. Never silently wrong: callers get
/// this instead of a partial answer.
class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

/// Syntax error in polynomial or ring text, with the byte offset.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : Error(what + " at position " + std::to_string(position)),
        message_(what),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }
  /// The message without the position suffix.
  const std::string& message() const noexcept { return message_; }

 private:
  std::string message_;
  std::size_t position_;
};

}  // namespace schinzel
