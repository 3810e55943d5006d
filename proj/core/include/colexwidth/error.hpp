// Copyright 2026 The colexwidth Authors
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

#include <cstdint>
#include <stdexcept>
#include <string>

namespace colexwidth {

// Base of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed or unsupported input (CLI exit code 2).
class InputError : public Error {
 public:
  using Error::Error;
};

// An analysis was handed an automaton with unreachable or dead states.
class NotTrimError : public InputError {
 public:
  using InputError::InputError;
};

// The automaton accepts no word, so Pref(L) is empty.
class EmptyLanguageError : public InputError {
 public:
  using InputError::InputError;
};

// Text-format parse failure; `line` is 1-based, 0 when not line-specific.
class FormatError : public InputError {
 public:
  FormatError(std::size_t line, const std::string& what)
      : InputError(line == 0 ? what
                             : "line " + std::to_string(line) + ": " + what),
        line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

// A computation would exceed its bound or memory budget (CLI exit code 3).
class ResourceError : public Error {
 public:
  using Error::Error;
};

// Arithmetic overflow while evaluating a length bound. `partial` is the last
// value that was still representable.
class OverflowError : public ResourceError {
 public:
  OverflowError(const std::string& what, std::uint64_t partial)
      : ResourceError(what), partial_(partial) {}

  std::uint64_t partial() const noexcept { return partial_; }

 private:
  std::uint64_t partial_;
};

// An internal invariant or a documented precondition does not hold.
class InvariantError : public Error {
 public:
  using Error::Error;
};

}  // namespace colexwidth
