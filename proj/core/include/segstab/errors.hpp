// Copyright 2026 the segstab authors
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

#ifndef SEGSTAB_ERRORS_HPP
#define SEGSTAB_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace segstab {

/// Root of all domain errors thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class EmptyCoalitionError : public Error {
 public:
  EmptyCoalitionError() : Error("operation requires a nonempty coalition") {}
};

class NegativeMassError : public Error {
 public:
  using Error::Error;
};

class WrongArityError : public Error {
 public:
  using Error::Error;
};

class CapExceededError : public Error {
 public:
  using Error::Error;
};

class NotApplicableError : public Error {
 public:
  using Error::Error;
};

class NotBlockingError : public Error {
 public:
  using Error::Error;
};

class EmptyCoreError : public Error {
 public:
  EmptyCoreError() : Error("the core of this market is empty") {}
};

class IndexOutOfRangeError : public Error {
 public:
  using Error::Error;
};

/// A (coalition, price) pair where the price is not optimal for the coalition.
class InvalidSegmentError : public Error {
 public:
  using Error::Error;
};

/// Violated structural invariant (partition condition, plan marginals, ...).
class ValidationError : public Error {
 public:
  using Error::Error;
};

/// Text-format error; `line()` is 1-based, 0 when unknown.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t line)
      : Error(what), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

/// Structurally broken blocking chain; `step()` is the offending step index.
class MalformedChainError : public Error {
 public:
  MalformedChainError(const std::string& what, std::size_t step)
      : Error(what + " (step " + std::to_string(step) + ")"), step_(step) {}
  std::size_t step() const { return step_; }

 private:
  std::size_t step_;
};

}  // namespace segstab

#endif  // SEGSTAB_ERRORS_HPP
