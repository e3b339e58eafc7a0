// Copyright 2026 The rdalpha Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef RDALPHA_ERROR_HPP
#define RDALPHA_ERROR_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace rdalpha {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed graph6 or edge-list input. `offset` is the byte offset of the
/// offending character (or the line number for edge lists).
class ParseError : public Error {
 public:
  ParseError(const std::string &what, std::size_t offset)
      : Error(what + " (at offset " + std::to_string(offset) + ")"),
        offset_(offset) {}

  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

/// Raised whenever a reciprocal distance would involve an unreachable pair.
class NotConnectedError : public Error {
 public:
  NotConnectedError() : Error("graph not connected") {}
};

/// Exact exponential algorithms refuse inputs beyond their order budget.
class BudgetExceededError : public Error {
 public:
  BudgetExceededError(const std::string &what, int n, int limit)
      : Error("budget exceeded: " + what + " supports n <= " +
              std::to_string(limit) + ", got n = " + std::to_string(n)) {}
};

/// Argument outside an operation's documented domain.
class InvalidArgumentError : public Error {
 public:
  using Error::Error;
};

/// The Jacobi iteration did not reach its off-diagonal tolerance.
class ConvergenceError : public Error {
 public:
  ConvergenceError(const std::string &what, double residual)
      : Error(what + " (achieved off-diagonal norm " +
              std::to_string(residual) + ")"),
        residual_(residual) {}

  double residual() const noexcept { return residual_; }

 private:
  double residual_;
};

}  // namespace rdalpha

#endif  // RDALPHA_ERROR_HPP
