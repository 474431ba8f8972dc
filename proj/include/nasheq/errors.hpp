// Copyright 2026 The nasheq Authors
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

#include <stdexcept>
#include <string>

namespace nasheq {

// Base class for everything the library throws.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct DimensionError : Error {
  using Error::Error;
};
struct DomainError : Error {
  using Error::Error;
};
struct FeasibilityError : Error {
  using Error::Error;
};
struct ConfigError : Error {
  using Error::Error;
};
struct SizeError : Error {
  using Error::Error;
};
struct GridError : Error {
  using Error::Error;
};
struct DegenerateGameError : Error {
  using Error::Error;
};

// Thrown by operations whose contract is a plain value when the underlying
// iteration stops at max_iters; carries the best gap reached and the work done.
class NonConvergenceError : public Error {
 public:
  NonConvergenceError(const std::string& what, double best_value, long iterations)
      : Error(what), best_value_(best_value), iterations_(iterations) {}

  double best_value() const { return best_value_; }
  long iterations() const { return iterations_; }

 private:
  double best_value_;
  long iterations_;
};

// Game-file parse failure with a 1-based line number.
class ParseError : public Error {
 public:
  ParseError(int line, const std::string& reason)
      : Error("parse error at line " + std::to_string(line) + ": " + reason),
        line_(line),
        reason_(reason) {}

  int line() const { return line_; }
  const std::string& reason() const { return reason_; }

 private:
  int line_;
  std::string reason_;
};

}  // namespace nasheq
