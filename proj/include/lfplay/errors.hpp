// Copyright 2026 The lfplay Authors
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

#ifndef LFPLAY_ERRORS_HPP_
#define LFPLAY_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace lfplay {

// Base class for all library errors.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed arguments: dimension mismatches, invalid simplex points, ...
class InvalidInputError : public Error {
 public:
  using Error::Error;
};

// Non-finite values encountered during evaluation.
class NumericError : public Error {
 public:
  using Error::Error;
};

// A rate bound was requested for a schedule it does not cover.
class UnsupportedScheduleError : public Error {
 public:
  using Error::Error;
};

// Invalid run configuration (e.g. a schedule not permitted for an experiment).
class ConfigError : public Error {
 public:
  using Error::Error;
};

// File parse failure; carries the 1-based row/column of the offending cell.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, int row, int column)
      : Error(what), row_(row), column_(column) {}
  int row() const { return row_; }
  int column() const { return column_; }

 private:
  int row_;
  int column_;
};

}  // namespace lfplay

#endif  // LFPLAY_ERRORS_HPP_
