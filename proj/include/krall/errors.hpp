/*
   Copyright 2026 The krallpoly Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef KRALL_ERRORS_HPP
#define KRALL_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace krall {

/// Base class of every error raised by the library. Errors are thrown; the
/// CLI maps `SchemaError` to exit code 2 and every other `Error` to 3.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

/// Malformed family specification (bad JSON, unsorted set, missing key...).
class SchemaError : public Error {
 public:
  using Error::Error;
};

class DimensionError : public Error {
 public:
  using Error::Error;
};

/// A parameter lies on an excluded lattice (e.g. c in {0,-1,-2,...}).
class DegenerateParameterError : public Error {
 public:
  using Error::Error;
};

/// The containment condition on the sets fails, so the limit measure does
/// not exist for this pair/quartet.
class NotRepresentableError : public Error {
 public:
  using Error::Error;
};

/// Requested index outside the admissible index set.
class IndexError : public Error {
 public:
  using Error::Error;
};

class DivergentSumError : public Error {
 public:
  using Error::Error;
};

class InvalidTruncationError : public Error {
 public:
  using Error::Error;
};

class InvalidWeightError : public Error {
 public:
  using Error::Error;
};

class PositivityError : public Error {
 public:
  using Error::Error;
};

/// A determinantal construction collapsed (zero normalizer, degree drop).
class DegeneracyError : public Error {
 public:
  using Error::Error;
};

}  // namespace krall

#endif  // KRALL_ERRORS_HPP
