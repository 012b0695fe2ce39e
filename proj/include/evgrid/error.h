// Copyright 2026 The evgrid Authors.
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

#ifndef EVGRID_ERROR_H_
#define EVGRID_ERROR_H_

#include <stdexcept>
#include <string>

namespace evgrid {

// Base class for all toolkit errors.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A label that is not part of the active schema.
class UnknownLabelError : public Error {
 public:
  using Error::Error;
};

// Schema definition is internally inconsistent.
class SchemaError : public Error {
 public:
  using Error::Error;
};

// Malformed input file. Carries the 1-based line number when known.
class FormatError : public Error {
 public:
  FormatError(const std::string &message, int line = 0)
      : FormatError(line > 0 ? "line " + std::to_string(line) + ": " + message
                             : message,
                    0, line) {}

  // Wraps an already formatted message, keeping the original line number.
  FormatError(const std::string &message, int /*tag*/, int line)
      : Error(message), line_(line) {}

  int line() const { return line_; }

 private:
  int line_;
};

// A document that violates a precondition of the operation (out-of-range
// indices, invalid roles passed to the encoder).
class InputError : public Error {
 public:
  using Error::Error;
};

// Prediction and gold corpora that cannot be paired: doc_id present on one
// side only, duplicated doc_ids, or token length mismatch.
class AlignmentError : public Error {
 public:
  using Error::Error;
};

// File could not be opened or written.
class IoError : public Error {
 public:
  using Error::Error;
};

}  // namespace evgrid

#endif  // EVGRID_ERROR_H_
