// Copyright 2026 The aevqc Authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

//     http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

/**
 * @file
 * Exception types raised across the library. Each maps to one failure
 * class of the public API so callers (and the CLI) can branch on type.
 */
#pragma once

#include <stdexcept>
#include <string>

namespace aevqc {

class Error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

#define AEVQC_DEFINE_ERROR(Name)                                               \
    class Name : public Error {                                                \
      public:                                                                  \
        using Error::Error;                                                    \
    }

/// Register size outside the supported qubit range.
AEVQC_DEFINE_ERROR(CapacityError);
/// Qubit, label, or class index out of range.
AEVQC_DEFINE_ERROR(IndexError);
/// Missing or malformed gate parameter.
AEVQC_DEFINE_ERROR(ParameterError);
/// Mismatched array lengths or tensor dimensions.
AEVQC_DEFINE_ERROR(ShapeError);
/// Parameterized gate whose derivative the differentiator cannot form.
AEVQC_DEFINE_ERROR(UnsupportedGradientError);
/// Input vector too close to zero to normalize.
AEVQC_DEFINE_ERROR(DegenerateInputError);
/// Argument outside the mathematical domain of an operation.
AEVQC_DEFINE_ERROR(DomainError);
AEVQC_DEFINE_ERROR(ConfigError);
AEVQC_DEFINE_ERROR(DataError);
/// Training produced a non-finite loss.
AEVQC_DEFINE_ERROR(DivergenceError);
/// Checkpoint or other serialized file could not be decoded.
AEVQC_DEFINE_ERROR(FormatError);

#undef AEVQC_DEFINE_ERROR

} // namespace aevqc
