// Copyright 2026 The eawmr Authors
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

#ifndef EAWMR_ERRORS_HPP_
#define EAWMR_ERRORS_HPP_

#include <stdexcept>

namespace eawmr {

/// Base class for all errors raised by this library.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct DimensionMismatch : Error {
  using Error::Error;
};

/// A constructed value failed one of its type invariants (CPTP residual,
/// trace, normalization, positivity, ...).
struct InvariantViolation : Error {
  using Error::Error;
};

/// No inverse at the requested tolerance: a pivot underflowed.
struct SingularError : Error {
  using Error::Error;
};

struct NotHermitianError : Error {
  using Error::Error;
};

struct NotPsdError : Error {
  using Error::Error;
};

struct NotUnitaryError : Error {
  using Error::Error;
};

/// The Kraus operator cannot anchor a reversal measurement.
struct NotInvertibleError : Error {
  using Error::Error;
};

struct ZeroProbabilityError : Error {
  using Error::Error;
};

struct ZeroCoefficientError : Error {
  using Error::Error;
};

struct ZeroGammaError : Error {
  using Error::Error;
};

}  // namespace eawmr

#endif  // EAWMR_ERRORS_HPP_
