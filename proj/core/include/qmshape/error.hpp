// Copyright 2026 The qmshape Authors
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

namespace qmshape {

/// Bad caller input: out-of-range parameters, mismatched grids or dimensions.
class InvalidArgument : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Base for failures that arise during a computation on valid input.
class NumericalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A driving field with no energy cannot be normalized.
class DegenerateDriving : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

/// A response function or spin wave with (numerically) zero norm.
class DegenerateResponse : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

/// The alternating Bessel series lost all significance; use quadrature.
class NumericalCancellation : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

/// Overflow that survives log-space evaluation.
class RangeError : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

}  // namespace qmshape
