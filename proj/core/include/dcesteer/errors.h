// Copyright 2026 The dcesteer Authors
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

#ifndef DCESTEER_ERRORS_H_
#define DCESTEER_ERRORS_H_

#include <stdexcept>
#include <string>

namespace dcesteer {

/// Invalid user-supplied input: out-of-domain parameters, malformed matrices,
/// unknown config keys. The CLI maps these to exit code 1.
class InvalidArgument : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Usage error raised while resolving flags and config files.
class UsageError : public InvalidArgument {
 public:
  using InvalidArgument::InvalidArgument;
};

/// Base of every failure that comes out of the numerics rather than the input.
/// The CLI maps these to exit code 2.
class NumericalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Symplectic radicand below -1e-9: the matrix is not a covariance matrix.
class ComplexSpectrum : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

/// The small parameter reached 1; the perturbative scattering model is void.
class NonPerturbative : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

class NonPositiveDeterminant : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

/// The state violates the uncertainty relation beyond the allowed tolerance.
class UnphysicalState : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

/// Pure state with vanishing Y in the interferometric-power closed form (0/0).
class DegeneratePure : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

}  // namespace dcesteer

#endif  // DCESTEER_ERRORS_H_
