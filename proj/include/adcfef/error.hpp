// Copyright 2026 The adcfef Authors
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

namespace adcfef {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// The Jacobi eigensolver hit its sweep cap.
class ConvergenceFailure : public Error {
 public:
  using Error::Error;
};

/// A matrix failed one of the density-matrix invariants. `magnitude()` is the
/// size of the violation (Hermiticity residual, trace error, or the negative
/// eigenvalue).
class DensityViolation : public Error {
 public:
  enum class Kind { Hermiticity, Trace, Positivity };

  DensityViolation(Kind kind, double magnitude, const std::string& what)
      : Error(what), kind_(kind), magnitude_(magnitude) {}

  Kind kind() const noexcept { return kind_; }
  double magnitude() const noexcept { return magnitude_; }

 private:
  Kind kind_;
  double magnitude_;
};

class HermiticityViolation : public DensityViolation {
 public:
  HermiticityViolation(double magnitude, const std::string& what)
      : DensityViolation(Kind::Hermiticity, magnitude, what) {}
};

class TraceViolation : public DensityViolation {
 public:
  TraceViolation(double magnitude, const std::string& what)
      : DensityViolation(Kind::Trace, magnitude, what) {}
};

class PositivityViolation : public DensityViolation {
 public:
  PositivityViolation(double magnitude, const std::string& what)
      : DensityViolation(Kind::Positivity, magnitude, what) {}
};

/// Second-qubit damping cannot raise the FEF for the requested p_b.
class NoImprovementPossible : public Error {
 public:
  using Error::Error;
};

/// The scenario has no printed matrix to compare against.
class NoPrintedCounterpart : public Error {
 public:
  using Error::Error;
};

}  // namespace adcfef
