// Copyright 2026 The csdsynth Authors
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

#include <cstddef>
#include <stdexcept>
#include <string>

namespace csdsynth {

/** Base class of every error raised by the library. */
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class NotSquare : public Error {
 public:
  using Error::Error;
};

class NotPowerOfTwo : public Error {
 public:
  using Error::Error;
};

class ShapeMismatch : public Error {
 public:
  using Error::Error;
};

class IndexOutOfRange : public Error {
 public:
  using Error::Error;
};

/** Raised when M^dagger M deviates from the identity by more than the
 * requested tolerance. */
class NotUnitary : public Error {
 public:
  explicit NotUnitary(double deviation);
  double deviation() const { return deviation_; }

 private:
  double deviation_;
};

class NoConvergence : public Error {
 public:
  explicit NoConvergence(unsigned sweeps);
  unsigned sweeps() const { return sweeps_; }

 private:
  unsigned sweeps_;
};

class NotGray : public Error {
 public:
  using Error::Error;
};

/** A cosine-sine factorization whose product does not reproduce its input.
 * Never recoverable: it indicates a bug in the degenerate-angle handling. */
class ReconstructionFailure : public Error {
 public:
  explicit ReconstructionFailure(double residual);
  double residual() const { return residual_; }

 private:
  double residual_;
};

class PlanVerificationFailure : public Error {
 public:
  explicit PlanVerificationFailure(double residual);
  double residual() const { return residual_; }

 private:
  double residual_;
};

/** Malformed circuit or matrix text. Line and column are 1-based. */
class SyntaxError : public Error {
 public:
  SyntaxError(std::size_t line, std::size_t column, const std::string &what);
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

class UnknownGate : public Error {
 public:
  using Error::Error;
};

}  // namespace csdsynth
