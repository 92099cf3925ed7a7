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

#include "csdsynth/errors.hpp"

namespace csdsynth {

NotUnitary::NotUnitary(double deviation)
    : Error("matrix is not unitary (max deviation " +
            std::to_string(deviation) + ")"),
      deviation_(deviation) {}

NoConvergence::NoConvergence(unsigned sweeps)
    : Error("Jacobi SVD did not converge within " + std::to_string(sweeps) +
            " sweeps"),
      sweeps_(sweeps) {}

ReconstructionFailure::ReconstructionFailure(double residual)
    : Error("cosine-sine factors do not reconstruct the input (residual " +
            std::to_string(residual) + ")"),
      residual_(residual) {}

PlanVerificationFailure::PlanVerificationFailure(double residual)
    : Error("decomposition plan does not reconstruct the input (residual " +
            std::to_string(residual) + ")"),
      residual_(residual) {}

SyntaxError::SyntaxError(
    std::size_t line, std::size_t column, const std::string &what)
    : Error(
          "syntax error at " + std::to_string(line) + ":" +
          std::to_string(column) + ": " + what),
      line_(line),
      column_(column) {}

}  // namespace csdsynth
