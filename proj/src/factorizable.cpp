// Copyright 2026 The qparity Authors
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

#include "qparity/factorizable.hpp"

#include <string>

#include "qparity/errors.hpp"

namespace qparity {

std::complex<double> factorizability_determinant(const StateVector& s) {
  if (s.dim() != 4) {
    throw WrongDimension("factorizability is defined for two-qubit states "
                         "(dimension 4), got dimension " +
                         std::to_string(s.dim()));
  }
  return s[0] * s[3] - s[1] * s[2];
}

bool is_factorizable(const StateVector& s, double tol) {
  return std::abs(factorizability_determinant(s)) <= tol;
}

}  // namespace qparity
