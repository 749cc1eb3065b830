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

#pragma once

#include <complex>

#include "qparity/constants.hpp"
#include "qparity/state_vector.hpp"

namespace qparity {

/// The two-qubit amplitude determinant a00*a11 - a01*a10. It vanishes
/// exactly when the state factors into a product of single-qubit states.
/// Throws WrongDimension unless dim == 4.
std::complex<double> factorizability_determinant(const StateVector& s);

/// True iff |a00*a11 - a01*a10| <= tol.
bool is_factorizable(const StateVector& s, double tol = kDefaultTolerance);

}  // namespace qparity
