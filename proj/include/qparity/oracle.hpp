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

#include "qparity/boolean_function.hpp"
#include "qparity/operators.hpp"

namespace qparity {

/// Permutation unitary of dimension 2^(n+1) realizing
/// |x1...xn>|y> -> |x1...xn>|y xor f(x)>. The ancilla y is the least
/// significant index bit, the input register the most significant bits.
/// Squares to the exact identity.
Operator oracle_matrix(const BooleanFunction& f);

}  // namespace qparity
