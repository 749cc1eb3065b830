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

#include <string>
#include <vector>

#include "qparity/boolean_function.hpp"
#include "qparity/state_vector.hpp"

namespace qparity {

struct DeutschStage {
  std::string label;
  StateVector state;
};

struct DeutschResult {
  int outcome = 0;          // measured input-qubit bit; equals the parity
  double probability = 0.0; // Born probability of that outcome
  std::vector<DeutschStage> stages;
};

/// Single-query circuit for the parity of a one-bit function: prepare
/// |0>(|0>-|1>)/sqrt(2), Hadamard the input qubit, apply the oracle once,
/// Hadamard again, measure the input qubit. The outcome is deterministic
/// and equals functional_parity(f). Throws WrongArity unless f.arity() == 1.
DeutschResult deutsch_run(const BooleanFunction& f);

/// Outcome-only wrapper around deutsch_run.
int deutsch_single_query(const BooleanFunction& f);

}  // namespace qparity
