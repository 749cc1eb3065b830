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

#include "qparity/deutsch.hpp"

#include <cmath>
#include <complex>

#include "qparity/errors.hpp"
#include "qparity/operators.hpp"
#include "qparity/oracle.hpp"

namespace qparity {

namespace {

Operator hadamard() {
  const double s = 1.0 / std::sqrt(2.0);
  Operator h(2);
  h.at(0, 0) = s;
  h.at(0, 1) = s;
  h.at(1, 0) = s;
  h.at(1, 1) = -s;
  return h;
}

}  // namespace

DeutschResult deutsch_run(const BooleanFunction& f) {
  if (f.arity() != 1) {
    throw WrongArity("the single-query parity circuit takes a 1-bit "
                     "function, got arity " + std::to_string(f.arity()));
  }
  const double s = 1.0 / std::sqrt(2.0);
  StateVector minus(std::vector<StateVector::Complex>{s, -s});
  StateVector state = tensor(basis_state(BitString(0, 1)), minus);

  DeutschResult result;
  result.stages.push_back({"initial", state});

  Operator h_on_input = tensor(hadamard(), Operator::identity(2));
  state = apply(h_on_input, state);
  result.stages.push_back({"after input Hadamard", state});

  state = apply(oracle_matrix(f), state);
  result.stages.push_back({"after oracle", state});

  state = apply(h_on_input, state);
  result.stages.push_back({"after final Hadamard", state});

  // Computational-basis marginal of the input qubit (most significant bit).
  double p0 = std::norm(state[0]) + std::norm(state[1]);
  double p1 = std::norm(state[2]) + std::norm(state[3]);
  result.outcome = p1 > p0 ? 1 : 0;
  result.probability = std::max(p0, p1);
  return result;
}

int deutsch_single_query(const BooleanFunction& f) {
  return deutsch_run(f).outcome;
}

}  // namespace qparity
