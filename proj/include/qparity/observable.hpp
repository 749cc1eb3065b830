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

#include <random>
#include <vector>

#include "qparity/constants.hpp"
#include "qparity/operators.hpp"
#include "qparity/partition.hpp"
#include "qparity/state_vector.hpp"

namespace qparity {

/// Spectral decomposition of a projective observable: a list of distinct
/// eigenvalues with mutually orthogonal, idempotent projectors that sum to
/// the identity. All three properties are validated at construction within
/// the given tolerance.
class Observable {
 public:
  struct Term {
    double eigenvalue;
    Operator projector;
  };

  explicit Observable(std::vector<Term> terms, double tol = kDefaultTolerance);

  const std::vector<Term>& terms() const { return terms_; }
  std::size_t dim() const { return terms_.front().projector.dim(); }

 private:
  std::vector<Term> terms_;
};

/// Builds the observable whose projector for each class is the sum of
/// |label><label| over the class members, paired with the given eigenvalue.
Observable observable_from_partition(const BasisPartition& partition,
                                     const std::vector<double>& eigenvalues);

struct OutcomeProbability {
  double eigenvalue;
  double probability;
};

/// Born-rule distribution over the observable's eigenvalues, in term
/// order: probability of eigenvalue l is <s|P_l|s>. The state must be
/// normalized. For a basis state and a diagonal observable the
/// distribution is deterministic.
std::vector<OutcomeProbability> query(const Observable& observable,
                                      const StateVector& s);

/// Draws one eigenvalue from the Born distribution; deterministic for a
/// fixed engine state.
double sample_outcome(const Observable& observable, const StateVector& s,
                      std::mt19937_64& rng);

}  // namespace qparity
