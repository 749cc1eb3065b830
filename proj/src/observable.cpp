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

#include "qparity/observable.hpp"

#include <cmath>
#include <string>

#include "qparity/errors.hpp"

namespace qparity {

namespace {

bool all_diagonal(const std::vector<Observable::Term>& terms) {
  for (const Observable::Term& term : terms) {
    const Operator& p = term.projector;
    for (std::size_t r = 0; r < p.dim(); ++r) {
      for (std::size_t c = 0; c < p.dim(); ++c) {
        if (r != c && p.at(r, c) != Operator::Complex{}) return false;
      }
    }
  }
  return true;
}

// O(dim) spectral checks for diagonal projectors; equivalent to the dense
// matrix identities on this subclass.
void validate_diagonal(const std::vector<Observable::Term>& terms,
                       double tol) {
  std::size_t dim = terms.front().projector.dim();
  for (std::size_t i = 0; i < dim; ++i) {
    Operator::Complex total = 0.0;
    for (const Observable::Term& term : terms) {
      Operator::Complex d = term.projector.at(i, i);
      if (std::abs(d.imag()) > tol) {
        throw InvalidObservable("projector is not Hermitian");
      }
      if (std::abs(d * d - d) > tol) {
        throw InvalidObservable("projector is not idempotent");
      }
      total += d;
    }
    if (std::abs(total - 1.0) > tol) {
      throw InvalidObservable("projectors do not sum to the identity");
    }
    for (std::size_t a = 0; a < terms.size(); ++a) {
      for (std::size_t b = a + 1; b < terms.size(); ++b) {
        if (std::abs(terms[a].projector.at(i, i) *
                     terms[b].projector.at(i, i)) > tol) {
          throw InvalidObservable("projectors are not mutually orthogonal");
        }
      }
    }
  }
}

void validate_dense(const std::vector<Observable::Term>& terms, double tol) {
  std::size_t dim = terms.front().projector.dim();
  Operator sum(dim);
  for (const Observable::Term& term : terms) {
    const Operator& p = term.projector;
    if (!(p * p).approx_equal(p, tol)) {
      throw InvalidObservable("projector is not idempotent");
    }
    if (!p.adjoint().approx_equal(p, tol)) {
      throw InvalidObservable("projector is not Hermitian");
    }
    sum = sum + p;
  }
  for (std::size_t a = 0; a < terms.size(); ++a) {
    for (std::size_t b = a + 1; b < terms.size(); ++b) {
      if ((terms[a].projector * terms[b].projector).max_abs() > tol) {
        throw InvalidObservable("projectors are not mutually orthogonal");
      }
    }
  }
  if (!sum.approx_equal(Operator::identity(dim), tol)) {
    throw InvalidObservable("projectors do not sum to the identity");
  }
}

}  // namespace

Observable::Observable(std::vector<Term> terms, double tol)
    : terms_(std::move(terms)) {
  if (terms_.empty()) {
    throw InvalidObservable("observable needs at least one spectral term");
  }
  std::size_t dim = terms_.front().projector.dim();
  for (const Term& term : terms_) {
    if (term.projector.dim() != dim) {
      throw DimensionMismatch("spectral terms of mixed dimensions");
    }
  }
  for (std::size_t a = 0; a < terms_.size(); ++a) {
    for (std::size_t b = a + 1; b < terms_.size(); ++b) {
      if (terms_[a].eigenvalue == terms_[b].eigenvalue) {
        throw DuplicateEigenvalue("eigenvalue " +
                                  std::to_string(terms_[a].eigenvalue) +
                                  " appears twice");
      }
    }
  }
  if (all_diagonal(terms_)) {
    validate_diagonal(terms_, tol);
  } else {
    validate_dense(terms_, tol);
  }
}

Observable observable_from_partition(const BasisPartition& partition,
                                     const std::vector<double>& eigenvalues) {
  std::size_t width = 0;
  for (const auto& cls : partition.classes) {
    for (const BitString& label : cls) {
      if (width == 0) width = label.width();
      if (label.width() != width) {
        throw InvalidLabelWidth("class labels of widths " +
                                std::to_string(width) + " and " +
                                std::to_string(label.width()));
      }
    }
  }
  if (width == 0) {
    throw InvalidLabelWidth("partition has no labels to build projectors on");
  }
  validate_partition(partition);
  if (eigenvalues.size() != partition.classes.size()) {
    throw InvalidObservable("expected one eigenvalue per class, got " +
                            std::to_string(eigenvalues.size()) + " for " +
                            std::to_string(partition.classes.size()) +
                            " classes");
  }
  std::size_t dim = std::size_t{1} << width;
  std::vector<Observable::Term> terms;
  terms.reserve(partition.classes.size());
  for (std::size_t i = 0; i < partition.classes.size(); ++i) {
    // Sum of |label><label| over the class: a 0/1 diagonal.
    Operator projector(dim);
    for (const BitString& label : partition.classes[i]) {
      projector.at(label.value(), label.value()) = 1.0;
    }
    terms.push_back({eigenvalues[i], std::move(projector)});
  }
  return Observable(std::move(terms));
}

std::vector<OutcomeProbability> query(const Observable& observable,
                                      const StateVector& s) {
  if (observable.dim() != s.dim()) {
    throw DimensionMismatch("observable of dimension " +
                            std::to_string(observable.dim()) +
                            " queried with a state of dimension " +
                            std::to_string(s.dim()));
  }
  if (!s.is_normalized()) {
    throw UnnormalizedState("query requires a normalized state");
  }
  std::vector<OutcomeProbability> distribution;
  distribution.reserve(observable.terms().size());
  for (const Observable::Term& term : observable.terms()) {
    double p = s.inner_product(apply(term.projector, s)).real();
    distribution.push_back({term.eigenvalue, p});
  }
  return distribution;
}

double sample_outcome(const Observable& observable, const StateVector& s,
                      std::mt19937_64& rng) {
  std::vector<OutcomeProbability> distribution = query(observable, s);
  double u = std::uniform_real_distribution<double>(0.0, 1.0)(rng);
  double cumulative = 0.0;
  for (const OutcomeProbability& outcome : distribution) {
    cumulative += outcome.probability;
    if (u < cumulative) return outcome.eigenvalue;
  }
  return distribution.back().eigenvalue;
}

}  // namespace qparity
