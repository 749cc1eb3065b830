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
#include <cstddef>
#include <vector>

#include "qparity/bit_string.hpp"
#include "qparity/constants.hpp"

namespace qparity {

/// Dense complex amplitude vector over the computational basis of an
/// m-qubit register. The amplitude at index k belongs to the basis state
/// whose label has canonical value k (leftmost qubit most significant).
class StateVector {
 public:
  using Complex = std::complex<double>;

  /// Checked construction: the amplitudes must be normalized within
  /// kDefaultTolerance, otherwise UnnormalizedState is thrown.
  explicit StateVector(std::vector<Complex> amplitudes);

  /// Construction for intermediates that are allowed to have any norm
  /// (projected states, zero vectors). Skips the normalization check only.
  static StateVector unnormalized(std::vector<Complex> amplitudes);

  std::size_t dim() const { return amps_.size(); }
  std::size_t num_qubits() const { return qubits_; }

  const std::vector<Complex>& amplitudes() const { return amps_; }
  Complex operator[](std::size_t index) const { return amps_[index]; }

  double norm() const;
  bool is_normalized(double tol = kDefaultTolerance) const;

  /// Returns the state scaled to unit norm; throws Error on a zero vector.
  StateVector normalized() const;

  /// <this|other> with conjugation on this vector.
  Complex inner_product(const StateVector& other) const;

  friend bool operator==(const StateVector&, const StateVector&) = default;

 private:
  StateVector(std::vector<Complex> amplitudes, bool check_norm);

  std::vector<Complex> amps_;
  std::size_t qubits_;
};

/// Unit vector with amplitude 1 at the canonical index of `label`.
StateVector basis_state(const BitString& label);

/// Kronecker product; the left factor is the most significant register.
StateVector tensor(const StateVector& a, const StateVector& b);

}  // namespace qparity
