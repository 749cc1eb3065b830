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

#include "qparity/state_vector.hpp"

namespace qparity {

/// Dense square complex matrix on a register of qubits. Dimensions are
/// powers of two and capped at 2^kMaxOperatorQubits.
class Operator {
 public:
  using Complex = std::complex<double>;

  /// Zero matrix of the given dimension.
  explicit Operator(std::size_t dim);

  static Operator identity(std::size_t dim);

  std::size_t dim() const { return dim_; }

  Complex& at(std::size_t row, std::size_t col) {
    return data_[row * dim_ + col];
  }
  Complex at(std::size_t row, std::size_t col) const {
    return data_[row * dim_ + col];
  }

  Operator adjoint() const;

  Operator operator*(const Operator& other) const;
  Operator operator+(const Operator& other) const;
  Operator operator-(const Operator& other) const;

  /// Largest entry magnitude (max norm).
  double max_abs() const;

  bool approx_equal(const Operator& other, double tol) const;

  friend bool operator==(const Operator&, const Operator&) = default;

 private:
  std::size_t dim_;
  std::vector<Complex> data_;
};

/// Matrix-vector product. No implicit renormalization of the result.
StateVector apply(const Operator& op, const StateVector& s);

/// Sum of |s><s| over the given states, which must be mutually orthonormal
/// within kDefaultTolerance. An empty family yields the zero matrix of the
/// explicitly requested dimension.
Operator projector_from_states(const std::vector<StateVector>& states,
                               std::size_t dim_if_empty = 0);

/// Kronecker product of operators; left factor most significant.
Operator tensor(const Operator& a, const Operator& b);

}  // namespace qparity
