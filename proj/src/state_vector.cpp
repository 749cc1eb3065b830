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

#include "qparity/state_vector.hpp"

#include <bit>
#include <cmath>
#include <string>

#include "qparity/errors.hpp"

namespace qparity {

namespace {

std::size_t checked_num_qubits(std::size_t dim) {
  if (dim < 2 || !std::has_single_bit(dim)) {
    throw DimensionMismatch("state dimension must be a power of two >= 2, got " +
                            std::to_string(dim));
  }
  auto qubits = static_cast<std::size_t>(std::countr_zero(dim));
  if (qubits > kMaxStateQubits) {
    throw SizeLimitExceeded("state of " + std::to_string(qubits) +
                            " qubits exceeds the dense limit of " +
                            std::to_string(kMaxStateQubits));
  }
  return qubits;
}

}  // namespace

StateVector::StateVector(std::vector<Complex> amplitudes)
    : StateVector(std::move(amplitudes), /*check_norm=*/true) {}

StateVector::StateVector(std::vector<Complex> amplitudes, bool check_norm)
    : amps_(std::move(amplitudes)), qubits_(checked_num_qubits(amps_.size())) {
  if (check_norm && !is_normalized()) {
    throw UnnormalizedState("state vector norm " + std::to_string(norm()) +
                            " is not 1 within tolerance");
  }
}

StateVector StateVector::unnormalized(std::vector<Complex> amplitudes) {
  return StateVector(std::move(amplitudes), /*check_norm=*/false);
}

double StateVector::norm() const {
  double sum = 0.0;
  for (const Complex& a : amps_) sum += std::norm(a);
  return std::sqrt(sum);
}

bool StateVector::is_normalized(double tol) const {
  return std::abs(norm() - 1.0) <= tol;
}

StateVector StateVector::normalized() const {
  double n = norm();
  if (n == 0.0) {
    throw Error("cannot normalize a zero state vector");
  }
  std::vector<Complex> scaled(amps_);
  for (Complex& a : scaled) a /= n;
  return StateVector(std::move(scaled), /*check_norm=*/false);
}

StateVector::Complex StateVector::inner_product(const StateVector& other) const {
  if (dim() != other.dim()) {
    throw DimensionMismatch("inner product of states with dimensions " +
                            std::to_string(dim()) + " and " +
                            std::to_string(other.dim()));
  }
  Complex sum = 0.0;
  for (std::size_t i = 0; i < dim(); ++i) {
    sum += std::conj(amps_[i]) * other.amps_[i];
  }
  return sum;
}

StateVector basis_state(const BitString& label) {
  if (label.width() > kMaxStateQubits) {
    throw SizeLimitExceeded("basis state of " + std::to_string(label.width()) +
                            " qubits exceeds the dense limit of " +
                            std::to_string(kMaxStateQubits));
  }
  std::vector<StateVector::Complex> amps(std::size_t{1} << label.width(), 0.0);
  amps[label.value()] = 1.0;
  return StateVector::unnormalized(std::move(amps));
}

StateVector tensor(const StateVector& a, const StateVector& b) {
  if (a.num_qubits() + b.num_qubits() > kMaxStateQubits) {
    throw SizeLimitExceeded("tensor product of " +
                            std::to_string(a.num_qubits()) + " and " +
                            std::to_string(b.num_qubits()) +
                            " qubits exceeds the dense limit");
  }
  std::vector<StateVector::Complex> amps(a.dim() * b.dim());
  for (std::size_t i = 0; i < a.dim(); ++i) {
    for (std::size_t j = 0; j < b.dim(); ++j) {
      amps[i * b.dim() + j] = a[i] * b[j];
    }
  }
  return StateVector::unnormalized(std::move(amps));
}

}  // namespace qparity
