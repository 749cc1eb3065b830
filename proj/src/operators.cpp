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

#include "qparity/operators.hpp"

#include <bit>
#include <cmath>
#include <string>

#include "qparity/constants.hpp"
#include "qparity/errors.hpp"

namespace qparity {

namespace {

void check_operator_dim(std::size_t dim) {
  if (dim < 2 || !std::has_single_bit(dim)) {
    throw DimensionMismatch(
        "operator dimension must be a power of two >= 2, got " +
        std::to_string(dim));
  }
  auto qubits = static_cast<std::size_t>(std::countr_zero(dim));
  if (qubits > kMaxOperatorQubits) {
    throw SizeLimitExceeded("dense operator on " + std::to_string(qubits) +
                            " qubits exceeds the limit of " +
                            std::to_string(kMaxOperatorQubits));
  }
}

}  // namespace

Operator::Operator(std::size_t dim) : dim_(dim) {
  check_operator_dim(dim);
  data_.assign(dim_ * dim_, 0.0);
}

Operator Operator::identity(std::size_t dim) {
  Operator id(dim);
  for (std::size_t i = 0; i < dim; ++i) id.at(i, i) = 1.0;
  return id;
}

Operator Operator::adjoint() const {
  Operator out(dim_);
  for (std::size_t r = 0; r < dim_; ++r) {
    for (std::size_t c = 0; c < dim_; ++c) {
      out.at(c, r) = std::conj(at(r, c));
    }
  }
  return out;
}

Operator Operator::operator*(const Operator& other) const {
  if (dim_ != other.dim_) {
    throw DimensionMismatch("product of operators with dimensions " +
                            std::to_string(dim_) + " and " +
                            std::to_string(other.dim_));
  }
  Operator out(dim_);
  for (std::size_t r = 0; r < dim_; ++r) {
    for (std::size_t k = 0; k < dim_; ++k) {
      Complex lhs = at(r, k);
      if (lhs == Complex{}) continue;
      for (std::size_t c = 0; c < dim_; ++c) {
        out.at(r, c) += lhs * other.at(k, c);
      }
    }
  }
  return out;
}

Operator Operator::operator+(const Operator& other) const {
  if (dim_ != other.dim_) {
    throw DimensionMismatch("sum of operators with dimensions " +
                            std::to_string(dim_) + " and " +
                            std::to_string(other.dim_));
  }
  Operator out(dim_);
  for (std::size_t i = 0; i < data_.size(); ++i) {
    out.data_[i] = data_[i] + other.data_[i];
  }
  return out;
}

Operator Operator::operator-(const Operator& other) const {
  if (dim_ != other.dim_) {
    throw DimensionMismatch("difference of operators with dimensions " +
                            std::to_string(dim_) + " and " +
                            std::to_string(other.dim_));
  }
  Operator out(dim_);
  for (std::size_t i = 0; i < data_.size(); ++i) {
    out.data_[i] = data_[i] - other.data_[i];
  }
  return out;
}

double Operator::max_abs() const {
  double max = 0.0;
  for (const Complex& v : data_) max = std::max(max, std::abs(v));
  return max;
}

bool Operator::approx_equal(const Operator& other, double tol) const {
  if (dim_ != other.dim_) return false;
  return (*this - other).max_abs() <= tol;
}

StateVector apply(const Operator& op, const StateVector& s) {
  if (op.dim() != s.dim()) {
    throw DimensionMismatch("operator of dimension " +
                            std::to_string(op.dim()) +
                            " applied to state of dimension " +
                            std::to_string(s.dim()));
  }
  std::vector<StateVector::Complex> out(s.dim(), 0.0);
  for (std::size_t r = 0; r < s.dim(); ++r) {
    StateVector::Complex sum = 0.0;
    for (std::size_t c = 0; c < s.dim(); ++c) {
      sum += op.at(r, c) * s[c];
    }
    out[r] = sum;
  }
  return StateVector::unnormalized(std::move(out));
}

Operator projector_from_states(const std::vector<StateVector>& states,
                               std::size_t dim_if_empty) {
  if (states.empty()) {
    if (dim_if_empty == 0) {
      throw DimensionMismatch(
          "empty state family needs an explicit projector dimension");
    }
    return Operator(dim_if_empty);
  }
  std::size_t dim = states.front().dim();
  if (dim_if_empty != 0 && dim_if_empty != dim) {
    throw DimensionMismatch("requested dimension disagrees with the states");
  }
  for (const StateVector& s : states) {
    if (s.dim() != dim) {
      throw DimensionMismatch("projector states must share one dimension");
    }
  }
  for (std::size_t i = 0; i < states.size(); ++i) {
    for (std::size_t j = i; j < states.size(); ++j) {
      double expected = i == j ? 1.0 : 0.0;
      double overlap = std::abs(states[i].inner_product(states[j]));
      if (std::abs(overlap - expected) > kDefaultTolerance) {
        throw NonOrthonormalInput(
            "states " + std::to_string(i) + " and " + std::to_string(j) +
            " are not orthonormal (overlap " + std::to_string(overlap) + ")");
      }
    }
  }
  Operator p(dim);
  for (const StateVector& s : states) {
    for (std::size_t r = 0; r < dim; ++r) {
      if (s[r] == StateVector::Complex{}) continue;
      for (std::size_t c = 0; c < dim; ++c) {
        p.at(r, c) += s[r] * std::conj(s[c]);
      }
    }
  }
  return p;
}

Operator tensor(const Operator& a, const Operator& b) {
  Operator out(a.dim() * b.dim());
  for (std::size_t ra = 0; ra < a.dim(); ++ra) {
    for (std::size_t ca = 0; ca < a.dim(); ++ca) {
      Operator::Complex va = a.at(ra, ca);
      if (va == Operator::Complex{}) continue;
      for (std::size_t rb = 0; rb < b.dim(); ++rb) {
        for (std::size_t cb = 0; cb < b.dim(); ++cb) {
          out.at(ra * b.dim() + rb, ca * b.dim() + cb) = va * b.at(rb, cb);
        }
      }
    }
  }
  return out;
}

}  // namespace qparity
