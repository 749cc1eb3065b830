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

#include "qparity/oracle.hpp"

#include <string>

#include "qparity/constants.hpp"
#include "qparity/errors.hpp"

namespace qparity {

Operator oracle_matrix(const BooleanFunction& f) {
  std::size_t n = f.arity();
  if (n + 1 > kMaxOperatorQubits) {
    throw SizeLimitExceeded("oracle on " + std::to_string(n + 1) +
                            " qubits exceeds the dense operator limit of " +
                            std::to_string(kMaxOperatorQubits));
  }
  std::size_t dim = std::size_t{1} << (n + 1);
  Operator u(dim);
  for (std::uint64_t x = 0; x < (std::uint64_t{1} << n); ++x) {
    for (std::uint64_t y = 0; y <= 1; ++y) {
      std::uint64_t from = (x << 1) | y;
      std::uint64_t to = (x << 1) | (y ^ f.value(x));
      u.at(to, from) = 1.0;
    }
  }
  return u;
}

}  // namespace qparity
