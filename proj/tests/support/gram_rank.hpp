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

// Test-only rank oracle, deliberately independent of the library's
// elimination-based exact_rank: a subset of vectors is linearly
// independent iff its Gram determinant is nonzero, and the rank of a
// family equals the size of any greedily grown maximal independent
// subset. Determinants are computed with fraction-free (Bareiss)
// elimination over exact 128-bit integers; for sign vectors of length
// <= 32 the Hadamard bound keeps every intermediate well inside the
// 128-bit range.

#pragma once

#include <cstdint>
#include <vector>

#include "qparity/sign_vector.hpp"

namespace qparity::testing {

using Wide = __int128;

/// Exact integer determinant via Bareiss fraction-free elimination.
/// Destroys its argument.
inline Wide integer_determinant(std::vector<std::vector<Wide>> m) {
  std::size_t n = m.size();
  if (n == 0) return 1;
  Wide previous_pivot = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k] == 0) {
      std::size_t swap_row = k + 1;
      while (swap_row < n && m[swap_row][k] == 0) ++swap_row;
      if (swap_row == n) return 0;
      std::swap(m[k], m[swap_row]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        m[i][j] = (m[k][k] * m[i][j] - m[i][k] * m[k][j]) / previous_pivot;
      }
      m[i][k] = 0;
    }
    previous_pivot = m[k][k];
  }
  return sign > 0 ? m[n - 1][n - 1] : -m[n - 1][n - 1];
}

/// Gram determinant of the selected vectors.
inline Wide gram_determinant(const std::vector<SignVector>& family,
                             const std::vector<std::size_t>& selection) {
  std::size_t n = selection.size();
  std::vector<std::vector<Wide>> gram(n, std::vector<Wide>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      gram[i][j] = family[selection[i]].dot(family[selection[j]]);
    }
  }
  return integer_determinant(std::move(gram));
}

/// Rank of the family: size of a greedily grown subset whose Gram
/// determinant stays nonzero.
inline std::size_t gram_rank(const std::vector<SignVector>& family) {
  if (family.empty()) return 0;
  std::size_t length = family.front().size();
  std::vector<std::size_t> chosen;
  for (std::size_t candidate = 0; candidate < family.size(); ++candidate) {
    if (chosen.size() == length) break;  // cannot grow past the dimension
    chosen.push_back(candidate);
    if (gram_determinant(family, chosen) == 0) chosen.pop_back();
  }
  return chosen.size();
}

}  // namespace qparity::testing
