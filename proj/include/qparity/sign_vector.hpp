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

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <vector>

namespace qparity {

/// Vector with entries in {-1, +1}, stored as exact integers. Used for the
/// +/-1 recoded output rows of Boolean functions; all rank and
/// orthogonality analysis on these vectors is tolerance-free.
class SignVector {
 public:
  explicit SignVector(std::vector<int> entries);
  SignVector(std::initializer_list<int> entries);

  std::size_t size() const { return entries_.size(); }
  int operator[](std::size_t index) const { return entries_[index]; }
  const std::vector<std::int8_t>& entries() const { return entries_; }

  /// Exact integer inner product; throws DimensionMismatch on unequal sizes.
  std::int64_t dot(const SignVector& other) const;

  friend bool operator==(const SignVector&, const SignVector&) = default;
  friend auto operator<=>(const SignVector&, const SignVector&) = default;

 private:
  std::vector<std::int8_t> entries_;
};

/// Rank of the family over the rationals, computed with exact integer
/// arithmetic. The empty family has rank 0.
std::size_t exact_rank(const std::vector<SignVector>& family);

/// True iff every vector of `a` is orthogonal to the span of `b`
/// (equivalently: the cross Gram block of the two families is zero).
/// Exact integer arithmetic; symmetric in its arguments.
bool spans_orthogonal(const std::vector<SignVector>& a,
                      const std::vector<SignVector>& b);

}  // namespace qparity
