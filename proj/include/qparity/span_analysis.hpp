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

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "qparity/sign_vector.hpp"

namespace qparity {

/// A concrete pair of sign vectors, one per parity class, whose nonzero
/// inner product certifies that the class spans are not orthogonal.
struct SpanWitness {
  SignVector from_parity0;
  SignVector from_parity1;
  std::int64_t inner_product = 0;
};

/// Exact-rank summary of the sign signatures of the two functional parity
/// classes. `orthogonal` answers whether one projective measurement can
/// separate the classes in a single query.
struct SpanReport {
  std::size_t arity = 0;
  std::size_t ancillas = 0;
  std::size_t vector_length = 0;
  std::array<std::uint64_t, 2> class_sizes{};
  std::array<std::size_t, 2> ranks{};
  bool orthogonal = false;
  std::optional<SpanWitness> witness;  // populated iff not orthogonal
};

/// Span analysis of the parity classes of all n-bit functions, 1 <= n <= 4.
SpanReport span_analysis(std::size_t arity);

/// Same analysis after tensoring every sign vector with the uniform
/// all-(+1) pattern of length 2^ancillas: the minimal uniform,
/// non-adaptive ancilla extension. 1 <= n <= 3, 0 <= ancillas <= 2.
SpanReport ancilla_extended_span_analysis(std::size_t arity,
                                          std::size_t ancillas);

/// True iff all class spans are pairwise orthogonal — the existence
/// criterion for a one-query projective measurement that identifies the
/// class of an unknown member.
bool single_query_separable(
    const std::vector<std::vector<SignVector>>& classes);

}  // namespace qparity
