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

#include <cstddef>

namespace qparity {

/// Tolerance used by all amplitude-level floating point checks
/// (normalization, idempotence, projector orthogonality, completeness).
/// Sign-vector rank analysis never uses it; that path is exact.
inline constexpr double kDefaultTolerance = 1e-9;

/// Dense state vectors hold at most 2^20 amplitudes. Larger constructions
/// fail with SizeLimitExceeded instead of degrading.
inline constexpr std::size_t kMaxStateQubits = 20;

/// Dense operators hold at most 2^11 x 2^11 entries (64 MiB of doubles).
inline constexpr std::size_t kMaxOperatorQubits = 11;

}  // namespace qparity
