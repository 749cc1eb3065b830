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
#include <string>
#include <string_view>

namespace qparity {

/// Label of a computational basis state |x1 x2 ... xw> or of a Boolean
/// function input (x1,...,xn). The leftmost bit is the most significant,
/// so |011> has canonical integer value 3 and sits at index 3 of an
/// 8-dimensional state vector.
class BitString {
 public:
  BitString(std::uint64_t value, std::size_t width);

  /// Parses a string of '0'/'1' characters, leftmost first.
  static BitString from_string(std::string_view bits);

  std::size_t width() const { return width_; }

  /// Canonical integer value; doubles as the basis index of the label.
  std::uint64_t value() const { return value_; }

  /// Bit at position `pos` counted from the left (pos 0 is x1, the most
  /// significant bit).
  bool bit(std::size_t pos) const;

  std::size_t popcount() const;

  /// Number of 1-bits modulo 2.
  int parity() const { return static_cast<int>(popcount() % 2); }

  std::string str() const;

  friend bool operator==(const BitString&, const BitString&) = default;
  friend auto operator<=>(const BitString&, const BitString&) = default;

 private:
  std::uint64_t value_;
  std::size_t width_;
};

}  // namespace qparity
