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

#include "qparity/bit_string.hpp"

#include <bit>

#include "qparity/errors.hpp"

namespace qparity {

BitString::BitString(std::uint64_t value, std::size_t width)
    : value_(value), width_(width) {
  if (width < 1 || width > 64) {
    throw InvalidLabelWidth("bit string width must be in 1..64, got " +
                            std::to_string(width));
  }
  if (width < 64 && (value >> width) != 0) {
    throw InvalidLabelWidth("value " + std::to_string(value) +
                            " does not fit in " + std::to_string(width) +
                            " bits");
  }
}

BitString BitString::from_string(std::string_view bits) {
  if (bits.empty()) {
    throw InvalidLabelWidth("bit string must have width >= 1");
  }
  if (bits.size() > 64) {
    throw InvalidLabelWidth("bit string wider than 64 bits");
  }
  std::uint64_t value = 0;
  for (char c : bits) {
    if (c != '0' && c != '1') {
      throw ParseError(std::string("invalid bit character '") + c +
                       "' in bit string");
    }
    value = (value << 1) | static_cast<std::uint64_t>(c - '0');
  }
  return BitString(value, bits.size());
}

bool BitString::bit(std::size_t pos) const {
  if (pos >= width_) {
    throw InvalidLabelWidth("bit position " + std::to_string(pos) +
                            " out of range for width " +
                            std::to_string(width_));
  }
  return ((value_ >> (width_ - 1 - pos)) & 1u) != 0;
}

std::size_t BitString::popcount() const {
  return static_cast<std::size_t>(std::popcount(value_));
}

std::string BitString::str() const {
  std::string s(width_, '0');
  for (std::size_t i = 0; i < width_; ++i) {
    if (bit(i)) s[i] = '1';
  }
  return s;
}

}  // namespace qparity
