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

#include <cstdint>
#include <iterator>
#include <string>
#include <string_view>
#include <vector>

#include "qparity/partition.hpp"
#include "qparity/sign_vector.hpp"

namespace qparity {

/// Truth table of an n-bit Boolean function. Entry k of the table is the
/// value on the input whose canonical integer is k, so f(0...0) comes
/// first. The canonical index sum_x f(x) * 2^canonical(x) identifies the
/// function bijectively; arity is capped at 6 so the index always fits in
/// 64 bits.
class BooleanFunction {
 public:
  BooleanFunction(std::size_t arity, std::vector<std::uint8_t> truth_table);

  static BooleanFunction from_index(std::size_t arity,
                                    std::uint64_t canonical_index);

  /// Parses a truth table string such as "0110"; the length fixes the
  /// arity and must be a power of two >= 2.
  static BooleanFunction from_string(std::string_view table_bits);

  std::size_t arity() const { return arity_; }
  std::size_t table_size() const { return table_.size(); }
  const std::vector<std::uint8_t>& truth_table() const { return table_; }

  /// f evaluated on the input with canonical integer value `input`.
  std::uint8_t value(std::uint64_t input) const;

  std::uint64_t canonical_index() const;

  /// Outputs recoded 0 -> -1, 1 -> +1.
  SignVector sign_signature() const;

  std::string table_string() const;

  friend bool operator==(const BooleanFunction&,
                         const BooleanFunction&) = default;

 private:
  std::size_t arity_;
  std::vector<std::uint8_t> table_;
};

/// All 2^(2^n) Boolean functions of n bits in ascending canonical index
/// order, materialized lazily through iteration. Full enumeration is
/// capped at n <= 4.
class FunctionUniverse {
 public:
  explicit FunctionUniverse(std::size_t arity);

  std::size_t arity() const { return arity_; }
  std::uint64_t size() const { return std::uint64_t{1} << (std::size_t{1} << arity_); }

  BooleanFunction at(std::uint64_t canonical_index) const;

  class const_iterator {
   public:
    using value_type = BooleanFunction;
    using difference_type = std::ptrdiff_t;
    using iterator_category = std::input_iterator_tag;

    const_iterator(std::size_t arity, std::uint64_t index)
        : arity_(arity), index_(index) {}

    BooleanFunction operator*() const {
      return BooleanFunction::from_index(arity_, index_);
    }
    const_iterator& operator++() {
      ++index_;
      return *this;
    }
    const_iterator operator++(int) {
      const_iterator old = *this;
      ++index_;
      return old;
    }
    friend bool operator==(const const_iterator&,
                           const const_iterator&) = default;

   private:
    std::size_t arity_;
    std::uint64_t index_;
  };

  const_iterator begin() const { return {arity_, 0}; }
  const_iterator end() const { return {arity_, size()}; }

 private:
  std::size_t arity_;
};

/// The universe of all n-bit Boolean functions; throws SizeLimitExceeded
/// outside 1 <= n <= 4.
FunctionUniverse enumerate_functions(std::size_t arity);

/// Product of the +/-1 recoded outputs over all inputs, reported as 0 for
/// product +1 and 1 for product -1. Equals the XOR of the truth table.
int functional_parity(const BooleanFunction& f);

/// Two-class partition of all canonical function indices by functional
/// parity; class 0 holds the parity-0 functions.
FunctionPartition parity_classes(std::size_t arity);

struct FunctionValues {
  std::vector<int> ordered;   // (f(0...0), ..., f(1...1))
  std::vector<int> distinct;  // collapsed set view, ascending
};

/// Ordered output tuple of f plus its collapsed set view.
FunctionValues value_set(const BooleanFunction& f);

}  // namespace qparity
