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

#include "qparity/boolean_function.hpp"

#include <algorithm>
#include <bit>

#include "qparity/errors.hpp"

namespace qparity {

namespace {

// 2^(2^6) function indices exactly exhaust uint64; wider truth tables
// would break the bijective canonical index.
constexpr std::size_t kMaxFunctionArity = 6;
constexpr std::size_t kMaxEnumerationArity = 4;

void check_arity(std::size_t arity) {
  if (arity < 1) {
    throw WrongArity("Boolean function arity must be >= 1");
  }
  if (arity > kMaxFunctionArity) {
    throw SizeLimitExceeded("Boolean function arity " + std::to_string(arity) +
                            " exceeds the limit of " +
                            std::to_string(kMaxFunctionArity));
  }
}

}  // namespace

BooleanFunction::BooleanFunction(std::size_t arity,
                                 std::vector<std::uint8_t> truth_table)
    : arity_(arity), table_(std::move(truth_table)) {
  check_arity(arity);
  if (table_.size() != (std::size_t{1} << arity_)) {
    throw DimensionMismatch("truth table of length " +
                            std::to_string(table_.size()) +
                            " for arity " + std::to_string(arity_));
  }
  for (std::uint8_t v : table_) {
    if (v > 1) {
      throw Error("truth table entries must be 0 or 1");
    }
  }
}

BooleanFunction BooleanFunction::from_index(std::size_t arity,
                                            std::uint64_t canonical_index) {
  check_arity(arity);
  std::size_t size = std::size_t{1} << arity;
  if (arity < kMaxFunctionArity && (canonical_index >> size) != 0) {
    throw Error("canonical index " + std::to_string(canonical_index) +
                " out of range for arity " + std::to_string(arity));
  }
  std::vector<std::uint8_t> table(size);
  for (std::size_t k = 0; k < size; ++k) {
    table[k] = static_cast<std::uint8_t>((canonical_index >> k) & 1u);
  }
  return BooleanFunction(arity, std::move(table));
}

BooleanFunction BooleanFunction::from_string(std::string_view table_bits) {
  if (table_bits.size() < 2 || !std::has_single_bit(table_bits.size())) {
    throw ParseError("truth table length must be a power of two >= 2, got " +
                     std::to_string(table_bits.size()));
  }
  std::vector<std::uint8_t> table;
  table.reserve(table_bits.size());
  for (char c : table_bits) {
    if (c != '0' && c != '1') {
      throw ParseError(std::string("invalid truth table character '") + c +
                       "'");
    }
    table.push_back(static_cast<std::uint8_t>(c - '0'));
  }
  auto arity = static_cast<std::size_t>(std::countr_zero(table_bits.size()));
  return BooleanFunction(arity, std::move(table));
}

std::uint8_t BooleanFunction::value(std::uint64_t input) const {
  if (input >= table_.size()) {
    throw Error("input " + std::to_string(input) + " out of range for arity " +
                std::to_string(arity_));
  }
  return table_[input];
}

std::uint64_t BooleanFunction::canonical_index() const {
  std::uint64_t index = 0;
  for (std::size_t k = 0; k < table_.size(); ++k) {
    index |= std::uint64_t{table_[k]} << k;
  }
  return index;
}

SignVector BooleanFunction::sign_signature() const {
  std::vector<int> signs(table_.size());
  for (std::size_t k = 0; k < table_.size(); ++k) {
    signs[k] = 2 * int{table_[k]} - 1;
  }
  return SignVector(std::move(signs));
}

std::string BooleanFunction::table_string() const {
  std::string s(table_.size(), '0');
  for (std::size_t k = 0; k < table_.size(); ++k) {
    if (table_[k]) s[k] = '1';
  }
  return s;
}

FunctionUniverse::FunctionUniverse(std::size_t arity) : arity_(arity) {
  if (arity < 1 || arity > kMaxEnumerationArity) {
    throw SizeLimitExceeded("function enumeration needs 1 <= n <= " +
                            std::to_string(kMaxEnumerationArity) + ", got " +
                            std::to_string(arity));
  }
}

BooleanFunction FunctionUniverse::at(std::uint64_t canonical_index) const {
  if (canonical_index >= size()) {
    throw Error("canonical index " + std::to_string(canonical_index) +
                " out of range");
  }
  return BooleanFunction::from_index(arity_, canonical_index);
}

FunctionUniverse enumerate_functions(std::size_t arity) {
  return FunctionUniverse(arity);
}

int functional_parity(const BooleanFunction& f) {
  SignVector signs = f.sign_signature();
  int product = 1;
  for (int s : signs.entries()) product *= s;
  return product == 1 ? 0 : 1;
}

FunctionPartition parity_classes(std::size_t arity) {
  FunctionUniverse universe = enumerate_functions(arity);
  FunctionPartition p;
  p.universe_size = universe.size();
  p.classes.resize(2);
  p.outcome_labels = {0, 1};
  for (const BooleanFunction& f : universe) {
    p.classes[static_cast<std::size_t>(functional_parity(f))].push_back(
        f.canonical_index());
  }
  return p;
}

FunctionValues value_set(const BooleanFunction& f) {
  FunctionValues values;
  values.ordered.reserve(f.table_size());
  for (std::uint8_t v : f.truth_table()) values.ordered.push_back(int{v});
  values.distinct = values.ordered;
  std::sort(values.distinct.begin(), values.distinct.end());
  values.distinct.erase(
      std::unique(values.distinct.begin(), values.distinct.end()),
      values.distinct.end());
  return values;
}

}  // namespace qparity
