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
#include <set>
#include <string>
#include <vector>

#include "qparity/bit_string.hpp"
#include "qparity/errors.hpp"

namespace qparity {

/// Labeled partition of a finite universe into disjoint classes. The
/// universe is declared by its cardinality; basis-label partitions cover
/// all width-w bit strings, function partitions cover all 2^(2^n)
/// canonical function indices.
template <typename Label>
struct Partition {
  std::vector<std::vector<Label>> classes;
  std::vector<int> outcome_labels;  // one outcome tag per class
  std::uint64_t universe_size = 0;
};

using BasisPartition = Partition<BitString>;
using FunctionPartition = Partition<std::uint64_t>;

namespace detail {

inline std::uint64_t label_ordinal(const BitString& label) {
  return label.value();
}
inline std::uint64_t label_ordinal(std::uint64_t label) { return label; }

inline void check_labels(const std::vector<std::vector<BitString>>& classes,
                         std::uint64_t universe_size) {
  std::size_t width = 0;
  for (const auto& cls : classes) {
    for (const BitString& label : cls) {
      if (width == 0) width = label.width();
      if (label.width() != width) {
        throw NotAPartition("labels of widths " + std::to_string(width) +
                            " and " + std::to_string(label.width()) +
                            " mixed in one partition");
      }
    }
  }
  if (width != 0 && (width > 63 || (std::uint64_t{1} << width) != universe_size)) {
    throw NotAPartition("declared universe size " +
                        std::to_string(universe_size) +
                        " does not match label width " + std::to_string(width));
  }
}

inline void check_labels(const std::vector<std::vector<std::uint64_t>>&,
                         std::uint64_t) {}

}  // namespace detail

/// Throws NotAPartition unless the classes disjointly cover the declared
/// universe and each class has an outcome label.
template <typename Label>
void validate_partition(const Partition<Label>& p) {
  if (p.outcome_labels.size() != p.classes.size()) {
    throw NotAPartition("expected one outcome label per class");
  }
  detail::check_labels(p.classes, p.universe_size);
  std::set<std::uint64_t> seen;
  std::uint64_t total = 0;
  for (const auto& cls : p.classes) {
    for (const Label& label : cls) {
      std::uint64_t ordinal = detail::label_ordinal(label);
      if (ordinal >= p.universe_size) {
        throw NotAPartition("label outside the declared universe");
      }
      if (!seen.insert(ordinal).second) {
        throw NotAPartition("classes overlap");
      }
      ++total;
    }
  }
  if (total != p.universe_size) {
    throw NotAPartition("classes cover " + std::to_string(total) + " of " +
                        std::to_string(p.universe_size) + " universe labels");
  }
}

/// True iff all classes have equal cardinality. Validates partition-ness
/// first and throws NotAPartition on overlap or gap.
template <typename Label>
bool is_equi_partition(const Partition<Label>& p) {
  validate_partition(p);
  if (p.classes.empty()) return true;
  std::size_t first = p.classes.front().size();
  for (const auto& cls : p.classes) {
    if (cls.size() != first) return false;
  }
  return true;
}

/// Two-class partition of all width-m basis labels by popcount parity.
/// Even-parity labels get outcome 0, odd-parity labels outcome 1; members
/// are listed in ascending canonical order.
BasisPartition parity_partition(std::size_t num_qubits);

/// Partition over explicit classes. The universe is all labels of the
/// common width; outcome labels default to the class positions 0,1,...
BasisPartition basis_partition_from_classes(
    std::vector<std::vector<BitString>> classes);

}  // namespace qparity
