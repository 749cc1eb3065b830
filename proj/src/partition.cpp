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

#include "qparity/partition.hpp"

#include "qparity/constants.hpp"

namespace qparity {

BasisPartition parity_partition(std::size_t num_qubits) {
  if (num_qubits < 1 || num_qubits > kMaxStateQubits) {
    throw SizeLimitExceeded("parity partition needs 1 <= qubits <= " +
                            std::to_string(kMaxStateQubits) + ", got " +
                            std::to_string(num_qubits));
  }
  BasisPartition p;
  p.universe_size = std::uint64_t{1} << num_qubits;
  p.classes.resize(2);
  p.outcome_labels = {0, 1};
  for (std::uint64_t value = 0; value < p.universe_size; ++value) {
    BitString label(value, num_qubits);
    p.classes[static_cast<std::size_t>(label.parity())].push_back(label);
  }
  return p;
}

BasisPartition basis_partition_from_classes(
    std::vector<std::vector<BitString>> classes) {
  std::size_t width = 0;
  for (const auto& cls : classes) {
    if (!cls.empty()) {
      width = cls.front().width();
      break;
    }
  }
  if (width == 0) {
    throw NotAPartition("partition must contain at least one label");
  }
  if (width > 63) {
    throw NotAPartition("label width too large for a basis partition");
  }
  BasisPartition p;
  p.classes = std::move(classes);
  p.universe_size = std::uint64_t{1} << width;
  p.outcome_labels.resize(p.classes.size());
  for (std::size_t i = 0; i < p.classes.size(); ++i) {
    p.outcome_labels[i] = static_cast<int>(i);
  }
  return p;
}

}  // namespace qparity
