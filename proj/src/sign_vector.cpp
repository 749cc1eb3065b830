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

#include "qparity/sign_vector.hpp"

#include <algorithm>
#include <cstdlib>
#include <limits>
#include <string>

#include "qparity/errors.hpp"

namespace qparity {

namespace {

using Wide = __int128;

Wide wide_abs(Wide x) { return x < 0 ? -x : x; }

Wide wide_gcd(Wide a, Wide b) {
  a = wide_abs(a);
  b = wide_abs(b);
  while (b != 0) {
    Wide t = a % b;
    a = b;
    b = t;
  }
  return a;
}

std::int64_t narrow(Wide x) {
  if (x > std::numeric_limits<std::int64_t>::max() ||
      x < std::numeric_limits<std::int64_t>::min()) {
    throw Error("exact arithmetic overflow in rank computation");
  }
  return static_cast<std::int64_t>(x);
}

/// Incremental integer row-echelon basis over the rationals. Rows are kept
/// gcd-reduced with a positive leading entry and sorted by pivot column
/// (the leftmost nonzero index), so eliminating an incoming row against the
/// basis in pivot order never reintroduces cleared columns.
class ExactRowBasis {
 public:
  // Returns true when v is independent of the rows seen so far.
  bool insert(const std::vector<std::int64_t>& v) {
    std::vector<Wide> row(v.begin(), v.end());
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      std::size_t p = pivots_[i];
      if (row[p] == 0) continue;
      const std::vector<std::int64_t>& basis = rows_[i];
      Wide scale_row = basis[p];
      Wide scale_basis = row[p];
      for (std::size_t j = 0; j < row.size(); ++j) {
        row[j] = scale_row * row[j] - scale_basis * Wide{basis[j]};
      }
      reduce(row);
    }
    std::size_t pivot = row.size();
    for (std::size_t j = 0; j < row.size(); ++j) {
      if (row[j] != 0) {
        pivot = j;
        break;
      }
    }
    if (pivot == row.size()) return false;
    if (row[pivot] < 0) {
      for (Wide& x : row) x = -x;
    }
    std::vector<std::int64_t> stored(row.size());
    for (std::size_t j = 0; j < row.size(); ++j) stored[j] = narrow(row[j]);
    auto pos = std::lower_bound(pivots_.begin(), pivots_.end(), pivot);
    std::size_t index = static_cast<std::size_t>(pos - pivots_.begin());
    pivots_.insert(pos, pivot);
    rows_.insert(rows_.begin() + static_cast<std::ptrdiff_t>(index),
                 std::move(stored));
    return true;
  }

  std::size_t rank() const { return rows_.size(); }
  const std::vector<std::vector<std::int64_t>>& rows() const { return rows_; }

 private:
  static void reduce(std::vector<Wide>& row) {
    Wide g = 0;
    for (Wide x : row) g = wide_gcd(g, x);
    if (g > 1) {
      for (Wide& x : row) x /= g;
    }
  }

  std::vector<std::vector<std::int64_t>> rows_;
  std::vector<std::size_t> pivots_;
};

std::size_t common_length(const std::vector<SignVector>& family,
                          std::size_t fallback) {
  std::size_t len = family.empty() ? fallback : family.front().size();
  for (const SignVector& v : family) {
    if (v.size() != len) {
      throw DimensionMismatch("sign vectors of lengths " +
                              std::to_string(len) + " and " +
                              std::to_string(v.size()) + " in one family");
    }
  }
  return len;
}

ExactRowBasis build_basis(const std::vector<SignVector>& family) {
  ExactRowBasis basis;
  std::vector<std::int64_t> row;
  for (const SignVector& v : family) {
    row.assign(v.entries().begin(), v.entries().end());
    basis.insert(row);
  }
  return basis;
}

}  // namespace

SignVector::SignVector(std::vector<int> entries) {
  entries_.reserve(entries.size());
  for (int e : entries) {
    if (e != -1 && e != 1) {
      throw Error("sign vector entries must be exactly -1 or +1, got " +
                  std::to_string(e));
    }
    entries_.push_back(static_cast<std::int8_t>(e));
  }
}

SignVector::SignVector(std::initializer_list<int> entries)
    : SignVector(std::vector<int>(entries)) {}

std::int64_t SignVector::dot(const SignVector& other) const {
  if (size() != other.size()) {
    throw DimensionMismatch("inner product of sign vectors with lengths " +
                            std::to_string(size()) + " and " +
                            std::to_string(other.size()));
  }
  std::int64_t sum = 0;
  for (std::size_t i = 0; i < size(); ++i) {
    sum += std::int64_t{entries_[i]} * std::int64_t{other.entries_[i]};
  }
  return sum;
}

std::size_t exact_rank(const std::vector<SignVector>& family) {
  common_length(family, 0);
  return build_basis(family).rank();
}

bool spans_orthogonal(const std::vector<SignVector>& a,
                      const std::vector<SignVector>& b) {
  std::size_t len = common_length(a, b.empty() ? 0 : b.front().size());
  std::size_t len_b = common_length(b, len);
  if (!a.empty() && !b.empty() && len != len_b) {
    throw DimensionMismatch("sign vector families of lengths " +
                            std::to_string(len) + " and " +
                            std::to_string(len_b));
  }
  ExactRowBasis basis_a = build_basis(a);
  ExactRowBasis basis_b = build_basis(b);
  for (const auto& row_a : basis_a.rows()) {
    for (const auto& row_b : basis_b.rows()) {
      Wide sum = 0;
      for (std::size_t i = 0; i < row_a.size(); ++i) {
        sum += Wide{row_a[i]} * Wide{row_b[i]};
      }
      if (sum != 0) return false;
    }
  }
  return true;
}

}  // namespace qparity
