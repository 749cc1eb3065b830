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

#include "qparity/span_analysis.hpp"

#include <string>
#include <utility>

#include "qparity/boolean_function.hpp"
#include "qparity/errors.hpp"

namespace qparity {

namespace {

std::pair<std::vector<SignVector>, std::vector<SignVector>>
parity_sign_families(std::size_t arity) {
  std::pair<std::vector<SignVector>, std::vector<SignVector>> families;
  for (const BooleanFunction& f : enumerate_functions(arity)) {
    if (functional_parity(f) == 0) {
      families.first.push_back(f.sign_signature());
    } else {
      families.second.push_back(f.sign_signature());
    }
  }
  return families;
}

// v tensored with the all-(+1) pattern of the given length: every entry
// repeated block times.
SignVector extend_uniform(const SignVector& v, std::size_t block) {
  std::vector<int> extended;
  extended.reserve(v.size() * block);
  for (std::size_t i = 0; i < v.size(); ++i) {
    extended.insert(extended.end(), block, v[i]);
  }
  return SignVector(std::move(extended));
}

SpanReport analyze(std::size_t arity, std::size_t ancillas,
                   std::vector<SignVector> class0,
                   std::vector<SignVector> class1) {
  SpanReport report;
  report.arity = arity;
  report.ancillas = ancillas;
  report.vector_length = class0.front().size();
  report.class_sizes = {class0.size(), class1.size()};
  report.ranks = {exact_rank(class0), exact_rank(class1)};
  report.orthogonal = spans_orthogonal(class0, class1);
  if (!report.orthogonal) {
    // Non-orthogonal spans guarantee a member pair with nonzero inner
    // product; for the parity families the very first pair already works.
    for (const SignVector& a : class0) {
      for (const SignVector& b : class1) {
        std::int64_t ip = a.dot(b);
        if (ip != 0) {
          report.witness = SpanWitness{a, b, ip};
          return report;
        }
      }
    }
  }
  return report;
}

}  // namespace

SpanReport span_analysis(std::size_t arity) {
  if (arity < 1 || arity > 4) {
    throw SizeLimitExceeded("span analysis needs 1 <= n <= 4, got " +
                            std::to_string(arity));
  }
  auto [class0, class1] = parity_sign_families(arity);
  return analyze(arity, 0, std::move(class0), std::move(class1));
}

SpanReport ancilla_extended_span_analysis(std::size_t arity,
                                          std::size_t ancillas) {
  if (arity < 1 || arity > 3) {
    throw SizeLimitExceeded(
        "ancilla-extended span analysis needs 1 <= n <= 3, got " +
        std::to_string(arity));
  }
  if (ancillas > 2) {
    throw SizeLimitExceeded("ancilla count must be 0..2, got " +
                            std::to_string(ancillas));
  }
  auto [class0, class1] = parity_sign_families(arity);
  std::size_t block = std::size_t{1} << ancillas;
  if (block > 1) {
    for (SignVector& v : class0) v = extend_uniform(v, block);
    for (SignVector& v : class1) v = extend_uniform(v, block);
  }
  return analyze(arity, ancillas, std::move(class0), std::move(class1));
}

bool single_query_separable(
    const std::vector<std::vector<SignVector>>& classes) {
  if (classes.empty()) {
    throw Error("separability needs at least one class");
  }
  std::size_t length = 0;
  for (const auto& cls : classes) {
    if (cls.empty()) {
      throw Error("separability classes must be non-empty");
    }
    for (const SignVector& v : cls) {
      if (length == 0) length = v.size();
      if (v.size() != length) {
        throw DimensionMismatch("sign vectors of lengths " +
                                std::to_string(length) + " and " +
                                std::to_string(v.size()));
      }
    }
  }
  for (std::size_t a = 0; a < classes.size(); ++a) {
    for (std::size_t b = a + 1; b < classes.size(); ++b) {
      if (!spans_orthogonal(classes[a], classes[b])) return false;
    }
  }
  return true;
}

}  // namespace qparity
