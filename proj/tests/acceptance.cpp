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

// End-to-end acceptance suite. Each criterion prints exactly one PASS/FAIL
// line; the binary exits nonzero if any criterion fails or overruns its
// time budget.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "json.hpp"

#include "qparity/boolean_function.hpp"
#include "qparity/deutsch.hpp"
#include "qparity/factorizable.hpp"
#include "qparity/observable.hpp"
#include "qparity/oracle.hpp"
#include "qparity/partition.hpp"
#include "qparity/span_analysis.hpp"
#include "support/gram_rank.hpp"
#include "support/sign_tables.hpp"
#include "support/test_helpers.hpp"

using namespace qparity;
using ordered_json = nlohmann::ordered_json;
using qparity::testing::CliResult;
using qparity::testing::gram_rank;
using qparity::testing::max_abs_diff;
using qparity::testing::parse_csv;
using qparity::testing::run_cli;
using qparity::testing::SignRow;

namespace {

struct Failure {
  std::string message;
};

void check(bool condition, const std::string& message) {
  if (!condition) throw Failure{message};
}

// --- criterion 1 -------------------------------------------------------

void partition_classes_via_cli() {
  auto classes_of = [](std::size_t qubits) {
    CliResult r = run_cli({"--format", "json", "parity-partition", "--qubits",
                           std::to_string(qubits)});
    check(r.code == 0, "parity-partition exited with code " +
                           std::to_string(r.code));
    ordered_json doc = ordered_json::parse(r.out);
    std::vector<std::vector<std::string>> classes;
    for (const auto& cls : doc["result"]["classes"]) {
      classes.push_back(cls["labels"].get<std::vector<std::string>>());
    }
    return classes;
  };

  std::vector<std::vector<std::string>> two = classes_of(2);
  check(two == std::vector<std::vector<std::string>>{{"00", "11"},
                                                     {"01", "10"}},
        "two-qubit parity classes are wrong");

  std::vector<std::vector<std::string>> three = classes_of(3);
  check(three == std::vector<std::vector<std::string>>{
                     {"000", "011", "101", "110"},
                     {"001", "010", "100", "111"}},
        "three-qubit parity classes are wrong");
}

// --- criterion 2 -------------------------------------------------------

std::multiset<SignRow> table_rows_via_cli(std::size_t n) {
  CliResult r = run_cli(
      {"--format", "csv", "function-table", "--n", std::to_string(n)});
  check(r.code == 0, "function-table exited with code " +
                         std::to_string(r.code));
  auto rows = parse_csv(r.out);
  check(rows.size() == (std::size_t{1} << (std::size_t{1} << n)) + 1,
        "wrong row count for n=" + std::to_string(n));
  std::multiset<SignRow> result;
  for (std::size_t i = 1; i < rows.size(); ++i) {
    check(rows[i].size() == 2 + (std::size_t{1} << n),
          "wrong column count for n=" + std::to_string(n));
    SignRow row;
    row.first = std::stoi(rows[i][1]);
    for (std::size_t k = 2; k < rows[i].size(); ++k) {
      row.second.push_back(std::stoi(rows[i][k]));
    }
    result.insert(std::move(row));
  }
  return result;
}

void function_table_via_cli() {
  std::multiset<SignRow> expected1(qparity::testing::one_bit_table().begin(),
                                   qparity::testing::one_bit_table().end());
  check(table_rows_via_cli(1) == expected1,
        "one-bit (parity, sign-row) multiset mismatch");

  std::multiset<SignRow> expected2(qparity::testing::two_bit_table().begin(),
                                   qparity::testing::two_bit_table().end());
  check(table_rows_via_cli(2) == expected2,
        "two-bit (parity, sign-row) multiset mismatch");
}

// --- criterion 3 -------------------------------------------------------

void span_verdicts_with_independent_ranks() {
  for (std::size_t n = 1; n <= 4; ++n) {
    SpanReport report = span_analysis(n);
    std::size_t full = std::size_t{1} << n;
    std::uint64_t half_family = std::uint64_t{1}
                                << ((std::uint64_t{1} << n) - 1);
    check(report.class_sizes[0] == half_family &&
              report.class_sizes[1] == half_family,
          "class sizes wrong for n=" + std::to_string(n));

    std::size_t expected_rank = n == 1 ? 1 : full;
    check(report.ranks[0] == expected_rank &&
              report.ranks[1] == expected_rank,
          "ranks wrong for n=" + std::to_string(n));
    check(report.orthogonal == (n == 1),
          "orthogonality verdict wrong for n=" + std::to_string(n));

    // Independent route: greedy maximal independent subsets certified by
    // nonzero Gram determinants.
    std::vector<SignVector> class0;
    std::vector<SignVector> class1;
    for (const BooleanFunction& f : enumerate_functions(n)) {
      (functional_parity(f) == 0 ? class0 : class1)
          .push_back(f.sign_signature());
    }
    check(gram_rank(class0) == expected_rank &&
              gram_rank(class1) == expected_rank,
          "Gram-determinant oracle disagrees for n=" + std::to_string(n));

    if (n == 1) {
      for (const SignVector& a : class0) {
        for (const SignVector& b : class1) {
          check(a.dot(b) == 0, "n=1 cross inner products must vanish");
        }
      }
    } else {
      check(report.witness.has_value(), "missing witness");
      check(report.witness->from_parity0.dot(report.witness->from_parity1) ==
                report.witness->inner_product &&
            report.witness->inner_product != 0,
            "witness inner product is wrong");
    }
  }
}

// --- criterion 4 -------------------------------------------------------

void projector_algebra() {
  for (std::size_t m = 1; m <= 8; ++m) {
    Observable obs =
        observable_from_partition(parity_partition(m), {0.0, 1.0});
    const Operator& p0 = obs.terms()[0].projector;
    const Operator& p1 = obs.terms()[1].projector;
    check((p0 * p0 - p0).max_abs() <= 1e-9 &&
              (p1 * p1 - p1).max_abs() <= 1e-9,
          "idempotence fails for m=" + std::to_string(m));
    check((p0 - p0.adjoint()).max_abs() <= 1e-9 &&
              (p1 - p1.adjoint()).max_abs() <= 1e-9,
          "hermiticity fails for m=" + std::to_string(m));
    check((p0 * p1).max_abs() <= 1e-9,
          "orthogonality fails for m=" + std::to_string(m));
    check((p0 + p1 - Operator::identity(p0.dim())).max_abs() <= 1e-9,
          "completeness fails for m=" + std::to_string(m));
  }
}

// --- criterion 5 -------------------------------------------------------

void oracle_suite() {
  std::size_t functions_checked = 0;
  for (std::size_t n = 1; n <= 3; ++n) {
    for (const BooleanFunction& f : enumerate_functions(n)) {
      Operator u = oracle_matrix(f);
      std::size_t dim = u.dim();
      for (std::size_t r = 0; r < dim; ++r) {
        std::size_t row_ones = 0;
        std::size_t col_ones = 0;
        for (std::size_t c = 0; c < dim; ++c) {
          Operator::Complex row_entry = u.at(r, c);
          Operator::Complex col_entry = u.at(c, r);
          check(row_entry == Operator::Complex{0.0} ||
                    row_entry == Operator::Complex{1.0},
                "non 0/1 entry in an oracle");
          if (row_entry == Operator::Complex{1.0}) ++row_ones;
          if (col_entry == Operator::Complex{1.0}) ++col_ones;
        }
        check(row_ones == 1 && col_ones == 1,
              "oracle is not a permutation matrix");
      }
      check(u * u == Operator::identity(dim),
            "oracle squared is not the exact identity");
      for (std::uint64_t x = 0; x < (std::uint64_t{1} << n); ++x) {
        for (std::uint64_t y = 0; y <= 1; ++y) {
          BitString input((x << 1) | y, n + 1);
          BitString expected((x << 1) | (y ^ f.value(x)), n + 1);
          check(max_abs_diff(apply(u, basis_state(input)),
                             basis_state(expected)) == 0.0,
                "oracle disagrees with the truth table on |" + input.str() +
                    ">");
        }
      }
      ++functions_checked;
    }
  }
  check(functions_checked == 4 + 16 + 256,
        "unexpected function count: " + std::to_string(functions_checked));
}

// --- criterion 6 -------------------------------------------------------

void parity_equivalence() {
  for (std::size_t n = 1; n <= 4; ++n) {
    std::uint64_t count = 0;
    std::array<std::uint64_t, 2> class_sizes{0, 0};
    for (const BooleanFunction& f : enumerate_functions(n)) {
      int xor_bits = 0;
      for (std::uint8_t bit : f.truth_table()) xor_bits ^= bit;
      int parity = functional_parity(f);
      check(parity == xor_bits,
            "sign product and XOR disagree at n=" + std::to_string(n) +
                ", index " + std::to_string(f.canonical_index()));
      ++class_sizes[static_cast<std::size_t>(parity)];
      ++count;
    }
    std::uint64_t universe = std::uint64_t{1} << (std::uint64_t{1} << n);
    check(count == universe, "enumeration count wrong");
    check(class_sizes[0] == universe / 2 && class_sizes[1] == universe / 2,
          "class sizes are not 2^(2^n - 1) for n=" + std::to_string(n));
  }
}

// --- criterion 7 -------------------------------------------------------

void deutsch_suite() {
  for (std::uint64_t index = 0; index < 4; ++index) {
    BooleanFunction f = BooleanFunction::from_index(1, index);
    DeutschResult run = deutsch_run(f);
    check(run.outcome == functional_parity(f),
          "circuit outcome disagrees with the parity for table " +
              f.table_string());
    check(std::abs(run.probability - 1.0) <= 1e-9,
          "outcome probability not within 1e-9 of 1 for table " +
              f.table_string());
  }
}

// --- criterion 8 -------------------------------------------------------

void factorizability_suite() {
  const double s = 1.0 / std::sqrt(2.0);
  StateVector singlet({0.0, s, -s, 0.0});
  check(!is_factorizable(singlet, 1e-9), "singlet reported factorizable");
  check(std::abs(std::abs(factorizability_determinant(singlet)) - 0.5) <=
            1e-9,
        "singlet determinant magnitude is not 0.5");

  std::mt19937_64 rng(20260808);
  for (int i = 0; i < 1000; ++i) {
    StateVector product = tensor(qparity::testing::random_qubit(rng),
                                 qparity::testing::random_qubit(rng));
    check(is_factorizable(product, 1e-9),
          "random product state reported entangled");
  }
  for (int i = 0; i < 1000; ++i) {
    StateVector odd = qparity::testing::random_odd_span_state(rng, 1e-3);
    check(!is_factorizable(odd, 1e-9),
          "odd-span state reported factorizable");
  }
}

// --- criterion 9 -------------------------------------------------------

void byte_identical_cli() {
  std::vector<std::vector<std::string>> invocations = {
      {"parity-partition", "--qubits", "3"},
      {"parity-observable", "--qubits", "2"},
      {"function-table", "--n", "2"},
      {"span-analysis", "--n", "2"},
      {"span-analysis", "--n", "2", "--ancillas", "1"},
      {"oracle", "0110"},
      {"deutsch", "01"},
      {"factorizable", "0,0.7071067812,-0.7071067812,0"},
      {"is-equipartition", "00,11;01,10"},
  };
  for (const std::string& format : {"text", "csv", "json"}) {
    for (const auto& base : invocations) {
      std::vector<std::string> args = {"--format", format};
      args.insert(args.end(), base.begin(), base.end());
      CliResult first = run_cli(args);
      CliResult second = run_cli(args);
      check(first.code == 0, "command failed: " + base.front());
      check(first.code == second.code && first.out == second.out &&
                first.err == second.err,
            "output differs between runs of " + base.front() + " (" +
                format + ")");
      check(!first.out.empty(), "no output from " + base.front());
    }
  }
}

struct Criterion {
  int id;
  std::string name;
  std::function<void()> body;
  double limit_ms;  // 0 = no stated budget
};

}  // namespace

int main() {
  std::vector<Criterion> criteria = {
      {1, "parity partition classes for 2 and 3 qubits via the CLI",
       partition_classes_via_cli, 1000.0},
      {2, "function table sign rows for n=1 and n=2 via the CLI",
       function_table_via_cli, 1000.0},
      {3, "span ranks and separability verdicts for n=1..4",
       span_verdicts_with_independent_ranks, 10000.0},
      {4, "parity observable projector algebra for m=1..8",
       projector_algebra, 0.0},
      {5, "oracle unitaries for every function with n<=3", oracle_suite,
       5000.0},
      {6, "functional parity equals truth-table XOR for n<=4",
       parity_equivalence, 10000.0},
      {7, "single-query circuit outcomes for all 1-bit functions",
       deutsch_suite, 0.0},
      {8, "factorizability verdicts for singlet, product, and odd-span "
          "states",
       factorizability_suite, 0.0},
      {9, "byte-identical repeated CLI output for every subcommand",
       byte_identical_cli, 0.0},
  };

  int failures = 0;
  for (const Criterion& criterion : criteria) {
    auto start = std::chrono::steady_clock::now();
    std::string failure;
    try {
      criterion.body();
    } catch (const Failure& f) {
      failure = f.message;
    } catch (const std::exception& e) {
      failure = std::string("unexpected exception: ") + e.what();
    }
    auto stop = std::chrono::steady_clock::now();
    double ms =
        std::chrono::duration<double, std::milli>(stop - start).count();
    if (failure.empty() && criterion.limit_ms > 0.0 &&
        ms > criterion.limit_ms) {
      failure = "exceeded the time budget of " +
                std::to_string(criterion.limit_ms) + " ms";
    }
    char line[256];
    if (failure.empty()) {
      std::snprintf(line, sizeof(line), "criterion %d: PASS  %s (%.1f ms)",
                    criterion.id, criterion.name.c_str(), ms);
    } else {
      std::snprintf(line, sizeof(line), "criterion %d: FAIL  %s: %s",
                    criterion.id, criterion.name.c_str(), failure.c_str());
      ++failures;
    }
    std::cout << line << std::endl;
  }
  if (failures > 0) {
    std::cout << failures << " of " << criteria.size()
              << " criteria failed" << std::endl;
    return 1;
  }
  std::cout << "all " << criteria.size() << " criteria passed" << std::endl;
  return 0;
}
