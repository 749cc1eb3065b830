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

#include "qparity/cli.hpp"

#include <charconv>
#include <complex>
#include <cstdio>
#include <fstream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "qparity/boolean_function.hpp"
#include "qparity/deutsch.hpp"
#include "qparity/errors.hpp"
#include "qparity/factorizable.hpp"
#include "qparity/observable.hpp"
#include "qparity/oracle.hpp"
#include "qparity/partition.hpp"
#include "qparity/span_analysis.hpp"
#include "qparity/state_vector.hpp"

namespace qparity::cli {

namespace {

using ordered_json = nlohmann::ordered_json;
using Complex = std::complex<double>;

/// One rendered command result. All three renderings are produced up
/// front so every format is deterministic and independently testable.
struct Document {
  std::string command;
  ordered_json params;
  ordered_json result;
  std::string text;
  std::string csv;
};

// Floating point output is fixed to 12 significant digits everywhere.
std::string fmt_double(double v) {
  if (v == 0.0) v = 0.0;  // collapse -0
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return buf;
}

// Short complex form for text output: "0.5", "-0.5i", "0.5-0.5i".
std::string fmt_complex(Complex z) {
  if (z.imag() == 0.0) return fmt_double(z.real());
  std::string imag = fmt_double(z.imag()) + "i";
  if (z.real() == 0.0) return imag;
  std::string out = fmt_double(z.real());
  if (imag[0] != '-') out += '+';
  return out + imag;
}

// Full "re<sign>imi" token, safe as a single CSV field.
std::string fmt_complex_token(Complex z) {
  std::string imag = fmt_double(z.imag());
  std::string out = fmt_double(z.real());
  if (imag[0] != '-') out += '+';
  return out + imag + "i";
}

ordered_json complex_json(Complex z) {
  return ordered_json::array({z.real(), z.imag()});
}

std::string fmt_sign(int s) { return s < 0 ? "-1" : "+1"; }

std::string join(const std::vector<std::string>& parts,
                 const std::string& sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i > 0) out += sep;
    out += parts[i];
  }
  return out;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) {
    s.remove_prefix(1);
  }
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) {
    s.remove_suffix(1);
  }
  return s;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  while (true) {
    std::size_t pos = s.find(sep, start);
    if (pos == std::string_view::npos) {
      parts.push_back(s.substr(start));
      return parts;
    }
    parts.push_back(s.substr(start, pos - start));
    start = pos + 1;
  }
}

double parse_real(std::string_view token) {
  if (!token.empty() && token.front() == '+') token.remove_prefix(1);
  double value = 0.0;
  const char* first = token.data();
  const char* last = token.data() + token.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc{} || ptr != last || token.empty()) {
    throw ParseError("invalid number '" + std::string(token) + "'");
  }
  return value;
}

// Accepts "a", "bi", "a+bi", "a-bi"; a bare "i" means 1i.
Complex parse_complex(std::string_view token) {
  token = trim(token);
  if (token.empty()) throw ParseError("empty amplitude");
  if (token.back() != 'i') return {parse_real(token), 0.0};
  std::string_view body = token.substr(0, token.size() - 1);
  std::size_t split_pos = std::string_view::npos;
  for (std::size_t k = body.size(); k-- > 1;) {
    char c = body[k];
    if ((c == '+' || c == '-') && body[k - 1] != 'e' && body[k - 1] != 'E') {
      split_pos = k;
      break;
    }
  }
  auto parse_imag_part = [](std::string_view part) {
    if (part.empty() || part == "+") return 1.0;
    if (part == "-") return -1.0;
    return parse_real(part);
  };
  if (split_pos == std::string_view::npos) {
    return {0.0, parse_imag_part(body)};
  }
  return {parse_real(body.substr(0, split_pos)),
          parse_imag_part(body.substr(split_pos))};
}

std::vector<Complex> parse_amplitudes(std::string_view list) {
  std::vector<std::string_view> tokens = split(list, ',');
  if (tokens.size() != 4) {
    throw ParseError("expected 4 comma-separated amplitudes, got " +
                     std::to_string(tokens.size()));
  }
  std::vector<Complex> amps;
  amps.reserve(4);
  for (std::string_view token : tokens) amps.push_back(parse_complex(token));
  return amps;
}

std::vector<std::vector<BitString>> parse_classes(std::string_view class_list) {
  std::vector<std::vector<BitString>> classes;
  for (std::string_view class_part : split(class_list, ';')) {
    std::vector<BitString> labels;
    for (std::string_view label_part : split(class_part, ',')) {
      labels.push_back(BitString::from_string(trim(label_part)));
    }
    classes.push_back(std::move(labels));
  }
  return classes;
}

// ---------------------------------------------------------------------
// Command implementations.

Document cmd_parity_partition(std::size_t qubits, const std::string& format) {
  BasisPartition partition = parity_partition(qubits);

  Document doc;
  doc.command = "parity-partition";
  doc.params = {{"qubits", qubits}, {"format", format}};

  ordered_json classes = ordered_json::array();
  std::ostringstream text;
  std::ostringstream csv;
  text << "parity partition of the " << qubits << "-qubit basis\n";
  csv << "outcome,label\n";
  for (std::size_t i = 0; i < partition.classes.size(); ++i) {
    std::vector<std::string> labels;
    for (const BitString& label : partition.classes[i]) {
      labels.push_back(label.str());
      csv << partition.outcome_labels[i] << ',' << label.str() << '\n';
    }
    classes.push_back(
        {{"outcome", partition.outcome_labels[i]}, {"labels", labels}});
    text << "outcome " << partition.outcome_labels[i] << ": {"
         << join(labels, ", ") << "}\n";
  }
  doc.result = {{"qubits", qubits}, {"classes", classes}};
  doc.text = text.str();
  doc.csv = csv.str();
  return doc;
}

Document cmd_parity_observable(std::size_t qubits, const std::string& format) {
  BasisPartition partition = parity_partition(qubits);
  Observable observable = observable_from_partition(partition, {0.0, 1.0});
  std::size_t dim = observable.dim();

  Document doc;
  doc.command = "parity-observable";
  doc.params = {{"qubits", qubits}, {"format", format}};

  ordered_json terms = ordered_json::array();
  std::ostringstream text;
  text << "parity observable on the " << qubits << "-qubit basis\n";
  for (std::size_t i = 0; i < observable.terms().size(); ++i) {
    const Observable::Term& term = observable.terms()[i];
    std::vector<int> diagonal(dim);
    std::vector<std::size_t> support;
    std::vector<std::string> diagonal_text;
    for (std::size_t k = 0; k < dim; ++k) {
      int d = term.projector.at(k, k).real() > 0.5 ? 1 : 0;
      diagonal[k] = d;
      if (d == 1) support.push_back(k);
      diagonal_text.push_back(std::to_string(d));
    }
    std::vector<std::string> labels;
    for (const BitString& label : partition.classes[i]) {
      labels.push_back(label.str());
    }
    terms.push_back({{"eigenvalue", term.eigenvalue},
                     {"class", labels},
                     {"support", support},
                     {"diagonal", diagonal}});
    text << "eigenvalue " << fmt_double(term.eigenvalue) << ": class {"
         << join(labels, ", ") << "}, diagonal (" << join(diagonal_text, ", ")
         << ")\n";
  }

  std::ostringstream csv;
  csv << "index,label,eigenvalue\n";
  for (std::size_t k = 0; k < dim; ++k) {
    BitString label(k, qubits);
    csv << k << ',' << label.str() << ',' << label.parity() << '\n';
  }

  doc.result = {{"qubits", qubits}, {"dim", dim}, {"terms", terms}};
  doc.text = text.str();
  doc.csv = csv.str();
  return doc;
}

Document cmd_function_table(std::size_t n, const std::string& order,
                            const std::string& format) {
  FunctionUniverse universe = enumerate_functions(n);

  struct Row {
    std::uint64_t index;
    int parity;
    SignVector signs;
  };
  std::vector<Row> rows;
  rows.reserve(universe.size());
  if (order == "grouped") {
    // Grouped order: parity-major, then ascending canonical index.
    for (int parity : {0, 1}) {
      for (const BooleanFunction& f : universe) {
        if (functional_parity(f) == parity) {
          rows.push_back({f.canonical_index(), parity, f.sign_signature()});
        }
      }
    }
  } else {
    for (const BooleanFunction& f : universe) {
      rows.push_back(
          {f.canonical_index(), functional_parity(f), f.sign_signature()});
    }
  }

  std::vector<std::string> input_labels;
  for (std::uint64_t k = 0; k < (std::uint64_t{1} << n); ++k) {
    input_labels.push_back(BitString(k, n).str());
  }

  Document doc;
  doc.command = "function-table";
  doc.params = {{"n", n}, {"order", order}, {"format", format}};

  std::ostringstream text;
  std::ostringstream csv;
  text << "Boolean functions of " << n << " bit" << (n == 1 ? "" : "s") << " ("
       << order << " order): " << rows.size() << " rows\n";
  std::size_t index_width = std::to_string(universe.size() - 1).size();
  if (index_width < 5) index_width = 5;
  text << std::string(index_width - 5, ' ') << "index  parity";
  csv << "index,parity";
  for (const std::string& label : input_labels) {
    std::string padded = label.size() < 2 ? " " + label : label;
    text << "  " << padded;
    csv << ',' << label;
  }
  text << '\n';
  csv << '\n';

  ordered_json json_rows = ordered_json::array();
  for (const Row& row : rows) {
    std::string index_str = std::to_string(row.index);
    text << std::string(index_width - index_str.size(), ' ') << index_str
         << "  " << std::string(5, ' ') << row.parity;
    csv << row.index << ',' << row.parity;
    std::vector<int> signs;
    for (std::size_t k = 0; k < row.signs.size(); ++k) {
      int s = row.signs[k];
      std::string padded = fmt_sign(s);
      if (input_labels[k].size() > 2) {
        padded = std::string(input_labels[k].size() - 2, ' ') + padded;
      }
      text << "  " << padded;
      csv << ',' << s;
      signs.push_back(s);
    }
    text << '\n';
    csv << '\n';
    json_rows.push_back(
        {{"index", row.index}, {"parity", row.parity}, {"signs", signs}});
  }

  doc.result = {{"n", n}, {"order", order}, {"rows", json_rows}};
  doc.text = text.str();
  doc.csv = csv.str();
  return doc;
}

Document cmd_span_analysis(std::size_t n, std::size_t ancillas,
                           const std::string& format) {
  SpanReport report = ancillas == 0
                          ? span_analysis(n)
                          : ancilla_extended_span_analysis(n, ancillas);

  Document doc;
  doc.command = "span-analysis";
  doc.params = {{"n", n}, {"ancillas", ancillas}, {"format", format}};

  auto signs_text = [](const SignVector& v) {
    std::vector<std::string> parts;
    for (std::size_t i = 0; i < v.size(); ++i) parts.push_back(fmt_sign(v[i]));
    return "(" + join(parts, ", ") + ")";
  };
  auto signs_csv = [](const SignVector& v) {
    std::vector<std::string> parts;
    for (std::size_t i = 0; i < v.size(); ++i) {
      parts.push_back(std::to_string(v[i]));
    }
    return join(parts, " ");
  };
  auto signs_json = [](const SignVector& v) {
    std::vector<int> out;
    for (std::size_t i = 0; i < v.size(); ++i) out.push_back(v[i]);
    return out;
  };

  std::ostringstream text;
  text << "span analysis for n=" << report.arity
       << " (ancillas: " << report.ancillas << ")\n"
       << "class sizes: " << report.class_sizes[0] << " / "
       << report.class_sizes[1] << '\n'
       << "sign-vector length: " << report.vector_length << '\n'
       << "ranks: " << report.ranks[0] << " / " << report.ranks[1] << '\n'
       << "verdict: " << (report.orthogonal ? "SEPARABLE" : "NOT-SEPARABLE")
       << '\n';
  if (report.witness) {
    text << "witness: " << signs_text(report.witness->from_parity0) << " . "
         << signs_text(report.witness->from_parity1) << " = "
         << report.witness->inner_product << '\n';
  }

  std::ostringstream csv;
  csv << "n,ancillas,vector_length,class0_size,class1_size,rank0,rank1,"
         "orthogonal,witness_class0,witness_class1,witness_inner_product\n";
  csv << report.arity << ',' << report.ancillas << ',' << report.vector_length
      << ',' << report.class_sizes[0] << ',' << report.class_sizes[1] << ','
      << report.ranks[0] << ',' << report.ranks[1] << ','
      << (report.orthogonal ? "true" : "false") << ',';
  if (report.witness) {
    csv << signs_csv(report.witness->from_parity0) << ','
        << signs_csv(report.witness->from_parity1) << ','
        << report.witness->inner_product;
  } else {
    csv << ",,";
  }
  csv << '\n';

  ordered_json witness;
  if (report.witness) {
    witness = {{"class0", signs_json(report.witness->from_parity0)},
               {"class1", signs_json(report.witness->from_parity1)},
               {"inner_product", report.witness->inner_product}};
  } else {
    witness = nullptr;
  }
  doc.result = {{"n", report.arity},
                {"ancillas", report.ancillas},
                {"vector_length", report.vector_length},
                {"class_sizes", report.class_sizes},
                {"ranks", report.ranks},
                {"orthogonal", report.orthogonal},
                {"witness", witness}};
  doc.text = text.str();
  doc.csv = csv.str();
  return doc;
}

Document cmd_oracle(const std::string& table, const std::string& format) {
  BooleanFunction f = BooleanFunction::from_string(table);
  Operator u = oracle_matrix(f);
  std::size_t dim = u.dim();
  std::size_t width = f.arity() + 1;

  std::vector<std::size_t> permutation(dim);
  for (std::size_t from = 0; from < dim; ++from) {
    for (std::size_t to = 0; to < dim; ++to) {
      if (u.at(to, from) != Operator::Complex{}) {
        permutation[from] = to;
        break;
      }
    }
  }

  Document doc;
  doc.command = "oracle";
  doc.params = {{"truth_table", table}, {"format", format}};

  std::ostringstream text;
  std::ostringstream csv;
  text << "oracle unitary for truth table " << f.table_string()
       << " (dimension " << dim << ")\n";
  csv << "from,to\n";
  for (std::size_t from = 0; from < dim; ++from) {
    std::string from_label = BitString(from, width).str();
    std::string to_label = BitString(permutation[from], width).str();
    text << '|' << from_label << "> -> |" << to_label << ">\n";
    csv << from_label << ',' << to_label << '\n';
  }

  doc.result = {{"truth_table", f.table_string()},
                {"arity", f.arity()},
                {"dim", dim},
                {"permutation", permutation}};
  doc.text = text.str();
  doc.csv = csv.str();
  return doc;
}

Document cmd_deutsch(const std::string& table, const std::string& format) {
  BooleanFunction f = BooleanFunction::from_string(table);
  DeutschResult run = deutsch_run(f);

  Document doc;
  doc.command = "deutsch";
  doc.params = {{"truth_table", table}, {"format", format}};

  std::ostringstream text;
  std::ostringstream csv;
  text << "single-query parity circuit for truth table " << f.table_string()
       << '\n';
  csv << "stage,a00,a01,a10,a11,outcome,probability\n";
  ordered_json stages = ordered_json::array();
  for (const DeutschStage& stage : run.stages) {
    std::vector<std::string> amps_text;
    ordered_json amps_json = ordered_json::array();
    csv << stage.label;
    for (Complex a : stage.state.amplitudes()) {
      amps_text.push_back(fmt_complex(a));
      amps_json.push_back(complex_json(a));
      csv << ',' << fmt_complex_token(a);
    }
    csv << ",,\n";
    std::string padded = stage.label;
    padded.resize(20, ' ');
    text << padded << " : (" << join(amps_text, ", ") << ")\n";
    stages.push_back({{"label", stage.label}, {"amplitudes", amps_json}});
  }
  text << "measured parity: " << run.outcome << " (probability "
       << fmt_double(run.probability) << ")\n";
  csv << "measurement,,,,," << run.outcome << ','
      << fmt_double(run.probability) << '\n';

  doc.result = {{"truth_table", f.table_string()},
                {"stages", stages},
                {"outcome", run.outcome},
                {"probability", run.probability}};
  doc.text = text.str();
  doc.csv = csv.str();
  return doc;
}

Document cmd_factorizable(const std::string& amplitudes, double tol,
                          bool auto_normalize, const std::string& format) {
  std::vector<Complex> amps = parse_amplitudes(amplitudes);
  double norm = 0.0;
  for (Complex a : amps) norm += std::norm(a);
  norm = std::sqrt(norm);
  if (auto_normalize) {
    if (norm == 0.0) {
      throw ParseError("cannot normalize the zero state");
    }
    for (Complex& a : amps) a /= norm;
  } else if (std::abs(norm - 1.0) > 1e-6) {
    throw UnnormalizedState(
        "amplitudes have norm " + fmt_double(norm) +
        "; pass --auto-normalize or provide a normalized state");
  }
  StateVector state = StateVector::unnormalized(amps);
  Complex determinant = factorizability_determinant(state);
  bool factorizable = is_factorizable(state, tol);

  Document doc;
  doc.command = "factorizable";
  doc.params = {{"amplitudes", amplitudes},
                {"tol", tol},
                {"auto_normalize", auto_normalize},
                {"format", format}};

  std::vector<std::string> amps_text;
  ordered_json amps_json = ordered_json::array();
  for (Complex a : amps) {
    amps_text.push_back(fmt_complex(a));
    amps_json.push_back(complex_json(a));
  }

  std::ostringstream text;
  text << "factorizability test (tol " << fmt_double(tol) << ")\n"
       << "amplitudes: (" << join(amps_text, ", ") << ")\n"
       << "determinant: " << fmt_complex(determinant) << " (magnitude "
       << fmt_double(std::abs(determinant)) << ")\n"
       << "verdict: " << (factorizable ? "FACTORIZABLE" : "NOT-FACTORIZABLE")
       << '\n';

  std::ostringstream csv;
  csv << "a00,a01,a10,a11,determinant,magnitude,tol,factorizable\n";
  for (Complex a : amps) csv << fmt_complex_token(a) << ',';
  csv << fmt_complex_token(determinant) << ','
      << fmt_double(std::abs(determinant)) << ',' << fmt_double(tol) << ','
      << (factorizable ? "true" : "false") << '\n';

  doc.result = {{"amplitudes", amps_json},
                {"determinant", complex_json(determinant)},
                {"magnitude", std::abs(determinant)},
                {"tol", tol},
                {"factorizable", factorizable}};
  doc.text = text.str();
  doc.csv = csv.str();
  return doc;
}

Document cmd_is_equipartition(const std::string& classes_spec,
                              const std::string& format) {
  BasisPartition partition =
      basis_partition_from_classes(parse_classes(classes_spec));
  bool equi = is_equi_partition(partition);

  Document doc;
  doc.command = "is-equipartition";
  doc.params = {{"classes", classes_spec}, {"format", format}};

  std::vector<std::size_t> sizes;
  std::vector<std::string> sizes_text;
  ordered_json classes_json = ordered_json::array();
  for (const auto& cls : partition.classes) {
    sizes.push_back(cls.size());
    sizes_text.push_back(std::to_string(cls.size()));
    std::vector<std::string> labels;
    for (const BitString& label : cls) labels.push_back(label.str());
    classes_json.push_back(labels);
  }

  std::ostringstream text;
  text << "partition check over a universe of " << partition.universe_size
       << " labels\n"
       << "classes: " << partition.classes.size() << " (sizes: "
       << join(sizes_text, ", ") << ")\n"
       << "equi-partition: " << (equi ? "yes" : "no") << '\n';

  std::ostringstream csv;
  csv << "num_classes,universe_size,class_sizes,equi\n";
  csv << partition.classes.size() << ',' << partition.universe_size << ','
      << join(sizes_text, " ") << ',' << (equi ? "true" : "false") << '\n';

  doc.result = {{"classes", classes_json},
                {"class_sizes", sizes},
                {"universe_size", partition.universe_size},
                {"equi", equi}};
  doc.text = text.str();
  doc.csv = csv.str();
  return doc;
}

std::string render(const Document& doc, const std::string& format) {
  if (format == "json") {
    ordered_json payload = {{"command", doc.command},
                            {"params", doc.params},
                            {"result", doc.result}};
    return payload.dump(2) + "\n";
  }
  if (format == "csv") return doc.csv;
  return doc.text;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Parity partitions of qubit bases, parity observables, "
               "Boolean function tables, and exact single-query "
               "separability analysis."};
  app.require_subcommand(1);

  std::string format = "text";
  std::string output_path;
  double tol = 1e-9;
  app.add_option("--format", format, "output format")
      ->check(CLI::IsMember({"text", "csv", "json"}))
      ->capture_default_str();
  app.add_option("--output", output_path,
                 "write the result to a file instead of stdout");
  app.add_option("--tol", tol, "tolerance for floating point verdicts")
      ->capture_default_str();

  int partition_qubits = 0;
  auto* partition_cmd = app.add_subcommand(
      "parity-partition", "basis labels grouped by popcount parity");
  partition_cmd->add_option("--qubits", partition_qubits, "register size")
      ->required()
      ->check(CLI::NonNegativeNumber);
  partition_cmd->fallthrough();

  int observable_qubits = 0;
  auto* observable_cmd = app.add_subcommand(
      "parity-observable",
      "spectral decomposition of the parity observable (diagonals printed)");
  observable_cmd->add_option("--qubits", observable_qubits, "register size")
      ->required()
      ->check(CLI::Range(1, 10));
  observable_cmd->fallthrough();

  int table_n = 0;
  std::string table_order = "grouped";
  auto* table_cmd = app.add_subcommand(
      "function-table", "all n-bit Boolean functions with parity and "
                        "+/-1 sign rows");
  table_cmd->add_option("--n", table_n, "function arity")
      ->required()
      ->check(CLI::NonNegativeNumber);
  table_cmd->add_option("--order", table_order, "row order")
      ->check(CLI::IsMember({"grouped", "canonical"}))
      ->capture_default_str();
  table_cmd->fallthrough();

  int span_n = 0;
  int span_ancillas = 0;
  auto* span_cmd = app.add_subcommand(
      "span-analysis", "exact ranks and orthogonality verdict of the two "
                       "parity classes' sign vectors");
  span_cmd->add_option("--n", span_n, "function arity")
      ->required()
      ->check(CLI::NonNegativeNumber);
  span_cmd
      ->add_option("--ancillas", span_ancillas,
                   "uniform all-(+1) ancilla extension count")
      ->check(CLI::NonNegativeNumber)
      ->capture_default_str();
  span_cmd->fallthrough();

  std::string oracle_table;
  auto* oracle_cmd = app.add_subcommand(
      "oracle", "permutation unitary |x>|y> -> |x>|y xor f(x)>");
  oracle_cmd
      ->add_option("table", oracle_table,
                   "truth table bits, f(0...0) first (e.g. 0110)")
      ->required();
  oracle_cmd->fallthrough();

  std::string deutsch_table;
  auto* deutsch_cmd = app.add_subcommand(
      "deutsch", "single-query parity circuit for a 1-bit function");
  deutsch_cmd
      ->add_option("table", deutsch_table, "two truth table bits f(0)f(1)")
      ->required();
  deutsch_cmd->fallthrough();

  std::string factorizable_amps;
  bool auto_normalize = false;
  auto* factorizable_cmd = app.add_subcommand(
      "factorizable", "two-qubit amplitude determinant a00*a11 - a01*a10");
  factorizable_cmd
      ->add_option("amplitudes", factorizable_amps,
                   "four comma-separated amplitudes, 'a+bi' tokens allowed")
      ->required();
  factorizable_cmd->add_flag("--auto-normalize", auto_normalize,
                             "rescale the input to unit norm first");
  factorizable_cmd->fallthrough();

  std::string equipartition_classes;
  auto* equipartition_cmd = app.add_subcommand(
      "is-equipartition", "check a basis partition for equal class sizes");
  equipartition_cmd
      ->add_option("classes", equipartition_classes,
                   "classes of comma-separated labels, separated by ';' "
                   "(e.g. \"00,11;01,10\")")
      ->required();
  equipartition_cmd->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    Document doc;
    if (partition_cmd->parsed()) {
      doc = cmd_parity_partition(static_cast<std::size_t>(partition_qubits),
                                 format);
    } else if (observable_cmd->parsed()) {
      doc = cmd_parity_observable(static_cast<std::size_t>(observable_qubits),
                                  format);
    } else if (table_cmd->parsed()) {
      doc = cmd_function_table(static_cast<std::size_t>(table_n), table_order,
                               format);
    } else if (span_cmd->parsed()) {
      doc = cmd_span_analysis(static_cast<std::size_t>(span_n),
                              static_cast<std::size_t>(span_ancillas), format);
    } else if (oracle_cmd->parsed()) {
      doc = cmd_oracle(oracle_table, format);
    } else if (deutsch_cmd->parsed()) {
      doc = cmd_deutsch(deutsch_table, format);
    } else if (factorizable_cmd->parsed()) {
      doc = cmd_factorizable(factorizable_amps, tol, auto_normalize, format);
    } else {
      doc = cmd_is_equipartition(equipartition_classes, format);
    }

    std::string payload = render(doc, format);
    if (!output_path.empty()) {
      std::ofstream file(output_path, std::ios::binary);
      if (!file) {
        err << "error: cannot open output file '" << output_path << "'\n";
        return 2;
      }
      file << payload;
    } else {
      out << payload;
    }
    return 0;
  } catch (const SizeLimitExceeded& e) {
    err << "error: " << e.what() << '\n';
    return 3;
  } catch (const qparity::Error& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }
}

}  // namespace qparity::cli
