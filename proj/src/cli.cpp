// Copyright 2026 The csdsynth Authors
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

#include "csdsynth/cli.hpp"

#include <CLI11.hpp>
#include <chrono>
#include <cmath>
#include <fstream>
#include <iostream>
#include <sstream>

#include "csdsynth/circuit_io.hpp"
#include "csdsynth/errors.hpp"
#include "csdsynth/matrix_io.hpp"
#include "csdsynth/synth.hpp"

namespace csdsynth {

namespace {

class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string read_input(const std::string &path) {
  if (path == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_output(const std::string &path, const std::string &text, std::ostream &out) {
  if (path.empty() || path == "-") {
    out << text;
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) throw InputError("cannot write '" + path + "'");
  f << text;
}

struct SynthArgs {
  std::string input;
  std::string out;
  std::string format = "qasm";
  double tol = 1e-8;
  bool no_mirror = false;
  bool prune_zero = false;
  bool no_verify = false;
  bool diagonal = false;
};

int cmd_synth(const SynthArgs &a, std::ostream &out, std::ostream &err) {
  const std::string text = read_input(a.input);
  SynthesisOptions options;
  options.mirror = !a.no_mirror;
  options.prune_zero = a.prune_zero;
  options.verify = !a.no_verify;

  SynthesisResult result{Circuit(1), {}};
  if (a.diagonal) {
    std::vector<double> phases;
    if (is_phase_list(text)) {
      phases = parse_phase_list(text);
    } else {
      phases = diagonal_phases(
          parse_matrix(text, detect_matrix_format(text)), kDefaultUnitarityTol);
    }
    result = synthesize_diagonal(phases, options);
  } else {
    const ComplexMatrix m = parse_matrix(text, detect_matrix_format(text));
    result = synthesize(validate_unitary(m), options);
  }

  const auto format =
      a.format == "json" ? CircuitFormat::Json : CircuitFormat::Qasm;
  write_output(a.out, emit_circuit(result.circuit, format), out);

  const SynthesisReport &r = result.report;
  std::ostream &report = a.out.empty() || a.out == "-" ? err : out;
  report << "n=" << result.circuit.num_qubits() << "\n"
         << "cnot=" << r.counts.cnot << "\n"
         << "one_qubit=" << r.counts.one_qubit << "\n"
         << "expected_cnot=" << r.expected_cnot << "\n"
         << "expected_one_qubit=" << r.expected_one_qubit << "\n"
         << "lower_bound=" << r.lower_bound_cnot << "\n"
         << "frobenius_error="
         << (std::isnan(r.reconstruction_error)
                 ? std::string("skipped")
                 : format_real(r.reconstruction_error))
         << "\n"
         << "elapsed_ms="
         << std::chrono::duration<double, std::milli>(r.elapsed).count()
         << "\n";
  if (!std::isnan(r.reconstruction_error) && !(r.reconstruction_error <= a.tol)) {
    err << "verification failed: frobenius_error exceeds " << a.tol << "\n";
    return kExitVerification;
  }
  return kExitOk;
}

int cmd_random(unsigned n, std::uint64_t seed, const std::string &path, std::ostream &out) {
  if (n < 1 || n > 10) throw InputError("random: n must be in 1..10");
  write_output(
      path, emit_matrix(haar_random_unitary(n, seed).matrix(), MatrixFormat::Text),
      out);
  return kExitOk;
}

int cmd_verify(
    const std::string &circuit_path, const std::string &matrix_path,
    double tol, std::ostream &out) {
  const std::string ctext = read_input(circuit_path);
  const Circuit c = parse_circuit(ctext, detect_circuit_format(ctext));
  const std::string mtext = read_input(matrix_path);
  const ComplexMatrix m = parse_matrix(mtext, detect_matrix_format(mtext));
  if (m.rows() != (std::size_t{1} << c.num_qubits()) || !m.is_square()) {
    out << "width mismatch: circuit has " << c.num_qubits()
        << " qubits, matrix is " << m.rows() << "x" << m.cols() << "\n";
    return kExitWidthMismatch;
  }
  auto product = ComplexMatrix::identity(m.rows());
  apply_circuit(c, product);
  const double error = frobenius_distance(product, m);
  out << "frobenius_error=" << format_real(error) << "\n";
  const bool ok = error <= tol;
  out << "result=" << (ok ? "pass" : "fail") << "\n";
  return ok ? kExitOk : kExitVerification;
}

int cmd_counts(unsigned from, unsigned to, std::ostream &out) {
  if (from < 1 || to > 31 || to < from) throw InputError("counts: bad range");
  out << "n expected_cnot expected_one_qubit lower_bound\n";
  for (unsigned n = from; n <= to; ++n) {
    out << n << " " << expected_cnot_count(n) << " "
        << expected_one_qubit_count(n) << " " << cnot_lower_bound(n) << "\n";
  }
  return kExitOk;
}

}  // namespace

int run_cli(
    const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
  CLI::App app{"Quantum circuit synthesis by recursive cosine-sine decomposition", "csdsynth"};
  app.require_subcommand(1);

  SynthArgs sa;
  auto *synth = app.add_subcommand("synth", "Synthesize a circuit for a unitary");
  synth->add_option("matrix", sa.input, "Matrix file ('-' for stdin)")->required();
  synth->add_option("--out", sa.out, "Circuit output path (default stdout)");
  synth->add_option("--format", sa.format, "Circuit format")
      ->check(CLI::IsMember({"qasm", "json"}));
  synth->add_option("--tol", sa.tol, "Verification tolerance (Frobenius)");
  synth->add_flag("--no-mirror", sa.no_mirror, "Disable mirrored CNOT cancellation");
  synth->add_flag("--prune-zero", sa.prune_zero, "Drop rotations with |angle| < 1e-12");
  synth->add_flag("--no-verify", sa.no_verify, "Skip the reconstruction check");
  synth->add_flag("--diagonal", sa.diagonal,
                  "Input is a diagonal unitary or a 'phases' list");

  unsigned random_n = 0;
  std::uint64_t seed = 0;
  std::string random_out;
  auto *random = app.add_subcommand("random", "Print a Haar-random unitary");
  random->add_option("n", random_n, "Qubit count")->required();
  random->add_option("--seed", seed, "RNG seed");
  random->add_option("--out", random_out, "Output path (default stdout)");

  std::string verify_circuit, verify_matrix;
  double verify_tol = 1e-8;
  auto *verify = app.add_subcommand("verify", "Compare a circuit with a matrix");
  verify->add_option("circuit", verify_circuit, "Circuit file")->required();
  verify->add_option("matrix", verify_matrix, "Matrix file")->required();
  verify->add_option("--tol", verify_tol, "Tolerance (Frobenius)");

  unsigned counts_n = 0, counts_to = 0;
  auto *counts = app.add_subcommand("counts", "Print expected gate counts");
  counts->add_option("n", counts_n, "Qubit count")->required();
  counts->add_option("--to", counts_to, "Print rows n..to");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp &e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError &e) {
    app.exit(e, out, err);
    return kExitParse;
  }

  try {
    if (*synth) return cmd_synth(sa, out, err);
    if (*random) return cmd_random(random_n, seed, random_out, out);
    if (*verify) return cmd_verify(verify_circuit, verify_matrix, verify_tol, out);
    if (*counts) return cmd_counts(counts_n, counts_to == 0 ? counts_n : counts_to, out);
  } catch (const NotUnitary &e) {
    err << "error: " << e.what() << "\n";
    return kExitNotUnitary;
  } catch (const SyntaxError &e) {
    err << "error: " << e.what() << "\n";
    return kExitParse;
  } catch (const UnknownGate &e) {
    err << "error: " << e.what() << "\n";
    return kExitParse;
  } catch (const IndexOutOfRange &e) {
    err << "error: " << e.what() << "\n";
    return kExitParse;
  } catch (const NotSquare &e) {
    err << "error: " << e.what() << "\n";
    return kExitParse;
  } catch (const NotPowerOfTwo &e) {
    err << "error: " << e.what() << "\n";
    return kExitParse;
  } catch (const InputError &e) {
    err << "error: " << e.what() << "\n";
    return kExitParse;
  } catch (const Error &e) {
    err << "error: " << e.what() << "\n";
    return kExitVerification;
  }
  return kExitUsage;
}

}  // namespace csdsynth
