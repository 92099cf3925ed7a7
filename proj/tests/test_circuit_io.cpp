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

#include <doctest.h>
#include <json.hpp>
#include <random>

#include "csdsynth/circuit_io.hpp"
#include "csdsynth/errors.hpp"

using namespace csdsynth;

namespace {

Circuit random_circuit(std::mt19937_64 &rng, unsigned n, std::size_t count) {
  std::uniform_int_distribution<unsigned> qubit(1, n), kind(0, 2);
  std::uniform_real_distribution<double> angle(-10, 10);
  Circuit c(n);
  c.add(GlobalPhase{angle(rng)});
  while (c.size() < count) {
    const unsigned a = qubit(rng), b = qubit(rng);
    switch (kind(rng)) {
      case 0:
        if (a != b) c.add(Cnot{a, b});
        break;
      case 1:
        c.add(Rot{Axis::Y, a, angle(rng)});
        break;
      default:
        c.add(Rot{Axis::Z, a, angle(rng) * 1e-9});
    }
  }
  return c;
}

}  // namespace

TEST_CASE("qasm emission grammar") {
  const Circuit c(3, {Rot{Axis::Z, 2, 0.5}, Cnot{1, 3}, Rot{Axis::Y, 3, -0.25}, GlobalPhase{1.5}});
  CHECK(emit_circuit(c, CircuitFormat::Qasm) ==
        "qubits 3\n"
        "rz(0.5) q[1];\n"
        "cx q[0], q[2];\n"
        "ry(-0.25) q[2];\n"
        "gphase(1.5);\n");
}

TEST_CASE("json emission uses 0-based wires") {
  const Circuit c(2, {Cnot{2, 1}, Rot{Axis::Y, 1, 0.5}, GlobalPhase{-1}});
  const std::string text = emit_circuit(c, CircuitFormat::Json);
  const auto doc = nlohmann::json::parse(text);
  CHECK(doc["n"] == 2);
  CHECK(doc["gates"][0]["kind"] == "cx");
  CHECK(doc["gates"][0]["control"] == 1);
  CHECK(doc["gates"][0]["target"] == 0);
  CHECK(doc["gates"][1]["qubit"] == 0);
  CHECK(doc["gates"][2]["kind"] == "gphase");
}

TEST_CASE("round trip is exact in both formats") {
  std::mt19937_64 rng(99);
  for (auto format : {CircuitFormat::Qasm, CircuitFormat::Json}) {
    for (int trial = 0; trial < 20; ++trial) {
      const Circuit c = random_circuit(rng, 5, 200);
      const std::string text = emit_circuit(c, format);
      CHECK(detect_circuit_format(text) == format);
      const Circuit back = parse_circuit(text, format);
      REQUIRE(back == c);
      CHECK(emit_circuit(back, format) == text);
    }
  }
}

TEST_CASE("qasm parser accepts comments and whitespace") {
  const Circuit c = parse_circuit(
      "# header comment\n"
      "qubits 2   # two wires\n"
      "\n"
      "  cx q[0] ,q[1] ;\n"
      "ry( 1e-3 ) q[1];# trailing\n",
      CircuitFormat::Qasm);
  CHECK(c == Circuit(2, {Cnot{1, 2}, Rot{Axis::Y, 2, 1e-3}}));
}

TEST_CASE("qasm parser errors") {
  auto parse = [](const char *s) { return parse_circuit(s, CircuitFormat::Qasm); };
  try {
    parse("qubits 2\nry(0.1 q[0];\n");
    FAIL("expected SyntaxError");
  } catch (const SyntaxError &e) {
    CHECK(e.line() == 2);
    CHECK(e.column() == 8);
  }
  CHECK_THROWS_AS(parse("ry(0.1) q[0];\n"), SyntaxError);
  CHECK_THROWS_AS(parse(""), SyntaxError);
  CHECK_THROWS_AS(parse("qubits 2\nh q[0];\n"), UnknownGate);
  CHECK_THROWS_AS(parse("qubits 2\ncx q[0], q[2];\n"), IndexOutOfRange);
  CHECK_THROWS_AS(parse("qubits 2\nrz(nan) q[0];\n"), SyntaxError);
  CHECK_THROWS_AS(parse("qubits 2\nrz(1) q[0]; extra\n"), SyntaxError);
}

TEST_CASE("json parser errors") {
  auto parse = [](const char *s) { return parse_circuit(s, CircuitFormat::Json); };
  CHECK_THROWS_AS(parse("{"), SyntaxError);
  CHECK_THROWS_AS(parse(R"({"n": 2})"), SyntaxError);
  CHECK_THROWS_AS(parse(R"({"n": 2, "gates": [{"kind": "h", "qubit": 0}]})"), UnknownGate);
  CHECK_THROWS_AS(parse(R"({"n": 2, "gates": [{"kind": "ry", "qubit": 2, "angle": 0}]})"), IndexOutOfRange);
  CHECK_THROWS_AS(parse(R"({"n": 2, "gates": [{"kind": "cx", "control": -1, "target": 0}]})"), IndexOutOfRange);
}
