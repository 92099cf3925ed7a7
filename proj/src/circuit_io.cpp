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

#include "csdsynth/circuit_io.hpp"

#include <cctype>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <json.hpp>
#include <optional>
#include <sstream>

#include "csdsynth/errors.hpp"

namespace csdsynth {

using json = nlohmann::json;

std::string format_real(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

namespace {

const char *axis_name(Axis a) { return a == Axis::Y ? "ry" : "rz"; }

std::string emit_qasm(const Circuit &c) {
  std::string out = "qubits " + std::to_string(c.num_qubits()) + "\n";
  for (const auto &g : c.gates()) {
    if (const auto *x = std::get_if<Cnot>(&g)) {
      out += "cx q[" + std::to_string(x->control - 1) + "], q[" +
             std::to_string(x->target - 1) + "];\n";
    } else if (const auto *r = std::get_if<Rot>(&g)) {
      out += std::string(axis_name(r->axis)) + "(" + format_real(r->angle) +
             ") q[" + std::to_string(r->qubit - 1) + "];\n";
    } else {
      out += "gphase(" + format_real(std::get<GlobalPhase>(g).angle) + ");\n";
    }
  }
  return out;
}

std::string emit_json(const Circuit &c) {
  json gates = json::array();
  for (const auto &g : c.gates()) {
    if (const auto *x = std::get_if<Cnot>(&g)) {
      gates.push_back(
          {{"kind", "cx"}, {"control", x->control - 1},
           {"target", x->target - 1}});
    } else if (const auto *r = std::get_if<Rot>(&g)) {
      gates.push_back(
          {{"kind", axis_name(r->axis)}, {"qubit", r->qubit - 1},
           {"angle", r->angle}});
    } else {
      gates.push_back(
          {{"kind", "gphase"}, {"angle", std::get<GlobalPhase>(g).angle}});
    }
  }
  json doc = {{"n", c.num_qubits()}, {"gates", std::move(gates)}};
  return doc.dump(2) + "\n";
}

// Cursor over one line of qasm-like text.
class LineScanner {
 public:
  LineScanner(std::string_view line, std::size_t line_no)
      : s_(line), line_(line_no) {}

  void skip_space() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_])))
      ++pos_;
  }
  bool at_end() {
    skip_space();
    return pos_ >= s_.size();
  }
  [[noreturn]] void fail(const std::string &what) const {
    throw SyntaxError(line_, pos_ + 1, what);
  }
  std::string_view word() {
    skip_space();
    const std::size_t start = pos_;
    while (pos_ < s_.size() &&
           (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_'))
      ++pos_;
    if (start == pos_) fail("expected identifier");
    return s_.substr(start, pos_ - start);
  }
  void expect(char ch) {
    skip_space();
    if (pos_ >= s_.size() || s_[pos_] != ch) {
      fail(std::string("expected '") + ch + "'");
    }
    ++pos_;
  }
  double real() {
    skip_space();
    const std::string rest(s_.substr(pos_));
    char *end = nullptr;
    const double v = std::strtod(rest.c_str(), &end);
    if (end == rest.c_str() || !std::isfinite(v)) fail("expected real number");
    pos_ += static_cast<std::size_t>(end - rest.c_str());
    return v;
  }
  unsigned long integer() {
    skip_space();
    const std::size_t start = pos_;
    unsigned long v = 0;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
      v = v * 10 + static_cast<unsigned long>(s_[pos_] - '0');
      if (v > 1u << 20) fail("integer too large");
      ++pos_;
    }
    if (start == pos_) fail("expected integer");
    return v;
  }
  unsigned wire() {
    skip_space();
    if (word() != "q") fail("expected register 'q'");
    expect('[');
    const auto w = integer();
    expect(']');
    return static_cast<unsigned>(w) + 1;
  }

 private:
  std::string_view s_;
  std::size_t line_;
  std::size_t pos_ = 0;
};

Circuit parse_qasm(std::string_view text) {
  std::optional<Circuit> circuit;
  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t stop = text.find('\n', start);
    if (stop == std::string_view::npos) stop = text.size();
    std::string_view line = text.substr(start, stop - start);
    start = stop + 1;
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) {
      line = line.substr(0, hash);
    }
    LineScanner sc(line, line_no);
    if (sc.at_end()) continue;
    const std::string name(sc.word());
    if (!circuit) {
      if (name != "qubits") sc.fail("expected 'qubits <n>' header");
      const auto n = sc.integer();
      if (n < 1 || n > 30) throw IndexOutOfRange("qubit count out of range");
      if (!sc.at_end()) sc.fail("trailing characters after header");
      circuit.emplace(static_cast<unsigned>(n));
      continue;
    }
    Gate gate;
    if (name == "cx") {
      const unsigned control = sc.wire();
      sc.expect(',');
      const unsigned target = sc.wire();
      gate = Cnot{control, target};
    } else if (name == "ry" || name == "rz") {
      sc.expect('(');
      const double angle = sc.real();
      sc.expect(')');
      gate = Rot{name == "ry" ? Axis::Y : Axis::Z, sc.wire(), angle};
    } else if (name == "gphase") {
      sc.expect('(');
      const double angle = sc.real();
      sc.expect(')');
      gate = GlobalPhase{angle};
    } else {
      throw UnknownGate("unknown gate '" + name + "' on line " +
                        std::to_string(line_no));
    }
    sc.expect(';');
    if (!sc.at_end()) sc.fail("trailing characters after gate");
    circuit->add(gate);
  }
  if (!circuit) throw SyntaxError(line_no, 1, "missing 'qubits' header");
  return *std::move(circuit);
}

unsigned json_wire(const json &g, const char *key) {
  const auto &v = g.at(key);
  if (!v.is_number_integer() || v.get<long long>() < 0) {
    throw IndexOutOfRange(std::string("bad wire index for '") + key + "'");
  }
  return static_cast<unsigned>(v.get<long long>()) + 1;
}

Circuit parse_json(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error &e) {
    throw SyntaxError(1, e.byte, e.what());
  }
  try {
    const auto n = doc.at("n").get<long long>();
    if (n < 1 || n > 30) throw IndexOutOfRange("qubit count out of range");
    Circuit c(static_cast<unsigned>(n));
    for (const auto &g : doc.at("gates")) {
      const auto kind = g.at("kind").get<std::string>();
      if (kind == "cx") {
        c.add(Cnot{json_wire(g, "control"), json_wire(g, "target")});
      } else if (kind == "ry" || kind == "rz") {
        c.add(Rot{kind == "ry" ? Axis::Y : Axis::Z, json_wire(g, "qubit"),
                  g.at("angle").get<double>()});
      } else if (kind == "gphase") {
        c.add(GlobalPhase{g.at("angle").get<double>()});
      } else {
        throw UnknownGate("unknown gate kind '" + kind + "'");
      }
    }
    return c;
  } catch (const json::exception &e) {
    throw SyntaxError(1, 1, e.what());
  }
}

}  // namespace

std::string emit_circuit(const Circuit &c, CircuitFormat format) {
  return format == CircuitFormat::Json ? emit_json(c) : emit_qasm(c);
}

Circuit parse_circuit(std::string_view text, CircuitFormat format) {
  return format == CircuitFormat::Json ? parse_json(text) : parse_qasm(text);
}

CircuitFormat detect_circuit_format(std::string_view text) {
  for (char ch : text) {
    if (std::isspace(static_cast<unsigned char>(ch))) continue;
    return ch == '{' ? CircuitFormat::Json : CircuitFormat::Qasm;
  }
  return CircuitFormat::Qasm;
}

}  // namespace csdsynth
