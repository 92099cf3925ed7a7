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

#include "csdsynth/matrix_io.hpp"

#include <cctype>
#include <cmath>
#include <cstdlib>
#include <json.hpp>

#include "csdsynth/circuit_io.hpp"
#include "csdsynth/errors.hpp"

namespace csdsynth {

using json = nlohmann::json;

namespace {

struct Token {
  std::string_view text;
  std::size_t line;
  std::size_t column;
};

// Splits text into lines of whitespace separated tokens, dropping comments
// and blank lines.
std::vector<std::vector<Token>> tokenize(std::string_view text) {
  std::vector<std::vector<Token>> lines;
  std::size_t line_no = 0, start = 0;
  while (start <= text.size()) {
    std::size_t stop = text.find('\n', start);
    if (stop == std::string_view::npos) stop = text.size();
    std::string_view line = text.substr(start, stop - start);
    start = stop + 1;
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) {
      line = line.substr(0, hash);
    }
    std::vector<Token> tokens;
    std::size_t i = 0;
    while (i < line.size()) {
      if (std::isspace(static_cast<unsigned char>(line[i]))) {
        ++i;
        continue;
      }
      const std::size_t b = i;
      while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i])))
        ++i;
      tokens.push_back({line.substr(b, i - b), line_no, b + 1});
    }
    if (!tokens.empty()) lines.push_back(std::move(tokens));
  }
  return lines;
}

double parse_real(std::string_view s, const Token &at) {
  const std::string buf(s);
  char *end = nullptr;
  const double v = std::strtod(buf.c_str(), &end);
  if (buf.empty() || end != buf.c_str() + buf.size() || !std::isfinite(v)) {
    throw SyntaxError(at.line, at.column, "bad real '" + buf + "'");
  }
  return v;
}

std::size_t parse_count(const Token &t) {
  const std::string buf(t.text);
  char *end = nullptr;
  const unsigned long v = std::strtoul(buf.c_str(), &end, 10);
  if (buf.empty() || end != buf.c_str() + buf.size() || v < 1 || v > 4096) {
    throw SyntaxError(t.line, t.column, "bad size '" + buf + "'");
  }
  return v;
}

std::size_t read_header(
    const std::vector<std::vector<Token>> &lines, std::string_view keyword) {
  if (lines.empty()) throw SyntaxError(1, 1, "empty input");
  const auto &h = lines.front();
  if (h.size() != 2 || h[0].text != keyword) {
    throw SyntaxError(
        h[0].line, h[0].column,
        "expected '" + std::string(keyword) + " <size>' header");
  }
  return parse_count(h[1]);
}

ComplexMatrix parse_text(std::string_view text) {
  const auto lines = tokenize(text);
  const std::size_t dim = read_header(lines, "dim");
  if (lines.size() != dim + 1) {
    const auto &last = lines.back().back();
    throw SyntaxError(
        last.line, last.column,
        "expected " + std::to_string(dim) + " matrix rows, found " +
            std::to_string(lines.size() - 1));
  }
  ComplexMatrix m(dim, dim);
  for (std::size_t r = 0; r < dim; ++r) {
    const auto &row = lines[r + 1];
    if (row.size() != dim) {
      throw SyntaxError(
          row.front().line, row.front().column,
          "expected " + std::to_string(dim) + " entries in row");
    }
    for (std::size_t c = 0; c < dim; ++c) {
      const Token &t = row[c];
      const auto comma = t.text.find(',');
      if (comma == std::string_view::npos) {
        throw SyntaxError(t.line, t.column, "entry must be 're,im'");
      }
      m(r, c) = {parse_real(t.text.substr(0, comma), t),
                 parse_real(t.text.substr(comma + 1), t)};
    }
  }
  return m;
}

ComplexMatrix parse_json(std::string_view text) {
  try {
    const json doc = json::parse(text);
    const auto dim = doc.at("dim").get<std::size_t>();
    const auto &re = doc.at("re");
    const auto &im = doc.at("im");
    if (dim < 1 || re.size() != dim || im.size() != dim) {
      throw SyntaxError(1, 1, "re/im do not have dim rows");
    }
    ComplexMatrix m(dim, dim);
    for (std::size_t r = 0; r < dim; ++r) {
      if (re[r].size() != dim || im[r].size() != dim) {
        throw SyntaxError(1, 1, "row " + std::to_string(r) + " has wrong length");
      }
      for (std::size_t c = 0; c < dim; ++c) {
        m(r, c) = {re[r][c].get<double>(), im[r][c].get<double>()};
      }
    }
    return m;
  } catch (const json::parse_error &e) {
    throw SyntaxError(1, e.byte, e.what());
  } catch (const json::exception &e) {
    throw SyntaxError(1, 1, e.what());
  }
}

}  // namespace

std::string emit_matrix(const ComplexMatrix &m, MatrixFormat format) {
  if (format == MatrixFormat::Json) {
    json re = json::array(), im = json::array();
    for (std::size_t r = 0; r < m.rows(); ++r) {
      json rr = json::array(), ir = json::array();
      for (std::size_t c = 0; c < m.cols(); ++c) {
        rr.push_back(m(r, c).real());
        ir.push_back(m(r, c).imag());
      }
      re.push_back(std::move(rr));
      im.push_back(std::move(ir));
    }
    json doc = {{"dim", m.rows()}, {"re", std::move(re)}, {"im", std::move(im)}};
    return doc.dump() + "\n";
  }
  std::string out = "dim " + std::to_string(m.rows()) + "\n";
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) {
      if (c > 0) out += ' ';
      out += format_real(m(r, c).real());
      out += ',';
      out += format_real(m(r, c).imag());
    }
    out += '\n';
  }
  return out;
}

ComplexMatrix parse_matrix(std::string_view text, MatrixFormat format) {
  return format == MatrixFormat::Json ? parse_json(text) : parse_text(text);
}

MatrixFormat detect_matrix_format(std::string_view text) {
  for (char ch : text) {
    if (std::isspace(static_cast<unsigned char>(ch))) continue;
    return ch == '{' ? MatrixFormat::Json : MatrixFormat::Text;
  }
  return MatrixFormat::Text;
}

bool is_phase_list(std::string_view text) {
  const auto lines = tokenize(text);
  return !lines.empty() && lines.front().front().text == "phases";
}

std::vector<double> parse_phase_list(std::string_view text) {
  const auto lines = tokenize(text);
  const std::size_t count = read_header(lines, "phases");
  std::vector<double> out;
  for (std::size_t l = 1; l < lines.size(); ++l) {
    for (const auto &t : lines[l]) out.push_back(parse_real(t.text, t));
  }
  if (out.size() != count) {
    throw SyntaxError(
        lines.back().back().line, 1,
        "expected " + std::to_string(count) + " phases, found " +
            std::to_string(out.size()));
  }
  return out;
}

std::string emit_phase_list(std::span<const double> phases) {
  std::string out = "phases " + std::to_string(phases.size()) + "\n";
  for (double p : phases) out += format_real(p) + "\n";
  return out;
}

std::vector<double> diagonal_phases(const ComplexMatrix &m, double tol) {
  if (!m.is_square()) throw NotSquare("diagonal input must be square");
  double worst = 0;
  std::vector<double> out(m.rows());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) {
      if (r == c) {
        worst = std::max(worst, std::abs(std::abs(m(r, c)) - 1.0));
        out[r] = std::arg(m(r, c));
      } else {
        worst = std::max(worst, std::abs(m(r, c)));
      }
    }
  }
  if (!(worst <= tol)) throw NotUnitary(worst);
  return out;
}

}  // namespace csdsynth
