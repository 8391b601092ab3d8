// Copyright 2026 The sft Authors.
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

#include "sft/io.hpp"

#include <cctype>
#include <fstream>
#include <limits>
#include <sstream>
#include <variant>
#include <vector>

namespace sft {

FormatError::FormatError(const std::string& what, std::size_t line,
                         std::size_t column)
    : std::runtime_error(line == 0 ? what
                                   : "line " + std::to_string(line) + ", column " +
                                         std::to_string(column) + ": " + what),
      line_(line),
      column_(column) {}

namespace {

struct Token {
  std::string_view text;
  std::size_t column;  // 1-based
};

std::vector<Token> tokenize(std::string_view line) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    if (i == line.size()) break;
    const std::size_t start = i;
    while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    out.push_back({line.substr(start, i - start), start + 1});
  }
  return out;
}

bool is_integer_token(std::string_view t) {
  std::size_t i = (!t.empty() && (t[0] == '-' || t[0] == '+')) ? 1 : 0;
  if (i == t.size()) return false;
  for (; i < t.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(t[i]))) return false;
  return true;
}

Integer to_integer(const Token& t, std::size_t line) {
  if (!is_integer_token(t.text)) {
    throw FormatError("not an integer: '" + std::string(t.text) + "'", line,
                      t.column);
  }
  std::string s(t.text);
  if (s[0] == '+') s.erase(0, 1);
  return Integer(s);
}

std::size_t to_dimension(const Token& t, std::size_t line) {
  const Integer v = to_integer(t, line);
  if (v < 1 || v > 100000) {
    throw FormatError("matrix dimension must be a positive integer", line,
                      t.column);
  }
  return static_cast<std::size_t>(v);
}

}  // namespace

IntMatrix parse_matrix(std::string_view text) {
  std::size_t line_no = 0;
  std::size_t pos = 0;
  std::size_t rows = 0, cols = 0;
  bool have_header = false;
  std::vector<IntVector> data;
  std::size_t last_line = 0;

  while (pos <= text.size()) {
    const std::size_t end = std::min(text.find('\n', pos), text.size());
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    const auto tokens = tokenize(line);
    if (tokens.empty() || tokens.front().text.front() == '#') {
      if (end == text.size()) break;
      continue;
    }
    last_line = line_no;
    if (!have_header) {
      if (tokens.size() != 2) {
        throw FormatError("header must be 'rows cols'", line_no,
                          tokens.front().column);
      }
      rows = to_dimension(tokens[0], line_no);
      cols = to_dimension(tokens[1], line_no);
      have_header = true;
    } else {
      if (data.size() == rows) {
        throw FormatError("more than " + std::to_string(rows) + " rows",
                          line_no, tokens.front().column);
      }
      if (tokens.size() != cols) {
        const std::size_t col = tokens.size() > cols
                                    ? tokens[cols].column
                                    : line.size() + 1;
        throw FormatError("wrong entry count: expected " +
                              std::to_string(cols) + ", found " +
                              std::to_string(tokens.size()),
                          line_no, col);
      }
      IntVector row;
      for (const Token& t : tokens) row.push_back(to_integer(t, line_no));
      data.push_back(std::move(row));
    }
    if (end == text.size()) break;
  }
  if (!have_header) throw FormatError("missing 'rows cols' header", line_no, 1);
  if (data.size() != rows) {
    throw FormatError("wrong entry count: expected " + std::to_string(rows) +
                          " rows, found " + std::to_string(data.size()),
                      last_line + 1, 1);
  }
  return IntMatrix::from_rows(data);
}

std::string format_matrix(const IntMatrix& m) {
  std::ostringstream os;
  os << m.rows() << ' ' << m.cols() << '\n';
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (j) os << ' ';
      os << m(i, j);
    }
    os << '\n';
  }
  return os.str();
}

IntMatrix read_matrix_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw FormatError("cannot open " + path, 0, 0);
  std::stringstream buf;
  buf << in.rdbuf();
  try {
    return parse_matrix(buf.str());
  } catch (const FormatError& e) {
    throw FormatError(path + ": " + e.what(), 0, 0);
  }
}

Json to_json(const Integer& x) {
  if (x >= std::numeric_limits<long long>::min() &&
      x <= std::numeric_limits<long long>::max()) {
    return Json(x.convert_to<long long>());
  }
  return Json(x.str());
}

Json to_json(const IntVector& v) {
  Json out = Json::array();
  for (const auto& x : v) out.push_back(to_json(x));
  return out;
}

Json to_json(const IntMatrix& m) {
  Json out = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) out.push_back(to_json(m.row(i)));
  return out;
}

Json to_json(const IntPolynomial& p) {
  return Json{{"coefficients", to_json(p.coefficients())},
              {"text", to_string(p)}};
}

Json to_json(const SeCertificate& c) {
  return Json{{"A", to_json(c.a)},
              {"B", to_json(c.b)},
              {"R", to_json(c.r)},
              {"S", to_json(c.s)},
              {"lag", c.lag}};
}

Json to_json(const UnitalVerdict& v) {
  Json out{{"outcome", to_string(v.outcome)}};
  switch (v.outcome) {
    case UnitalVerdict::Outcome::kYes:
      out["m"] = v.m;
      out["k"] = v.k;
      break;
    case UnitalVerdict::Outcome::kNo:
      out["reason"] = v.reason;
      break;
    case UnitalVerdict::Outcome::kInconclusive:
      out["bound"] = v.bound;
      break;
  }
  if (v.reversed_outcome) out["reversed"] = to_string(*v.reversed_outcome);
  return out;
}

Json to_json(const BowenFranksData& bf) {
  const int s = to_int(bf.sign);
  return Json{{"factors", to_json(bf.invariant_factors)},
              {"unit_class", to_json(bf.unit_class)},
              {"sign", s < 0 ? "-1" : s == 0 ? "0" : "+1"}};
}

Json to_json(const Move& m) {
  Json out{{"kind", kind_name(m)}, {"from", to_json(m.from)}, {"to", to_json(m.to)}};
  if (auto* w = std::get_if<OutsplitMove>(&m.witness)) {
    out["D"] = to_json(w->d.matrix());
    out["E"] = to_json(w->e);
  } else if (auto* w = std::get_if<OutamalgamationMove>(&m.witness)) {
    out["D"] = to_json(w->d.matrix());
    out["E"] = to_json(w->e);
  } else {
    const auto& b = std::get<BalancedElementaryMove>(m.witness);
    out["S"] = to_json(b.s);
    out["R_from"] = to_json(b.r_from);
    out["R_to"] = to_json(b.r_to);
  }
  return out;
}

Json to_json(const MoveSequence& s) {
  Json steps = Json::array();
  for (const Move& m : s.steps) steps.push_back(to_json(m));
  return Json{{"start", to_json(s.start)},
              {"finish", to_json(s.finish())},
              {"steps", std::move(steps)}};
}

Integer integer_from_json(const Json& j) {
  if (j.is_number_integer()) {
    return j.is_number_unsigned() ? Integer(j.get<unsigned long long>())
                                  : Integer(j.get<long long>());
  }
  if (j.is_string()) {
    const auto s = j.get<std::string>();
    if (!is_integer_token(s)) {
      throw FormatError("not an integer: '" + s + "'", 0, 0);
    }
    return Integer(s[0] == '+' ? s.substr(1) : s);
  }
  throw FormatError("expected an integer, found " + std::string(j.type_name()),
                    0, 0);
}

IntMatrix matrix_from_json(const Json& j) {
  if (!j.is_array() || j.empty()) {
    throw FormatError("a matrix must be a nonempty array of rows", 0, 0);
  }
  std::vector<IntVector> rows;
  for (const Json& r : j) {
    if (!r.is_array() || r.empty()) {
      throw FormatError("matrix rows must be nonempty arrays", 0, 0);
    }
    IntVector row;
    for (const Json& x : r) row.push_back(integer_from_json(x));
    if (!rows.empty() && row.size() != rows.front().size()) {
      throw FormatError("matrix rows differ in length", 0, 0);
    }
    rows.push_back(std::move(row));
  }
  return IntMatrix::from_rows(rows);
}

SeCertificate certificate_from_json(const Json& j) {
  for (const char* key : {"A", "B", "R", "S", "lag"}) {
    if (!j.is_object() || !j.contains(key)) {
      throw FormatError(std::string("certificate is missing \"") + key + "\"",
                        0, 0);
    }
  }
  const Integer lag = integer_from_json(j.at("lag"));
  if (lag < 1 || lag > 1000000) throw FormatError("lag must be positive", 0, 0);
  return SeCertificate{matrix_from_json(j.at("A")), matrix_from_json(j.at("B")),
                       matrix_from_json(j.at("R")), matrix_from_json(j.at("S")),
                       static_cast<unsigned>(lag)};
}

Json parse_json(std::string_view text) {
  try {
    return Json::parse(text.begin(), text.end());
  } catch (const nlohmann::json::parse_error& e) {
    std::size_t line = 1, col = 1;
    for (std::size_t i = 0; i + 1 < e.byte && i < text.size(); ++i) {
      if (text[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    throw FormatError("invalid JSON", line, col);
  }
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw FormatError("cannot open " + path, 0, 0);
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_json(buf.str());
}

}  // namespace sft
