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

#pragma once

#include "sft/dimension.hpp"
#include "sft/matrix.hpp"
#include "sft/moves.hpp"
#include "sft/normal_form.hpp"
#include "sft/shift_equivalence.hpp"

#include <json.hpp>

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace sft {

/// Malformed input.  line and column are 1-based; 0 when unknown.
class FormatError : public std::runtime_error {
 public:
  FormatError(const std::string& what, std::size_t line, std::size_t column);

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

// Matrix text format:
//
//   # optional comment lines
//   rows cols
//   a11 a12 ...
//   ...
//
// Blank lines are ignored.  Entries are base-10 integers of any size.
IntMatrix parse_matrix(std::string_view text);
std::string format_matrix(const IntMatrix& m);
/// Reads and parses a file; FormatError if it cannot be opened.
IntMatrix read_matrix_file(const std::string& path);

using Json = nlohmann::ordered_json;

/// Entries become JSON numbers when they fit in 64 bits, strings otherwise.
Json to_json(const Integer& x);
Json to_json(const IntMatrix& m);
Json to_json(const IntVector& v);
Json to_json(const IntPolynomial& p);
Json to_json(const SeCertificate& c);
Json to_json(const UnitalVerdict& v);
Json to_json(const BowenFranksData& bf);
Json to_json(const Move& m);
Json to_json(const MoveSequence& s);

/// Accepts numbers and decimal strings.
Integer integer_from_json(const Json& j);
IntMatrix matrix_from_json(const Json& j);
/// {"A": ..., "B": ..., "R": ..., "S": ..., "lag": N}
SeCertificate certificate_from_json(const Json& j);
/// Parses JSON text, mapping parse errors to FormatError.
Json parse_json(std::string_view text);
Json read_json_file(const std::string& path);

}  // namespace sft
