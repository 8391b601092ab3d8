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

#include "sft/matrix.hpp"
#include "sft/moves.hpp"
#include "sft/shift_equivalence.hpp"

#include <functional>
#include <string>
#include <string_view>
#include <vector>

namespace sft {

// Worked examples from the literature on one-sided shifts of finite type,
// with certificates and the verdicts the library is expected to reproduce.

struct NamedMatrix {
  std::string name;
  IntMatrix matrix;
};

struct NamedCertificate {
  std::string name;
  SeCertificate cert;
};

/// A verdict rendered as a short string ("true", "yes(0,7)", "[1,1,4]", ...)
/// so that expected and actual values compare exactly.
struct Expectation {
  std::string name;
  std::string expected;
  std::function<std::string()> compute;
};

struct CorpusEntry {
  std::string name;
  std::string description;
  std::vector<NamedMatrix> matrices;
  std::vector<NamedCertificate> certificates;
  std::vector<Expectation> expected;

  /// Throw std::out_of_range for unknown names.
  const IntMatrix& matrix(std::string_view name) const;
  const SeCertificate& certificate(std::string_view name) const;
};

const std::vector<CorpusEntry>& corpus();
const CorpusEntry& corpus_entry(std::string_view name);

struct CorpusCheck {
  std::string entry;
  std::string item;
  bool is_certificate = false;
  std::string expected;
  std::string actual;
  bool pass = false;
};

std::vector<CorpusCheck> verify_corpus();

// Building blocks shared with the tests.

/// Ashley's eight-vertex graph: every vertex has out- and in-degree 2.
IntMatrix ashley_matrix();

/// A_k = [[1, k], [k-1, 1]], B_k = [[1, (k-1) k], [1, 1]] and the lag 2j+1
/// certificate (P_k^{-1} B_k^j, B_k P_k A_k^j) with P_k = [[k-1, k], [1, 1]].
SeCertificate ak_bk_certificate(unsigned k, unsigned j);

/// Rourke's path B -> B' (outsplit) -> B'' (balanced) -> ... -> A
/// (out-amalgamations followed by a relabelling).
MoveSequence rourke_path();

/// "yes(m,k)", "no" or "inconclusive(K)".
std::string verdict_string(const UnitalVerdict& v);

}  // namespace sft
