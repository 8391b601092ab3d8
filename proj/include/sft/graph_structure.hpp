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

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

namespace sft {

/// Strongly connected components of the graph with a(i, j) edges i -> j,
/// listed in a topological order of the reachability poset (ties between
/// incomparable components go to the one holding the smallest vertex).
/// Vertex indices are 0-based.
struct ComponentPoset {
  std::vector<std::vector<std::size_t>> components;
  /// leq[p][q]: component p reaches component q (reflexive).
  std::vector<std::vector<bool>> leq;

  std::size_t size() const { return components.size(); }
  std::vector<std::pair<std::size_t, std::size_t>> order_pairs() const;
  std::vector<std::size_t> block_sizes() const;
};

/// reach[i][j]: some path of length >= 1 leads from i to j.
std::vector<std::vector<bool>> reachability(const IntMatrix& a);

ComponentPoset scc_poset(const IntMatrix& a);

bool is_irreducible(const IntMatrix& a);

struct RowColProfile {
  bool has_zero_row = false;  // a sink
  bool has_zero_col = false;  // a source

  bool is_essential() const { return !has_zero_row && !has_zero_col; }
};

RowColProfile row_col_profile(const IntMatrix& a);

/// Clause checks for the canonical form of a block upper triangular matrix.
/// The clauses are invariant under simultaneous permutation, so the matrix
/// does not have to be laid out in block form already; `block_layout`
/// reports whether it is.
///
/// Clause 3 takes the Smith normal form of the diagonal block itself, as the
/// defining sentence reads.  Reading it as the form of I - block^t instead
/// would change which 3x3 and larger blocks qualify.
struct CanonicalFormReport {
  bool positive_diagonal = true;        // clause 1
  bool closure_saturated = true;        // clause 2
  bool diagonal_blocks_ok = true;       // clause 3
  bool block_layout = true;
  std::vector<std::string> violations;  // human-readable, one per failure

  bool holds() const {
    return positive_diagonal && closure_saturated && diagonal_blocks_ok;
  }
};

CanonicalFormReport is_canonical_form(const IntMatrix& a);

/// Both matrices canonical, posets order-isomorphic under the block
/// correspondence given by the topological orders, and corresponding
/// diagonal blocks of equal size.
bool is_standard_form_pair(const IntMatrix& a, const IntMatrix& b);

}  // namespace sft
