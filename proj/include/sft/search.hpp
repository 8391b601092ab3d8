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

#include "sft/conjugacy.hpp"
#include "sft/matrix.hpp"
#include "sft/moves.hpp"

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace sft {

struct SearchLimits {
  std::size_t max_matrix_size = 4;
  std::size_t max_depth = 8;
  Integer max_entry = 4;
  std::size_t max_nodes = 50000;
  unsigned threads = 1;

  /// Size cap max(|a|, |b|), entry cap the largest entry of a and b.
  static SearchLimits defaults_for(const IntMatrix& a, const IntMatrix& b);
  /// Throws DomainError unless every bound is positive.
  void validate() const;
};

/// The lexicographically least P^t M P among permutations that list vertices
/// in increasing order of a permutation-invariant vertex signature.  Entries
/// are compared shell by shell: position k contributes
/// M(k, 0..k) followed by M(0..k-1, k).
struct CanonicalKey {
  std::size_t n = 0;
  std::string text;  // canonical matrix, serialized; equality is exact

  bool operator==(const CanonicalKey&) const = default;
};

struct CanonicalKeyHash {
  std::size_t operator()(const CanonicalKey& k) const {
    return std::hash<std::string>{}(k.text);
  }
};

struct Canonical {
  CanonicalKey key;
  IntMatrix matrix;     // the canonical representative
  PermWitness witness;  // matrix == witness.apply(input)
};

Canonical canonicalize(const IntMatrix& m);

/// Amalgamations of two or more vertices inside one class of identical
/// columns, single-vertex outsplits, and balanced elementary moves over
/// partitions into classes of identical rows.  Every move respects the size
/// and entry caps.  Throws DomainError on zero rows.
std::vector<Move> neighbors(const IntMatrix& a, const SearchLimits& limits);

struct SearchResult {
  std::optional<MoveSequence> path;
  std::size_t nodes = 0;   // distinct matrices (up to permutation) visited
  std::size_t levels = 0;  // BFS levels expanded, both sides together
  bool limit_hit = false;  // stopped by max_depth or max_nodes
};

/// Bidirectional level-synchronous BFS between a and b.  A returned path
/// starts at a, ends at b and passes verify_move_sequence.  Deterministic for
/// fixed limits regardless of the thread count.
SearchResult search_balanced_path(const IntMatrix& a, const IntMatrix& b,
                                  const SearchLimits& limits);

}  // namespace sft
