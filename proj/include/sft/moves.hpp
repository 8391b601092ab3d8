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
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace sft {

bool is_division_matrix(const IntMatrix& d);

/// A {0,1} matrix whose rows each hold at least one 1 and whose columns each
/// hold exactly one 1.  Row i lists the split vertices of original vertex i.
class DivisionMatrix {
 public:
  /// Throws DomainError if d is not a division matrix.
  explicit DivisionMatrix(IntMatrix d);
  /// The division matrix of a surjection {0..parts-1} -> {0..n-1}.
  static DivisionMatrix from_owner(const std::vector<std::size_t>& owner,
                                   std::size_t n);

  const IntMatrix& matrix() const { return d_; }
  std::size_t rows() const { return d_.rows(); }
  std::size_t cols() const { return d_.cols(); }
  /// Row index holding the single 1 of column k.
  std::size_t owner(std::size_t k) const;

  bool operator==(const DivisionMatrix&) const = default;

 private:
  IntMatrix d_;
};

/// For each vertex, the nonzero nonnegative row vectors its out-edges are
/// split into.  The parts of vertex i must sum to row i.
struct OutsplitSpec {
  std::vector<std::vector<IntVector>> parts;

  /// One part per vertex: the identity split.
  static OutsplitSpec trivial(const IntMatrix& a);
};

struct SplitResult {
  IntMatrix b;  // E * D
  DivisionMatrix d;
  IntMatrix e;
};

/// Returns B = E D with A = D E certified.  Throws DomainError on an
/// invalid spec.
SplitResult apply_outsplit(const IntMatrix& a, const OutsplitSpec& spec);

struct AmalgamationResult {
  IntMatrix smaller;  // D * E
  DivisionMatrix d;
  IntMatrix e;        // a == E * D
};

/// Merges the vertices of `groups` (each a set of vertices whose columns
/// agree).  Vertices not listed stay single.  Throws DomainError when a
/// group's columns differ.
AmalgamationResult amalgamate(const IntMatrix& a,
                              const std::vector<std::vector<std::size_t>>& groups);

/// Classes of vertices with identical columns, each sorted, ordered by
/// smallest member.  Includes singletons.
std::vector<std::vector<std::size_t>> identical_column_classes(
    const IntMatrix& a);
/// Same for identical rows.
std::vector<std::vector<std::size_t>> identical_row_classes(const IntMatrix& a);

/// One out-amalgamation merging every maximal class of identical columns,
/// or nullopt when all columns are distinct.
std::optional<AmalgamationResult> out_amalgamation_step(const IntMatrix& a);

struct OutsplitMove {
  DivisionMatrix d;
  IntMatrix e;  // from == D E, to == E D
};
struct OutamalgamationMove {
  DivisionMatrix d;
  IntMatrix e;  // from == E D, to == D E
};
/// from == S R_A, to == S R_B, R_A S == R_B S.
struct BalancedElementaryMove {
  IntMatrix s;
  IntMatrix r_from;
  IntMatrix r_to;
};

using MoveWitness =
    std::variant<OutsplitMove, OutamalgamationMove, BalancedElementaryMove>;

struct Move {
  MoveWitness witness;
  IntMatrix from;
  IntMatrix to;
};

std::string kind_name(const Move& m);
/// Empty when the defining equations of the move hold exactly; otherwise a
/// description of the first failing equation.
std::optional<std::string> check_move(const Move& m);
/// The inverse move, from `to` back to `from`.
Move reversed(const Move& m);
/// Conjugation by a permutation expressed as an outsplit with D = P:
/// to(i, j) == from(mapping[i], mapping[j]).
Move permutation_move(const IntMatrix& from,
                      const std::vector<std::size_t>& mapping);

struct MoveSequence {
  IntMatrix start;
  std::vector<Move> steps;

  const IntMatrix& finish() const {
    return steps.empty() ? start : steps.back().to;
  }
};

struct SequenceCheck {
  bool ok = true;
  std::optional<std::size_t> failed_step;  // 0-based
  std::string reason;
};

SequenceCheck verify_move_sequence(const MoveSequence& seq);

struct TotalAmalgamation {
  IntMatrix total;
  MoveSequence seq;
};

/// Repeats out_amalgamation_step to its fixed point.  Throws DomainError on
/// zero rows.
TotalAmalgamation total_amalgamation(const IntMatrix& a);

/// a == E D^t and b == D^t E.
bool verify_insplit(const IntMatrix& a, const IntMatrix& b,
                    const DivisionMatrix& d, const IntMatrix& e);

struct BalancedCheck {
  bool valid = false;
  bool s_is_division_transpose = false;
};

/// a == s r_a, b == s r_b and r_a s == r_b s.  Throws DimensionError when
/// the shapes cannot line up.
BalancedCheck verify_balanced_elementary(const IntMatrix& a,
                                         const IntMatrix& b,
                                         const IntMatrix& s,
                                         const IntMatrix& r_a,
                                         const IntMatrix& r_b);

}  // namespace sft
