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
#include "sft/normal_form.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace sft {

/// The class [vec, stage] in the direct limit of Z^n --A^t--> Z^n --> ...
struct DimElement {
  IntMatrix base;
  IntVector vec;
  std::size_t stage = 0;
};

/// The order unit [1, 0].
DimElement unit_element(const IntMatrix& a);

/// Equality in the direct limit.  Both sides are pushed to the common stage
/// and then |A| further steps: the rational kernel chain of A^t is stable
/// by step |A|, so this is exact.  Throws DomainError on different bases.
bool dim_elem_equal(const DimElement& x, const DimElement& y);

/// theta[v, k] = [A^t v, k].
DimElement theta_apply(const DimElement& x);
/// [v, k] -> [v, k + 1], the inverse of theta on classes.
DimElement stage_shift(const DimElement& x);

/// Smallest l <= l_max with (A^t)^l v >= 0, if any.  A miss is inconclusive,
/// not a proof of non-positivity.
std::optional<std::size_t> positivity_witness(const DimElement& x,
                                              std::size_t l_max);

/// [v, k] over A -> [R^t v, k] over target.
DimElement induced_dim_map(const IntMatrix& r, const DimElement& x,
                           const IntMatrix& target);

/// Z^rows / M Z^cols, presented through the Smith form of M.  Classes are
/// coordinates of U v reduced modulo the invariant factors (a zero factor
/// leaves a free coordinate).
class Cokernel {
 public:
  explicit Cokernel(const IntMatrix& m,
                    PivotStrategy strategy = PivotStrategy::kSmallestMagnitude);

  std::size_t ambient_rank() const { return factors_.size(); }
  /// Invariant factors padded with zeros to the ambient rank.
  const IntVector& factors() const { return factors_; }
  /// Indices whose factor is not 1, i.e. the nontrivial cyclic summands.
  const std::vector<std::size_t>& summands() const { return summands_; }
  IntVector nontrivial_factors() const;

  IntVector classify(const IntVector& v) const;
  /// Coordinates restricted to the nontrivial summands.
  IntVector reduced_class(const IntVector& v) const;
  /// A lift in Z^rows of the generator of summand `index`.
  IntVector generator(std::size_t index) const;
  bool is_trivial() const { return summands_.empty(); }

 private:
  SnfDecomposition snf_;
  IntVector factors_;
  std::vector<std::size_t> summands_;
};

/// Reduces x modulo d (non-negative representative); d == 0 leaves x.
Integer reduce_mod(const Integer& x, const Integer& d);

struct BowenFranksData {
  IntVector invariant_factors;  // |A| entries, from the Smith form of I - A^t
  IntVector unit_class;         // class of the all-ones vector
  Sign sign = Sign::kZero;      // sign det(I - A^t)
};

IntMatrix bowen_franks_matrix(const IntMatrix& a);  // I - A^t
BowenFranksData bowen_franks(
    const IntMatrix& a,
    PivotStrategy strategy = PivotStrategy::kSmallestMagnitude);

/// The map BF(A) -> BF(B), v -> R^t v, on the Smith generator bases.
/// images[j] holds the reduced target coordinates of source summand j.
struct BfInducedMap {
  IntVector source_factors;
  IntVector target_factors;
  std::vector<IntVector> images;
  bool well_defined = false;  // R^t (I - A^t) Z lands in (I - B^t) Z
  bool is_isomorphism = false;

  /// Image of a reduced source class.
  IntVector apply(const IntVector& source_class) const;
};

BfInducedMap bf_induced_map(const IntMatrix& r, const IntMatrix& a,
                            const IntMatrix& b);

struct CommutingSquareCheck {
  bool ok = true;
  std::optional<std::size_t> offending_index;
};

/// For every standard basis vector e_i: the BF(B) class of R^t e_i equals
/// the induced map applied to the BF(A) class of e_i.
CommutingSquareCheck check_commuting_square(const IntMatrix& r,
                                            const IntMatrix& a,
                                            const IntMatrix& b);

}  // namespace sft
