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

#include <string>
#include <vector>

namespace sft {

// Smith normal form, determinants and characteristic polynomials over Z.

enum class PivotStrategy {
  // Smallest nonzero |entry| as pivot, reduce by Euclidean division.
  kSmallestMagnitude,
  // First nonzero entry (column-major) as pivot, reduce with 2x2 Bezout
  // transforms.  Used as an independent cross-check of the default path.
  kBezout,
};

/// left * m * right == diag(diag), with both transforms unimodular.
/// left_inverse is carried along so cokernel generators can be lifted back
/// to the original coordinates.
struct SnfDecomposition {
  IntMatrix left;
  IntMatrix left_inverse;
  IntVector diag;  // length min(rows, cols); d_i | d_{i+1}, zeros last
  IntMatrix right;

  /// The rows x cols matrix with diag on its main diagonal.
  IntMatrix diagonal_matrix(std::size_t rows, std::size_t cols) const;
};

SnfDecomposition smith_normal_form(
    const IntMatrix& m,
    PivotStrategy strategy = PivotStrategy::kSmallestMagnitude);

/// Exact determinant by fraction-free (Bareiss) elimination.
Integer determinant(const IntMatrix& m);

enum class Sign { kNegative = -1, kZero = 0, kPositive = 1 };
Sign det_sign(const IntMatrix& m);
int to_int(Sign s);

/// Integer polynomial, coefficients lowest degree first.  The zero
/// polynomial has an empty coefficient list.
class IntPolynomial {
 public:
  IntPolynomial() = default;
  explicit IntPolynomial(IntVector coefficients);

  const IntVector& coefficients() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }
  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  /// Largest power of x dividing this polynomial.
  std::size_t x_valuation() const;
  /// This polynomial divided by x^x_valuation().
  IntPolynomial without_x_factors() const;

  bool operator==(const IntPolynomial& other) const = default;

 private:
  IntVector coeffs_;
};

std::string to_string(const IntPolynomial& p);

/// det(xI - a) via division-exact Faddeev-LeVerrier.
IntPolynomial char_poly(const IntMatrix& a);

/// True when p and q agree after removing all factors of x.
bool agree_up_to_x_factors(const IntPolynomial& p, const IntPolynomial& q);

}  // namespace sft
