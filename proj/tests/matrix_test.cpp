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

#include "sft/corpus.hpp"
#include "sft/graph_structure.hpp"
#include "sft/matrix.hpp"
#include "sft/normal_form.hpp"
#include "support.hpp"

#include <gtest/gtest.h>

namespace sft {
namespace {

using testing::cofactor_det;
using testing::invariant_factors_by_minors;
using testing::scalar;

const IntMatrix kA1{{2, 0, 4}, {1, 2, 0}, {1, 2, 0}};
const IntMatrix kFull2{{1, 1}, {1, 1}};
const IntMatrix kSmallBlock{{2, 1, 1}, {1, 2, 1}, {1, 1, 2}};

TEST(MatMul, RowTimesColumn) {
  EXPECT_EQ(mat_mul(IntMatrix{{1, 1}}, IntMatrix{{1}, {1}}), scalar(2));
}

TEST(MatMul, IdentityIsNeutral) {
  const IntMatrix m{{3, -1, 0}, {2, 2, 7}};
  EXPECT_EQ(mat_mul(IntMatrix::identity(2), m), m);
  EXPECT_EQ(mat_mul(m, IntMatrix::identity(3)), m);
}

TEST(MatMul, SquareByHand) {
  const IntMatrix m{{1, 2}, {1, 1}};
  EXPECT_EQ(mat_mul(m, m), (IntMatrix{{3, 4}, {2, 3}}));
}

TEST(MatMul, ShapeMismatchThrows) {
  EXPECT_THROW(mat_mul(IntMatrix{{1, 2}}, IntMatrix{{1, 2}}), DimensionError);
}

TEST(MatPow, Examples) {
  EXPECT_EQ(mat_pow(scalar(2), 5), scalar(32));
  EXPECT_EQ(mat_pow(kA1, 2), (IntMatrix{{8, 8, 8}, {4, 4, 4}, {4, 4, 4}}));
  EXPECT_EQ(mat_pow(IntMatrix{{1, 6}, {1, 1}}, 2), (IntMatrix{{7, 12}, {2, 7}}));
  EXPECT_EQ(mat_pow(kA1, 0), IntMatrix::identity(3));
}

TEST(MatPow, LargeEntriesStayExact) {
  const Integer big = mat_pow(scalar(2), 200)(0, 0);
  EXPECT_EQ(big.str(),
            "1606938044258990275541962092341162602522202993782792835301376");
}

TEST(SmithNormalForm, Examples) {
  EXPECT_EQ(smith_normal_form(scalar(-1)).diag, (IntVector{1}));
  EXPECT_EQ(smith_normal_form(IntMatrix{{0, -1}, {-1, 0}}).diag, (IntVector{1, 1}));
  EXPECT_EQ(smith_normal_form(kSmallBlock).diag, (IntVector{1, 1, 4}));
  EXPECT_EQ(invariant_factors_by_minors(kSmallBlock), (IntVector{1, 1, 4}));
}

TEST(SmithNormalForm, RectangularAndSingular) {
  const IntMatrix m{{2, 4, 6}, {4, 8, 12}};
  const auto snf = smith_normal_form(m);
  EXPECT_EQ(snf.diag, invariant_factors_by_minors(m));
  EXPECT_EQ(snf.left * m * snf.right, snf.diagonal_matrix(2, 3));
}

TEST(SmithNormalForm, StrategiesAgree) {
  const IntMatrix m{{6, 4, 0}, {2, 8, 10}, {0, 14, 4}};
  EXPECT_EQ(smith_normal_form(m, PivotStrategy::kSmallestMagnitude).diag,
            smith_normal_form(m, PivotStrategy::kBezout).diag);
}

TEST(CharPoly, Examples) {
  EXPECT_EQ(to_string(char_poly(scalar(2))), "x - 2");
  // x^2 (x - 4) = x^3 - 4x^2, by cofactor expansion of xI - A1.
  EXPECT_EQ(char_poly(kA1), IntPolynomial(IntVector{0, 0, -4, 1}));
  EXPECT_EQ(to_string(char_poly(ashley_matrix())), "x^8 - 2x^7");
}

TEST(CharPoly, AgreeUpToX) {
  const IntPolynomial p(IntVector{0, 0, -4, 1});
  const IntPolynomial q(IntVector{-4, 1});
  EXPECT_TRUE(agree_up_to_x_factors(p, q));
  EXPECT_FALSE(agree_up_to_x_factors(p, IntPolynomial(IntVector{-3, 1})));
}

TEST(DetSign, Examples) {
  const auto i_minus_at = [](const IntMatrix& a) {
    return IntMatrix::identity(a.rows()) - a.transpose();
  };
  EXPECT_EQ(det_sign(i_minus_at(scalar(2))), Sign::kNegative);
  EXPECT_EQ(det_sign(i_minus_at(kFull2)), Sign::kNegative);
  EXPECT_EQ(det_sign(scalar(0)), Sign::kZero);
  EXPECT_EQ(determinant(kSmallBlock), cofactor_det(kSmallBlock));
}

TEST(DetSign, NonSquareThrows) {
  EXPECT_THROW(det_sign(IntMatrix{{1, 2}}), DomainError);
}

TEST(SccPoset, Examples) {
  const auto single = scc_poset(scalar(2));
  ASSERT_EQ(single.size(), 1u);
  EXPECT_EQ(single.components[0], (std::vector<std::size_t>{0}));

  const auto chain = scc_poset(IntMatrix{{1, 1}, {0, 1}});
  ASSERT_EQ(chain.size(), 2u);
  EXPECT_EQ(chain.components[0], (std::vector<std::size_t>{0}));
  EXPECT_EQ(chain.components[1], (std::vector<std::size_t>{1}));
  EXPECT_TRUE(chain.leq[0][1]);
  EXPECT_FALSE(chain.leq[1][0]);

  const auto one = scc_poset(kA1);
  ASSERT_EQ(one.size(), 1u);
  EXPECT_EQ(one.components[0], (std::vector<std::size_t>{0, 1, 2}));
}

TEST(IsIrreducible, Examples) {
  EXPECT_TRUE(is_irreducible(scalar(2)));
  EXPECT_FALSE(is_irreducible(scalar(0)));
  EXPECT_FALSE(is_irreducible(IntMatrix{{1, 1}, {0, 1}}));
  EXPECT_TRUE(is_irreducible(kA1));
}

TEST(RowColProfile, Examples) {
  const auto p1 = row_col_profile(IntMatrix{{0, 1}, {0, 1}});
  EXPECT_FALSE(p1.has_zero_row);
  EXPECT_TRUE(p1.has_zero_col);
  const auto p2 = row_col_profile(scalar(2));
  EXPECT_TRUE(p2.is_essential());
  const auto p3 = row_col_profile(IntMatrix{{0, 0}, {1, 0}});
  EXPECT_TRUE(p3.has_zero_row);
  EXPECT_TRUE(p3.has_zero_col);
}

TEST(CanonicalForm, Examples) {
  EXPECT_TRUE(is_canonical_form(scalar(1)).holds());
  const auto two = is_canonical_form(scalar(2));
  EXPECT_FALSE(two.holds());
  EXPECT_FALSE(two.diagonal_blocks_ok);
  EXPECT_TRUE(is_canonical_form(kSmallBlock).holds());
}

TEST(StandardFormPair, Examples) {
  EXPECT_TRUE(is_standard_form_pair(scalar(1), scalar(1)));
  EXPECT_FALSE(is_standard_form_pair(scalar(1), kSmallBlock));
  // The second matrix has SNF diag(1,1,3) (gcd of 2x2 minors is 1,
  // determinant 3), so it is canonical and the pair stands.
  const IntMatrix other{{2, 2, 1}, {1, 2, 1}, {1, 1, 2}};
  EXPECT_EQ(invariant_factors_by_minors(other), (IntVector{1, 1, 3}));
  EXPECT_EQ(is_standard_form_pair(kSmallBlock, other),
            is_canonical_form(other).holds());
  EXPECT_TRUE(is_standard_form_pair(kSmallBlock, other));
}

}  // namespace
}  // namespace sft
