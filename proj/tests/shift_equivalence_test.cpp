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
#include "sft/dimension.hpp"
#include "sft/shift_equivalence.hpp"
#include "support.hpp"

#include <gtest/gtest.h>

namespace sft {
namespace {

using testing::scalar;
using Outcome = UnitalVerdict::Outcome;

const IntMatrix kA1{{2, 0, 4}, {1, 2, 0}, {1, 2, 0}};
const IntMatrix kA3{{1, 3}, {2, 1}};
const IntMatrix kB3{{1, 6}, {1, 1}};
const IntMatrix kC{{1, 0, 1}, {1, 0, 1}, {0, 1, 1}};

SeCertificate a3_b3() {
  return {kA3, kB3, IntMatrix{{8, 3}, {1, 16}}, IntMatrix{{314, 387}, {129, 157}}, 7};
}

SeCertificate ashley_cert() {
  return {ashley_matrix(), scalar(2), IntMatrix::filled(8, 1, 16),
          IntMatrix::filled(1, 8, 1), 7};
}

TEST(VerifySe, Examples) {
  EXPECT_TRUE(verify_se({kA1, kA1, IntMatrix::identity(3), kA1, 1}).ok());
  EXPECT_TRUE(verify_se(ashley_cert()).ok());
  EXPECT_TRUE(verify_se(a3_b3()).ok());
}

TEST(VerifySe, A3B3MatchesHandComputation) {
  // P3 = [[2,3],[1,1]] has inverse [[-1,3],[1,-2]].  By hand:
  // B3^3 = [[19,54],[9,19]], A3^3 = [[19,27],[18,19]],
  // P3^-1 B3^3 = [[8,3],[1,16]], B3 P3 = [[8,9],[3,4]],
  // B3 P3 A3^3 = [[314,387],[129,157]].
  const IntMatrix p{{2, 3}, {1, 1}};
  const IntMatrix p_inv{{-1, 3}, {1, -2}};
  EXPECT_EQ(p * p_inv, IntMatrix::identity(2));
  EXPECT_EQ(mat_pow(kB3, 3), (IntMatrix{{19, 54}, {9, 19}}));
  EXPECT_EQ(mat_pow(kA3, 3), (IntMatrix{{19, 27}, {18, 19}}));
  EXPECT_EQ(p_inv * mat_pow(kB3, 3), a3_b3().r);
  EXPECT_EQ(kB3 * p * mat_pow(kA3, 3), a3_b3().s);
  const SeCertificate built = ak_bk_certificate(3, 3);
  EXPECT_EQ(built.r, a3_b3().r);
  EXPECT_EQ(built.s, a3_b3().s);
  EXPECT_EQ(built.lag, 7u);
}

TEST(VerifySe, FailuresAreReported) {
  SeCertificate c = a3_b3();
  c.lag = 5;
  const SeCheck wrong_lag = verify_se(c);
  EXPECT_EQ(wrong_lag.status, SeStatus::kEquationFailed);
  EXPECT_FALSE(wrong_lag.detail.empty());

  SeCertificate neg{kA1, kA1, -IntMatrix::identity(3), -kA1, 1};
  EXPECT_EQ(verify_se(neg).status, SeStatus::kNegativeEntry);
}

TEST(VerifySe, BadShapesThrow) {
  SeCertificate c = a3_b3();
  c.r = IntMatrix{{1, 2, 3}};
  EXPECT_THROW(verify_se(c), DimensionError);
  c = a3_b3();
  c.lag = 0;
  EXPECT_THROW(verify_se(c), DimensionError);
}

TEST(UnitalCondition, Ashley) {
  const UnitalVerdict v = unital_condition(ashley_cert());
  EXPECT_EQ(v.outcome, Outcome::kYes);
  EXPECT_EQ(v.m, 0u);
  EXPECT_EQ(v.k, 7u);
  EXPECT_TRUE(unital_witness_holds(ashley_cert(), 0, 7));
}

TEST(UnitalCondition, A3B3) {
  const UnitalVerdict v = unital_condition(a3_b3());
  EXPECT_EQ(v.outcome, Outcome::kYes);
  EXPECT_EQ(v.m, 0u);
  EXPECT_EQ(v.k, 2u);
  // Column sums of R and of B3^2 = [[7,12],[2,7]] are both (9, 19).
  EXPECT_EQ(mat_vec(a3_b3().r.transpose(), ones(2)), (IntVector{9, 19}));
}

TEST(UnitalCondition, TwoToCIsNo) {
  const SeCertificate c = corpus_entry("z-half-chain").certificate("A->C");
  EXPECT_EQ(c.a, scalar(2));
  EXPECT_EQ(c.b, kC);
  EXPECT_EQ(c.r, (IntMatrix{{1, 1, 2}}));
  EXPECT_EQ(c.lag, 2u);
  ASSERT_TRUE(verify_se(c).ok());
  const UnitalVerdict v = unital_condition(c);
  EXPECT_EQ(v.outcome, Outcome::kNo);
  EXPECT_FALSE(v.reason.empty());
}

TEST(UnitalCondition, UnverifiedCertificateThrows) {
  SeCertificate c = a3_b3();
  c.lag = 5;
  EXPECT_THROW(unital_condition(c), DomainError);
}

TEST(UnitalCondition, DiagnosticsReportReverse) {
  const UnitalVerdict v = unital_condition(ashley_cert(), std::nullopt, true);
  ASSERT_TRUE(v.reversed_outcome.has_value());
}

TEST(Compose, ChainsCertificates) {
  const auto& e = corpus_entry("z-half-chain");
  const SeCertificate ac = compose(e.certificate("A->B"), e.certificate("B->C"));
  EXPECT_TRUE(verify_se(ac).ok());
  EXPECT_EQ(ac.r, e.certificate("A->C").r);
  EXPECT_EQ(ac.s, e.certificate("A->C").s);
  EXPECT_THROW(compose(a3_b3(), a3_b3()), DimensionError);
}

TEST(Reversed, SwapsRoles) {
  const SeCertificate r = reversed(a3_b3());
  EXPECT_EQ(r.a, kB3);
  EXPECT_EQ(r.r, a3_b3().s);
  EXPECT_TRUE(verify_se(r).ok());
}

TEST(BalancedToUnital, Identity) {
  const BalancedUnital bu = balanced_to_unital_se(kA1, kA1, IntMatrix::identity(3), kA1, kA1);
  EXPECT_EQ(bu.cert.lag, 2u);
  EXPECT_EQ(bu.cert.r, kA1);
  EXPECT_EQ(bu.cert.s, kA1);
  EXPECT_EQ(bu.verdict.outcome, Outcome::kYes);
  EXPECT_TRUE(bu.witness_0_1);
}

TEST(BalancedToUnital, Rourke) {
  const auto& e = corpus_entry("rourke");
  const BalancedUnital bu = balanced_to_unital_se(e.matrix("B'"), e.matrix("B''"),
                                                  e.matrix("S1'"), e.matrix("R1'"),
                                                  e.matrix("R1''"));
  EXPECT_TRUE(verify_se(bu.cert).ok());
  EXPECT_EQ(bu.cert.lag, 2u);
  EXPECT_EQ(verdict_string(bu.verdict), "yes(0,1)");
}

TEST(BalancedToUnital, FullShiftDegenerate) {
  const IntMatrix full{{1, 1}, {1, 1}};
  const BalancedUnital bu = balanced_to_unital_se(full, full, IntMatrix{{1}, {1}},
                                                  IntMatrix{{1, 1}}, IntMatrix{{1, 1}});
  EXPECT_TRUE(verify_se(bu.cert).ok());
  EXPECT_EQ(bu.cert.a, full);
  EXPECT_EQ(bu.cert.b, full);
  EXPECT_TRUE(bu.witness_0_1);
}

TEST(BalancedToUnital, InvalidStepThrows) {
  EXPECT_THROW(balanced_to_unital_se(kA1, kA1, IntMatrix::identity(3), kA1,
                                     kA1 + IntMatrix::identity(3)),
               DomainError);
}

TEST(CertificateForMove, Outsplit) {
  OutsplitSpec spec;
  spec.parts = {{IntVector{1}, IntVector{1}}};
  const auto split = apply_outsplit(scalar(2), spec);
  const Move m{OutsplitMove{split.d, split.e}, scalar(2), split.b};
  const SeCertificate c = certificate_for_move(m);
  EXPECT_EQ(c.lag, 1u);
  EXPECT_TRUE(verify_se(c).ok());
  EXPECT_EQ(verdict_string(unital_condition(c)), "yes(0,0)");
}

TEST(CertificateForSequence, EmptyIsIdentity) {
  const SeCertificate c = certificate_for_sequence(MoveSequence{kA1, {}});
  EXPECT_EQ(c.r, IntMatrix::identity(3));
  EXPECT_EQ(c.lag, 1u);
  EXPECT_TRUE(verify_se(c).ok());
}

TEST(BoylePse, OneByOne) {
  const SeCertificate c{scalar(1), scalar(1), scalar(1), scalar(1), 1};
  const BoylePseReport r = boyle_pse_identity(c.a, c.b, c);
  EXPECT_TRUE(r.holds);
  EXPECT_EQ(r.product, (IntMatrix{{1, 0}, {0, 0}}));
  EXPECT_EQ(r.target, (IntMatrix{{1, 0}, {0, 0}}));
}

TEST(BoylePse, LagOneOutsplit) {
  const SeCertificate c = corpus_entry("z-half-chain").certificate("A->B");
  ASSERT_EQ(c.lag, 1u);
  EXPECT_TRUE(boyle_pse_identity(c.a, c.b, c).holds);
}

// The displayed identity is checked for the two long-lag certificates as
// well.  Both are expected to hold; see the README for the current status.
TEST(BoylePse, A3B3) {
  const BoylePseReport r = boyle_pse_identity(kA3, kB3, a3_b3());
  EXPECT_TRUE(r.first_decomposition);
  EXPECT_TRUE(r.second_decomposition);
  EXPECT_TRUE(r.holds);
}

TEST(BoylePse, Ashley) {
  const BoylePseReport r = boyle_pse_identity(ashley_matrix(), scalar(2), ashley_cert());
  EXPECT_TRUE(r.first_decomposition);
  EXPECT_TRUE(r.second_decomposition);
  EXPECT_TRUE(r.holds);
}

TEST(VerifySl, Examples) {
  const IntMatrix m{{1, 0}, {0, 1}};
  EXPECT_TRUE(verify_sl(m, m, kA3, kA3, {2}));
  EXPECT_TRUE(verify_sl(IntMatrix{{1, 1}, {0, 1}}, m, m, IntMatrix{{1, 1}, {0, 1}}, {2}));
  const IntMatrix flip{{0, 1}, {1, 0}};
  EXPECT_FALSE(verify_sl(flip, flip, m, m, {2}));
  EXPECT_THROW(verify_sl(m, m, m, m, {3}), DimensionError);
}

TEST(VerifySlPlus, Examples) {
  const IntMatrix i2 = IntMatrix::identity(2);
  EXPECT_TRUE(verify_sl_plus(i2, i2, kA3, kA3, {1, 2}, {1, 2}, {2}));
  // Trivial cokernel: the unit vectors do not matter.
  EXPECT_TRUE(verify_sl_plus(i2, i2, i2, i2, {0, 0}, {5, -3}, {2}));
  EXPECT_FALSE(verify_sl_plus(scalar(1), scalar(1), scalar(2), scalar(2), {0}, {1}, {1}));
}

}  // namespace
}  // namespace sft
