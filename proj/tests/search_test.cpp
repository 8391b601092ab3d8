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
#include "sft/search.hpp"
#include "sft/shift_equivalence.hpp"
#include "support.hpp"

#include <gtest/gtest.h>

namespace sft {
namespace {

using testing::permute;
using testing::scalar;

const IntMatrix kFull2{{1, 1}, {1, 1}};

bool has_target(const std::vector<Move>& moves, const IntMatrix& target) {
  const CanonicalKey want = canonicalize(target).key;
  return std::any_of(moves.begin(), moves.end(), [&](const Move& m) {
    return canonicalize(m.to).key == want;
  });
}

TEST(Canonicalize, PermutedCopiesShareKey) {
  const IntMatrix a{{0, 2, 1}, {1, 0, 3}, {4, 1, 0}};
  const Canonical c = canonicalize(a);
  EXPECT_EQ(c.witness.apply(a), c.matrix);
  for (const auto& p : std::vector<std::vector<std::size_t>>{{1, 2, 0}, {2, 1, 0}, {0, 2, 1}})
    EXPECT_EQ(canonicalize(permute(a, p)).key, c.key);
  EXPECT_NE(canonicalize(a.transpose()).key, c.key);
}

TEST(Neighbors, Examples) {
  SearchLimits limits;
  limits.max_matrix_size = 2;
  limits.max_entry = 2;
  for (const Move& m : neighbors(scalar(2), limits)) EXPECT_FALSE(check_move(m).has_value());
  EXPECT_TRUE(has_target(neighbors(scalar(2), limits), kFull2));
  EXPECT_TRUE(has_target(neighbors(kFull2, limits), scalar(2)));

  const IntMatrix distinct{{2, 0}, {1, 1}};
  limits.max_matrix_size = 2;
  for (const Move& m : neighbors(distinct, limits)) {
    EXPECT_EQ(kind_name(m), "balanced");
  }
}

TEST(SearchBalancedPath, SameMatrixIsEmpty) {
  const IntMatrix a{{1, 2}, {1, 0}};
  const SearchResult r = search_balanced_path(a, a, SearchLimits::defaults_for(a, a));
  ASSERT_TRUE(r.path.has_value());
  EXPECT_TRUE(r.path->steps.empty());
}

TEST(SearchBalancedPath, FullShiftToTwo) {
  const SearchResult r =
      search_balanced_path(kFull2, scalar(2), SearchLimits::defaults_for(kFull2, scalar(2)));
  ASSERT_TRUE(r.path.has_value());
  EXPECT_EQ(r.path->steps.size(), 1u);
  EXPECT_TRUE(verify_move_sequence(*r.path).ok);
}

TEST(SearchBalancedPath, RourkeAmalgamation) {
  const auto& e = corpus_entry("rourke");
  const IntMatrix from = e.matrix("B''"), to = e.matrix("A");
  const SearchResult r = search_balanced_path(from, to, SearchLimits::defaults_for(from, to));
  ASSERT_TRUE(r.path.has_value());
  EXPECT_TRUE(verify_move_sequence(*r.path).ok);
  EXPECT_EQ(r.path->start, from);
  EXPECT_EQ(r.path->finish(), to);
  const SeCertificate cert = certificate_for_sequence(*r.path);
  ASSERT_TRUE(verify_se(cert).ok());
  const UnitalVerdict v = unital_condition(cert);
  EXPECT_EQ(v.outcome, UnitalVerdict::Outcome::kYes);
  EXPECT_EQ(v.m, 0u);
}

TEST(SearchBalancedPath, ThreadCountDoesNotChangeResult) {
  const auto& e = corpus_entry("rourke");
  const IntMatrix from = e.matrix("B''"), to = e.matrix("A");
  SearchLimits one = SearchLimits::defaults_for(from, to);
  SearchLimits four = one;
  four.threads = 4;
  const SearchResult r1 = search_balanced_path(from, to, one);
  const SearchResult r4 = search_balanced_path(from, to, four);
  ASSERT_TRUE(r1.path && r4.path);
  EXPECT_EQ(r1.nodes, r4.nodes);
  ASSERT_EQ(r1.path->steps.size(), r4.path->steps.size());
  for (std::size_t i = 0; i < r1.path->steps.size(); ++i)
    EXPECT_EQ(r1.path->steps[i].to, r4.path->steps[i].to);
}

TEST(SearchBalancedPath, ExhaustionIsNotAPath) {
  SearchLimits limits;
  limits.max_matrix_size = 1;
  limits.max_entry = 3;
  const SearchResult r = search_balanced_path(scalar(2), scalar(3), limits);
  EXPECT_FALSE(r.path.has_value());
}

TEST(SearchLimits, Validate) {
  SearchLimits l;
  l.max_depth = 0;
  EXPECT_THROW(l.validate(), DomainError);
  const SearchLimits d = SearchLimits::defaults_for(kFull2, scalar(3));
  EXPECT_EQ(d.max_matrix_size, 2u);
  EXPECT_EQ(d.max_entry, 3);
}

}  // namespace
}  // namespace sft
