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

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace sft {

/// A bijection sigma on {0..n-1} acting by P^t M P, i.e.
/// apply(m)(i, j) == m(sigma[i], sigma[j]).
struct PermWitness {
  std::vector<std::size_t> mapping;

  static PermWitness identity(std::size_t n);
  IntMatrix apply(const IntMatrix& m) const;
  PermWitness inverse() const;
  /// First this, then `next`: next.apply(apply(m)).
  PermWitness then(const PermWitness& next) const;

  bool operator==(const PermWitness&) const = default;
};

/// P with P^t a P == b, or nullopt.  Backtracking over vertices
/// pre-partitioned by (diagonal entry, sorted row, sorted column).
std::optional<PermWitness> permutation_equivalent(const IntMatrix& a,
                                                  const IntMatrix& b);

/// One P with P^t a1 P == b1 and P^t a2 P == b2.  Throws DimensionError when
/// a1/a2 or b1/b2 differ in size.
std::optional<PermWitness> joint_permutation_equivalent(const IntMatrix& a1,
                                                        const IntMatrix& a2,
                                                        const IntMatrix& b1,
                                                        const IntMatrix& b2);

/// General form: a single P carrying every as[k] onto bs[k].
std::optional<PermWitness> simultaneous_permutation(
    std::span<const IntMatrix> as, std::span<const IntMatrix> bs);

struct ConjugacyCertificate {
  bool conjugate = false;
  TotalAmalgamation total_a;
  TotalAmalgamation total_b;
  std::optional<PermWitness> witness;  // total_b == witness.apply(total_a)
};

/// One-sided conjugacy of the edge shifts: total amalgamations agree up to
/// permutation.  Throws DomainError on zero rows.
ConjugacyCertificate one_sided_conjugate(const IntMatrix& a,
                                         const IntMatrix& b);

enum class PowerInterpretation {
  kJoint,     // one permutation for both exponents
  kSeparate,  // totals at n and n+1 differ in size; checked one by one
};

struct HigherPowersReport {
  bool agree = false;
  unsigned n = 0;
  IntMatrix total_a_n{1, 1};
  IntMatrix total_a_n1{1, 1};
  IntMatrix total_b_n{1, 1};
  IntMatrix total_b_n1{1, 1};
  PowerInterpretation interpretation = PowerInterpretation::kJoint;
  std::optional<PermWitness> witness_n;
  std::optional<PermWitness> witness_n1;
  std::string reason;  // empty on agreement
};

/// Decides conjugate higher powers by comparing total amalgamations of the
/// n-th and (n+1)-st powers.  n defaults to max(|a|, |b|); smaller values
/// are rejected with DomainError.
HigherPowersReport conjugate_higher_powers(const IntMatrix& a,
                                           const IntMatrix& b,
                                           std::optional<unsigned> n = {});

const char* to_string(PowerInterpretation p);

}  // namespace sft
