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
#include <string>
#include <vector>

namespace sft {

/// A^lag == R S, B^lag == S R, A R == R B, B S == S A.
struct SeCertificate {
  IntMatrix a{1, 1};
  IntMatrix b{1, 1};
  IntMatrix r{1, 1};  // |A| x |B|
  IntMatrix s{1, 1};  // |B| x |A|
  unsigned lag = 1;
};

enum class SeStatus { kValid, kNegativeEntry, kEquationFailed };

struct SeCheck {
  SeStatus status = SeStatus::kValid;
  std::string detail;  // which entry or equation failed

  bool ok() const { return status == SeStatus::kValid; }
};

/// Throws DimensionError when the shapes do not line up or lag is zero.
SeCheck verify_se(const SeCertificate& cert);

/// (R1 R2, S2 S1, l1 + l2).  Throws DimensionError unless ab.b == bc.a.
SeCertificate compose(const SeCertificate& ab, const SeCertificate& bc);
/// The same relation read from B to A: (b, a, s, r, lag).
SeCertificate reversed(const SeCertificate& cert);

/// Certificates for single moves: lag 1 for splits and amalgamations
/// (R = D, S = E resp. R = E, S = D), lag 2 for balanced steps.
SeCertificate certificate_for_move(const Move& move);
/// Composition along the whole sequence; the identity of lag 1 when empty.
SeCertificate certificate_for_sequence(const MoveSequence& seq);

/// (B^t)^m R^t 1 == (B^t)^(m+k) 1.
bool unital_witness_holds(const SeCertificate& cert, std::size_t m,
                          std::size_t k);

struct UnitalVerdict {
  enum class Outcome { kYes, kNo, kInconclusive };

  Outcome outcome = Outcome::kInconclusive;
  std::size_t m = 0;      // Yes: smallest m for the reported k
  std::size_t k = 0;      // Yes: first k that matches
  std::size_t bound = 0;  // Inconclusive: the k_max that was exhausted
  std::string reason;     // No: the certified reason
  /// Diagnostics only: the verdict of the reversed certificate.
  std::optional<Outcome> reversed_outcome;
};

const char* to_string(UnitalVerdict::Outcome o);

/// Decides whether the certificate carries the order unit of A into the
/// forward theta-orbit of the unit of B.  Throws DomainError unless the
/// certificate verifies.  k_max defaults to 2 (|A| + |B|) + lag.
UnitalVerdict unital_condition(const SeCertificate& cert,
                               std::optional<std::size_t> k_max = {},
                               bool diagnostics = false);

struct BalancedUnital {
  SeCertificate cert;
  UnitalVerdict verdict;
  bool witness_0_1 = false;  // unital_witness_holds(cert, 0, 1)
};

/// The lag-2 certificate (a, b, R = b, S = a) of a balanced elementary step.
/// Throws DomainError when the step itself does not verify.
BalancedUnital balanced_to_unital_se(const IntMatrix& a, const IntMatrix& b,
                                     const IntMatrix& s, const IntMatrix& r_a,
                                     const IntMatrix& r_b);

struct BoylePseReport {
  bool holds = false;  // product identity and both decompositions
  bool product_identity = false;
  /// U'(x; y) == (0; R^t x) + diag(I, I - B'^t)(W^t x - S^t y; y).
  bool first_decomposition = false;
  /// The same with preimage (x - S^t y; y), literally as displayed; exact
  /// only when W == I.
  bool first_decomposition_literal = false;
  /// [[0, I], [R^t, 0]](x; y) == (0; R^t x) + diag(I, I - B'^t)(y; 0).
  bool second_decomposition = false;
  IntMatrix w{1, 1};
  IntMatrix u_prime{1, 1};
  IntMatrix v_prime{1, 1};
  IntMatrix product{1, 1};  // U' diag(I - A'^t, I) V'
  IntMatrix target{1, 1};   // diag(I, I - B'^t)
};

/// Assembles the polynomial shift equivalence blocks with
/// W = I + A' + ... + A'^(lag-1) and checks them exactly.  Throws
/// DomainError unless cert is a verified SE from a_p to b_p.
BoylePseReport boyle_pse_identity(const IntMatrix& a_p, const IntMatrix& b_p,
                                  const SeCertificate& cert);

/// u m_a v == m_b and every diagonal block of u and v has determinant 1.
/// Throws DimensionError when the sizes disagree or the blocks do not sum
/// to the size.
bool verify_sl(const IntMatrix& u, const IntMatrix& v, const IntMatrix& m_a,
               const IntMatrix& m_b, const std::vector<std::size_t>& blocks);

/// verify_sl, and U (1 + v_a^t) == 1 + v_b^t modulo the columns of m_b.
bool verify_sl_plus(const IntMatrix& u, const IntMatrix& v,
                    const IntMatrix& m_a, const IntMatrix& m_b,
                    const IntVector& v_a, const IntVector& v_b,
                    const std::vector<std::size_t>& blocks);

}  // namespace sft
