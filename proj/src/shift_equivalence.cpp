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

#include "sft/shift_equivalence.hpp"

#include "sft/dimension.hpp"
#include "sft/normal_form.hpp"

#include <algorithm>
#include <set>
#include <variant>

namespace sft {
namespace {

std::string shape(const IntMatrix& m) {
  return std::to_string(m.rows()) + "x" + std::to_string(m.cols());
}

void require_shapes(const SeCertificate& c) {
  require_square(c.a, "shift equivalence");
  require_square(c.b, "shift equivalence");
  if (c.lag == 0) throw DimensionError("lag must be positive");
  if (c.r.rows() != c.a.rows() || c.r.cols() != c.b.rows()) {
    throw DimensionError("R is " + shape(c.r) + ", expected " +
                         std::to_string(c.a.rows()) + "x" +
                         std::to_string(c.b.rows()));
  }
  if (c.s.rows() != c.b.rows() || c.s.cols() != c.a.rows()) {
    throw DimensionError("S is " + shape(c.s) + ", expected " +
                         std::to_string(c.b.rows()) + "x" +
                         std::to_string(c.a.rows()));
  }
}

void require_verified(const SeCertificate& c, const char* what) {
  const SeCheck check = verify_se(c);
  if (!check.ok()) {
    throw DomainError(std::string(what) + ": certificate does not verify (" +
                      check.detail + ")");
  }
}

Integer sum(const IntVector& v) {
  Integer s = 0;
  for (const auto& x : v) s += x;
  return s;
}

bool has_zero_line(const IntMatrix& m, bool columns) {
  const std::size_t n = columns ? m.cols() : m.rows();
  for (std::size_t i = 0; i < n; ++i) {
    const IntVector line = columns ? m.col(i) : m.row(i);
    if (std::all_of(line.begin(), line.end(),
                    [](const Integer& x) { return x == 0; })) {
      return true;
    }
  }
  return false;
}

}  // namespace

SeCheck verify_se(const SeCertificate& c) {
  require_shapes(c);
  if (!c.r.is_nonnegative()) return {SeStatus::kNegativeEntry, "R has a negative entry"};
  if (!c.s.is_nonnegative()) return {SeStatus::kNegativeEntry, "S has a negative entry"};
  const std::string l = std::to_string(c.lag);
  if (!(mat_pow(c.a, c.lag) == c.r * c.s)) {
    return {SeStatus::kEquationFailed, "A^" + l + " != R S"};
  }
  if (!(mat_pow(c.b, c.lag) == c.s * c.r)) {
    return {SeStatus::kEquationFailed, "B^" + l + " != S R"};
  }
  if (!(c.a * c.r == c.r * c.b)) return {SeStatus::kEquationFailed, "A R != R B"};
  if (!(c.b * c.s == c.s * c.a)) return {SeStatus::kEquationFailed, "B S != S A"};
  return {};
}

SeCertificate compose(const SeCertificate& ab, const SeCertificate& bc) {
  if (!(ab.b == bc.a)) {
    throw DimensionError("compose: middle matrices differ");
  }
  return SeCertificate{ab.a, bc.b, ab.r * bc.r, bc.s * ab.s, ab.lag + bc.lag};
}

SeCertificate reversed(const SeCertificate& c) {
  return SeCertificate{c.b, c.a, c.s, c.r, c.lag};
}

SeCertificate certificate_for_move(const Move& move) {
  struct Visitor {
    const Move& m;
    SeCertificate operator()(const OutsplitMove& w) const {
      return {m.from, m.to, w.d.matrix(), w.e, 1};
    }
    SeCertificate operator()(const OutamalgamationMove& w) const {
      return {m.from, m.to, w.e, w.d.matrix(), 1};
    }
    SeCertificate operator()(const BalancedElementaryMove&) const {
      return {m.from, m.to, m.to, m.from, 2};
    }
  };
  return std::visit(Visitor{move}, move.witness);
}

SeCertificate certificate_for_sequence(const MoveSequence& seq) {
  if (seq.steps.empty()) {
    const auto n = seq.start.rows();
    return {seq.start, seq.start, IntMatrix::identity(n), seq.start, 1};
  }
  SeCertificate out = certificate_for_move(seq.steps.front());
  for (std::size_t i = 1; i < seq.steps.size(); ++i)
    out = compose(out, certificate_for_move(seq.steps[i]));
  return out;
}

bool unital_witness_holds(const SeCertificate& c, std::size_t m,
                          std::size_t k) {
  require_shapes(c);
  const IntMatrix bt = c.b.transpose();
  const IntVector x = mat_vec(c.r.transpose(), ones(c.a.rows()));
  const auto lhs = mat_vec(mat_pow(bt, static_cast<unsigned>(m)), x);
  const auto rhs = mat_vec(mat_pow(bt, static_cast<unsigned>(m + k)),
                           ones(c.b.rows()));
  return lhs == rhs;
}

const char* to_string(UnitalVerdict::Outcome o) {
  switch (o) {
    case UnitalVerdict::Outcome::kYes: return "yes";
    case UnitalVerdict::Outcome::kNo: return "no";
    case UnitalVerdict::Outcome::kInconclusive: return "inconclusive";
  }
  return "inconclusive";
}

UnitalVerdict unital_condition(const SeCertificate& c,
                               std::optional<std::size_t> k_max,
                               bool diagnostics) {
  require_verified(c, "unital_condition");
  using Outcome = UnitalVerdict::Outcome;
  UnitalVerdict v;
  if (diagnostics) {
    v.reversed_outcome = unital_condition(reversed(c), k_max, false).outcome;
  }

  const std::size_t n = c.b.rows();
  const std::size_t bound =
      k_max.value_or(2 * (c.a.rows() + c.b.rows()) + c.lag);
  const IntMatrix bt = c.b.transpose();
  const IntVector x = mat_vec(c.r.transpose(), ones(c.a.rows()));

  // B^t acts as the identity on BF(B), so every c_k sits in the class of 1.
  const Cokernel bf(bowen_franks_matrix(c.b));
  if (bf.reduced_class(x) != bf.reduced_class(ones(n))) {
    v.outcome = Outcome::kNo;
    v.reason = "R^t 1 and 1 lie in different Bowen-Franks classes of B";
    return v;
  }

  const IntMatrix btn = mat_pow(bt, static_cast<unsigned>(n));
  const IntVector t = mat_vec(btn, x);
  const Integer t_sum = sum(t);
  const bool monotone = !has_zero_line(c.b, true) || !has_zero_line(c.b, false);
  std::set<IntVector> seen;
  IntVector ck = mat_vec(btn, ones(n));
  for (std::size_t k = 0; k <= bound; ++k) {
    if (ck == t) {
      // Smallest m for this k; m = n always works by the match above.
      std::size_t m = 0;
      IntVector lhs = x;
      IntVector rhs = mat_vec(mat_pow(bt, static_cast<unsigned>(k)), ones(n));
      while (lhs != rhs) {
        lhs = mat_vec(bt, lhs);
        rhs = mat_vec(bt, rhs);
        ++m;
      }
      v.outcome = Outcome::kYes;
      v.m = m;
      v.k = k;
      return v;
    }
    if (monotone && sum(ck) > t_sum) {
      v.outcome = Outcome::kNo;
      v.reason = "entry sum of (B^t)^(n+k) 1 exceeds that of (B^t)^n R^t 1 at k = " +
                 std::to_string(k) + " and is nondecreasing from there";
      return v;
    }
    if (!seen.insert(ck).second) {
      v.outcome = Outcome::kNo;
      v.reason = "the orbit (B^t)^(n+k) 1 became periodic at k = " +
                 std::to_string(k) + " without meeting (B^t)^n R^t 1";
      return v;
    }
    ck = mat_vec(bt, ck);
  }
  v.outcome = Outcome::kInconclusive;
  v.bound = bound;
  return v;
}

BalancedUnital balanced_to_unital_se(const IntMatrix& a, const IntMatrix& b,
                                     const IntMatrix& s, const IntMatrix& r_a,
                                     const IntMatrix& r_b) {
  if (!verify_balanced_elementary(a, b, s, r_a, r_b).valid) {
    throw DomainError("balanced_to_unital_se: not a balanced elementary step");
  }
  BalancedUnital out;
  out.cert = SeCertificate{a, b, b, a, 2};
  require_verified(out.cert, "balanced_to_unital_se");
  out.verdict = unital_condition(out.cert);
  out.witness_0_1 = unital_witness_holds(out.cert, 0, 1);
  return out;
}

BoylePseReport boyle_pse_identity(const IntMatrix& a_p, const IntMatrix& b_p,
                                  const SeCertificate& cert) {
  if (!(cert.a == a_p) || !(cert.b == b_p)) {
    throw DomainError("boyle_pse_identity: certificate is for other matrices");
  }
  require_verified(cert, "boyle_pse_identity");
  const std::size_t n = a_p.rows();
  const std::size_t m = b_p.rows();
  const IntMatrix in = IntMatrix::identity(n);
  const IntMatrix im = IntMatrix::identity(m);
  const IntMatrix zero_nm(n, m), zero_mn(m, n);
  const IntMatrix rt = cert.r.transpose();
  const IntMatrix st = cert.s.transpose();
  const IntMatrix i_bt = im - b_p.transpose();

  BoylePseReport rep;
  rep.w = in;
  IntMatrix power = in;
  for (unsigned i = 1; i < cert.lag; ++i) {
    power = power * a_p;
    rep.w = rep.w + power;
  }
  const IntMatrix wt = rep.w.transpose();
  rep.u_prime = block2x2(wt, -st, rt, i_bt);
  rep.v_prime = block2x2(in, st, -rt, i_bt);
  const IntMatrix middle = block2x2(in - a_p.transpose(), zero_nm, zero_mn, im);
  rep.target = block2x2(in, zero_nm, zero_mn, i_bt);
  rep.product = rep.u_prime * middle * rep.v_prime;
  rep.product_identity = rep.product == rep.target;

  // Rectangular identity in the top-right block so unequal sizes type-check.
  IntMatrix top_right(n, m);
  for (std::size_t i = 0; i < std::min(n, m); ++i) top_right(i, i) = 1;
  const IntMatrix swap =
      block2x2(IntMatrix(n, n), top_right, rt, IntMatrix(m, m));
  rep.first_decomposition = true;
  rep.first_decomposition_literal = true;
  rep.second_decomposition = true;
  for (std::size_t i = 0; i < n + m; ++i) {
    IntVector e(n + m, Integer(0));
    e[i] = 1;
    const IntVector x(e.begin(), e.begin() + n);
    const IntVector y(e.begin() + n, e.end());
    const IntVector rx = mat_vec(rt, x);
    const IntVector sy = mat_vec(st, y);
    auto rhs = [&](const IntVector& top, const IntVector& bottom) {
      IntVector out(n + m, Integer(0));
      IntVector pre = top;
      pre.insert(pre.end(), bottom.begin(), bottom.end());
      const IntVector image = mat_vec(rep.target, pre);
      for (std::size_t j = 0; j < n + m; ++j) out[j] = image[j];
      for (std::size_t j = 0; j < m; ++j) out[n + j] += rx[j];
      return out;
    };
    const IntVector ux = mat_vec(rep.u_prime, e);
    IntVector pre_w = mat_vec(wt, x), pre_lit = x;
    for (std::size_t j = 0; j < n; ++j) {
      pre_w[j] -= sy[j];
      pre_lit[j] -= sy[j];
    }
    rep.first_decomposition &= ux == rhs(pre_w, y);
    rep.first_decomposition_literal &= ux == rhs(pre_lit, y);
    rep.second_decomposition &=
        mat_vec(swap, e) == rhs(mat_vec(top_right, y), IntVector(m, Integer(0)));
  }
  rep.holds = rep.product_identity && rep.first_decomposition &&
              rep.second_decomposition;
  return rep;
}

bool verify_sl(const IntMatrix& u, const IntMatrix& v, const IntMatrix& m_a,
               const IntMatrix& m_b, const std::vector<std::size_t>& blocks) {
  require_square(u, "verify_sl");
  require_square(v, "verify_sl");
  require_square(m_a, "verify_sl");
  require_square(m_b, "verify_sl");
  const std::size_t n = m_a.rows();
  if (u.rows() != n || v.rows() != n || m_b.rows() != n) {
    throw DimensionError("verify_sl: matrices differ in size");
  }
  std::size_t total = 0;
  for (auto b : blocks) {
    if (b == 0) throw DimensionError("verify_sl: empty block");
    total += b;
  }
  if (total != n) {
    throw DimensionError("verify_sl: block sizes sum to " +
                         std::to_string(total) + ", expected " +
                         std::to_string(n));
  }
  if (!(u * m_a * v == m_b)) return false;
  std::size_t offset = 0;
  for (auto b : blocks) {
    if (determinant(u.block(offset, offset, b, b)) != 1) return false;
    if (determinant(v.block(offset, offset, b, b)) != 1) return false;
    offset += b;
  }
  return true;
}

bool verify_sl_plus(const IntMatrix& u, const IntMatrix& v,
                    const IntMatrix& m_a, const IntMatrix& m_b,
                    const IntVector& v_a, const IntVector& v_b,
                    const std::vector<std::size_t>& blocks) {
  const bool sl = verify_sl(u, v, m_a, m_b, blocks);
  const std::size_t n = m_a.rows();
  if (v_a.size() != n || v_b.size() != n) {
    throw DimensionError("verify_sl_plus: unit vectors have the wrong length");
  }
  if (!sl) return false;
  IntVector wa = ones(n), wb = ones(n);
  for (std::size_t i = 0; i < n; ++i) {
    wa[i] += v_a[i];
    wb[i] += v_b[i];
  }
  const Cokernel coker(m_b);
  return coker.classify(mat_vec(u, wa)) == coker.classify(wb);
}

}  // namespace sft
