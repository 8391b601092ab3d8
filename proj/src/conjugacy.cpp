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

#include "sft/conjugacy.hpp"

#include <algorithm>
#include <numeric>
#include <tuple>

namespace sft {

PermWitness PermWitness::identity(std::size_t n) {
  PermWitness p;
  p.mapping.resize(n);
  std::iota(p.mapping.begin(), p.mapping.end(), 0);
  return p;
}

IntMatrix PermWitness::apply(const IntMatrix& m) const {
  if (!m.is_square() || m.rows() != mapping.size()) {
    throw DimensionError("permutation size does not match matrix");
  }
  IntMatrix out(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      out(i, j) = m(mapping[i], mapping[j]);
  return out;
}

PermWitness PermWitness::inverse() const {
  PermWitness inv;
  inv.mapping.resize(mapping.size());
  for (std::size_t i = 0; i < mapping.size(); ++i) inv.mapping[mapping[i]] = i;
  return inv;
}

PermWitness PermWitness::then(const PermWitness& next) const {
  PermWitness out;
  out.mapping.resize(mapping.size());
  for (std::size_t i = 0; i < mapping.size(); ++i)
    out.mapping[i] = mapping[next.mapping[i]];
  return out;
}

namespace {

using VertexInvariant = std::vector<std::tuple<Integer, IntVector, IntVector>>;

std::vector<VertexInvariant> vertex_invariants(std::span<const IntMatrix> ms) {
  const std::size_t n = ms.front().rows();
  std::vector<VertexInvariant> inv(n);
  for (const IntMatrix& m : ms) {
    for (std::size_t v = 0; v < n; ++v) {
      IntVector r = m.row(v), c = m.col(v);
      std::sort(r.begin(), r.end());
      std::sort(c.begin(), c.end());
      inv[v].emplace_back(m(v, v), std::move(r), std::move(c));
    }
  }
  return inv;
}

class PermutationSearch {
 public:
  PermutationSearch(std::span<const IntMatrix> as, std::span<const IntMatrix> bs)
      : as_(as), bs_(bs), n_(as.front().rows()) {
    inv_a_ = vertex_invariants(as);
    inv_b_ = vertex_invariants(bs);
    // Target vertices with the fewest candidates go first.
    candidates_.resize(n_);
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t v = 0; v < n_; ++v)
        if (inv_b_[i] == inv_a_[v]) candidates_[i].push_back(v);
    order_.resize(n_);
    std::iota(order_.begin(), order_.end(), 0);
    std::stable_sort(order_.begin(), order_.end(), [&](auto x, auto y) {
      return candidates_[x].size() < candidates_[y].size();
    });
  }

  std::optional<PermWitness> run() {
    for (const auto& c : candidates_)
      if (c.empty()) return std::nullopt;
    sigma_.assign(n_, n_);
    used_.assign(n_, false);
    if (!extend(0)) return std::nullopt;
    return PermWitness{sigma_};
  }

 private:
  bool consistent(std::size_t i, std::size_t v) const {
    for (std::size_t k = 0; k < as_.size(); ++k) {
      const IntMatrix& a = as_[k];
      const IntMatrix& b = bs_[k];
      if (b(i, i) != a(v, v)) return false;
      for (std::size_t j = 0; j < n_; ++j) {
        if (sigma_[j] == n_) continue;
        if (b(i, j) != a(v, sigma_[j]) || b(j, i) != a(sigma_[j], v)) {
          return false;
        }
      }
    }
    return true;
  }

  bool extend(std::size_t depth) {
    if (depth == n_) return true;
    const std::size_t i = order_[depth];
    for (std::size_t v : candidates_[i]) {
      if (used_[v] || !consistent(i, v)) continue;
      sigma_[i] = v;
      used_[v] = true;
      if (extend(depth + 1)) return true;
      sigma_[i] = n_;
      used_[v] = false;
    }
    return false;
  }

  std::span<const IntMatrix> as_;
  std::span<const IntMatrix> bs_;
  std::size_t n_;
  std::vector<VertexInvariant> inv_a_, inv_b_;
  std::vector<std::vector<std::size_t>> candidates_;
  std::vector<std::size_t> order_;
  std::vector<std::size_t> sigma_;
  std::vector<bool> used_;
};

}  // namespace

std::optional<PermWitness> simultaneous_permutation(
    std::span<const IntMatrix> as, std::span<const IntMatrix> bs) {
  if (as.size() != bs.size() || as.empty()) {
    throw DimensionError("simultaneous_permutation: unequal matrix lists");
  }
  const std::size_t n = as.front().rows();
  for (const auto& m : as) {
    require_square(m, "simultaneous_permutation");
    if (m.rows() != n) throw DimensionError("source matrices differ in size");
  }
  const std::size_t nb = bs.front().rows();
  for (const auto& m : bs) {
    require_square(m, "simultaneous_permutation");
    if (m.rows() != nb) throw DimensionError("target matrices differ in size");
  }
  if (n != nb) return std::nullopt;
  return PermutationSearch(as, bs).run();
}

std::optional<PermWitness> permutation_equivalent(const IntMatrix& a,
                                                  const IntMatrix& b) {
  if (!a.is_square() || !b.is_square() || a.rows() != b.rows()) {
    return std::nullopt;
  }
  return simultaneous_permutation(std::span(&a, 1), std::span(&b, 1));
}

std::optional<PermWitness> joint_permutation_equivalent(const IntMatrix& a1,
                                                        const IntMatrix& a2,
                                                        const IntMatrix& b1,
                                                        const IntMatrix& b2) {
  if (a1.rows() != a2.rows() || b1.rows() != b2.rows()) {
    throw DimensionError("joint_permutation_equivalent: paired sizes differ");
  }
  const IntMatrix as[] = {a1, a2};
  const IntMatrix bs[] = {b1, b2};
  return simultaneous_permutation(as, bs);
}

ConjugacyCertificate one_sided_conjugate(const IntMatrix& a,
                                         const IntMatrix& b) {
  ConjugacyCertificate cert{false, total_amalgamation(a), total_amalgamation(b),
                            std::nullopt};
  cert.witness = permutation_equivalent(cert.total_a.total, cert.total_b.total);
  cert.conjugate = cert.witness.has_value();
  return cert;
}

HigherPowersReport conjugate_higher_powers(const IntMatrix& a,
                                           const IntMatrix& b,
                                           std::optional<unsigned> n) {
  require_square(a, "conjugate_higher_powers");
  require_square(b, "conjugate_higher_powers");
  require_no_zero_rows(a, "conjugate_higher_powers");
  require_no_zero_rows(b, "conjugate_higher_powers");
  const auto floor = static_cast<unsigned>(std::max(a.rows(), b.rows()));
  if (n && *n < floor) {
    throw DomainError("power " + std::to_string(*n) +
                      " is below max(|A|, |B|) = " + std::to_string(floor));
  }
  HigherPowersReport r;
  r.n = n.value_or(floor);
  r.total_a_n = total_amalgamation(mat_pow(a, r.n)).total;
  r.total_a_n1 = total_amalgamation(mat_pow(a, r.n + 1)).total;
  r.total_b_n = total_amalgamation(mat_pow(b, r.n)).total;
  r.total_b_n1 = total_amalgamation(mat_pow(b, r.n + 1)).total;

  if (r.total_a_n.rows() == r.total_a_n1.rows() &&
      r.total_b_n.rows() == r.total_b_n1.rows()) {
    r.interpretation = PowerInterpretation::kJoint;
    r.witness_n = joint_permutation_equivalent(r.total_a_n, r.total_a_n1,
                                               r.total_b_n, r.total_b_n1);
    r.witness_n1 = r.witness_n;
    r.agree = r.witness_n.has_value();
    if (!r.agree) {
      r.reason = "no single permutation carries the totals of A^" +
                 std::to_string(r.n) + " and A^" + std::to_string(r.n + 1) +
                 " onto those of B";
    }
    return r;
  }
  r.interpretation = PowerInterpretation::kSeparate;
  r.witness_n = permutation_equivalent(r.total_a_n, r.total_b_n);
  r.witness_n1 = permutation_equivalent(r.total_a_n1, r.total_b_n1);
  r.agree = r.witness_n && r.witness_n1;
  if (!r.witness_n) {
    r.reason = "total amalgamations of the " + std::to_string(r.n) +
               "-th powers differ";
  } else if (!r.witness_n1) {
    r.reason = "total amalgamations of the " + std::to_string(r.n + 1) +
               "-th powers differ";
  }
  return r;
}

const char* to_string(PowerInterpretation p) {
  return p == PowerInterpretation::kJoint ? "joint" : "separate";
}

}  // namespace sft
