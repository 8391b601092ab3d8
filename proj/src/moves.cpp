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

#include "sft/moves.hpp"

#include <algorithm>
#include <functional>
#include <map>

namespace sft {

bool is_division_matrix(const IntMatrix& d) {
  for (std::size_t i = 0; i < d.rows(); ++i) {
    bool has_one = false;
    for (std::size_t j = 0; j < d.cols(); ++j) {
      if (d(i, j) != 0 && d(i, j) != 1) return false;
      has_one = has_one || d(i, j) == 1;
    }
    if (!has_one) return false;
  }
  for (std::size_t j = 0; j < d.cols(); ++j) {
    int count = 0;
    for (std::size_t i = 0; i < d.rows(); ++i) count += d(i, j) == 1;
    if (count != 1) return false;
  }
  return true;
}

DivisionMatrix::DivisionMatrix(IntMatrix d) : d_(std::move(d)) {
  if (!is_division_matrix(d_)) {
    throw DomainError("not a division matrix: " + to_string(d_));
  }
}

DivisionMatrix DivisionMatrix::from_owner(const std::vector<std::size_t>& owner,
                                          std::size_t n) {
  IntMatrix d(n, owner.size());
  for (std::size_t k = 0; k < owner.size(); ++k) {
    if (owner[k] >= n) throw DimensionError("owner index out of range");
    d(owner[k], k) = 1;
  }
  return DivisionMatrix(std::move(d));
}

std::size_t DivisionMatrix::owner(std::size_t k) const {
  for (std::size_t i = 0; i < d_.rows(); ++i)
    if (d_(i, k) == 1) return i;
  throw DimensionError("column out of range");
}

OutsplitSpec OutsplitSpec::trivial(const IntMatrix& a) {
  OutsplitSpec spec;
  for (std::size_t i = 0; i < a.rows(); ++i) spec.parts.push_back({a.row(i)});
  return spec;
}

SplitResult apply_outsplit(const IntMatrix& a, const OutsplitSpec& spec) {
  require_square(a, "apply_outsplit");
  require_no_zero_rows(a, "apply_outsplit");
  const std::size_t n = a.rows();
  if (spec.parts.size() != n) {
    throw DomainError("outsplit spec must list parts for every vertex");
  }
  std::vector<std::size_t> owner;
  std::vector<IntVector> rows;
  for (std::size_t i = 0; i < n; ++i) {
    if (spec.parts[i].empty()) {
      throw DomainError("vertex " + std::to_string(i + 1) + " has no parts");
    }
    IntVector sum(n);
    for (const IntVector& part : spec.parts[i]) {
      if (part.size() != n) throw DomainError("part has the wrong length");
      bool nonzero = false;
      for (std::size_t j = 0; j < n; ++j) {
        if (part[j] < 0) throw DomainError("part has a negative entry");
        nonzero = nonzero || part[j] != 0;
        sum[j] += part[j];
      }
      if (!nonzero) {
        throw DomainError("vertex " + std::to_string(i + 1) +
                          " has a zero part");
      }
      owner.push_back(i);
      rows.push_back(part);
    }
    if (sum != a.row(i)) {
      throw DomainError("parts of vertex " + std::to_string(i + 1) +
                        " do not sum to its row");
    }
  }
  DivisionMatrix d = DivisionMatrix::from_owner(owner, n);
  IntMatrix e = IntMatrix::from_rows(rows);
  IntMatrix b = mat_mul(e, d.matrix());
  return {std::move(b), std::move(d), std::move(e)};
}

namespace {

std::vector<std::vector<std::size_t>> classes_by(
    std::size_t n, const std::function<IntVector(std::size_t)>& key) {
  std::map<IntVector, std::vector<std::size_t>> buckets;
  for (std::size_t i = 0; i < n; ++i) buckets[key(i)].push_back(i);
  std::vector<std::vector<std::size_t>> out;
  for (auto& [k, members] : buckets) out.push_back(std::move(members));
  std::sort(out.begin(), out.end(),
            [](const auto& x, const auto& y) { return x.front() < y.front(); });
  return out;
}

}  // namespace

std::vector<std::vector<std::size_t>> identical_column_classes(
    const IntMatrix& a) {
  return classes_by(a.cols(), [&](std::size_t j) { return a.col(j); });
}

std::vector<std::vector<std::size_t>> identical_row_classes(const IntMatrix& a) {
  return classes_by(a.rows(), [&](std::size_t i) { return a.row(i); });
}

AmalgamationResult amalgamate(
    const IntMatrix& a, const std::vector<std::vector<std::size_t>>& groups) {
  require_square(a, "amalgamate");
  const std::size_t n = a.rows();
  std::vector<std::size_t> group_of(n, n);
  std::vector<std::vector<std::size_t>> classes;
  for (const auto& g : groups) {
    if (g.empty()) continue;
    for (std::size_t v : g) {
      if (v >= n || group_of[v] != n) {
        throw DomainError("amalgamation groups overlap or are out of range");
      }
      group_of[v] = classes.size();
      if (a.col(v) != a.col(g.front())) {
        throw DomainError("amalgamated vertices must have identical columns");
      }
    }
    classes.push_back(g);
  }
  for (std::size_t v = 0; v < n; ++v)
    if (group_of[v] == n) classes.push_back({v});
  for (auto& c : classes) std::sort(c.begin(), c.end());
  std::sort(classes.begin(), classes.end(),
            [](const auto& x, const auto& y) { return x.front() < y.front(); });

  const std::size_t m = classes.size();
  IntMatrix d(m, n);
  IntMatrix e(n, m);
  for (std::size_t p = 0; p < m; ++p) {
    for (std::size_t v : classes[p]) d(p, v) = 1;
    for (std::size_t i = 0; i < n; ++i) e(i, p) = a(i, classes[p].front());
  }
  IntMatrix smaller = mat_mul(d, e);
  return {std::move(smaller), DivisionMatrix(std::move(d)), std::move(e)};
}

std::optional<AmalgamationResult> out_amalgamation_step(const IntMatrix& a) {
  require_square(a, "out_amalgamation_step");
  auto classes = identical_column_classes(a);
  if (classes.size() == a.rows()) return std::nullopt;
  return amalgamate(a, classes);
}

std::string kind_name(const Move& m) {
  struct Visitor {
    std::string operator()(const OutsplitMove&) const { return "outsplit"; }
    std::string operator()(const OutamalgamationMove&) const {
      return "outamalgamation";
    }
    std::string operator()(const BalancedElementaryMove&) const {
      return "balanced";
    }
  };
  return std::visit(Visitor{}, m.witness);
}

namespace {

// Product with shape checking folded into an optional.
std::optional<IntMatrix> try_mul(const IntMatrix& x, const IntMatrix& y) {
  if (x.cols() != y.rows()) return std::nullopt;
  return mat_mul(x, y);
}

bool equals_product(const IntMatrix& target, const IntMatrix& x,
                    const IntMatrix& y) {
  auto p = try_mul(x, y);
  return p && *p == target;
}

}  // namespace

std::optional<std::string> check_move(const Move& m) {
  if (auto* w = std::get_if<OutsplitMove>(&m.witness)) {
    if (!w->e.is_nonnegative()) return "E has a negative entry";
    if (!equals_product(m.from, w->d.matrix(), w->e)) return "from != D E";
    if (!equals_product(m.to, w->e, w->d.matrix())) return "to != E D";
    return std::nullopt;
  }
  if (auto* w = std::get_if<OutamalgamationMove>(&m.witness)) {
    if (!w->e.is_nonnegative()) return "E has a negative entry";
    if (!equals_product(m.from, w->e, w->d.matrix())) return "from != E D";
    if (!equals_product(m.to, w->d.matrix(), w->e)) return "to != D E";
    return std::nullopt;
  }
  const auto& w = std::get<BalancedElementaryMove>(m.witness);
  if (!w.s.is_nonnegative() || !w.r_from.is_nonnegative() ||
      !w.r_to.is_nonnegative()) {
    return "balanced witness has a negative entry";
  }
  if (!equals_product(m.from, w.s, w.r_from)) return "from != S R_from";
  if (!equals_product(m.to, w.s, w.r_to)) return "to != S R_to";
  auto left = try_mul(w.r_from, w.s);
  auto right = try_mul(w.r_to, w.s);
  if (!left || !right || *left != *right) return "R_from S != R_to S";
  return std::nullopt;
}

Move reversed(const Move& m) {
  struct Visitor {
    MoveWitness operator()(const OutsplitMove& w) const {
      return OutamalgamationMove{w.d, w.e};
    }
    MoveWitness operator()(const OutamalgamationMove& w) const {
      return OutsplitMove{w.d, w.e};
    }
    MoveWitness operator()(const BalancedElementaryMove& w) const {
      return BalancedElementaryMove{w.s, w.r_to, w.r_from};
    }
  };
  return Move{std::visit(Visitor{}, m.witness), m.to, m.from};
}

Move permutation_move(const IntMatrix& from,
                      const std::vector<std::size_t>& mapping) {
  require_square(from, "permutation_move");
  const std::size_t n = from.rows();
  if (mapping.size() != n) throw DimensionError("permutation size mismatch");
  IntMatrix p(n, n);
  for (std::size_t i = 0; i < n; ++i) p(mapping[i], i) = 1;
  DivisionMatrix d(p);
  IntMatrix e = mat_mul(p.transpose(), from);
  IntMatrix to = mat_mul(e, p);
  return Move{OutsplitMove{std::move(d), std::move(e)}, from, std::move(to)};
}

SequenceCheck verify_move_sequence(const MoveSequence& seq) {
  const IntMatrix* current = &seq.start;
  for (std::size_t i = 0; i < seq.steps.size(); ++i) {
    const Move& step = seq.steps[i];
    if (step.from != *current) {
      return {false, i, "step does not start where the previous one ended"};
    }
    if (auto failure = check_move(step)) {
      return {false, i, kind_name(step) + ": " + *failure};
    }
    current = &step.to;
  }
  return {};
}

TotalAmalgamation total_amalgamation(const IntMatrix& a) {
  require_square(a, "total_amalgamation");
  require_no_zero_rows(a, "total_amalgamation");
  TotalAmalgamation out{a, MoveSequence{a, {}}};
  while (auto step = out_amalgamation_step(out.total)) {
    Move move{OutamalgamationMove{step->d, step->e}, out.total, step->smaller};
    out.seq.steps.push_back(std::move(move));
    out.total = std::move(step->smaller);
  }
  return out;
}

bool verify_insplit(const IntMatrix& a, const IntMatrix& b,
                    const DivisionMatrix& d, const IntMatrix& e) {
  const IntMatrix dt = d.matrix().transpose();
  if (e.cols() != dt.rows() || dt.cols() != e.rows()) {
    throw DimensionError("verify_insplit: E and D^t do not compose");
  }
  if (a.rows() != e.rows() || b.rows() != dt.rows()) {
    throw DimensionError("verify_insplit: matrix sizes do not match D and E");
  }
  return mat_mul(e, dt) == a && mat_mul(dt, e) == b;
}

BalancedCheck verify_balanced_elementary(const IntMatrix& a,
                                         const IntMatrix& b,
                                         const IntMatrix& s,
                                         const IntMatrix& r_a,
                                         const IntMatrix& r_b) {
  if (s.cols() != r_a.rows() || s.cols() != r_b.rows() ||
      s.rows() != a.rows() || s.rows() != b.rows() || r_a.cols() != a.cols() ||
      r_b.cols() != b.cols() || r_a.cols() != s.rows()) {
    throw DimensionError("verify_balanced_elementary: shapes do not line up");
  }
  BalancedCheck out;
  out.s_is_division_transpose = is_division_matrix(s.transpose());
  out.valid = s.is_nonnegative() && r_a.is_nonnegative() &&
              r_b.is_nonnegative() && mat_mul(s, r_a) == a &&
              mat_mul(s, r_b) == b && mat_mul(r_a, s) == mat_mul(r_b, s);
  return out;
}

}  // namespace sft
