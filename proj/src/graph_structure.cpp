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

#include "sft/graph_structure.hpp"

#include "sft/normal_form.hpp"

#include <algorithm>
#include <numeric>

namespace sft {

std::vector<std::pair<std::size_t, std::size_t>> ComponentPoset::order_pairs()
    const {
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t p = 0; p < size(); ++p)
    for (std::size_t q = 0; q < size(); ++q)
      if (leq[p][q]) pairs.emplace_back(p, q);
  return pairs;
}

std::vector<std::size_t> ComponentPoset::block_sizes() const {
  std::vector<std::size_t> sizes;
  for (const auto& c : components) sizes.push_back(c.size());
  return sizes;
}

std::vector<std::vector<bool>> reachability(const IntMatrix& a) {
  require_square(a, "reachability");
  const std::size_t n = a.rows();
  std::vector<std::vector<bool>> reach(n, std::vector<bool>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) reach[i][j] = a(i, j) != 0;
  // Warshall closure.
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      if (reach[i][k])
        for (std::size_t j = 0; j < n; ++j)
          if (reach[k][j]) reach[i][j] = true;
  return reach;
}

ComponentPoset scc_poset(const IntMatrix& a) {
  require_square(a, "scc_poset");
  const std::size_t n = a.rows();
  const auto reach = reachability(a);

  std::vector<std::size_t> comp_of(n, n);
  std::vector<std::vector<std::size_t>> comps;
  for (std::size_t i = 0; i < n; ++i) {
    if (comp_of[i] != n) continue;
    std::vector<std::size_t> c{i};
    comp_of[i] = comps.size();
    for (std::size_t j = i + 1; j < n; ++j) {
      if (comp_of[j] == n && reach[i][j] && reach[j][i]) {
        comp_of[j] = comps.size();
        c.push_back(j);
      }
    }
    comps.push_back(std::move(c));
  }

  const std::size_t m = comps.size();
  std::vector<std::vector<bool>> below(m, std::vector<bool>(m));
  for (std::size_t p = 0; p < m; ++p) {
    below[p][p] = true;
    for (std::size_t q = 0; q < m; ++q)
      if (p != q && reach[comps[p].front()][comps[q].front()]) below[p][q] = true;
  }

  // Kahn's algorithm; comps are already indexed by smallest vertex, so the
  // lowest ready index breaks ties.
  std::vector<std::size_t> indegree(m, 0);
  for (std::size_t p = 0; p < m; ++p)
    for (std::size_t q = 0; q < m; ++q)
      if (p != q && below[p][q]) ++indegree[q];
  std::vector<std::size_t> order;
  std::vector<bool> done(m, false);
  while (order.size() < m) {
    std::size_t next = m;
    for (std::size_t p = 0; p < m; ++p)
      if (!done[p] && indegree[p] == 0) {
        next = p;
        break;
      }
    done[next] = true;
    order.push_back(next);
    for (std::size_t q = 0; q < m; ++q)
      if (q != next && below[next][q]) --indegree[q];
  }

  ComponentPoset poset;
  for (std::size_t p : order) poset.components.push_back(comps[p]);
  poset.leq.assign(m, std::vector<bool>(m));
  for (std::size_t p = 0; p < m; ++p)
    for (std::size_t q = 0; q < m; ++q)
      poset.leq[p][q] = below[order[p]][order[q]];
  return poset;
}

bool is_irreducible(const IntMatrix& a) {
  if (!a.is_square()) return false;
  const auto reach = reachability(a);
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.rows(); ++j)
      if (!reach[i][j]) return false;
  return true;
}

RowColProfile row_col_profile(const IntMatrix& a) {
  RowColProfile p;
  for (std::size_t i = 0; i < a.rows(); ++i) {
    bool zero = true;
    for (std::size_t j = 0; j < a.cols() && zero; ++j) zero = a(i, j) == 0;
    p.has_zero_row = p.has_zero_row || zero;
  }
  for (std::size_t j = 0; j < a.cols(); ++j) {
    bool zero = true;
    for (std::size_t i = 0; i < a.rows() && zero; ++i) zero = a(i, j) == 0;
    p.has_zero_col = p.has_zero_col || zero;
  }
  return p;
}

namespace {

IntMatrix principal_submatrix(const IntMatrix& a,
                              const std::vector<std::size_t>& idx) {
  IntMatrix b(idx.size(), idx.size());
  for (std::size_t i = 0; i < idx.size(); ++i)
    for (std::size_t j = 0; j < idx.size(); ++j) b(i, j) = a(idx[i], idx[j]);
  return b;
}

std::string vertex_label(std::size_t i) { return std::to_string(i + 1); }

}  // namespace

CanonicalFormReport is_canonical_form(const IntMatrix& a) {
  require_square(a, "is_canonical_form");
  const std::size_t n = a.rows();
  CanonicalFormReport report;
  const ComponentPoset poset = scc_poset(a);

  // Layout check: components contiguous and in topological order.
  std::vector<std::size_t> laid_out;
  for (const auto& c : poset.components)
    laid_out.insert(laid_out.end(), c.begin(), c.end());
  std::vector<std::size_t> natural(n);
  std::iota(natural.begin(), natural.end(), 0);
  report.block_layout = laid_out == natural;

  for (std::size_t i = 0; i < n; ++i) {
    if (a(i, i) <= 0) {
      report.positive_diagonal = false;
      report.violations.push_back("clause 1: diagonal entry " +
                                  vertex_label(i) + " is not positive");
    }
  }

  const auto reach = reachability(a);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (reach[i][j] && a(i, j) <= 0) {
        report.closure_saturated = false;
        report.violations.push_back("clause 2: " + vertex_label(i) +
                                    " reaches " + vertex_label(j) +
                                    " but the entry is zero");
      }
    }
  }

  for (std::size_t p = 0; p < poset.size(); ++p) {
    const auto& comp = poset.components[p];
    IntMatrix block = principal_submatrix(a, comp);
    if (!is_irreducible(block)) continue;  // only irreducible blocks
    if (block.rows() == 1 && block(0, 0) == 1) continue;
    std::string where = "clause 3: block " + std::to_string(p + 1);
    if (block.rows() < 3) {
      report.diagonal_blocks_ok = false;
      report.violations.push_back(where +
                                  " is neither (1) nor of dimension >= 3");
      continue;
    }
    const auto snf = smith_normal_form(block);
    auto unit_count = std::count(snf.diag.begin(), snf.diag.end(), Integer(1));
    if (unit_count < 2) {
      report.diagonal_blocks_ok = false;
      report.violations.push_back(where +
                                  " has fewer than two ones in its Smith form");
    }
    for (std::size_t i = 0; i < block.rows(); ++i) {
      if (block(i, i) < 2) {
        report.diagonal_blocks_ok = false;
        report.violations.push_back(where + " has a diagonal entry below 2");
        break;
      }
    }
  }
  return report;
}

bool is_standard_form_pair(const IntMatrix& a, const IntMatrix& b) {
  if (!is_canonical_form(a).holds() || !is_canonical_form(b).holds()) {
    return false;
  }
  const ComponentPoset pa = scc_poset(a);
  const ComponentPoset pb = scc_poset(b);
  return pa.size() == pb.size() && pa.leq == pb.leq &&
         pa.block_sizes() == pb.block_sizes();
}

}  // namespace sft
