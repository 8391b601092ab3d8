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

// Random generators and brute-force oracles shared by the test binaries.
// None of the oracles call into the library beyond IntMatrix storage and
// mat_mul, so they stay independent of the code under test.

#pragma once

#include "sft/matrix.hpp"
#include "sft/moves.hpp"

#include <boost/integer/common_factor.hpp>

#include <algorithm>
#include <numeric>
#include <optional>
#include <random>
#include <vector>

namespace sft::testing {

inline constexpr std::uint64_t kSeed = 0x5eed'2026'0417ULL;

class Gen {
 public:
  explicit Gen(std::uint64_t seed = kSeed) : rng_(seed) {}

  std::size_t size(std::size_t lo, std::size_t hi) {
    return std::uniform_int_distribution<std::size_t>(lo, hi)(rng_);
  }
  long long entry(long long lo, long long hi) {
    return std::uniform_int_distribution<long long>(lo, hi)(rng_);
  }
  bool coin() { return entry(0, 1) == 1; }

  IntMatrix matrix(std::size_t rows, std::size_t cols, long long lo,
                   long long hi) {
    IntMatrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
      for (std::size_t j = 0; j < cols; ++j) m(i, j) = entry(lo, hi);
    return m;
  }

  /// Nonnegative, every row nonzero.
  IntMatrix graph(std::size_t n, long long max_entry) {
    IntMatrix m = matrix(n, n, 0, max_entry);
    for (std::size_t i = 0; i < n; ++i) {
      bool zero = true;
      for (std::size_t j = 0; j < n; ++j) zero = zero && m(i, j) == 0;
      if (zero) m(i, size(0, n - 1)) = entry(1, std::max(1LL, max_entry));
    }
    return m;
  }

  IntVector vector(std::size_t n, long long lo, long long hi) {
    IntVector v(n);
    for (auto& x : v) x = entry(lo, hi);
    return v;
  }

  std::vector<std::size_t> permutation(std::size_t n) {
    std::vector<std::size_t> p(n);
    std::iota(p.begin(), p.end(), 0);
    std::shuffle(p.begin(), p.end(), rng_);
    return p;
  }

  /// Splits each row of `a` into a random number of nonzero nonnegative
  /// parts, at most `extra` vertices beyond |a| in total.
  OutsplitSpec outsplit(const IntMatrix& a, std::size_t extra) {
    OutsplitSpec spec;
    for (std::size_t i = 0; i < a.rows(); ++i) {
      IntVector row = a.row(i);
      std::vector<IntVector> parts;
      while (extra > 0 && coin()) {
        // Peel off a random nonzero piece strictly smaller than what is left.
        IntVector piece(row.size(), 0);
        Integer left_total = 0, piece_total = 0;
        for (std::size_t j = 0; j < row.size(); ++j) {
          if (row[j] > 0) piece[j] = entry(0, static_cast<long long>(row[j]));
          left_total += row[j];
          piece_total += piece[j];
        }
        if (piece_total == 0 || piece_total == left_total) break;
        for (std::size_t j = 0; j < row.size(); ++j) row[j] -= piece[j];
        parts.push_back(std::move(piece));
        --extra;
      }
      parts.push_back(std::move(row));
      spec.parts.push_back(std::move(parts));
    }
    return spec;
  }

  std::mt19937_64& engine() { return rng_; }

 private:
  std::mt19937_64 rng_;
};

/// P^t m P with P(mapping[i], i) = 1, written out entry by entry.
inline IntMatrix permute(const IntMatrix& m,
                         const std::vector<std::size_t>& mapping) {
  IntMatrix out(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      out(i, j) = m(mapping[i], mapping[j]);
  return out;
}

/// Laplace expansion along the first row.
inline Integer cofactor_det(const IntMatrix& m) {
  const std::size_t n = m.rows();
  if (n == 1) return m(0, 0);
  Integer total = 0;
  for (std::size_t j = 0; j < n; ++j) {
    if (m(0, j) == 0) continue;
    IntMatrix minor(n - 1, n - 1);
    for (std::size_t r = 1; r < n; ++r)
      for (std::size_t c = 0, cc = 0; c < n; ++c)
        if (c != j) minor(r - 1, cc++) = m(r, c);
    const Integer term = m(0, j) * cofactor_det(minor);
    total += (j % 2 == 0) ? term : Integer(-term);
  }
  return total;
}

inline std::vector<std::vector<std::size_t>> subsets(std::size_t n,
                                                     std::size_t k) {
  std::vector<std::vector<std::size_t>> out;
  std::vector<bool> pick(n, false);
  std::fill(pick.begin(), pick.begin() + static_cast<long>(k), true);
  do {
    std::vector<std::size_t> s;
    for (std::size_t i = 0; i < n; ++i)
      if (pick[i]) s.push_back(i);
    out.push_back(s);
  } while (std::prev_permutation(pick.begin(), pick.end()));
  return out;
}

/// Invariant factors d_k / d_(k-1) where d_k is the gcd of all k x k minors.
/// Length min(rows, cols); zeros once the rank is exhausted.
inline IntVector invariant_factors_by_minors(const IntMatrix& m) {
  const std::size_t r = std::min(m.rows(), m.cols());
  IntVector det_div;
  for (std::size_t k = 1; k <= r; ++k) {
    Integer g = 0;
    for (const auto& rows : subsets(m.rows(), k))
      for (const auto& cols : subsets(m.cols(), k)) {
        IntMatrix sub(k, k);
        for (std::size_t i = 0; i < k; ++i)
          for (std::size_t j = 0; j < k; ++j) sub(i, j) = m(rows[i], cols[j]);
        g = boost::integer::gcd(g, Integer(abs(cofactor_det(sub))));
      }
    det_div.push_back(g);
  }
  IntVector out;
  Integer prev = 1;
  for (const Integer& d : det_div) {
    if (d == 0 || prev == 0) {
      out.push_back(0);
      prev = 0;
    } else {
      out.push_back(d / prev);
      prev = d;
    }
  }
  return out;
}

/// reach[i][j]: a walk of length >= 1 from i to j, by repeated squaring of
/// boolean matrices.
inline std::vector<std::vector<bool>> brute_reach(const IntMatrix& a) {
  const std::size_t n = a.rows();
  std::vector<std::vector<bool>> r(n, std::vector<bool>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) r[i][j] = a(i, j) != 0;
  for (std::size_t step = 0; step < n; ++step) {
    auto next = r;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t k = 0; k < n; ++k)
        if (r[i][k])
          for (std::size_t j = 0; j < n; ++j)
            if (r[k][j]) next[i][j] = true;
    r = next;
  }
  return r;
}

inline IntVector apply_transpose_power(const IntMatrix& a, IntVector v,
                                       std::size_t times) {
  const IntMatrix at = a.transpose();
  for (std::size_t t = 0; t < times; ++t) {
    IntVector w(v.size(), 0);
    for (std::size_t i = 0; i < v.size(); ++i)
      for (std::size_t j = 0; j < v.size(); ++j) w[i] += at(i, j) * v[j];
    v = std::move(w);
  }
  return v;
}

/// [x, s] ~ [y, t] over a: some l <= max(s, t) + 2|a| with
/// (A^t)^(l - s) x == (A^t)^(l - t) y.
inline bool brute_dim_equal(const IntMatrix& a, const IntVector& x,
                            std::size_t s, const IntVector& y, std::size_t t) {
  const std::size_t top = std::max(s, t);
  for (std::size_t l = top; l <= top + 2 * a.rows(); ++l) {
    if (apply_transpose_power(a, x, l - s) == apply_transpose_power(a, y, l - t))
      return true;
  }
  return false;
}

inline IntMatrix scalar(long long v) { return IntMatrix{{v}}; }

}  // namespace sft::testing
