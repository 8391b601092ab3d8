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

#include "sft/normal_form.hpp"

#include <optional>
#include <sstream>
#include <utility>

namespace sft {
namespace {

using boost::multiprecision::abs;

// Working state for the Smith reduction.  Every row operation on `m` is
// mirrored on `u` (and inversely on `u_inv`), every column operation on `v`.
struct SnfState {
  IntMatrix m;
  IntMatrix u;
  IntMatrix u_inv;
  IntMatrix v;

  explicit SnfState(const IntMatrix& input)
      : m(input),
        u(IntMatrix::identity(input.rows())),
        u_inv(IntMatrix::identity(input.rows())),
        v(IntMatrix::identity(input.cols())) {}

  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(a, j), m(b, j));
    for (std::size_t j = 0; j < u.cols(); ++j) std::swap(u(a, j), u(b, j));
    for (std::size_t i = 0; i < u_inv.rows(); ++i)
      std::swap(u_inv(i, a), u_inv(i, b));
  }

  void swap_cols(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t i = 0; i < m.rows(); ++i) std::swap(m(i, a), m(i, b));
    for (std::size_t i = 0; i < v.rows(); ++i) std::swap(v(i, a), v(i, b));
  }

  // row_dst += k * row_src
  void add_row(std::size_t dst, std::size_t src, const Integer& k) {
    if (k == 0) return;
    for (std::size_t j = 0; j < m.cols(); ++j) m(dst, j) += k * m(src, j);
    for (std::size_t j = 0; j < u.cols(); ++j) u(dst, j) += k * u(src, j);
    for (std::size_t i = 0; i < u_inv.rows(); ++i)
      u_inv(i, src) -= k * u_inv(i, dst);
  }

  // col_dst += k * col_src
  void add_col(std::size_t dst, std::size_t src, const Integer& k) {
    if (k == 0) return;
    for (std::size_t i = 0; i < m.rows(); ++i) m(i, dst) += k * m(i, src);
    for (std::size_t i = 0; i < v.rows(); ++i) v(i, dst) += k * v(i, src);
  }

  void negate_row(std::size_t r) {
    for (std::size_t j = 0; j < m.cols(); ++j) m(r, j) = -m(r, j);
    for (std::size_t j = 0; j < u.cols(); ++j) u(r, j) = -u(r, j);
    for (std::size_t i = 0; i < u_inv.rows(); ++i) u_inv(i, r) = -u_inv(i, r);
  }

  // Rows (t, i) <- [[x, y], [-b/g, a/g]] * rows (t, i), where
  // a = m(t, col), b = m(i, col), g = x*a + y*b = gcd(a, b).  Determinant 1.
  void bezout_rows(std::size_t t, std::size_t i, const Integer& x,
                   const Integer& y, const Integer& ag, const Integer& bg) {
    auto mix = [&](IntMatrix& w) {
      for (std::size_t j = 0; j < w.cols(); ++j) {
        Integer top = x * w(t, j) + y * w(i, j);
        Integer bot = ag * w(i, j) - bg * w(t, j);
        w(t, j) = std::move(top);
        w(i, j) = std::move(bot);
      }
    };
    mix(m);
    mix(u);
    // Inverse transform [[a/g, -y], [b/g, x]] applied on the right.
    for (std::size_t r = 0; r < u_inv.rows(); ++r) {
      Integer ct = ag * u_inv(r, t) + bg * u_inv(r, i);
      Integer ci = -y * u_inv(r, t) + x * u_inv(r, i);
      u_inv(r, t) = std::move(ct);
      u_inv(r, i) = std::move(ci);
    }
  }

  // Columns (t, j) <- columns (t, j) * [[x, -b/g], [y, a/g]].
  void bezout_cols(std::size_t t, std::size_t j, const Integer& x,
                   const Integer& y, const Integer& ag, const Integer& bg) {
    auto mix = [&](IntMatrix& w) {
      for (std::size_t r = 0; r < w.rows(); ++r) {
        Integer left = x * w(r, t) + y * w(r, j);
        Integer right = ag * w(r, j) - bg * w(r, t);
        w(r, t) = std::move(left);
        w(r, j) = std::move(right);
      }
    };
    mix(m);
    mix(v);
  }
};

struct Egcd {
  Integer g, x, y;
};

// g = x*a + y*b with g = gcd(a, b) >= 0.
Egcd extended_gcd(Integer a, Integer b) {
  Integer x0 = 1, y0 = 0, x1 = 0, y1 = 1;
  while (b != 0) {
    Integer q = a / b;
    Integer r = a - q * b;
    a = std::move(b);
    b = std::move(r);
    Integer nx = x0 - q * x1;
    x0 = std::move(x1);
    x1 = std::move(nx);
    Integer ny = y0 - q * y1;
    y0 = std::move(y1);
    y1 = std::move(ny);
  }
  if (a < 0) return {-a, -x0, -y0};
  return {a, x0, y0};
}

std::optional<std::pair<std::size_t, std::size_t>> find_pivot(
    const IntMatrix& m, std::size_t t, PivotStrategy strategy) {
  std::optional<std::pair<std::size_t, std::size_t>> best;
  if (strategy == PivotStrategy::kBezout) {
    for (std::size_t j = t; j < m.cols(); ++j)
      for (std::size_t i = t; i < m.rows(); ++i)
        if (m(i, j) != 0) return std::pair{i, j};
    return best;
  }
  for (std::size_t i = t; i < m.rows(); ++i) {
    for (std::size_t j = t; j < m.cols(); ++j) {
      if (m(i, j) == 0) continue;
      if (!best || abs(m(i, j)) < abs(m(best->first, best->second))) {
        best = std::pair{i, j};
      }
    }
  }
  return best;
}

// Returns false when the remaining submatrix is zero.
bool place_pivot(SnfState& s, std::size_t t, PivotStrategy strategy) {
  auto p = find_pivot(s.m, t, strategy);
  if (!p) return false;
  s.swap_rows(t, p->first);
  s.swap_cols(t, p->second);
  return true;
}

// Clears row t and column t outside the pivot.  Returns true when both are
// clear.
bool clear_cross(SnfState& s, std::size_t t, PivotStrategy strategy) {
  IntMatrix& m = s.m;
  bool clear = true;
  for (std::size_t i = t + 1; i < m.rows(); ++i) {
    if (m(i, t) == 0) continue;
    if (strategy == PivotStrategy::kBezout && m(i, t) % m(t, t) != 0) {
      Egcd e = extended_gcd(m(t, t), m(i, t));
      Integer ag = m(t, t) / e.g;
      Integer bg = m(i, t) / e.g;
      s.bezout_rows(t, i, e.x, e.y, ag, bg);
    } else {
      s.add_row(i, t, -(m(i, t) / m(t, t)));
    }
    if (m(i, t) != 0) clear = false;
  }
  for (std::size_t j = t + 1; j < m.cols(); ++j) {
    if (m(t, j) == 0) continue;
    if (strategy == PivotStrategy::kBezout && m(t, j) % m(t, t) != 0) {
      Egcd e = extended_gcd(m(t, t), m(t, j));
      Integer ag = m(t, t) / e.g;
      Integer bg = m(t, j) / e.g;
      s.bezout_cols(t, j, e.x, e.y, ag, bg);
      // Column t may have picked up entries below the pivot again.
      for (std::size_t i = t + 1; i < m.rows() && clear; ++i)
        if (m(i, t) != 0) clear = false;
    } else {
      s.add_col(j, t, -(m(t, j) / m(t, t)));
    }
    if (m(t, j) != 0) clear = false;
  }
  return clear;
}

}  // namespace

IntMatrix SnfDecomposition::diagonal_matrix(std::size_t rows,
                                            std::size_t cols) const {
  IntMatrix d(rows, cols);
  for (std::size_t i = 0; i < diag.size(); ++i) d(i, i) = diag[i];
  return d;
}

SnfDecomposition smith_normal_form(const IntMatrix& input,
                                   PivotStrategy strategy) {
  SnfState s(input);
  const std::size_t n = std::min(input.rows(), input.cols());
  for (std::size_t t = 0; t < n; ++t) {
    if (!place_pivot(s, t, strategy)) break;
    for (;;) {
      if (!clear_cross(s, t, strategy)) {
        if (strategy == PivotStrategy::kSmallestMagnitude) {
          place_pivot(s, t, strategy);
        }
        continue;
      }
      // Enforce d_t | every remaining entry.
      std::optional<std::size_t> offender;
      for (std::size_t i = t + 1; i < s.m.rows() && !offender; ++i)
        for (std::size_t j = t + 1; j < s.m.cols(); ++j)
          if (s.m(i, j) % s.m(t, t) != 0) {
            offender = i;
            break;
          }
      if (!offender) break;
      s.add_row(t, *offender, 1);
    }
    if (s.m(t, t) < 0) s.negate_row(t);
  }
  SnfDecomposition out{s.u, s.u_inv, IntVector(n), s.v};
  for (std::size_t i = 0; i < n; ++i) out.diag[i] = s.m(i, i);
  return out;
}

Integer determinant(const IntMatrix& m) {
  require_square(m, "determinant");
  const std::size_t n = m.rows();
  IntMatrix a = m;
  Integer prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && a(p, k) == 0) ++p;
      if (p == n) return 0;
      for (std::size_t j = 0; j < n; ++j) std::swap(a(k, j), a(p, j));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        a(i, j) = (a(i, j) * a(k, k) - a(i, k) * a(k, j)) / prev;
      }
      a(i, k) = 0;
    }
    prev = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

Sign det_sign(const IntMatrix& m) {
  Integer d = determinant(m);
  if (d < 0) return Sign::kNegative;
  if (d > 0) return Sign::kPositive;
  return Sign::kZero;
}

int to_int(Sign s) { return static_cast<int>(s); }

IntPolynomial::IntPolynomial(IntVector coefficients)
    : coeffs_(std::move(coefficients)) {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

std::size_t IntPolynomial::x_valuation() const {
  std::size_t v = 0;
  while (v < coeffs_.size() && coeffs_[v] == 0) ++v;
  return v;
}

IntPolynomial IntPolynomial::without_x_factors() const {
  return IntPolynomial(IntVector(coeffs_.begin() + x_valuation(), coeffs_.end()));
}

std::string to_string(const IntPolynomial& p) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int d = p.degree(); d >= 0; --d) {
    const Integer& c = p.coefficients()[d];
    if (c == 0) continue;
    Integer mag = c < 0 ? Integer(-c) : c;
    if (first) {
      if (c < 0) os << '-';
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (mag != 1 || d == 0) os << mag;
    if (d >= 1) os << 'x';
    if (d >= 2) os << '^' << d;
  }
  return os.str();
}

IntPolynomial char_poly(const IntMatrix& a) {
  require_square(a, "char_poly");
  const std::size_t n = a.rows();
  IntVector c(n + 1);
  c[n] = 1;
  IntMatrix m(n, n);  // M_0 = 0
  for (std::size_t k = 1; k <= n; ++k) {
    m = mat_mul(a, m);
    for (std::size_t i = 0; i < n; ++i) m(i, i) += c[n - k + 1];
    IntMatrix am = mat_mul(a, m);
    Integer trace = 0;
    for (std::size_t i = 0; i < n; ++i) trace += am(i, i);
    c[n - k] = -trace / static_cast<long long>(k);
  }
  return IntPolynomial(std::move(c));
}

bool agree_up_to_x_factors(const IntPolynomial& p, const IntPolynomial& q) {
  return p.without_x_factors() == q.without_x_factors();
}

}  // namespace sft
