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

#include "sft/dimension.hpp"

#include <algorithm>

namespace sft {
namespace {

void require_element(const DimElement& x) {
  require_square(x.base, "dimension element");
  if (x.vec.size() != x.base.rows()) {
    throw DimensionError("dimension element vector has length " +
                         std::to_string(x.vec.size()) + ", expected " +
                         std::to_string(x.base.rows()));
  }
}

bool nonnegative(const IntVector& v) {
  return std::all_of(v.begin(), v.end(), [](const Integer& x) { return x >= 0; });
}

}  // namespace

DimElement unit_element(const IntMatrix& a) {
  require_square(a, "unit_element");
  return DimElement{a, ones(a.rows()), 0};
}

bool dim_elem_equal(const DimElement& x, const DimElement& y) {
  require_element(x);
  require_element(y);
  if (!(x.base == y.base)) {
    throw DomainError("dim_elem_equal: elements live over different matrices");
  }
  const std::size_t n = x.base.rows();
  const std::size_t top = std::max(x.stage, y.stage);
  const IntMatrix at = x.base.transpose();
  const auto lhs = mat_vec(mat_pow(at, static_cast<unsigned>(top - x.stage + n)), x.vec);
  const auto rhs = mat_vec(mat_pow(at, static_cast<unsigned>(top - y.stage + n)), y.vec);
  return lhs == rhs;
}

DimElement theta_apply(const DimElement& x) {
  require_element(x);
  return DimElement{x.base, mat_vec(x.base.transpose(), x.vec), x.stage};
}

DimElement stage_shift(const DimElement& x) {
  require_element(x);
  return DimElement{x.base, x.vec, x.stage + 1};
}

std::optional<std::size_t> positivity_witness(const DimElement& x,
                                              std::size_t l_max) {
  require_element(x);
  const IntMatrix at = x.base.transpose();
  IntVector v = x.vec;
  for (std::size_t l = 0;; ++l) {
    if (nonnegative(v)) return l;
    if (l == l_max) return std::nullopt;
    v = mat_vec(at, v);
  }
}

DimElement induced_dim_map(const IntMatrix& r, const DimElement& x,
                           const IntMatrix& target) {
  require_element(x);
  require_square(target, "induced_dim_map");
  if (r.rows() != x.base.rows() || r.cols() != target.rows()) {
    throw DimensionError("induced_dim_map: R must be |A| x |B|");
  }
  return DimElement{target, mat_vec(r.transpose(), x.vec), x.stage};
}

Integer reduce_mod(const Integer& x, const Integer& d) {
  if (d == 0) return x;
  const Integer m = boost::multiprecision::abs(d);
  Integer r = x % m;
  if (r < 0) r += m;
  return r;
}

Cokernel::Cokernel(const IntMatrix& m, PivotStrategy strategy)
    : snf_(smith_normal_form(m, strategy)),
      factors_(m.rows(), Integer(0)) {
  for (std::size_t i = 0; i < snf_.diag.size(); ++i) factors_[i] = snf_.diag[i];
  for (std::size_t i = 0; i < factors_.size(); ++i)
    if (factors_[i] != 1) summands_.push_back(i);
}

IntVector Cokernel::nontrivial_factors() const {
  IntVector out;
  for (std::size_t i : summands_) out.push_back(factors_[i]);
  return out;
}

IntVector Cokernel::classify(const IntVector& v) const {
  IntVector c = mat_vec(snf_.left, v);
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = reduce_mod(c[i], factors_[i]);
  return c;
}

IntVector Cokernel::reduced_class(const IntVector& v) const {
  const IntVector c = classify(v);
  IntVector out;
  for (std::size_t i : summands_) out.push_back(c[i]);
  return out;
}

IntVector Cokernel::generator(std::size_t index) const {
  return snf_.left_inverse.col(summands_.at(index));
}

IntMatrix bowen_franks_matrix(const IntMatrix& a) {
  require_square(a, "bowen_franks");
  return IntMatrix::identity(a.rows()) - a.transpose();
}

BowenFranksData bowen_franks(const IntMatrix& a, PivotStrategy strategy) {
  const IntMatrix m = bowen_franks_matrix(a);
  const Cokernel coker(m, strategy);
  return BowenFranksData{coker.factors(), coker.classify(ones(a.rows())),
                         det_sign(m)};
}

IntVector BfInducedMap::apply(const IntVector& source_class) const {
  if (source_class.size() != images.size()) {
    throw DimensionError("BfInducedMap::apply: class length mismatch");
  }
  IntVector out(target_factors.size(), Integer(0));
  for (std::size_t j = 0; j < images.size(); ++j)
    for (std::size_t i = 0; i < out.size(); ++i)
      out[i] += source_class[j] * images[j][i];
  for (std::size_t i = 0; i < out.size(); ++i)
    out[i] = reduce_mod(out[i], target_factors[i]);
  return out;
}

namespace {

void require_bf_shapes(const IntMatrix& r, const IntMatrix& a,
                       const IntMatrix& b) {
  require_square(a, "bf_induced_map");
  require_square(b, "bf_induced_map");
  if (r.rows() != a.rows() || r.cols() != b.rows()) {
    throw DimensionError("R must be |A| x |B|");
  }
}

// Surjectivity of the induced map: the images together with the relations
// of the target generate the whole target group.
bool generates(const std::vector<IntVector>& images, const IntVector& factors) {
  const std::size_t rows = factors.size();
  if (rows == 0) return true;
  IntMatrix m(rows, images.size() + rows);
  for (std::size_t j = 0; j < images.size(); ++j)
    for (std::size_t i = 0; i < rows; ++i) m(i, j) = images[j][i];
  for (std::size_t i = 0; i < rows; ++i) m(i, images.size() + i) = factors[i];
  const auto snf = smith_normal_form(m);
  return std::all_of(snf.diag.begin(), snf.diag.end(),
                     [](const Integer& d) { return d == 1; });
}

}  // namespace

BfInducedMap bf_induced_map(const IntMatrix& r, const IntMatrix& a,
                            const IntMatrix& b) {
  require_bf_shapes(r, a, b);
  const Cokernel src(bowen_franks_matrix(a));
  const Cokernel dst(bowen_franks_matrix(b));
  const IntMatrix rt = r.transpose();

  BfInducedMap map;
  map.source_factors = src.nontrivial_factors();
  map.target_factors = dst.nontrivial_factors();
  for (std::size_t j = 0; j < src.summands().size(); ++j)
    map.images.push_back(dst.reduced_class(mat_vec(rt, src.generator(j))));

  const IntMatrix rel = bowen_franks_matrix(a);
  const IntVector zero(map.target_factors.size(), Integer(0));
  map.well_defined = true;
  for (std::size_t j = 0; j < rel.cols() && map.well_defined; ++j)
    map.well_defined = dst.reduced_class(mat_vec(rt, rel.col(j))) == zero;

  map.is_isomorphism = map.well_defined &&
                       map.source_factors == map.target_factors &&
                       generates(map.images, map.target_factors);
  return map;
}

CommutingSquareCheck check_commuting_square(const IntMatrix& r,
                                            const IntMatrix& a,
                                            const IntMatrix& b) {
  require_bf_shapes(r, a, b);
  const Cokernel src(bowen_franks_matrix(a));
  const Cokernel dst(bowen_franks_matrix(b));
  const BfInducedMap map = bf_induced_map(r, a, b);
  const IntMatrix rt = r.transpose();
  for (std::size_t i = 0; i < a.rows(); ++i) {
    IntVector e(a.rows(), Integer(0));
    e[i] = 1;
    if (dst.reduced_class(mat_vec(rt, e)) != map.apply(src.reduced_class(e))) {
      return CommutingSquareCheck{false, i};
    }
  }
  return CommutingSquareCheck{true, std::nullopt};
}

}  // namespace sft
