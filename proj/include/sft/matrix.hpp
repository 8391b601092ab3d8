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

#include <boost/multiprecision/cpp_int.hpp>

#include <cstddef>
#include <initializer_list>
#include <iosfwd>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace sft {

using Integer = boost::multiprecision::cpp_int;
using IntVector = std::vector<Integer>;

/// Raised when operand shapes are incompatible.
class DimensionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Raised when an operation's precondition on values fails (non-square
/// input, zero rows, an unverified certificate, ...).
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Dense row-major matrix of arbitrary-precision integers.  Always at least
/// 1x1.
class IntMatrix {
 public:
  IntMatrix(std::size_t rows, std::size_t cols);
  IntMatrix(std::initializer_list<std::initializer_list<long long>> rows);

  static IntMatrix from_rows(const std::vector<IntVector>& rows);
  static IntMatrix identity(std::size_t n);
  static IntMatrix filled(std::size_t rows, std::size_t cols,
                          const Integer& value);
  /// n x 1 matrix holding v.
  static IntMatrix column(const IntVector& v);
  /// 1 x n matrix holding v.
  static IntMatrix row_vector(const IntVector& v);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  const Integer& operator()(std::size_t i, std::size_t j) const {
    return data_[i * cols_ + j];
  }
  Integer& operator()(std::size_t i, std::size_t j) {
    return data_[i * cols_ + j];
  }

  std::span<const Integer> entries() const { return data_; }
  IntVector row(std::size_t i) const;
  IntVector col(std::size_t j) const;

  IntMatrix transpose() const;
  /// Rectangular sub-block [r0, r0+nr) x [c0, c0+nc).
  IntMatrix block(std::size_t r0, std::size_t c0, std::size_t nr,
                  std::size_t nc) const;
  void set_block(std::size_t r0, std::size_t c0, const IntMatrix& b);

  bool is_nonnegative() const;
  bool is_zero() const;
  Integer entry_sum() const;
  Integer max_entry() const;

  bool operator==(const IntMatrix& other) const = default;

 private:
  std::size_t rows_;
  std::size_t cols_;
  IntVector data_;
};

IntMatrix mat_mul(const IntMatrix& a, const IntMatrix& b);
/// Exponentiation by squaring; a^0 is the identity.
IntMatrix mat_pow(const IntMatrix& a, unsigned n);
IntVector mat_vec(const IntMatrix& a, const IntVector& v);

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
IntMatrix operator+(const IntMatrix& a, const IntMatrix& b);
IntMatrix operator-(const IntMatrix& a, const IntMatrix& b);
IntMatrix operator-(const IntMatrix& a);
IntMatrix operator*(const Integer& c, const IntMatrix& a);

/// Block matrix [[a, b], [c, d]]; shapes must tile.
IntMatrix block2x2(const IntMatrix& a, const IntMatrix& b, const IntMatrix& c,
                   const IntMatrix& d);

IntVector ones(std::size_t n);

void require_square(const IntMatrix& a, const char* what);
void require_no_zero_rows(const IntMatrix& a, const char* what);

std::string to_string(const IntMatrix& a);
std::ostream& operator<<(std::ostream& os, const IntMatrix& a);

}  // namespace sft
