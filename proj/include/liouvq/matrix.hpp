// Copyright 2026 The liouvq Authors
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

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <type_traits>
#include <vector>

#include "liouvq/errors.hpp"

namespace liouvq {

using Complex = std::complex<double>;

/// Dense row-major matrix. Value semantics, no aliasing tricks.
template <typename Scalar>
class Dense {
 public:
  Dense() = default;
  Dense(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols, Scalar{}) {}

  static Dense identity(std::size_t n) {
    Dense m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = Scalar{1};
    return m;
  }

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  std::size_t size() const noexcept { return data_.size(); }
  bool empty() const noexcept { return data_.empty(); }

  Scalar& operator()(std::size_t i, std::size_t j) noexcept {
    return data_[i * cols_ + j];
  }
  const Scalar& operator()(std::size_t i, std::size_t j) const noexcept {
    return data_[i * cols_ + j];
  }

  Scalar* data() noexcept { return data_.data(); }
  const Scalar* data() const noexcept { return data_.data(); }
  Scalar* row(std::size_t i) noexcept { return data_.data() + i * cols_; }
  const Scalar* row(std::size_t i) const noexcept {
    return data_.data() + i * cols_;
  }

  Dense transpose() const {
    Dense out(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) out(j, i) = (*this)(i, j);
    return out;
  }

  Dense conjugate() const {
    Dense out(rows_, cols_);
    for (std::size_t k = 0; k < data_.size(); ++k)
      out.data_[k] = conj_scalar(data_[k]);
    return out;
  }

  Dense adjoint() const {
    Dense out(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j)
        out(j, i) = conj_scalar((*this)(i, j));
    return out;
  }

  Dense block(std::size_t i0, std::size_t j0, std::size_t r,
              std::size_t c) const {
    Dense out(r, c);
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < c; ++j) out(i, j) = (*this)(i0 + i, j0 + j);
    return out;
  }

  void set_block(std::size_t i0, std::size_t j0, const Dense& b) {
    for (std::size_t i = 0; i < b.rows(); ++i)
      for (std::size_t j = 0; j < b.cols(); ++j)
        (*this)(i0 + i, j0 + j) = b(i, j);
  }

  double max_abs() const {
    double m = 0.0;
    for (const Scalar& v : data_) m = std::max(m, std::abs(v));
    return m;
  }

  double frobenius_norm() const {
    double s = 0.0;
    for (const Scalar& v : data_) s += std::norm(Complex(v));
    return std::sqrt(s);
  }

  Dense& operator+=(const Dense& o) {
    require_same_shape(o);
    for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += o.data_[k];
    return *this;
  }
  Dense& operator-=(const Dense& o) {
    require_same_shape(o);
    for (std::size_t k = 0; k < data_.size(); ++k) data_[k] -= o.data_[k];
    return *this;
  }
  Dense& operator*=(Scalar a) {
    for (Scalar& v : data_) v *= a;
    return *this;
  }

  friend Dense operator+(Dense a, const Dense& b) { return a += b; }
  friend Dense operator-(Dense a, const Dense& b) { return a -= b; }
  friend Dense operator*(Scalar a, Dense m) { return m *= a; }
  friend Dense operator*(Dense m, Scalar a) { return m *= a; }

  friend bool operator==(const Dense& a, const Dense& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  static Scalar conj_scalar(const Scalar& v) {
    if constexpr (std::is_same_v<Scalar, Complex>)
      return std::conj(v);
    else
      return v;
  }

  void require_same_shape(const Dense& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_)
      throw Error(ErrorCode::DimensionMismatch,
                  "matrix shapes differ in elementwise operation");
  }

  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Scalar> data_;
};

using ComplexMatrix = Dense<Complex>;
using RealMatrix = Dense<double>;

inline ComplexMatrix to_complex(const RealMatrix& m) {
  ComplexMatrix out(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = Complex(m(i, j), 0.0);
  return out;
}

}  // namespace liouvq
