#pragma once

// Small dense matrices over the Laurent ring (numeric tensors such as the
// epsilon metric and the sigma set) and over NCPoly (matrices of algebra
// elements such as T, T^dagger and representation matrices).

#include <stdexcept>
#include <string>
#include <vector>

#include "qlorentz/laurent.hpp"
#include "qlorentz/ncalg.hpp"

namespace qlorentz {

template <class T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, const T& fill) : rows_(rows), cols_(cols), data_(rows * cols, fill) {}
  Matrix(std::size_t rows, std::size_t cols, std::vector<T> data)
      : rows_(rows), cols_(cols), data_(std::move(data)) {
    if (data_.size() != rows * cols) throw std::invalid_argument("Matrix: data size mismatch");
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  T& operator()(std::size_t r, std::size_t c) { return data_.at(r * cols_ + c); }
  const T& operator()(std::size_t r, std::size_t c) const { return data_.at(r * cols_ + c); }
  const std::vector<T>& data() const { return data_; }

  Matrix transpose() const {
    Matrix t(cols_, rows_, data_.front());
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    return t;
  }

  template <class F>
  auto map(F&& f) const -> Matrix<decltype(f(std::declval<const T&>()))> {
    using U = decltype(f(std::declval<const T&>()));
    std::vector<U> out;
    out.reserve(data_.size());
    for (const auto& x : data_) out.push_back(f(x));
    return Matrix<U>(rows_, cols_, std::move(out));
  }

  friend Matrix operator*(const Matrix& x, const Matrix& y) {
    if (x.cols_ != y.rows_) throw std::invalid_argument("Matrix product: shape mismatch");
    std::vector<T> out;
    out.reserve(x.rows_ * y.cols_);
    for (std::size_t r = 0; r < x.rows_; ++r)
      for (std::size_t c = 0; c < y.cols_; ++c) {
        T acc = x(r, 0) * y(0, c);
        for (std::size_t k = 1; k < x.cols_; ++k) acc += x(r, k) * y(k, c);
        out.push_back(std::move(acc));
      }
    return Matrix(x.rows_, y.cols_, std::move(out));
  }

  friend Matrix operator+(Matrix x, const Matrix& y) {
    if (x.rows_ != y.rows_ || x.cols_ != y.cols_) throw std::invalid_argument("Matrix sum: shape mismatch");
    for (std::size_t k = 0; k < x.data_.size(); ++k) x.data_[k] += y.data_[k];
    return x;
  }

  friend Matrix operator-(Matrix x, const Matrix& y) {
    if (x.rows_ != y.rows_ || x.cols_ != y.cols_) throw std::invalid_argument("Matrix difference: shape mismatch");
    for (std::size_t k = 0; k < x.data_.size(); ++k) x.data_[k] -= y.data_[k];
    return x;
  }

  Matrix operator-() const {
    return map([](const T& v) { return -v; });
  }

  friend bool operator==(const Matrix& x, const Matrix& y) {
    return x.rows_ == y.rows_ && x.cols_ == y.cols_ && x.data_ == y.data_;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

using LMatrix = Matrix<Laurent>;
using NCMatrix = Matrix<NCPoly>;

LMatrix l_identity(std::size_t n);
LMatrix l_diag(const std::vector<Laurent>& d);
Laurent trace(const LMatrix& m);
NCPoly trace(const NCMatrix& m);
/// Exact inverse; throws std::domain_error unless the determinant is a unit
/// (a monomial) of the Laurent ring.
LMatrix inverse(const LMatrix& m);
Laurent determinant(const LMatrix& m);

NCMatrix nc_identity(const AlgebraPtr& alg, std::size_t n);
NCMatrix lift(const LMatrix& m, const AlgebraPtr& alg);
/// Matrix of generators, row-major names.
NCMatrix generator_matrix(const AlgebraPtr& alg, const std::vector<std::string>& names, std::size_t rows,
                          std::size_t cols);
NCMatrix operator*(const LMatrix& x, const NCMatrix& y);
NCMatrix operator*(const NCMatrix& x, const LMatrix& y);
/// Entrywise star followed by transpose.
NCMatrix dagger(const NCMatrix& m);
NCMatrix reduce_unimodular(const NCMatrix& m);
bool is_zero(const NCMatrix& m);
/// True when every entry is a pure scalar.
bool is_numeric(const NCMatrix& m);

std::string to_string(const LMatrix& m);
std::string to_string(const NCMatrix& m);

template <class T>
std::ostream& operator<<(std::ostream& os, const Matrix<T>& m) {
  return os << to_string(m);
}

}  // namespace qlorentz
