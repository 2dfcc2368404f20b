#pragma once

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <optional>
#include <utility>
#include <vector>

#include "tropjac/error.hpp"
#include "tropjac/rational.hpp"

namespace tropjac {

/// Dense row-major matrix over an exact field or ring.
template <typename T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  Matrix(std::initializer_list<std::initializer_list<T>> init) {
    rows_ = init.size();
    cols_ = rows_ == 0 ? 0 : init.begin()->size();
    data_.reserve(rows_ * cols_);
    for (const auto& row : init) {
      if (row.size() != cols_) throw Error(ErrorCode::InvalidInput, "ragged matrix literal");
      data_.insert(data_.end(), row.begin(), row.end());
    }
  }

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
    return m;
  }

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows_ == cols_; }

  T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  std::vector<T> row(std::size_t i) const {
    return std::vector<T>(data_.begin() + i * cols_, data_.begin() + (i + 1) * cols_);
  }
  std::vector<T> column(std::size_t j) const {
    std::vector<T> out(rows_);
    for (std::size_t i = 0; i < rows_; ++i) out[i] = (*this)(i, j);
    return out;
  }

  Matrix transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  bool is_symmetric() const {
    if (!is_square()) return false;
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = i + 1; j < cols_; ++j)
        if ((*this)(i, j) != (*this)(j, i)) return false;
    return true;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw Error(ErrorCode::InvalidInput, "matrix shape mismatch");
    Matrix c(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        if (a(i, k) == 0) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) += a(i, k) * b(k, j);
      }
    return c;
  }

  friend std::vector<T> operator*(const Matrix& a, const std::vector<T>& x) {
    if (a.cols_ != x.size()) throw Error(ErrorCode::InvalidInput, "matrix/vector shape mismatch");
    std::vector<T> y(a.rows_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t j = 0; j < a.cols_; ++j) y[i] += a(i, j) * x[j];
    return y;
  }

  friend Matrix operator*(const T& s, Matrix m) {
    for (auto& v : m.data_) v *= s;
    return m;
  }

  friend Matrix operator+(Matrix a, const Matrix& b) {
    for (std::size_t k = 0; k < a.data_.size(); ++k) a.data_[k] += b.data_[k];
    return a;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

using RatMatrix = Matrix<Rational>;

template <typename T>
T dot(const std::vector<T>& a, const std::vector<T>& b) {
  T s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

template <typename T>
std::vector<T> operator+(std::vector<T> a, const std::vector<T>& b) {
  for (std::size_t i = 0; i < a.size(); ++i) a[i] += b[i];
  return a;
}

template <typename T>
std::vector<T> operator-(std::vector<T> a, const std::vector<T>& b) {
  for (std::size_t i = 0; i < a.size(); ++i) a[i] -= b[i];
  return a;
}

template <typename T>
std::vector<T> operator*(const T& s, std::vector<T> a) {
  for (auto& v : a) v *= s;
  return a;
}

inline RatVector to_rational(const IntVector& n) {
  RatVector out;
  out.reserve(n.size());
  for (auto v : n) out.emplace_back(v);
  return out;
}

/// Exact inverse by Gauss-Jordan elimination; nullopt if singular.
inline std::optional<RatMatrix> inverse(const RatMatrix& m) {
  if (!m.is_square()) throw Error(ErrorCode::InvalidInput, "inverse of non-square matrix");
  const std::size_t n = m.rows();
  RatMatrix a = m;
  RatMatrix inv = RatMatrix::identity(n);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && a(pivot, col) == 0) ++pivot;
    if (pivot == n) return std::nullopt;
    if (pivot != col)
      for (std::size_t j = 0; j < n; ++j) {
        std::swap(a(pivot, j), a(col, j));
        std::swap(inv(pivot, j), inv(col, j));
      }
    const Rational p = a(col, col);
    for (std::size_t j = 0; j < n; ++j) {
      a(col, j) /= p;
      inv(col, j) /= p;
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == col || a(i, col) == 0) continue;
      const Rational f = a(i, col);
      for (std::size_t j = 0; j < n; ++j) {
        a(i, j) -= f * a(col, j);
        inv(i, j) -= f * inv(col, j);
      }
    }
  }
  return inv;
}

/// Rank over Q by row reduction.
inline std::size_t rank(RatMatrix a) {
  std::size_t r = 0;
  for (std::size_t col = 0; col < a.cols() && r < a.rows(); ++col) {
    std::size_t pivot = r;
    while (pivot < a.rows() && a(pivot, col) == 0) ++pivot;
    if (pivot == a.rows()) continue;
    for (std::size_t j = 0; j < a.cols(); ++j) std::swap(a(pivot, j), a(r, j));
    for (std::size_t i = r + 1; i < a.rows(); ++i) {
      if (a(i, col) == 0) continue;
      const Rational f = a(i, col) / a(r, col);
      for (std::size_t j = col; j < a.cols(); ++j) a(i, j) -= f * a(r, j);
    }
    ++r;
  }
  return r;
}

/// Leading principal minors det(A[0..k, 0..k]) for k = 1..n, exactly.
inline std::vector<Rational> leading_principal_minors(const RatMatrix& m) {
  // Without pivoting, the k-th pivot of Gaussian elimination is minor_k / minor_{k-1};
  // once a pivot vanishes the remaining minors are computed directly.
  const std::size_t n = m.rows();
  std::vector<Rational> minors;
  RatMatrix a = m;
  Rational running = 1;
  for (std::size_t k = 0; k < n; ++k) {
    if (a(k, k) == 0) {
      for (std::size_t rest = k; rest < n; ++rest) {
        RatMatrix sub(rest + 1, rest + 1);
        for (std::size_t i = 0; i <= rest; ++i)
          for (std::size_t j = 0; j <= rest; ++j) sub(i, j) = m(i, j);
        // det via elimination with pivoting
        Rational det = 1;
        for (std::size_t c = 0; c <= rest; ++c) {
          std::size_t p = c;
          while (p <= rest && sub(p, c) == 0) ++p;
          if (p > rest) {
            det = 0;
            break;
          }
          if (p != c) {
            for (std::size_t j = 0; j <= rest; ++j) std::swap(sub(p, j), sub(c, j));
            det = -det;
          }
          det *= sub(c, c);
          for (std::size_t i = c + 1; i <= rest; ++i) {
            if (sub(i, c) == 0) continue;
            const Rational f = sub(i, c) / sub(c, c);
            for (std::size_t j = c; j <= rest; ++j) sub(i, j) -= f * sub(c, j);
          }
        }
        minors.push_back(det);
      }
      return minors;
    }
    running *= a(k, k);
    minors.push_back(running);
    for (std::size_t i = k + 1; i < n; ++i) {
      if (a(i, k) == 0) continue;
      const Rational f = a(i, k) / a(k, k);
      for (std::size_t j = k; j < n; ++j) a(i, j) -= f * a(k, j);
    }
  }
  return minors;
}

/// Sylvester's criterion, exact.
inline bool is_positive_definite(const RatMatrix& m) {
  if (!m.is_symmetric()) return false;
  const auto minors = leading_principal_minors(m);
  return std::all_of(minors.begin(), minors.end(), [](const Rational& d) { return d > 0; });
}

}  // namespace tropjac
