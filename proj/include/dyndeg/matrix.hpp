#ifndef DYNDEG_MATRIX_HPP
#define DYNDEG_MATRIX_HPP

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "dyndeg/error.hpp"
#include "dyndeg/scalar.hpp"

namespace dyndeg {

/// Dense row-major matrix over a ring T.
template <class T>
class Matrix {
 public:
  using value_type = T;

  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, const T& fill = T{})
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}
  Matrix(std::initializer_list<std::initializer_list<T>> rows) {
    rows_ = rows.size();
    cols_ = rows_ == 0 ? 0 : rows.begin()->size();
    data_.reserve(rows_ * cols_);
    for (const auto& row : rows) {
      if (row.size() != cols_) {
        throw Error(ErrorCode::ShapeMismatch, "ragged initializer");
      }
      data_.insert(data_.end(), row.begin(), row.end());
    }
  }

  static Matrix identity(std::size_t n) {
    Matrix m(n, n, T(0));
    for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
    return m;
  }

  static Matrix diagonal(const std::vector<T>& entries) {
    Matrix m(entries.size(), entries.size(), T(0));
    for (std::size_t i = 0; i < entries.size(); ++i) m(i, i) = entries[i];
    return m;
  }

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  std::size_t size() const noexcept { return data_.size(); }
  bool is_square() const noexcept { return rows_ == cols_; }

  T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  std::span<const T> data() const noexcept { return data_; }
  std::span<T> data() noexcept { return data_; }

  Matrix& operator+=(const Matrix& o) {
    require_same_shape(o);
    for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += o.data_[k];
    return *this;
  }
  Matrix& operator-=(const Matrix& o) {
    require_same_shape(o);
    for (std::size_t k = 0; k < data_.size(); ++k) data_[k] -= o.data_[k];
    return *this;
  }
  Matrix& operator*=(const T& s) {
    for (auto& x : data_) x *= s;
    return *this;
  }

  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
  friend Matrix operator*(Matrix a, const T& s) { return a *= s; }
  friend Matrix operator*(const T& s, const Matrix& a) {
    Matrix out(a.rows_, a.cols_);
    for (std::size_t k = 0; k < a.data_.size(); ++k) out.data_[k] = s * a.data_[k];
    return out;
  }
  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) {
      throw Error(ErrorCode::ShapeMismatch, "product of " + a.shape() + " and " + b.shape());
    }
    Matrix out(a.rows_, b.cols_, T(0));
    for (std::size_t i = 0; i < a.rows_; ++i) {
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const T& aik = a(i, k);
        for (std::size_t j = 0; j < b.cols_; ++j) out(i, j) += aik * b(k, j);
      }
    }
    return out;
  }
  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

  std::string shape() const { return std::to_string(rows_) + "x" + std::to_string(cols_); }

  T trace() const {
    T t(0);
    for (std::size_t i = 0; i < std::min(rows_, cols_); ++i) t += (*this)(i, i);
    return t;
  }

 private:
  void require_same_shape(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) {
      throw Error(ErrorCode::ShapeMismatch, shape() + " vs " + o.shape());
    }
  }

  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

using RealMatrix = Matrix<double>;
using ComplexMatrix = Matrix<Complex>;
using QuaternionMatrix = Matrix<Quaternion>;
using IntMatrix = Matrix<BigInt>;
using GaussianMatrix = Matrix<GaussianInt>;

template <class T>
void require_square(const Matrix<T>& m, const char* what) {
  if (!m.is_square()) throw Error(ErrorCode::NotSquare, std::string(what) + ": got " + m.shape());
}

template <class T>
Matrix<T> transpose(const Matrix<T>& m) {
  Matrix<T> out(m.cols(), m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out(j, i) = m(i, j);
  return out;
}

/// Entrywise conjugate (the identity over R).
template <class T>
Matrix<T> conjugate(const Matrix<T>& m) {
  Matrix<T> out(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = conj(m(i, j));
  return out;
}

/// The standard involution A -> conj(A)^T; quaternion conjugation over H.
template <class T>
Matrix<T> conj_transpose(const Matrix<T>& m) {
  Matrix<T> out(m.cols(), m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out(j, i) = conj(m(i, j));
  return out;
}

template <class T>
Matrix<T> matrix_power(const Matrix<T>& m, unsigned p) {
  require_square(m, "matrix_power");
  Matrix<T> result = Matrix<T>::identity(m.rows());
  Matrix<T> base = m;
  while (p > 0) {
    if (p & 1U) result = result * base;
    p >>= 1U;
    if (p > 0) base = base * base;
  }
  return result;
}

/// Largest entrywise distance; used by the numeric tests.
template <class T>
double max_abs_diff(const Matrix<T>& a, const Matrix<T>& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw Error(ErrorCode::ShapeMismatch, a.shape() + " vs " + b.shape());
  }
  double worst = 0.0;
  for (std::size_t k = 0; k < a.size(); ++k) {
    worst = std::max(worst, static_cast<double>(magnitude(a.data()[k] - b.data()[k])));
  }
  return worst;
}

template <class T>
double max_abs(const Matrix<T>& a) {
  double worst = 0.0;
  for (const auto& x : a.data()) worst = std::max(worst, static_cast<double>(magnitude(x)));
  return worst;
}

template <class T>
bool is_hermitian(const Matrix<T>& m, double tol = 1e-12) {
  return m.is_square() && max_abs_diff(m, conj_transpose(m)) <= tol;
}

/// Kronecker product. Both operands share the scalar type, so a field
/// mismatch is rejected at compile time.
template <class T>
Matrix<T> kron(const Matrix<T>& a, const Matrix<T>& b) {
  Matrix<T> out(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      for (std::size_t k = 0; k < b.rows(); ++k)
        for (std::size_t l = 0; l < b.cols(); ++l)
          out(i * b.rows() + k, j * b.cols() + l) = a(i, j) * b(k, l);
  return out;
}

/// Column-major stacking: e11, e21, ..., en1, e12, ...
template <class T>
std::vector<T> vec(const Matrix<T>& m) {
  std::vector<T> out;
  out.reserve(m.size());
  for (std::size_t j = 0; j < m.cols(); ++j)
    for (std::size_t i = 0; i < m.rows(); ++i) out.push_back(m(i, j));
  return out;
}

template <class T>
Matrix<T> unvec(std::span<const T> v, std::size_t r) {
  if (v.size() != r * r) {
    throw Error(ErrorCode::ShapeMismatch,
                "unvec: length " + std::to_string(v.size()) + " is not " + std::to_string(r) + "^2");
  }
  Matrix<T> out(r, r);
  for (std::size_t j = 0; j < r; ++j)
    for (std::size_t i = 0; i < r; ++i) out(i, j) = v[j * r + i];
  return out;
}

template <class T>
Matrix<T> unvec(const std::vector<T>& v, std::size_t r) {
  return unvec(std::span<const T>(v), r);
}

/// Embedding M_n(H) -> M_2n(C): A1 + A2 j maps to [[A1, A2], [-conj(A2), conj(A1)]].
inline ComplexMatrix iota(const QuaternionMatrix& q) {
  require_square(q, "iota");
  const std::size_t n = q.rows();
  ComplexMatrix out(2 * n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const Complex z1 = q(i, j).first();
      const Complex z2 = q(i, j).second();
      out(i, j) = z1;
      out(i, n + j) = z2;
      out(n + i, j) = -std::conj(z2);
      out(n + i, n + j) = std::conj(z1);
    }
  }
  return out;
}

/// Integral quaternion matrices land in Gaussian integers under iota.
inline GaussianMatrix iota_exact(const QuaternionMatrix& q) {
  require_square(q, "iota");
  const std::size_t n = q.rows();
  auto gi = [](double re, double im) {
    return GaussianInt(BigInt(static_cast<long long>(re)), BigInt(static_cast<long long>(im)));
  };
  GaussianMatrix out(2 * n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const Quaternion& x = q(i, j);
      out(i, j) = gi(x.a, x.b);
      out(i, n + j) = gi(x.c, x.d);
      out(n + i, j) = gi(-x.c, x.d);
      out(n + i, n + j) = gi(x.a, -x.b);
    }
  }
  return out;
}

/// [[Re M, -Im M], [Im M, Re M]]; similar to M (+) conj(M).
inline RealMatrix realify(const ComplexMatrix& m) {
  require_square(m, "realify");
  const std::size_t n = m.rows();
  RealMatrix out(2 * n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      out(i, j) = m(i, j).real();
      out(i, n + j) = -m(i, j).imag();
      out(n + i, j) = m(i, j).imag();
      out(n + i, n + j) = m(i, j).real();
    }
  }
  return out;
}

template <class T>
ComplexMatrix to_complex(const Matrix<T>& m) {
  ComplexMatrix out(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = Complex(m(i, j));
  return out;
}

/// Matrix, in the vec basis, of B -> conj_transpose(A) * B * A.
///
/// Column (j*n + i) is vec of the image of the unit matrix e_ij. The result is
/// cospectral with kron(A, conj(A)) but not entrywise equal to it.
template <class T>
Matrix<T> pullback_operator(const Matrix<T>& a) {
  require_square(a, "pullback_operator");
  const std::size_t n = a.rows();
  const Matrix<T> a_dagger = conj_transpose(a);
  Matrix<T> op(n * n, n * n, T(0));
  Matrix<T> unit(n, n, T(0));
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t i = 0; i < n; ++i) {
      unit(i, j) = T(1);
      const std::vector<T> image = vec(a_dagger * unit * a);
      unit(i, j) = T(0);
      const std::size_t col = j * n + i;
      for (std::size_t r = 0; r < image.size(); ++r) op(r, col) = image[r];
    }
  }
  return op;
}

}  // namespace dyndeg

#endif  // DYNDEG_MATRIX_HPP
