#ifndef DYNDEG_POLYNOMIAL_HPP
#define DYNDEG_POLYNOMIAL_HPP

#include <cstddef>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "dyndeg/error.hpp"
#include "dyndeg/matrix.hpp"
#include "dyndeg/scalar.hpp"

namespace dyndeg {

/// Univariate polynomial, coefficients stored constant term first.
/// Leading zeros are trimmed, so the leading coefficient is nonzero unless
/// the polynomial is zero (which has degree 0 and a single zero coefficient).
template <class T>
class Polynomial {
 public:
  using value_type = T;

  Polynomial() : coeffs_{T(0)} {}
  explicit Polynomial(std::vector<T> coeffs) : coeffs_(std::move(coeffs)) { normalize(); }
  Polynomial(std::initializer_list<T> coeffs) : coeffs_(coeffs) { normalize(); }

  /// (t - root)
  static Polynomial linear(const T& root) { return Polynomial({-root, T(1)}); }

  std::size_t degree() const noexcept { return coeffs_.size() - 1; }
  const std::vector<T>& coefficients() const noexcept { return coeffs_; }
  const T& operator[](std::size_t k) const { return coeffs_[k]; }
  const T& leading() const { return coeffs_.back(); }
  bool is_zero() const { return coeffs_.size() == 1 && coeffs_[0] == T(0); }
  bool is_monic() const { return leading() == T(1); }

  template <class U>
  U evaluate(const U& x) const {
    U acc = U(coeffs_.back());
    for (std::size_t k = coeffs_.size() - 1; k-- > 0;) acc = acc * x + U(coeffs_[k]);
    return acc;
  }

  friend Polynomial operator*(const Polynomial& p, const Polynomial& q) {
    std::vector<T> out(p.coeffs_.size() + q.coeffs_.size() - 1, T(0));
    for (std::size_t i = 0; i < p.coeffs_.size(); ++i)
      for (std::size_t j = 0; j < q.coeffs_.size(); ++j) out[i + j] += p.coeffs_[i] * q.coeffs_[j];
    return Polynomial(std::move(out));
  }
  friend Polynomial operator+(const Polynomial& p, const Polynomial& q) {
    std::vector<T> out(std::max(p.coeffs_.size(), q.coeffs_.size()), T(0));
    for (std::size_t i = 0; i < p.coeffs_.size(); ++i) out[i] += p.coeffs_[i];
    for (std::size_t i = 0; i < q.coeffs_.size(); ++i) out[i] += q.coeffs_[i];
    return Polynomial(std::move(out));
  }
  friend Polynomial operator-(const Polynomial& p, const Polynomial& q) {
    std::vector<T> out(std::max(p.coeffs_.size(), q.coeffs_.size()), T(0));
    for (std::size_t i = 0; i < p.coeffs_.size(); ++i) out[i] += p.coeffs_[i];
    for (std::size_t i = 0; i < q.coeffs_.size(); ++i) out[i] -= q.coeffs_[i];
    return Polynomial(std::move(out));
  }
  friend bool operator==(const Polynomial& p, const Polynomial& q) { return p.coeffs_ == q.coeffs_; }

 private:
  void normalize() {
    if (coeffs_.empty()) coeffs_.push_back(T(0));
    while (coeffs_.size() > 1 && coeffs_.back() == T(0)) coeffs_.pop_back();
  }

  std::vector<T> coeffs_;
};

using IntPolynomial = Polynomial<BigInt>;
using GaussianPolynomial = Polynomial<GaussianInt>;
using ComplexPolynomial = Polynomial<Complex>;

/// Exact m-th power.
template <class T>
Polynomial<T> poly_power(const Polynomial<T>& p, unsigned m) {
  if (m == 0) throw Error(ErrorCode::InvalidParameters, "poly_power: exponent must be >= 1");
  Polynomial<T> result = p;
  for (unsigned k = 1; k < m; ++k) result = result * p;
  return result;
}

/// Coefficientwise conjugate.
template <class T>
Polynomial<T> conjugate(const Polynomial<T>& p) {
  std::vector<T> out;
  out.reserve(p.coefficients().size());
  for (const auto& c : p.coefficients()) out.push_back(conj(c));
  return Polynomial<T>(std::move(out));
}

inline ComplexPolynomial to_complex(const IntPolynomial& p) {
  std::vector<Complex> out;
  out.reserve(p.coefficients().size());
  for (const auto& c : p.coefficients()) out.emplace_back(c.convert_to<double>(), 0.0);
  return ComplexPolynomial(std::move(out));
}

inline ComplexPolynomial to_complex(const GaussianPolynomial& p) {
  std::vector<Complex> out;
  out.reserve(p.coefficients().size());
  for (const auto& c : p.coefficients()) out.emplace_back(c.re.convert_to<double>(), c.im.convert_to<double>());
  return ComplexPolynomial(std::move(out));
}

/// Real part of a Gaussian polynomial whose coefficients are known to be real.
inline IntPolynomial real_part(const GaussianPolynomial& p) {
  std::vector<BigInt> out;
  out.reserve(p.coefficients().size());
  for (const auto& c : p.coefficients()) {
    if (c.im != 0) throw Error(ErrorCode::InvalidParameters, "polynomial has a non-real coefficient");
    out.push_back(c.re);
  }
  return IntPolynomial(std::move(out));
}

/// Monic det(t*I - M) by the Faddeev-LeVerrier recurrence. Over Z and Z[i]
/// every division by k is exact.
template <class T>
Polynomial<T> char_poly_exact(const Matrix<T>& m) {
  require_square(m, "char_poly_exact");
  const std::size_t n = m.rows();
  if (n == 0) throw Error(ErrorCode::ShapeMismatch, "char_poly_exact: empty matrix");
  std::vector<T> c(n + 1, T(0));
  c[n] = T(1);
  Matrix<T> aux(n, n, T(0));
  for (std::size_t k = 1; k <= n; ++k) {
    // aux_k = M * aux_{k-1} + c_{n-k+1} I
    Matrix<T> next = m * aux;
    for (std::size_t i = 0; i < n; ++i) next(i, i) += c[n - k + 1];
    aux = std::move(next);
    const T tr = (m * aux).trace();
    c[n - k] = -exact_div(tr, static_cast<long long>(k));
  }
  return Polynomial<T>(std::move(c));
}

inline std::string to_string(const IntPolynomial& p, char var = 't') {
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = p.degree() + 1; k-- > 0;) {
    const BigInt& c = p[k];
    if (c == 0 && !(p.is_zero() && k == 0)) continue;
    BigInt mag = c < 0 ? BigInt(-c) : c;
    if (first) {
      if (c < 0) os << '-';
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (k == 0 || mag != 1) os << mag;
    if (k > 0) {
      if (mag != 1) os << '*';
      os << var;
      if (k > 1) os << '^' << k;
    }
  }
  return os.str();
}

}  // namespace dyndeg

#endif  // DYNDEG_POLYNOMIAL_HPP
