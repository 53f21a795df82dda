#ifndef DYNDEG_SCALAR_HPP
#define DYNDEG_SCALAR_HPP

#include <cmath>
#include <complex>
#include <ostream>

#include <boost/multiprecision/cpp_int.hpp>

namespace dyndeg {

using BigInt = boost::multiprecision::cpp_int;
using Complex = std::complex<double>;

/// Exact Gaussian integer re + im*i.
struct GaussianInt {
  BigInt re{0};
  BigInt im{0};

  GaussianInt() = default;
  GaussianInt(BigInt r) : re(std::move(r)) {}  // NOLINT(google-explicit-constructor)
  GaussianInt(long long r) : re(r) {}          // NOLINT(google-explicit-constructor)
  GaussianInt(BigInt r, BigInt i) : re(std::move(r)), im(std::move(i)) {}

  GaussianInt& operator+=(const GaussianInt& o) {
    re += o.re;
    im += o.im;
    return *this;
  }
  GaussianInt& operator-=(const GaussianInt& o) {
    re -= o.re;
    im -= o.im;
    return *this;
  }
  GaussianInt& operator*=(const GaussianInt& o) {
    BigInt r = re * o.re - im * o.im;
    im = re * o.im + im * o.re;
    re = std::move(r);
    return *this;
  }
  friend GaussianInt operator+(GaussianInt a, const GaussianInt& b) { return a += b; }
  friend GaussianInt operator-(GaussianInt a, const GaussianInt& b) { return a -= b; }
  friend GaussianInt operator*(GaussianInt a, const GaussianInt& b) { return a *= b; }
  friend GaussianInt operator-(const GaussianInt& a) { return {-a.re, -a.im}; }
  friend bool operator==(const GaussianInt& a, const GaussianInt& b) {
    return a.re == b.re && a.im == b.im;
  }
  friend std::ostream& operator<<(std::ostream& os, const GaussianInt& z) {
    return os << '(' << z.re << ',' << z.im << ')';
  }
};

/// Real quaternion a + b*i + c*j + d*k.
struct Quaternion {
  double a = 0.0;
  double b = 0.0;
  double c = 0.0;
  double d = 0.0;

  constexpr Quaternion() = default;
  constexpr Quaternion(double re) : a(re) {}  // NOLINT(google-explicit-constructor)
  constexpr Quaternion(double a_, double b_, double c_, double d_) : a(a_), b(b_), c(c_), d(d_) {}

  static constexpr Quaternion i() { return {0, 1, 0, 0}; }
  static constexpr Quaternion j() { return {0, 0, 1, 0}; }
  static constexpr Quaternion k() { return {0, 0, 0, 1}; }

  /// Reduced norm a^2 + b^2 + c^2 + d^2.
  constexpr double norm() const { return a * a + b * b + c * c + d * d; }

  /// Complex coordinates of q = z1 + z2*j.
  Complex first() const { return {a, b}; }
  Complex second() const { return {c, d}; }

  constexpr Quaternion& operator+=(const Quaternion& o) {
    a += o.a;
    b += o.b;
    c += o.c;
    d += o.d;
    return *this;
  }
  constexpr Quaternion& operator-=(const Quaternion& o) {
    a -= o.a;
    b -= o.b;
    c -= o.c;
    d -= o.d;
    return *this;
  }
  constexpr Quaternion& operator*=(const Quaternion& o) {
    *this = *this * o;
    return *this;
  }
  friend constexpr Quaternion operator+(Quaternion p, const Quaternion& q) { return p += q; }
  friend constexpr Quaternion operator-(Quaternion p, const Quaternion& q) { return p -= q; }
  friend constexpr Quaternion operator-(const Quaternion& q) { return {-q.a, -q.b, -q.c, -q.d}; }
  friend constexpr Quaternion operator*(const Quaternion& p, const Quaternion& q) {
    return {p.a * q.a - p.b * q.b - p.c * q.c - p.d * q.d,
            p.a * q.b + p.b * q.a + p.c * q.d - p.d * q.c,
            p.a * q.c - p.b * q.d + p.c * q.a + p.d * q.b,
            p.a * q.d + p.b * q.c - p.c * q.b + p.d * q.a};
  }
  friend constexpr bool operator==(const Quaternion& p, const Quaternion& q) {
    return p.a == q.a && p.b == q.b && p.c == q.c && p.d == q.d;
  }
  friend std::ostream& operator<<(std::ostream& os, const Quaternion& q) {
    return os << '(' << q.a << ',' << q.b << ',' << q.c << ',' << q.d << ')';
  }
};

// Scalar customization points shared by the matrix templates.

inline double conj(double x) { return x; }
inline long double conj(long double x) { return x; }
inline std::complex<double> conj(const std::complex<double>& z) { return std::conj(z); }
inline std::complex<long double> conj(const std::complex<long double>& z) { return std::conj(z); }
inline Quaternion conj(const Quaternion& q) { return {q.a, -q.b, -q.c, -q.d}; }
inline BigInt conj(const BigInt& x) { return x; }
inline GaussianInt conj(const GaussianInt& z) { return {z.re, -z.im}; }

inline double magnitude(double x) { return std::fabs(x); }
template <class T>
T magnitude(const std::complex<T>& z) {
  return std::abs(z);
}
inline double magnitude(const Quaternion& q) { return std::sqrt(q.norm()); }

/// Exact division by a small positive integer; the caller guarantees divisibility.
inline BigInt exact_div(const BigInt& x, long long k) { return x / k; }
inline GaussianInt exact_div(const GaussianInt& z, long long k) { return {z.re / k, z.im / k}; }

inline bool is_integral(double x) {
  return std::isfinite(x) && std::floor(x) == x && std::fabs(x) < 9007199254740992.0;
}

}  // namespace dyndeg

#endif  // DYNDEG_SCALAR_HPP
