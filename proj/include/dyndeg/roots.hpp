#ifndef DYNDEG_ROOTS_HPP
#define DYNDEG_ROOTS_HPP

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <numbers>
#include <numeric>
#include <vector>

#include "dyndeg/error.hpp"
#include "dyndeg/matrix.hpp"
#include "dyndeg/polynomial.hpp"

namespace dyndeg {

/// Largest dimension accepted by char_poly_float.
inline constexpr std::size_t kMaxFloatCharPolyDim = 64;

namespace detail {

using Wide = long double;
using WideComplex = std::complex<long double>;

inline Wide inf_norm(const Matrix<WideComplex>& m) {
  Wide best = 0;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Wide row = 0;
    for (std::size_t j = 0; j < m.cols(); ++j) row += std::abs(m(i, j));
    best = std::max(best, row);
  }
  return best;
}

/// Householder reduction to upper Hessenberg form, in place.
inline void to_hessenberg(Matrix<WideComplex>& a) {
  const std::size_t n = a.rows();
  std::vector<WideComplex> v(n);
  for (std::size_t k = 0; k + 2 < n; ++k) {
    Wide norm = 0;
    for (std::size_t i = k + 1; i < n; ++i) norm += std::norm(a(i, k));
    norm = std::sqrt(norm);
    if (norm == 0) continue;
    const WideComplex x0 = a(k + 1, k);
    const WideComplex phase = std::abs(x0) == 0 ? WideComplex(1) : x0 / std::abs(x0);
    std::fill(v.begin(), v.end(), WideComplex(0));
    v[k + 1] = x0 + phase * norm;
    for (std::size_t i = k + 2; i < n; ++i) v[i] = a(i, k);
    Wide vv = 0;
    for (std::size_t i = k + 1; i < n; ++i) vv += std::norm(v[i]);
    if (vv == 0) continue;
    // a <- (I - 2vv*/v*v) a (I - 2vv*/v*v)
    for (std::size_t j = 0; j < n; ++j) {
      WideComplex s = 0;
      for (std::size_t i = k + 1; i < n; ++i) s += std::conj(v[i]) * a(i, j);
      s *= 2 / vv;
      for (std::size_t i = k + 1; i < n; ++i) a(i, j) -= v[i] * s;
    }
    for (std::size_t i = 0; i < n; ++i) {
      WideComplex s = 0;
      for (std::size_t j = k + 1; j < n; ++j) s += a(i, j) * v[j];
      s *= 2 / vv;
      for (std::size_t j = k + 1; j < n; ++j) a(i, j) -= s * std::conj(v[j]);
    }
    for (std::size_t i = k + 2; i < n; ++i) a(i, k) = 0;
  }
}

}  // namespace detail

/// Floating-point det(t*I - M).
///
/// The matrix is scaled to unit infinity norm, reduced to Hessenberg form by
/// unitary similarity, and the determinant expanded along the subdiagonal,
/// all in extended precision. Coefficients are unscaled on the way out.
inline ComplexPolynomial char_poly_float(const ComplexMatrix& m) {
  using detail::WideComplex;
  require_square(m, "char_poly_float");
  const std::size_t n = m.rows();
  if (n == 0) throw Error(ErrorCode::ShapeMismatch, "char_poly_float: empty matrix");
  if (n > kMaxFloatCharPolyDim) {
    throw Error(ErrorCode::DimensionTooLarge,
                "char_poly_float: dimension " + std::to_string(n) + " exceeds " +
                    std::to_string(kMaxFloatCharPolyDim));
  }
  Matrix<WideComplex> a(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a(i, j) = WideComplex(m(i, j));
  const detail::Wide scale = detail::inf_norm(a);
  if (scale == 0) {
    std::vector<Complex> c(n + 1, Complex(0));
    c[n] = 1.0;
    return ComplexPolynomial(std::move(c));
  }
  a *= WideComplex(1.0L / scale);
  detail::to_hessenberg(a);

  // p[k] = det(t*I - H[0..k, 0..k]), coefficients constant term first
  std::vector<std::vector<WideComplex>> p(n + 1);
  p[0] = {WideComplex(1)};
  for (std::size_t k = 1; k <= n; ++k) {
    std::vector<WideComplex> cur(k + 1, WideComplex(0));
    const auto& prev = p[k - 1];
    for (std::size_t d = 0; d < k; ++d) {
      cur[d + 1] += prev[d];
      cur[d] -= a(k - 1, k - 1) * prev[d];
    }
    WideComplex sub = 1;
    for (std::size_t i = k - 1; i-- > 0;) {
      sub *= a(i + 1, i);
      if (sub == WideComplex(0)) break;
      const WideComplex w = a(i, k - 1) * sub;
      for (std::size_t d = 0; d < p[i].size(); ++d) cur[d] -= w * p[i][d];
    }
    p[k] = std::move(cur);
  }
  std::vector<Complex> out(n + 1);
  detail::Wide factor = 1;
  for (std::size_t k = n + 1; k-- > 0;) {
    out[k] = Complex(p[n][k] * factor);
    factor *= scale;
  }
  return ComplexPolynomial(std::move(out));
}

inline ComplexPolynomial char_poly_float(const RealMatrix& m) { return char_poly_float(to_complex(m)); }

/// Complex roots with multiplicity and their backward-error residuals.
struct RootMultiset {
  std::vector<Complex> roots;
  std::vector<double> residuals;  ///< |p(z)| / sum_k |c_k| |z|^k
};

struct RootFinderConfig {
  double tol = 1e-10;
  int max_iterations = 500;
  double underflow_floor = 1e-300;
  /// Replace numerically multiple roots by their refined common value.
  bool refine_clusters = true;
};

namespace detail {

struct WidePoly {
  std::vector<WideComplex> c;  // constant first

  std::size_t degree() const { return c.size() - 1; }

  WideComplex eval(WideComplex z) const {
    WideComplex acc = c.back();
    for (std::size_t k = c.size() - 1; k-- > 0;) acc = acc * z + c[k];
    return acc;
  }

  // p(z), p'(z)
  std::pair<WideComplex, WideComplex> eval_with_derivative(WideComplex z) const {
    WideComplex p = c.back();
    WideComplex dp = 0;
    for (std::size_t k = c.size() - 1; k-- > 0;) {
      dp = dp * z + p;
      p = p * z + c[k];
    }
    return {p, dp};
  }

  Wide abs_eval(Wide r) const {
    Wide acc = std::abs(c.back());
    for (std::size_t k = c.size() - 1; k-- > 0;) acc = acc * r + std::abs(c[k]);
    return acc;
  }

  WidePoly derivative() const {
    WidePoly d;
    if (c.size() == 1) {
      d.c = {WideComplex(0)};
      return d;
    }
    d.c.resize(c.size() - 1);
    for (std::size_t k = 1; k < c.size(); ++k) d.c[k - 1] = c[k] * static_cast<Wide>(k);
    return d;
  }
};

inline Wide backward_error(const WidePoly& p, WideComplex z) {
  const Wide scale = p.abs_eval(std::abs(z));
  if (scale == 0) return 0;
  return std::abs(p.eval(z)) / scale;
}

// Fujiwara's bound on the moduli of the roots of a monic polynomial.
inline Wide fujiwara_bound(const WidePoly& monic) {
  const std::size_t n = monic.degree();
  Wide bound = 0;
  for (std::size_t k = 1; k <= n; ++k) {
    Wide coeff = std::abs(monic.c[n - k]);
    if (k == n) coeff /= 2;
    bound = std::max(bound, std::pow(coeff, 1.0L / static_cast<Wide>(k)));
  }
  return 2 * bound;
}

inline void aberth(const WidePoly& p, std::vector<WideComplex>& z, int max_iterations) {
  const std::size_t n = z.size();
  const Wide eps = std::numeric_limits<Wide>::epsilon();
  std::vector<bool> done(n, false);
  for (int it = 0; it < max_iterations; ++it) {
    bool all_done = true;
    for (std::size_t k = 0; k < n; ++k) {
      if (done[k]) continue;
      const auto [pv, dpv] = p.eval_with_derivative(z[k]);
      if (pv == WideComplex(0) || backward_error(p, z[k]) <= 4 * eps) {
        done[k] = true;
        continue;
      }
      WideComplex correction;
      if (dpv == WideComplex(0)) {
        correction = WideComplex(eps * (1 + std::abs(z[k])), eps);
      } else {
        const WideComplex w = pv / dpv;
        WideComplex sum = 0;
        for (std::size_t j = 0; j < n; ++j) {
          if (j != k) {
            const WideComplex diff = z[k] - z[j];
            if (diff != WideComplex(0)) sum += WideComplex(1) / diff;
          }
        }
        correction = w / (WideComplex(1) - w * sum);
      }
      z[k] -= correction;
      if (std::abs(correction) <= eps * std::abs(z[k])) {
        done[k] = true;
      } else {
        all_done = false;
      }
    }
    if (all_done) return;
  }
}

inline void newton_polish(const WidePoly& p, std::vector<WideComplex>& z) {
  for (auto& root : z) {
    Wide err = std::abs(p.eval(root));
    for (int step = 0; step < 3; ++step) {
      const auto [pv, dpv] = p.eval_with_derivative(root);
      if (dpv == WideComplex(0)) break;
      const WideComplex candidate = root - pv / dpv;
      const Wide cand_err = std::abs(p.eval(candidate));
      if (!(cand_err < err)) break;
      root = candidate;
      err = cand_err;
    }
  }
}

// Groups roots that approximate one multiple root. For each root, the
// largest set of k nearby roots whose centroid refines (by Newton on p^(k-1))
// to a point where p and its first k-1 derivatives vanish to working
// precision is replaced by that point.
inline void refine_clusters(const WidePoly& p, std::vector<WideComplex>& z) {
  const std::size_t n = z.size();
  if (n < 2) return;
  Wide max_mod = 0;
  for (const auto& r : z) max_mod = std::max(max_mod, std::abs(r));
  const Wide floor_scale = 1e-8L * std::max(max_mod, Wide(1e-300L));
  const Wide eps = std::numeric_limits<Wide>::epsilon();
  const Wide vtol = 1e-12L;

  std::vector<WidePoly> derivs{p};
  for (std::size_t j = 1; j <= n; ++j) derivs.push_back(derivs.back().derivative());

  std::vector<bool> assigned(n, false);
  for (std::size_t i = 0; i < n; ++i) {
    if (assigned[i]) continue;
    const Wide reach = 0.1L * std::max(std::abs(z[i]), floor_scale);
    std::vector<std::size_t> near{i};
    for (std::size_t j = 0; j < n; ++j) {
      if (j != i && !assigned[j] && std::abs(z[j] - z[i]) <= reach) near.push_back(j);
    }
    if (near.size() < 2) continue;
    std::sort(near.begin() + 1, near.end(), [&](std::size_t a, std::size_t b) {
      return std::abs(z[a] - z[i]) < std::abs(z[b] - z[i]);
    });
    for (std::size_t k = near.size(); k >= 2; --k) {
      WideComplex centre = 0;
      for (std::size_t m = 0; m < k; ++m) centre += z[near[m]];
      centre /= static_cast<Wide>(k);
      const WidePoly& top = derivs[k - 1];
      const WidePoly& top_d = derivs[k];
      for (int step = 0; step < 50; ++step) {
        const WideComplex dv = top_d.eval(centre);
        if (dv == WideComplex(0)) break;
        const WideComplex corr = top.eval(centre) / dv;
        centre -= corr;
        if (std::abs(corr) <= 4 * eps * std::abs(centre)) break;
      }
      bool multiple = true;
      for (std::size_t j = 0; j + 1 < k && multiple; ++j) {
        if (!(backward_error(derivs[j], centre) <= vtol)) multiple = false;
      }
      if (!multiple) continue;
      for (std::size_t m = 0; m < k; ++m) {
        z[near[m]] = centre;
        assigned[near[m]] = true;
      }
      break;
    }
  }
}

}  // namespace detail

/// All complex roots of p with multiplicity, by Aberth-Ehrlich iteration
/// started on the Fujiwara circle, followed by Newton polishing.
inline RootMultiset find_roots(const ComplexPolynomial& p, const RootFinderConfig& cfg = {}) {
  using detail::Wide;
  using detail::WideComplex;
  if (p.is_zero()) throw Error(ErrorCode::InvalidParameters, "find_roots: zero polynomial");
  if (p.degree() == 0) return {};
  if (!(std::abs(p.leading()) > cfg.underflow_floor)) {
    throw Error(ErrorCode::InvalidParameters, "find_roots: leading coefficient below underflow floor");
  }
  detail::WidePoly original;
  const WideComplex lead(p.leading());
  for (const auto& c : p.coefficients()) original.c.push_back(WideComplex(c) / lead);

  std::vector<WideComplex> found;
  detail::WidePoly work = original;
  while (work.degree() > 0 && work.c[0] == WideComplex(0)) {
    found.emplace_back(0);
    work.c.erase(work.c.begin());
  }
  const std::size_t n = work.degree();
  if (n == 1) {
    found.push_back(-work.c[0]);
  } else if (n > 1) {
    const Wide radius = detail::fujiwara_bound(work);
    std::vector<WideComplex> z(n);
    const Wide two_pi = 2 * std::numbers::pi_v<Wide>;
    for (std::size_t k = 0; k < n; ++k) {
      const Wide angle = two_pi * static_cast<Wide>(k) / static_cast<Wide>(n) + 0.4L + 0.07L * static_cast<Wide>(k) / static_cast<Wide>(n);
      z[k] = std::polar(radius, angle);
    }
    detail::aberth(work, z, cfg.max_iterations);
    detail::newton_polish(work, z);
    if (cfg.refine_clusters) detail::refine_clusters(work, z);
    found.insert(found.end(), z.begin(), z.end());
  }

  RootMultiset out;
  for (const auto& root : found) {
    const Wide res = detail::backward_error(original, root);
    if (!(res <= cfg.tol)) {
      throw Error(ErrorCode::NoConvergence, "find_roots: residual " + std::to_string(static_cast<double>(res)) +
                                                " exceeds tolerance after " +
                                                std::to_string(cfg.max_iterations) + " iterations");
    }
    out.roots.emplace_back(root);
    out.residuals.push_back(static_cast<double>(res));
  }
  return out;
}

/// Roots in the canonical order: modulus, then real part, then imaginary
/// part, all non-increasing.
inline std::vector<Complex> sorted_roots(const RootMultiset& r) {
  std::vector<Complex> roots = r.roots;
  std::stable_sort(roots.begin(), roots.end(), [](const Complex& x, const Complex& y) {
    const double mx = std::abs(x);
    const double my = std::abs(y);
    if (mx != my) return mx > my;
    if (x.real() != y.real()) return x.real() > y.real();
    return x.imag() > y.imag();
  });
  return roots;
}

inline std::vector<double> sorted_moduli(const RootMultiset& r) {
  std::vector<double> out;
  for (const auto& z : sorted_roots(r)) out.push_back(std::abs(z));
  return out;
}

/// Largest root modulus of det(t*I - M).
inline double spectral_radius(const ComplexMatrix& m, const RootFinderConfig& cfg = {}) {
  const auto roots = find_roots(char_poly_float(m), cfg);
  double best = 0.0;
  for (const auto& z : roots.roots) best = std::max(best, std::abs(z));
  return best;
}

inline double spectral_radius(const RealMatrix& m, const RootFinderConfig& cfg = {}) {
  return spectral_radius(to_complex(m), cfg);
}

}  // namespace dyndeg

#endif  // DYNDEG_ROOTS_HPP
