#ifndef DYNDEG_DEGREES_HPP
#define DYNDEG_DEGREES_HPP

#include <algorithm>
#include <cmath>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "dyndeg/algebra.hpp"
#include "dyndeg/error.hpp"
#include "dyndeg/matrix.hpp"
#include "dyndeg/polynomial.hpp"
#include "dyndeg/roots.hpp"

namespace dyndeg {

struct DegreeConfig {
  RootFinderConfig roots{};
  /// Relative out-of-span residual above which a restriction is rejected.
  double restriction_tol = 1e-9;
  /// Relative coefficient agreement required between a rational form and
  /// the blocks it claims to describe.
  double rational_form_tol = 1e-8;
  /// Gram-matrix condition number above which a basis counts as singular.
  double max_basis_condition = 1e12;
};

// ---------------------------------------------------------------------------
// Characteristic polynomials

/// chi_red of one factor. Roots are collected per block (and, for Type IV,
/// with their conjugates) rather than extracted from the product.
struct ReducedCharPoly {
  ComplexPolynomial poly;
  std::optional<IntPolynomial> exact;
  RootMultiset roots;
  int m = 1;  ///< P_alpha = chi_red^m on this factor
};

namespace detail {

inline bool all_integral(const RealMatrix& m) {
  return std::all_of(m.data().begin(), m.data().end(), [](double x) { return is_integral(x); });
}
inline bool all_integral(const ComplexMatrix& m) {
  return std::all_of(m.data().begin(), m.data().end(),
                     [](const Complex& z) { return is_integral(z.real()) && is_integral(z.imag()); });
}
inline bool all_integral(const QuaternionMatrix& m) {
  return std::all_of(m.data().begin(), m.data().end(), [](const Quaternion& q) {
    return is_integral(q.a) && is_integral(q.b) && is_integral(q.c) && is_integral(q.d);
  });
}

inline BigInt to_bigint(double x) { return BigInt(static_cast<long long>(x)); }

inline IntMatrix to_int_matrix(const RealMatrix& m) {
  IntMatrix out(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = to_bigint(m(i, j));
  return out;
}

inline GaussianMatrix to_gaussian_matrix(const ComplexMatrix& m) {
  GaussianMatrix out(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = GaussianInt(to_bigint(m(i, j).real()), to_bigint(m(i, j).imag()));
  return out;
}

inline void append_roots(RootMultiset& into, const RootMultiset& from, bool with_conjugates) {
  into.roots.insert(into.roots.end(), from.roots.begin(), from.roots.end());
  into.residuals.insert(into.residuals.end(), from.residuals.begin(), from.residuals.end());
  if (with_conjugates) {
    for (std::size_t k = 0; k < from.roots.size(); ++k) {
      into.roots.push_back(std::conj(from.roots[k]));
      into.residuals.push_back(from.residuals[k]);
    }
  }
}

// Exact chi_red from integral blocks, if every block is integral.
inline std::optional<IntPolynomial> exact_from_blocks(const AlbertFactor& f) {
  IntPolynomial acc{BigInt(1)};
  for (const auto& block : f.blocks) {
    if (const auto* real = std::get_if<RealMatrix>(&block)) {
      if (!all_integral(*real)) return std::nullopt;
      acc = acc * char_poly_exact(to_int_matrix(*real));
    } else if (const auto* quat = std::get_if<QuaternionMatrix>(&block)) {
      if (!all_integral(*quat)) return std::nullopt;
      acc = acc * real_part(char_poly_exact(iota_exact(*quat)));
    } else {
      const auto& cplx = std::get<ComplexMatrix>(block);
      if (!all_integral(cplx)) return std::nullopt;
      const GaussianPolynomial g = char_poly_exact(to_gaussian_matrix(cplx));
      acc = acc * real_part(g * conjugate(g));
    }
  }
  return acc;
}

inline bool coefficients_agree(const IntPolynomial& exact, const ComplexPolynomial& approx, double tol) {
  if (exact.degree() != approx.degree()) return false;
  for (std::size_t k = 0; k <= exact.degree(); ++k) {
    const double want = exact[k].convert_to<double>();
    if (std::abs(approx[k] - Complex(want)) > tol * std::max(1.0, std::fabs(want))) return false;
  }
  return true;
}

}  // namespace detail

inline ReducedCharPoly reduced_char_poly(const AlbertFactor& f, const DegreeConfig& cfg = {}) {
  const ValidationReport v = validate(f);
  ReducedCharPoly out;
  out.m = v.m;
  out.poly = ComplexPolynomial{Complex(1)};
  for (const auto& block : f.blocks) {
    if (const auto* real = std::get_if<RealMatrix>(&block)) {
      const ComplexPolynomial p = char_poly_float(*real);
      detail::append_roots(out.roots, find_roots(p, cfg.roots), false);
      out.poly = out.poly * p;
    } else if (const auto* quat = std::get_if<QuaternionMatrix>(&block)) {
      const ComplexPolynomial p = char_poly_float(iota(*quat));
      detail::append_roots(out.roots, find_roots(p, cfg.roots), false);
      out.poly = out.poly * p;
    } else {
      const ComplexPolynomial p = char_poly_float(std::get<ComplexMatrix>(block));
      detail::append_roots(out.roots, find_roots(p, cfg.roots), true);
      out.poly = out.poly * p * conjugate(p);
    }
  }
  out.exact = detail::exact_from_blocks(f);
  if (!out.exact && f.rational_form) {
    IntPolynomial from_form = char_poly_exact(*f.rational_form);
    if (!detail::coefficients_agree(from_form, out.poly, cfg.rational_form_tol)) {
      throw Error(ErrorCode::InconsistentRationalForm,
                  "rational_form has characteristic polynomial " + to_string(from_form) +
                      " which does not match the blocks");
    }
    out.exact = std::move(from_form);
  }
  return out;
}

/// The non-reduced characteristic polynomial chi_alpha = chi_red^(d*n) of the
/// element as acting on the Q-algebra itself.
inline std::optional<IntPolynomial> algebra_char_poly(const AlbertFactor& f, const DegreeConfig& cfg = {}) {
  const ReducedCharPoly red = reduced_char_poly(f, cfg);
  if (!red.exact) return std::nullopt;
  return poly_power(*red.exact, static_cast<unsigned>(f.d * f.n));
}

/// P_alpha of a product: the product of chi_red^m over factors.
struct FullCharPoly {
  ComplexPolynomial poly;
  std::optional<IntPolynomial> exact;
  RootMultiset roots;  ///< omega_1..omega_2g, each factor root repeated m times
  std::vector<ReducedCharPoly> factors;
};

inline FullCharPoly full_char_poly(const EndInstance& inst, const DegreeConfig& cfg = {}) {
  validate(inst);
  FullCharPoly out;
  out.poly = ComplexPolynomial{Complex(1)};
  IntPolynomial exact{BigInt(1)};
  bool all_exact = true;
  for (const auto& f : inst.factors) {
    ReducedCharPoly red = reduced_char_poly(f, cfg);
    const auto m = static_cast<unsigned>(red.m);
    out.poly = out.poly * poly_power(red.poly, m);
    if (red.exact) {
      exact = exact * poly_power(*red.exact, m);
    } else {
      all_exact = false;
    }
    for (unsigned rep = 0; rep < m; ++rep) detail::append_roots(out.roots, red.roots, false);
    out.factors.push_back(std::move(red));
  }
  if (all_exact) out.exact = std::move(exact);
  return out;
}

// ---------------------------------------------------------------------------
// Cohomological degrees

/// chi_0..chi_len: chi_i is the product of the i largest moduli.
inline std::vector<double> chi_from_moduli(const std::vector<double>& sorted) {
  std::vector<double> chi{1.0};
  double acc = 1.0;
  for (double m : sorted) {
    acc *= m;
    chi.push_back(acc);
  }
  return chi;
}

inline double cohomological_degree(const EndInstance& inst, int i, const DegreeConfig& cfg = {}) {
  const int g = inst.g();
  if (i < 0 || i > 2 * g) {
    throw Error(ErrorCode::IndexOutOfRange, "cohomological_degree: i = " + std::to_string(i) + " outside 0.." +
                                                std::to_string(2 * g));
  }
  const auto chi = chi_from_moduli(sorted_moduli(full_char_poly(inst, cfg).roots));
  return chi[static_cast<std::size_t>(i)];
}

// ---------------------------------------------------------------------------
// Restriction to the Hermitian subspace and lambda_1

struct Restriction {
  RealMatrix matrix;      ///< coordinates of the restricted map in the basis
  double residual = 0.0;  ///< max relative out-of-span norm over images
};

namespace detail {

inline void push_real_coords(std::vector<double>& out, const std::vector<double>& v) {
  out.insert(out.end(), v.begin(), v.end());
}
inline void push_real_coords(std::vector<double>& out, const std::vector<Complex>& v) {
  for (const auto& z : v) out.push_back(z.real());
  for (const auto& z : v) out.push_back(z.imag());
}

inline double norm2(const std::vector<double>& v) {
  double s = 0.0;
  for (double x : v) s += x * x;
  return std::sqrt(s);
}

}  // namespace detail

/// Matrix of the real-linear map L restricted to span(basis), with the
/// coordinates of each image found by least squares against the basis.
///
/// When `invariance_tol` is given, a residual above it raises
/// RestrictionNotInvariant.
template <class F>
Restriction restrict_to_subspace(const Matrix<F>& op, const std::vector<Matrix<F>>& basis,
                                 std::optional<double> invariance_tol = std::nullopt,
                                 double max_condition = 1e12) {
  require_square(op, "restrict_to_subspace");
  const std::size_t k = basis.size();
  if (k == 0) throw Error(ErrorCode::SingularBasis, "restrict_to_subspace: empty basis");
  const std::size_t r = basis.front().rows();
  if (op.rows() != r * r) {
    throw Error(ErrorCode::ShapeMismatch, "restrict_to_subspace: operator " + op.shape() + " does not act on " +
                                              std::to_string(r) + "x" + std::to_string(r) + " matrices");
  }
  // Columns of the real coordinate matrix: realified vec of each basis element.
  std::vector<std::vector<double>> cols(k);
  for (std::size_t c = 0; c < k; ++c) detail::push_real_coords(cols[c], vec(basis[c]));
  const std::size_t len = cols.front().size();

  // Gram matrix and its Cholesky factor.
  RealMatrix gram(k, k, 0.0);
  for (std::size_t a = 0; a < k; ++a)
    for (std::size_t b = 0; b < k; ++b) {
      double s = 0.0;
      for (std::size_t t = 0; t < len; ++t) s += cols[a][t] * cols[b][t];
      gram(a, b) = s;
    }
  RealMatrix chol(k, k, 0.0);
  double min_pivot = std::numeric_limits<double>::infinity();
  double max_pivot = 0.0;
  for (std::size_t j = 0; j < k; ++j) {
    double diag = gram(j, j);
    for (std::size_t t = 0; t < j; ++t) diag -= chol(j, t) * chol(j, t);
    if (!(diag > 0.0)) throw Error(ErrorCode::SingularBasis, "restrict_to_subspace: basis is linearly dependent");
    chol(j, j) = std::sqrt(diag);
    min_pivot = std::min(min_pivot, chol(j, j));
    max_pivot = std::max(max_pivot, chol(j, j));
    for (std::size_t i = j + 1; i < k; ++i) {
      double s = gram(i, j);
      for (std::size_t t = 0; t < j; ++t) s -= chol(i, t) * chol(j, t);
      chol(i, j) = s / chol(j, j);
    }
  }
  const double condition = (max_pivot / min_pivot) * (max_pivot / min_pivot);
  if (condition > max_condition) {
    throw Error(ErrorCode::SingularBasis,
                "restrict_to_subspace: Gram condition " + std::to_string(condition) + " exceeds limit");
  }

  Restriction out{RealMatrix(k, k, 0.0), 0.0};
  for (std::size_t c = 0; c < k; ++c) {
    const std::vector<F> image_vec = [&] {
      const std::vector<F> v = vec(basis[c]);
      std::vector<F> img(op.rows(), F(0));
      for (std::size_t i = 0; i < op.rows(); ++i)
        for (std::size_t j = 0; j < op.cols(); ++j) img[i] += op(i, j) * v[j];
      return img;
    }();
    std::vector<double> y;
    detail::push_real_coords(y, image_vec);
    // rhs = B^T y, then solve G x = rhs
    std::vector<double> x(k, 0.0);
    for (std::size_t a = 0; a < k; ++a) {
      double s = 0.0;
      for (std::size_t t = 0; t < len; ++t) s += cols[a][t] * y[t];
      x[a] = s;
    }
    for (std::size_t i = 0; i < k; ++i) {
      for (std::size_t t = 0; t < i; ++t) x[i] -= chol(i, t) * x[t];
      x[i] /= chol(i, i);
    }
    for (std::size_t i = k; i-- > 0;) {
      for (std::size_t t = i + 1; t < k; ++t) x[i] -= chol(t, i) * x[t];
      x[i] /= chol(i, i);
    }
    std::vector<double> miss = y;
    for (std::size_t a = 0; a < k; ++a)
      for (std::size_t t = 0; t < len; ++t) miss[t] -= cols[a][t] * x[a];
    const double ynorm = detail::norm2(y);
    const double residual = ynorm == 0.0 ? 0.0 : detail::norm2(miss) / ynorm;
    out.residual = std::max(out.residual, residual);
    for (std::size_t a = 0; a < k; ++a) out.matrix(a, c) = x[a];
  }
  if (invariance_tol && out.residual > *invariance_tol) {
    throw Error(ErrorCode::RestrictionNotInvariant,
                "restrict_to_subspace: image leaves the subspace (residual " + std::to_string(out.residual) + ")");
  }
  return out;
}

template <class F>
Restriction restrict_to_subspace(const Matrix<F>& op, const HermitianBasis<F>& basis,
                                 std::optional<double> invariance_tol = std::nullopt,
                                 double max_condition = 1e12) {
  return restrict_to_subspace(op, basis.elements, invariance_tol, max_condition);
}

struct BlockDiagnostics {
  std::size_t factor = 0;
  std::size_t block = 0;
  std::size_t subspace_dim = 0;
  double spectral_radius = 0.0;
  double restriction_residual = 0.0;
};

struct Lambda1Result {
  double value = 0.0;
  std::vector<double> per_factor;
  std::vector<BlockDiagnostics> blocks;
};

namespace detail {

// Restricted pullback of one block and its spectral radius.
inline BlockDiagnostics block_lambda(const Block& block, const DegreeConfig& cfg) {
  BlockDiagnostics diag;
  Restriction restricted;
  if (const auto* real = std::get_if<RealMatrix>(&block)) {
    const auto basis = hermitian_basis<double>(real->rows());
    restricted = restrict_to_subspace(pullback_operator(*real), basis, cfg.restriction_tol, cfg.max_basis_condition);
  } else if (const auto* quat = std::get_if<QuaternionMatrix>(&block)) {
    std::vector<ComplexMatrix> basis;
    for (const auto& h : hermitian_basis<Quaternion>(quat->rows()).elements) basis.push_back(iota(h));
    restricted = restrict_to_subspace(pullback_operator(iota(*quat)), basis, cfg.restriction_tol,
                                      cfg.max_basis_condition);
  } else {
    const auto& cplx = std::get<ComplexMatrix>(block);
    const auto basis = hermitian_basis<Complex>(cplx.rows());
    restricted = restrict_to_subspace(pullback_operator(cplx), basis, cfg.restriction_tol, cfg.max_basis_condition);
  }
  diag.subspace_dim = restricted.matrix.rows();
  diag.restriction_residual = restricted.residual;
  diag.spectral_radius = spectral_radius(restricted.matrix, cfg.roots);
  return diag;
}

}  // namespace detail

/// lambda_1 of one factor: largest spectral radius of the restricted pullback
/// over the factor's blocks.
inline double factor_lambda1(const AlbertFactor& f, const DegreeConfig& cfg = {},
                             std::vector<BlockDiagnostics>* diagnostics = nullptr) {
  validate(f);
  double best = 0.0;
  for (std::size_t b = 0; b < f.blocks.size(); ++b) {
    BlockDiagnostics d = detail::block_lambda(f.blocks[b], cfg);
    d.block = b;
    best = std::max(best, d.spectral_radius);
    if (diagnostics) diagnostics->push_back(d);
  }
  return best;
}

inline Lambda1Result numerical_degree_lambda1(const EndInstance& inst, const DegreeConfig& cfg = {}) {
  validate(inst);
  Lambda1Result out;
  for (std::size_t k = 0; k < inst.factors.size(); ++k) {
    std::vector<BlockDiagnostics> diags;
    const double value = factor_lambda1(inst.factors[k], cfg, &diags);
    for (auto& d : diags) d.factor = k;
    out.blocks.insert(out.blocks.end(), diags.begin(), diags.end());
    out.per_factor.push_back(value);
    out.value = std::max(out.value, value);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Degree of the endomorphism

struct DegreeValue {
  BigInt value{0};
  bool exact = false;
  /// |P(0) - value| / max(|P(0)|, 1) when the value had to be rounded.
  double rounding_residual = 0.0;
};

inline DegreeValue degree_from(const FullCharPoly& full) {
  DegreeValue out;
  if (full.exact) {
    out.value = (*full.exact)[0];
    out.exact = true;
    return out;
  }
  const Complex c0 = full.poly[0];
  const double rounded = std::nearbyint(c0.real());
  out.value = BigInt(static_cast<long long>(rounded));
  out.rounding_residual = std::abs(c0 - Complex(rounded)) / std::max(1.0, std::abs(c0));
  return out;
}

/// deg(alpha) = P_alpha(0); 0 flags a non-surjective alpha.
inline DegreeValue degree_of_endomorphism(const EndInstance& inst, const DegreeConfig& cfg = {}) {
  return degree_from(full_char_poly(inst, cfg));
}

// ---------------------------------------------------------------------------
// Verification

struct FactorSummary {
  double lambda1 = 0.0;
  double top_modulus = 0.0;  ///< |omega_1| of this factor
  double chi2 = 0.0;         ///< product of the two largest moduli of P_alpha_j
  double key_eq_residual = 0.0;
};

struct DegreeReport {
  std::string label;
  int g = 0;
  std::string type_summary;
  std::vector<double> chi;  ///< chi_0..chi_2g
  double lambda1 = 0.0;
  DegreeValue degree;
  std::vector<double> omega_moduli;
  std::vector<FactorSummary> factors;
  std::vector<BlockDiagnostics> blocks;
  double key_eq_residual = 0.0;
  double theorem_residual = 0.0;
  bool pairing_ok = false;
  bool inequality_ok = false;
  double h_et = 0.0;
  /// max(log lambda_k) over k in {0, 1, g}.
  double h_alg_partial = 0.0;
  bool translation_discarded = false;
  bool asserted = false;
  double tol = 0.0;

  bool key_equality_ok() const { return key_eq_residual <= tol; }
  bool theorem_ok() const { return theorem_residual <= tol && pairing_ok && inequality_ok; }
  /// Curated instances must satisfy everything; others are only reported.
  bool passed() const { return key_equality_ok() && (!asserted || theorem_ok()); }
};

namespace detail {

inline double relative_gap(double a, double b) { return std::fabs(a - b) / std::max(std::fabs(b), 1.0); }

}  // namespace detail

inline DegreeReport verify_main_theorem(const EndInstance& inst, double tol, const DegreeConfig& cfg = {}) {
  const FullCharPoly full = full_char_poly(inst, cfg);
  const Lambda1Result lambda = numerical_degree_lambda1(inst, cfg);

  DegreeReport rep;
  rep.label = inst.label;
  rep.g = inst.g();
  rep.type_summary = type_summary(inst);
  rep.tol = tol;
  rep.asserted = inst.assert_theorem;
  rep.omega_moduli = sorted_moduli(full.roots);
  rep.chi = chi_from_moduli(rep.omega_moduli);
  rep.lambda1 = lambda.value;
  rep.blocks = lambda.blocks;
  rep.degree = degree_from(full);

  for (std::size_t k = 0; k < inst.factors.size(); ++k) {
    const ReducedCharPoly& red = full.factors[k];
    RootMultiset own;
    for (int rep_m = 0; rep_m < red.m; ++rep_m) detail::append_roots(own, red.roots, false);
    const auto moduli = sorted_moduli(own);
    FactorSummary fs;
    fs.lambda1 = lambda.per_factor[k];
    fs.top_modulus = moduli.front();
    fs.chi2 = moduli.size() >= 2 ? moduli[0] * moduli[1] : moduli[0];
    fs.key_eq_residual = detail::relative_gap(fs.lambda1, fs.top_modulus * fs.top_modulus);
    rep.key_eq_residual = std::max(rep.key_eq_residual, fs.key_eq_residual);
    rep.factors.push_back(fs);
    rep.translation_discarded = rep.translation_discarded || inst.factors[k].translation_flag;
  }

  const double chi2 = rep.chi[2];
  rep.theorem_residual = detail::relative_gap(rep.lambda1, chi2);
  rep.inequality_ok = rep.lambda1 <= chi2 + tol * std::max(chi2, 1.0);
  rep.pairing_ok = detail::relative_gap(rep.omega_moduli[1], rep.omega_moduli[0]) <= tol;

  rep.h_et = 0.0;
  for (double c : rep.chi)
    if (c > 0.0) rep.h_et = std::max(rep.h_et, std::log(c));
  rep.h_alg_partial = 0.0;
  if (rep.lambda1 > 0.0) rep.h_alg_partial = std::max(rep.h_alg_partial, std::log(rep.lambda1));
  const double deg_abs = std::fabs(rep.degree.value.convert_to<double>());
  if (deg_abs > 0.0) rep.h_alg_partial = std::max(rep.h_alg_partial, std::log(deg_abs));
  return rep;
}

// ---------------------------------------------------------------------------
// Reductions: powers and scalar multiples

inline EndInstance power_instance(const EndInstance& inst, unsigned p) {
  if (p < 1) throw Error(ErrorCode::InvalidParameters, "power_instance: p must be >= 1");
  EndInstance out = inst;
  out.label = inst.label + "^" + std::to_string(p);
  for (auto& f : out.factors) {
    for (auto& block : f.blocks) {
      std::visit([p](auto& m) { m = matrix_power(m, p); }, block);
    }
    if (f.rational_form) f.rational_form = matrix_power(*f.rational_form, p);
  }
  return out;
}

inline EndInstance scale_instance(const EndInstance& inst, unsigned m) {
  if (m < 1) throw Error(ErrorCode::InvalidParameters, "scale_instance: m must be >= 1");
  EndInstance out = inst;
  out.label = std::to_string(m) + "*" + inst.label;
  const double s = static_cast<double>(m);
  for (auto& f : out.factors) {
    for (auto& block : f.blocks) {
      std::visit(
          [s](auto& mat) {
            using T = typename std::decay_t<decltype(mat)>::value_type;
            mat *= T(s);
          },
          block);
    }
    if (f.rational_form) *f.rational_form *= BigInt(m);
  }
  return out;
}

}  // namespace dyndeg

#endif  // DYNDEG_DEGREES_HPP
