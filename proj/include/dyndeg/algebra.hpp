#ifndef DYNDEG_ALGEBRA_HPP
#define DYNDEG_ALGEBRA_HPP

#include <optional>
#include <string>
#include <string_view>
#include <type_traits>
#include <variant>
#include <vector>

#include "dyndeg/error.hpp"
#include "dyndeg/matrix.hpp"
#include "dyndeg/scalar.hpp"

namespace dyndeg {

/// Albert classification of the endomorphism algebra of a simple factor.
enum class AlbertType { I, II, III, IV };

inline std::string_view to_string(AlbertType t) {
  switch (t) {
    case AlbertType::I: return "I";
    case AlbertType::II: return "II";
    case AlbertType::III: return "III";
    case AlbertType::IV: return "IV";
  }
  return "?";
}

inline std::optional<AlbertType> parse_albert_type(std::string_view s) {
  if (s == "I") return AlbertType::I;
  if (s == "II") return AlbertType::II;
  if (s == "III") return AlbertType::III;
  if (s == "IV") return AlbertType::IV;
  return std::nullopt;
}

/// One real or complex place of the realization: M_r(R), M_r(C) or M_r(H).
using Block = std::variant<RealMatrix, ComplexMatrix, QuaternionMatrix>;

inline std::size_t block_size(const Block& b) {
  return std::visit([](const auto& m) { return m.rows(); }, b);
}

/// A power A^n of a simple abelian variety together with the image of an
/// endomorphism in End(A^n) (x) R, one block per place.
struct AlbertFactor {
  AlbertType albert_type = AlbertType::I;
  int e0 = 1;   ///< [K0 : Q]
  int d = 1;    ///< sqrt([D : K])
  int n = 1;    ///< power of the simple factor
  int g_A = 1;  ///< dimension of the simple factor
  std::vector<Block> blocks;
  /// Morphism carried a translation; discarded by every degree computation.
  bool translation_flag = false;
  /// Optional integer matrix whose characteristic polynomial is the reduced
  /// characteristic polynomial; gives an exact path when the blocks are
  /// irrational (e.g. the real embeddings of a + b*sqrt(D)).
  std::optional<IntMatrix> rational_form;

  /// [K : Q]
  int e() const { return albert_type == AlbertType::IV ? 2 * e0 : e0; }
  int dimension() const { return n * g_A; }
};

struct EndInstance {
  std::string label;
  std::vector<AlbertFactor> factors;
  /// Curated (realizable) instance: the full theorem is asserted, not only
  /// the matrix-level key equality.
  bool assert_theorem = false;

  int g() const {
    int total = 0;
    for (const auto& f : factors) total += f.dimension();
    return total;
  }
};

struct ValidationReport {
  int e = 0;
  int m = 0;             ///< exponent in P = chi_red^m
  int contribution = 0;  ///< n * g_A
};

namespace detail {

[[noreturn]] inline void invalid(const std::string& what) { throw Error(ErrorCode::InvalidParameters, what); }

inline std::size_t expected_block_size(const AlbertFactor& f) {
  switch (f.albert_type) {
    case AlbertType::I: return static_cast<std::size_t>(f.n);
    case AlbertType::II: return static_cast<std::size_t>(2 * f.n);
    case AlbertType::III: return static_cast<std::size_t>(f.n);
    case AlbertType::IV: return static_cast<std::size_t>(f.d * f.n);
  }
  return 0;
}

inline std::size_t expected_block_kind(AlbertType t) {
  switch (t) {
    case AlbertType::I:
    case AlbertType::II: return 0;
    case AlbertType::III: return 2;
    case AlbertType::IV: return 1;
  }
  return 0;
}

}  // namespace detail

/// Checks the factor's arithmetic and shape invariants. Only integrality of
/// m = 2g/(e d n) is checked; realizability by an actual abelian variety is not.
inline ValidationReport validate(const AlbertFactor& f) {
  using detail::invalid;
  if (f.e0 < 1 || f.d < 1 || f.n < 1 || f.g_A < 1) invalid("e0, d, n, g_A must be positive");
  if ((f.albert_type == AlbertType::I) && f.d != 1) invalid("Type I requires d = 1");
  if ((f.albert_type == AlbertType::II || f.albert_type == AlbertType::III) && f.d != 2) {
    invalid(std::string("Type ") + std::string(to_string(f.albert_type)) + " requires d = 2");
  }
  ValidationReport report;
  report.e = f.e();
  report.contribution = f.dimension();
  const int numerator = 2 * f.n * f.g_A;
  const int denominator = report.e * f.d * f.n;
  if (numerator % denominator != 0) {
    invalid("m = 2g/(e*d*n) = " + std::to_string(numerator) + "/" + std::to_string(denominator) +
            " is not an integer");
  }
  report.m = numerator / denominator;
  if (f.blocks.size() != static_cast<std::size_t>(f.e0)) {
    invalid("block count " + std::to_string(f.blocks.size()) + " differs from e0 = " + std::to_string(f.e0));
  }
  const std::size_t size = detail::expected_block_size(f);
  const std::size_t kind = detail::expected_block_kind(f.albert_type);
  for (std::size_t i = 0; i < f.blocks.size(); ++i) {
    const Block& b = f.blocks[i];
    if (b.index() != kind) invalid("block " + std::to_string(i) + " has the wrong scalar field");
    const bool square = std::visit([](const auto& m) { return m.is_square(); }, b);
    if (!square || block_size(b) != size) {
      invalid("block " + std::to_string(i) + " must be " + std::to_string(size) + "x" + std::to_string(size));
    }
  }
  if (f.rational_form) {
    const std::size_t deg = static_cast<std::size_t>(report.e * f.d * f.n);
    if (!f.rational_form->is_square() || f.rational_form->rows() != deg) {
      invalid("rational_form must be " + std::to_string(deg) + "x" + std::to_string(deg));
    }
  }
  return report;
}

inline void validate(const EndInstance& inst) {
  if (inst.factors.empty()) throw Error(ErrorCode::InvalidParameters, "instance has no factors");
  for (std::size_t k = 0; k < inst.factors.size(); ++k) {
    try {
      validate(inst.factors[k]);
    } catch (const Error& e) {
      throw Error(ErrorCode::InvalidParameters, "factor " + std::to_string(k) + ": " + e.what());
    }
  }
}

/// Real basis of the (conjugate-)symmetric r x r matrices over T.
template <class T>
struct HermitianBasis {
  std::size_t r = 0;
  std::vector<Matrix<T>> elements;
};

/// Real dimension of the Hermitian r x r matrices over the field of T.
template <class T>
constexpr std::size_t hermitian_dimension(std::size_t r) {
  if constexpr (std::is_same_v<T, double>) {
    return r * (r + 1) / 2;
  } else if constexpr (std::is_same_v<T, Complex>) {
    return r * r;
  } else {
    return r * (2 * r - 1);
  }
}

/// Canonical basis: diagonal units first, then for each i < j (lexicographic)
/// e_ij + e_ji, followed over C by u*e_ij - u*e_ji for u = i, and over H
/// additionally for u = j, k.
template <class T>
HermitianBasis<T> hermitian_basis(std::size_t r) {
  if (r < 1) throw Error(ErrorCode::InvalidParameters, "hermitian_basis: r must be >= 1");
  HermitianBasis<T> basis;
  basis.r = r;
  for (std::size_t i = 0; i < r; ++i) {
    Matrix<T> m(r, r, T(0));
    m(i, i) = T(1);
    basis.elements.push_back(std::move(m));
  }
  std::vector<T> units{T(1)};
  if constexpr (std::is_same_v<T, Complex>) {
    units.push_back(Complex(0, 1));
  } else if constexpr (std::is_same_v<T, Quaternion>) {
    units.push_back(Quaternion::i());
    units.push_back(Quaternion::j());
    units.push_back(Quaternion::k());
  }
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = i + 1; j < r; ++j) {
      for (const T& u : units) {
        Matrix<T> m(r, r, T(0));
        m(i, j) = u;
        m(j, i) = conj(u);
        basis.elements.push_back(std::move(m));
      }
    }
  }
  return basis;
}

/// Realization of the Rosati image of the indexed block.
inline Block rosati(const AlbertFactor& f, std::size_t block_index) {
  if (block_index >= f.blocks.size()) {
    throw Error(ErrorCode::IndexOutOfRange, "rosati: block " + std::to_string(block_index) + " of " +
                                                std::to_string(f.blocks.size()));
  }
  return std::visit([](const auto& m) -> Block { return conj_transpose(m); }, f.blocks[block_index]);
}

inline std::string type_summary(const EndInstance& inst) {
  std::string out;
  for (std::size_t k = 0; k < inst.factors.size(); ++k) {
    const auto& f = inst.factors[k];
    if (k > 0) out += " x ";
    out += std::string(to_string(f.albert_type)) + "(e0=" + std::to_string(f.e0) + " d=" + std::to_string(f.d) +
           " n=" + std::to_string(f.n) + " gA=" + std::to_string(f.g_A) + ")";
  }
  return out;
}

}  // namespace dyndeg

#endif  // DYNDEG_ALGEBRA_HPP
