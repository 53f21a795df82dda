#include <gtest/gtest.h>

#include "dyndeg/polynomial.hpp"
#include "dyndeg/roots.hpp"
#include "oracles.hpp"

namespace {

using namespace dyndeg;

IntPolynomial ip(std::initializer_list<long long> c) {
  std::vector<BigInt> v;
  for (long long x : c) v.emplace_back(x);
  return IntPolynomial(v);
}

TEST(Polynomial, TrimsLeadingZeros) {
  IntPolynomial p = ip({1, 2, 0, 0});
  EXPECT_EQ(p.degree(), 1u);
  EXPECT_EQ(p.leading(), 2);
  EXPECT_TRUE(ip({0, 0}).is_zero());
  EXPECT_EQ(IntPolynomial().degree(), 0u);
}

TEST(Polynomial, Arithmetic) {
  const IntPolynomial p = ip({-1, 1});  // t - 1
  const IntPolynomial q = ip({1, 1});   // t + 1
  EXPECT_EQ(p * q, ip({-1, 0, 1}));
  EXPECT_EQ(p + q, ip({0, 2}));
  EXPECT_EQ(p - p, IntPolynomial());
  EXPECT_EQ(poly_power(p, 3), ip({-1, 3, -3, 1}));
  EXPECT_THROW(poly_power(p, 0), Error);
  EXPECT_EQ(IntPolynomial::linear(BigInt(3)), ip({-3, 1}));
  EXPECT_EQ(ip({2, -2, 1}).evaluate(BigInt(3)), 5);
}

TEST(Polynomial, ToString) {
  EXPECT_EQ(to_string(ip({2, -2, 1})), "t^2 - 2*t + 2");
  EXPECT_EQ(to_string(ip({0, 0, 0, 1})), "t^3");
  EXPECT_EQ(to_string(ip({-4, 1})), "t - 4");
  EXPECT_EQ(to_string(IntPolynomial()), "0");
}

TEST(Polynomial, RealPartRejectsImaginaryCoefficients) {
  GaussianPolynomial g{GaussianInt(BigInt(1), BigInt(1)), GaussianInt(1)};
  EXPECT_THROW(real_part(g), Error);
  EXPECT_EQ(real_part(g * conjugate(g)), ip({2, 2, 1}));
}

TEST(CharPolyExact, SmallExamples) {
  EXPECT_EQ(char_poly_exact(IntMatrix{{BigInt(1), BigInt(-1)}, {BigInt(1), BigInt(1)}}), ip({2, -2, 1}));
  EXPECT_EQ(char_poly_exact(IntMatrix::identity(3)), ip({-1, 3, -3, 1}));
  EXPECT_EQ(char_poly_exact(IntMatrix(2, 2, BigInt(0))), ip({0, 0, 1}));
  EXPECT_THROW(char_poly_exact(IntMatrix(2, 3, BigInt(0))), Error);
}

TEST(CharPolyExact, MatchesCofactorOracle) {
  oracle::Rng rng(11);
  for (std::size_t n = 1; n <= 6; ++n) {
    for (int rep = 0; rep < 40; ++rep) {
      const IntMatrix a = oracle::random_int_matrix(rng, n, 9);
      ASSERT_EQ(char_poly_exact(a), oracle::char_poly(a)) << "n=" << n << " rep=" << rep;
    }
  }
}

TEST(CharPolyExact, GaussianMatchesCofactorOracle) {
  oracle::Rng rng(12);
  for (std::size_t n = 1; n <= 5; ++n) {
    for (int rep = 0; rep < 20; ++rep) {
      GaussianMatrix a(n, n);
      for (auto& z : a.data()) z = GaussianInt(BigInt(rng.integer(-5, 5)), BigInt(rng.integer(-5, 5)));
      const GaussianPolynomial p = char_poly_exact(a);
      const auto [re, im] = oracle::char_poly(a);
      std::vector<BigInt> got_re, got_im;
      for (const auto& c : p.coefficients()) {
        got_re.push_back(c.re);
        got_im.push_back(c.im);
      }
      ASSERT_EQ(IntPolynomial(got_re), re);
      ASSERT_EQ(IntPolynomial(got_im), im);
    }
  }
}

TEST(CharPolyFloat, AgreesWithExactOnIntegerMatrices) {
  oracle::Rng rng(13);
  for (std::size_t n = 1; n <= 8; ++n) {
    const IntMatrix a = oracle::random_int_matrix(rng, n, 5);
    RealMatrix f(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) f(i, j) = a(i, j).convert_to<double>();
    const ComplexPolynomial approx = char_poly_float(f);
    const IntPolynomial exact = char_poly_exact(a);
    ASSERT_EQ(approx.degree(), exact.degree());
    for (std::size_t k = 0; k <= n; ++k) {
      const double want = exact[k].convert_to<double>();
      EXPECT_NEAR(approx[k].real(), want, 1e-9 * std::max(1.0, std::fabs(want)));
      EXPECT_NEAR(approx[k].imag(), 0.0, 1e-9 * std::max(1.0, std::fabs(want)));
    }
  }
}

TEST(CharPolyFloat, DimensionLimit) {
  EXPECT_NO_THROW(char_poly_float(RealMatrix::identity(kMaxFloatCharPolyDim)));
  try {
    char_poly_float(RealMatrix::identity(kMaxFloatCharPolyDim + 1));
    FAIL() << "expected DimensionTooLarge";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::DimensionTooLarge);
  }
}

TEST(Roots, GaussianQuadratic) {
  const RootMultiset r = find_roots(to_complex(ip({2, -2, 1})));
  const auto sorted = sorted_roots(r);
  ASSERT_EQ(sorted.size(), 2u);
  EXPECT_NEAR(std::abs(sorted[0] - Complex(1, 1)), 0.0, 1e-14);
  EXPECT_NEAR(std::abs(sorted[1] - Complex(1, -1)), 0.0, 1e-14);
  for (double res : r.residuals) EXPECT_LE(res, 1e-14);
}

TEST(Roots, ExactZeroRootsAreStripped) {
  const RootMultiset r = find_roots(to_complex(ip({0, 0, 0, 1})));
  ASSERT_EQ(r.roots.size(), 3u);
  for (const auto& z : r.roots) EXPECT_EQ(z, Complex(0));
}

TEST(Roots, MultipleRootsAreRecovered) {
  for (unsigned k : {2u, 4u, 7u, 10u}) {
    const ComplexPolynomial p = to_complex(poly_power(ip({-1, 1}), k));
    const RootMultiset r = find_roots(p);
    ASSERT_EQ(r.roots.size(), k);
    for (const auto& z : r.roots) EXPECT_NEAR(std::abs(z - Complex(1)), 0.0, 1e-9) << "k=" << k;
  }
  // (t^2 - 4t + 2)^2: two double roots 2 +- sqrt(2)
  const RootMultiset r = find_roots(to_complex(poly_power(ip({2, -4, 1}), 2)));
  const auto moduli = sorted_moduli(r);
  EXPECT_NEAR(moduli[0], 2 + std::sqrt(2.0), 1e-9);
  EXPECT_NEAR(moduli[1], 2 + std::sqrt(2.0), 1e-9);
  EXPECT_NEAR(moduli[2], 2 - std::sqrt(2.0), 1e-9);
  EXPECT_NEAR(moduli[3], 2 - std::sqrt(2.0), 1e-9);
}

TEST(Roots, MatchEigenOnRandomMatrices) {
  oracle::Rng rng(14);
  for (std::size_t n = 2; n <= 12; ++n) {
    const ComplexMatrix a = oracle::random_complex_matrix(rng, n);
    const RootMultiset r = find_roots(char_poly_float(a));
    EXPECT_LE(oracle::spectrum_gap(r.roots, oracle::eigenvalues(a)), 1e-9) << "n=" << n;
  }
}

TEST(CharPolyFloat, PullbackSizedMatricesMatchEigen) {
  oracle::Rng rng(15);
  for (std::size_t n : {16u, 25u, 36u}) {
    const ComplexMatrix a = oracle::random_complex_matrix(rng, n);
    const RootMultiset r = find_roots(char_poly_float(a));
    EXPECT_LE(oracle::spectrum_gap(r.roots, oracle::eigenvalues(a)), 1e-9) << "n=" << n;
  }
}

TEST(Roots, ConstantAndZeroPolynomials) {
  EXPECT_TRUE(find_roots(ComplexPolynomial{Complex(3)}).roots.empty());
  EXPECT_THROW(find_roots(ComplexPolynomial{}), Error);
}

TEST(Roots, UnreachableToleranceRaisesNoConvergence) {
  RootFinderConfig cfg;
  cfg.tol = 1e-40;
  oracle::Rng rng(15);
  const ComplexPolynomial p = char_poly_float(oracle::random_complex_matrix(rng, 6));
  try {
    find_roots(p, cfg);
    FAIL() << "expected NoConvergence";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NoConvergence);
  }
}

TEST(Roots, SortingIsByModulusThenRealThenImaginary) {
  RootMultiset r;
  r.roots = {Complex(1, 0), Complex(0, -2), Complex(0, 2), Complex(-1, 0)};
  const auto s = sorted_roots(r);
  EXPECT_EQ(s[0], Complex(0, 2));
  EXPECT_EQ(s[1], Complex(0, -2));
  EXPECT_EQ(s[2], Complex(1, 0));
  EXPECT_EQ(s[3], Complex(-1, 0));
}

TEST(SpectralRadius, DiagonalAndRotation) {
  EXPECT_DOUBLE_EQ(spectral_radius(RealMatrix::diagonal({1.0, -3.0, 2.0})), 3.0);
  const RealMatrix rot{{0.0, -2.0}, {2.0, 0.0}};
  EXPECT_NEAR(spectral_radius(rot), 2.0, 1e-14);
}

}  // namespace
