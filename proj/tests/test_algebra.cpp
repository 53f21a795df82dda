#include <gtest/gtest.h>

#include "dyndeg/algebra.hpp"
#include "dyndeg/degrees.hpp"
#include "oracles.hpp"

namespace {

using namespace dyndeg;

AlbertFactor factor(AlbertType t, int e0, int d, int n, int g_A) {
  AlbertFactor f;
  f.albert_type = t;
  f.e0 = e0;
  f.d = d;
  f.n = n;
  f.g_A = g_A;
  const std::size_t side = detail::expected_block_size(f);
  for (int b = 0; b < e0; ++b) {
    switch (t) {
      case AlbertType::I:
      case AlbertType::II: f.blocks.emplace_back(RealMatrix::identity(side)); break;
      case AlbertType::III: f.blocks.emplace_back(QuaternionMatrix::identity(side)); break;
      case AlbertType::IV: f.blocks.emplace_back(ComplexMatrix::identity(side)); break;
    }
  }
  return f;
}

ErrorCode validate_code(const AlbertFactor& f) {
  try {
    validate(f);
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::SchemaError;  // sentinel: no error
}

TEST(AlbertType, ParseAndPrint) {
  for (auto t : {AlbertType::I, AlbertType::II, AlbertType::III, AlbertType::IV}) {
    EXPECT_EQ(parse_albert_type(to_string(t)), t);
  }
  EXPECT_FALSE(parse_albert_type("V").has_value());
  EXPECT_FALSE(parse_albert_type("iv").has_value());
}

TEST(Validate, CmEllipticCurve) {
  const auto r = validate(factor(AlbertType::IV, 1, 1, 1, 1));
  EXPECT_EQ(r.e, 2);
  EXPECT_EQ(r.m, 1);
  EXPECT_EQ(r.contribution, 1);
}

TEST(Validate, SupersingularCurve) {
  const auto r = validate(factor(AlbertType::III, 1, 2, 1, 1));
  EXPECT_EQ(r.e, 1);
  EXPECT_EQ(r.m, 1);
}

TEST(Validate, OnlyIntegralityIsChecked) {
  // Not realizable, but m = 1 is integral.
  const auto r = validate(factor(AlbertType::I, 2, 1, 1, 1));
  EXPECT_EQ(r.m, 1);
}

TEST(Validate, RmSurfaceAndPowers) {
  EXPECT_EQ(validate(factor(AlbertType::I, 2, 1, 1, 2)).m, 2);
  EXPECT_EQ(validate(factor(AlbertType::II, 1, 2, 1, 2)).m, 2);
  EXPECT_EQ(validate(factor(AlbertType::IV, 1, 1, 3, 1)).m, 1);
  EXPECT_EQ(validate(factor(AlbertType::IV, 2, 3, 1, 6)).m, 1);
}

TEST(Validate, Rejections) {
  EXPECT_EQ(validate_code(factor(AlbertType::I, 1, 2, 1, 1)), ErrorCode::InvalidParameters);
  EXPECT_EQ(validate_code(factor(AlbertType::III, 1, 1, 1, 1)), ErrorCode::InvalidParameters);
  EXPECT_EQ(validate_code(factor(AlbertType::IV, 3, 1, 1, 1)), ErrorCode::InvalidParameters);  // m = 1/3

  AlbertFactor f = factor(AlbertType::IV, 1, 1, 1, 1);
  f.g_A = 0;
  EXPECT_EQ(validate_code(f), ErrorCode::InvalidParameters);

  f = factor(AlbertType::IV, 1, 1, 1, 1);
  f.blocks.emplace_back(ComplexMatrix::identity(1));
  EXPECT_EQ(validate_code(f), ErrorCode::InvalidParameters);  // block count

  f = factor(AlbertType::IV, 1, 1, 1, 1);
  f.blocks[0] = RealMatrix::identity(1);
  EXPECT_EQ(validate_code(f), ErrorCode::InvalidParameters);  // field

  f = factor(AlbertType::II, 1, 2, 1, 2);
  f.blocks[0] = RealMatrix::identity(1);
  EXPECT_EQ(validate_code(f), ErrorCode::InvalidParameters);  // Type II needs 2n x 2n

  f = factor(AlbertType::I, 2, 1, 1, 2);
  f.rational_form = IntMatrix::identity(3);
  EXPECT_EQ(validate_code(f), ErrorCode::InvalidParameters);

  EXPECT_THROW(validate(EndInstance{}), Error);
}

TEST(HermitianBasis, Dimensions) {
  for (std::size_t r = 1; r <= 5; ++r) {
    EXPECT_EQ(hermitian_basis<double>(r).elements.size(), r * (r + 1) / 2);
    EXPECT_EQ(hermitian_basis<Complex>(r).elements.size(), r * r);
    EXPECT_EQ(hermitian_basis<Quaternion>(r).elements.size(), r * (2 * r - 1));
    EXPECT_EQ(hermitian_dimension<Quaternion>(r), r * (2 * r - 1));
  }
  EXPECT_THROW(hermitian_basis<double>(0), Error);
}

TEST(HermitianBasis, CanonicalOrderOverReals) {
  const auto b = hermitian_basis<double>(2);
  ASSERT_EQ(b.elements.size(), 3u);
  EXPECT_EQ(b.elements[0], (RealMatrix{{1, 0}, {0, 0}}));
  EXPECT_EQ(b.elements[1], (RealMatrix{{0, 0}, {0, 1}}));
  EXPECT_EQ(b.elements[2], (RealMatrix{{0, 1}, {1, 0}}));
}

TEST(HermitianBasis, ElementsAreHermitianAndIndependent) {
  const auto q = hermitian_basis<Quaternion>(3);
  for (const auto& h : q.elements) EXPECT_TRUE(is_hermitian(iota(h)));
  const auto c = hermitian_basis<Complex>(3);
  for (const auto& h : c.elements) EXPECT_TRUE(is_hermitian(h));
  // Independence: the identity restriction has a well-conditioned Gram matrix.
  const Restriction r = restrict_to_subspace(ComplexMatrix::identity(9), c, 1e-12);
  EXPECT_LE(max_abs_diff(r.matrix, RealMatrix::identity(9)), 1e-14);
}

TEST(Rosati, ConjugateTranspose) {
  AlbertFactor real = factor(AlbertType::I, 1, 1, 1, 1);
  real.blocks[0] = RealMatrix{{2}};
  EXPECT_EQ(std::get<RealMatrix>(rosati(real, 0)), (RealMatrix{{2}}));

  AlbertFactor cm = factor(AlbertType::IV, 1, 1, 1, 1);
  cm.blocks[0] = ComplexMatrix{{Complex(1, 1)}};
  EXPECT_EQ(std::get<ComplexMatrix>(rosati(cm, 0)), (ComplexMatrix{{Complex(1, -1)}}));

  AlbertFactor ss = factor(AlbertType::III, 1, 2, 1, 1);
  ss.blocks[0] = QuaternionMatrix{{Quaternion{1, 1, 1, 1}}};
  EXPECT_EQ(std::get<QuaternionMatrix>(rosati(ss, 0)), (QuaternionMatrix{{Quaternion{1, -1, -1, -1}}}));

  try {
    rosati(ss, 1);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::IndexOutOfRange);
  }
}

TEST(Rosati, Involution) {
  oracle::Rng rng(31);
  AlbertFactor ss = factor(AlbertType::III, 1, 2, 3, 3);
  ss.blocks[0] = oracle::random_quaternion_matrix(rng, 3);
  AlbertFactor twice = ss;
  twice.blocks[0] = rosati(ss, 0);
  EXPECT_EQ(std::get<QuaternionMatrix>(rosati(twice, 0)), std::get<QuaternionMatrix>(ss.blocks[0]));
}

TEST(TypeSummary, ListsFactors) {
  EndInstance inst;
  inst.factors = {factor(AlbertType::IV, 1, 1, 1, 1), factor(AlbertType::III, 1, 2, 1, 1)};
  EXPECT_EQ(type_summary(inst), "IV(e0=1 d=1 n=1 gA=1) x III(e0=1 d=2 n=1 gA=1)");
  EXPECT_EQ(inst.g(), 2);
}

}  // namespace
