#include <cmath>

#include <gtest/gtest.h>

#include "cauchy/deformation.hpp"

namespace cauchy {
namespace {

const Mat3 kA0 = Vec3(1, -3, -3).asDiagonal();

Mat3 lie_oracle(int k) {
  Mat3 ad;
  for (int j = 0; j < 3; ++j) ad.col(j) = 2.0 * Vec3::Unit(k).cross(Vec3::Unit(j));
  return ad * kA0 - kA0 * ad;
}

TEST(Laplacians, HarmonicQuadraticsHaveEigenvalueEight) {
  for (const auto& q : sample_s3(200, 200)) {
    for (int k = 0; k < 3; ++k) {
      const ScalarField f = harmonic_quadratic(k);
      EXPECT_NEAR(berger_laplacian(f, q), 8.0 * f(q), 1e-10);
      EXPECT_NEAR(round_laplacian(f, q), 8.0 * f(q), 1e-10);
    }
  }
}

// Degree-l restrictions of harmonic polynomials have round eigenvalue l(l+2).
TEST(Laplacians, RoundEigenvalueOfCubicHarmonic) {
  const Poly4 a1 = Poly4::variable(0), a2 = Poly4::variable(1);
  const ScalarField f = ScalarField::polynomial(a1.pow(3) - 3.0 * a1 * a2.pow(2));
  for (const auto& q : sample_s3(1, 20)) EXPECT_NEAR(round_laplacian(f, q), 15.0 * f(q), 1e-10);
}

TEST(Laplacians, BergerOfNonInvariantFunction) {
  // For f = a₂ (degree 1): round eigenvalue 3 and e₁e₁ f = −f, so Δ_B f = 3f + 2f.
  const ScalarField f = coordinate_field(1);
  for (const auto& q : sample_s3(2, 20)) EXPECT_NEAR(berger_laplacian(f, q), 5.0 * f(q), 1e-12);
}

TEST(DerivativeIdentities, AllVanish) {
  for (const auto& q : sample_s3(7, 200)) {
    for (int k = 0; k < 3; ++k) {
      for (double v : lemma_derivative_checks(k, q)) EXPECT_NEAR(v, 0.0, 1e-10);
    }
  }
}

TEST(DeformationField, SolvesEquation) {
  Sampler s(12);
  for (int n = 0; n < 10; ++n) {
    const DeformVector d{s.gaussian3(), s.gaussian(), s.gaussian()};
    const VectorField3 x = deformation_field(d);
    for (const auto& q : sample_s3(100 + n, 10)) EXPECT_LT(eq_a0_residual(x, q).norm(), 1e-12);
  }
  // A generic constant field is not a solution.
  EXPECT_GT(eq_a0_residual(VectorField3::constant(Vec3(1, 0, 0)), UnitQuaternion()).norm(), 1.0);
}

TEST(DeformationField, SymmetryResidualAgrees) {
  const DeformVector d{Vec3(0.3, -1.0, 0.5), 0.7, -0.2};
  const auto a0 = SymEnd3Field::constant(kA0);
  for (const auto& q : sample_s3(5, 10)) {
    EXPECT_LT(symmetry_residual(a0, deformation_field(d), q).norm(), 1e-12);
  }
}

TEST(LieDerivatives, MatchBracketOracle) {
  const auto lie = lie_derivatives_a0();
  EXPECT_LT((lie[0] - lie_oracle(1)).norm(), 1e-13);
  EXPECT_LT((lie[1] - lie_oracle(2)).norm(), 1e-13);
  EXPECT_NEAR(lie[0](0, 2), -8.0, 1e-13);
  EXPECT_NEAR(lie[1](0, 1), 8.0, 1e-13);
}

TEST(Pairing, QuarterOfLieDerivatives) {
  const auto k = deformation_pairing();
  EXPECT_NEAR(k[0], -0.25, 1e-12);
  EXPECT_NEAR(k[1], -0.25, 1e-12);
  Sampler s(4);
  for (int n = 0; n < 5; ++n) {
    const DeformVector d{s.gaussian3(), s.gaussian(), s.gaussian()};
    const Mat3 expected = -0.25 * (d.c2 * lie_oracle(1) + d.c3 * lie_oracle(2));
    for (const auto& q : sample_s3(50 + n, 5)) {
      const Sym3 m = nabla_A0_of_deformation(d, q);
      EXPECT_LT((m - expected).norm(), 1e-11);
      EXPECT_LT((m - m.transpose()).norm(), 1e-12);
      EXPECT_NEAR(m(1, 2), 0.0, 1e-12);
      EXPECT_LT(m.diagonal().norm(), 1e-12);
    }
  }
}

TEST(Pairing, AgreesWithGenericNablaField) {
  const DeformVector d{Vec3(1.0, 2.0, -0.5), 0.4, 1.3};
  const auto field = nabla_A_field(kA0, deformation_field(d));
  for (const auto& q : sample_s3(9, 5)) {
    EXPECT_LT((field.value(q) - nabla_A0_of_deformation(d, q)).norm(), 1e-11);
  }
}

TEST(SolutionSpace, DimensionsAndSpan) {
  const auto r = deformation_solution_space(2024);
  EXPECT_EQ(r.ansatz_functions, 30);
  EXPECT_EQ(r.kernel_dimension, 5);
  EXPECT_GT(r.gap_ratio, 1e8);
  EXPECT_LT(r.max_kernel_residual, 1e-9);
  EXPECT_EQ(r.image_rank, 2);
  EXPECT_LT(r.max_span_defect, 1e-10);
  ASSERT_EQ(r.image_basis.size(), 2u);
  // Independent span check against the bracket oracle.
  Eigen::Matrix<double, 9, 2> span;
  span.col(0) = Eigen::Map<const Eigen::Matrix<double, 9, 1>>(lie_oracle(1).data());
  span.col(1) = Eigen::Map<const Eigen::Matrix<double, 9, 1>>(lie_oracle(2).data());
  const Eigen::Matrix<double, 9, 9> proj = span * (span.transpose() * span).inverse() * span.transpose();
  for (const Mat3& m : r.image_basis) {
    const Eigen::Matrix<double, 9, 1> v = Eigen::Map<const Eigen::Matrix<double, 9, 1>>(m.data());
    EXPECT_LT((v - proj * v).norm(), 1e-10);
    EXPECT_GT(v.norm(), 0.5);
  }
}

TEST(SolutionSpace, SeedIndependentDimensions) {
  for (std::uint64_t seed : {1u, 99u}) {
    const auto r = deformation_solution_space(seed);
    EXPECT_EQ(r.kernel_dimension, 5);
    EXPECT_EQ(r.image_rank, 2);
  }
}

}  // namespace
}  // namespace cauchy
