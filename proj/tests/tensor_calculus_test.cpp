#include <cmath>

#include <gtest/gtest.h>

#include "cauchy/tensor.hpp"

namespace cauchy {
namespace {

using Conn = std::array<Mat3, 3>;

// Koszul formula for a frame with constant Gram matrix G and brackets C:
// 2 g(∇_a e_b, e_c) = g([a,b],c) − g([b,c],a) + g([c,a],b).
Conn koszul_oracle(const StructureConstants& c, const Mat3& g) {
  Conn omega;
  for (int a = 0; a < 3; ++a) {
    Mat3 lowered;
    for (int b = 0; b < 3; ++b) {
      for (int k = 0; k < 3; ++k) {
        const Vec3 ek = Vec3::Unit(k), ea = Vec3::Unit(a), eb = Vec3::Unit(b);
        lowered(k, b) = 0.5 * ((g * c[a][b]).dot(ek) - (g * c[b][k]).dot(ea) + (g * c[k][a]).dot(eb));
      }
    }
    omega[a] = g.inverse() * lowered;
  }
  return omega;
}

StructureConstants right_constants() {
  StructureConstants c = left_structure_constants();
  for (auto& row : c)
    for (auto& v : row) v = -v;
  return c;
}

// R(e_a, e_b) = Ω_a Ω_b − Ω_b Ω_a − Σ_d C_ab^d Ω_d for constant-coefficient frames.
Mat3 brute_curvature(const Conn& om, const StructureConstants& c, int a, int b) {
  Mat3 r = om[a] * om[b] - om[b] * om[a];
  for (int d = 0; d < 3; ++d) r -= c[a][b][d] * om[d];
  return r;
}

Mat3 berger_gram(const BergerParams& p) { return Vec3(p.a * p.a, p.b * p.b, p.b * p.b).asDiagonal(); }

TEST(TwoForm, StorageConventions) {
  const Vec3 x(0.3, -1.0, 2.0), y(1.5, 0.2, -0.4), z(-0.7, 0.9, 0.1);
  const TwoForm w = wedge_endo(x, y);
  EXPECT_LT((w(z) - (x.dot(z) * y - y.dot(z) * x)).norm(), 1e-14);
  EXPECT_LT((w.matrix() * z - w(z)).norm(), 1e-14);
  EXPECT_LT((w.matrix() + w.matrix().transpose()).norm(), 1e-15);
  EXPECT_LT((two_form_from_matrix(w.matrix()).vec() - w.vec()).norm(), 1e-15);
  EXPECT_EQ(TwoForm::basis(0, 1).vec(), -TwoForm::basis(1, 0).vec());
  EXPECT_NEAR(w.matrix_norm(), w.matrix().norm(), 1e-14);
  EXPECT_DOUBLE_EQ(TwoForm::basis(1, 2).coeff(1, 2), 1.0);
  EXPECT_DOUBLE_EQ(TwoForm::basis(1, 2).coeff(2, 1), -1.0);
  // Hodge star on the oriented frame: *e₁ = e₂∧e₃ and cyclically.
  for (int k = 0; k < 3; ++k) {
    const int a = (k + 1) % 3, b = (k + 2) % 3;
    EXPECT_LT((hodge_star(Vec3::Unit(k)).vec() - TwoForm::basis(a, b).vec()).norm(), 1e-15);
    EXPECT_LT((hodge_star(TwoForm::basis(a, b)) - Vec3::Unit(k)).norm(), 1e-15);
  }
  EXPECT_EQ(third_index(0, 1), 2);
  EXPECT_DOUBLE_EQ(levi_civita_symbol(0, 1, 2), 1.0);
  EXPECT_DOUBLE_EQ(levi_civita_symbol(1, 0, 2), -1.0);
  EXPECT_DOUBLE_EQ(levi_civita_symbol(1, 1, 2), 0.0);
}

TEST(TwoForm, InteriorAndWedge) {
  // ι_X(e₁∧e₂) = X¹e₂ − X²e₁.
  const Vec3 x(2.0, 3.0, 5.0);
  const Vec3 i = interior(x, TwoForm::basis(0, 1));
  EXPECT_LT((i - Vec3(-3.0, 2.0, 0.0)).norm(), 1e-15);
  EXPECT_LT((wedge(Vec3::UnitX(), Vec3::UnitY()).vec() - TwoForm::basis(0, 1).vec()).norm(), 1e-15);
}

TEST(Connection, RoundMatchesKoszulAndCrossProduct) {
  const auto left = round_connection(Chirality::left);
  const auto right = round_connection(Chirality::right);
  const Conn kl = koszul_oracle(left_structure_constants(), Mat3::Identity());
  const Conn kr = koszul_oracle(right_constants(), Mat3::Identity());
  const Conn lib = koszul_connection(left_structure_constants()).omega;
  const Vec3 x(0.2, -1.1, 0.4), y(1.0, 0.5, -2.0);
  for (int a = 0; a < 3; ++a) {
    EXPECT_LT((left.omega[a] - kl[a]).norm(), 1e-14);
    EXPECT_LT((right.omega[a] - kr[a]).norm(), 1e-14);
    EXPECT_LT((lib[a] - kl[a]).norm(), 1e-14);
    for (int b = 0; b < 3; ++b) {
      EXPECT_LT((levi_civita_round(a, b) - Vec3::Unit(a).cross(Vec3::Unit(b))).norm(), 1e-15);
    }
  }
  EXPECT_LT((left.covariant(x, y) - x.cross(y)).norm(), 1e-14);
  EXPECT_LT((right.covariant(x, y) + x.cross(y)).norm(), 1e-14);
}

TEST(Connection, BergerTableMatchesKoszul) {
  for (const BergerParams p : {BergerParams{1.0, 1.0}, BergerParams{0.7, 1.9}, BergerParams{2.5, 0.4}}) {
    const Conn oracle = koszul_oracle(left_structure_constants(), berger_gram(p));
    const auto conn = berger_connection(p);
    const auto kos = koszul_connection(left_structure_constants(), berger_gram(p));
    for (int a = 0; a < 3; ++a) {
      EXPECT_LT((conn.omega[a] - oracle[a]).norm(), 1e-13);
      EXPECT_LT((kos.omega[a] - oracle[a]).norm(), 1e-13);
      for (int b = 0; b < 3; ++b) {
        EXPECT_LT((levi_civita_berger(p, a, b) - oracle[a].col(b)).norm(), 1e-13);
      }
    }
  }
  EXPECT_THROW(BergerParams({0.0, 1.0}).validate(), std::invalid_argument);
  EXPECT_THROW(berger_connection({1.0, -1.0}), std::invalid_argument);
}

TEST(Connection, BergerIsMetricAndTorsionFree) {
  const BergerParams p{0.6, 1.3};
  const Mat3 g = berger_gram(p);
  const auto conn = berger_connection(p);
  const auto c = left_structure_constants();
  for (int a = 0; a < 3; ++a) {
    EXPECT_LT((g * conn.omega[a] + (g * conn.omega[a]).transpose()).norm(), 1e-13);
    for (int b = 0; b < 3; ++b) {
      const Vec3 torsion = conn.omega[a].col(b) - conn.omega[b].col(a) - c[a][b];
      EXPECT_LT(torsion.norm(), 1e-13);
    }
  }
}

TEST(Curvature, RoundMatchesBruteForce) {
  for (Chirality ch : {Chirality::left, Chirality::right}) {
    const auto c = ch == Chirality::left ? left_structure_constants() : right_constants();
    const Conn om = koszul_oracle(c, Mat3::Identity());
    for (int a = 0; a < 3; ++a) {
      for (int b = 0; b < 3; ++b) {
        const Mat3 brute = brute_curvature(om, c, a, b);
        EXPECT_LT((brute - curvature_round(Vec3::Unit(a), Vec3::Unit(b)).matrix()).norm(), 1e-13);
      }
    }
  }
}

TEST(Curvature, BergerMatchesBruteForce) {
  for (const BergerParams p : {BergerParams{1.0, 1.0}, BergerParams{0.8, 1.7}, BergerParams{3.0, 0.5}}) {
    const auto c = left_structure_constants();
    const Mat3 g = berger_gram(p);
    const Conn om = koszul_oracle(c, g);
    const Mat3 d = Vec3(p.a, p.b, p.b).asDiagonal();
    for (int a = 0; a < 3; ++a) {
      for (int b = 0; b < 3; ++b) {
        if (a == b) continue;
        const Mat3 brute = brute_curvature(om, c, a, b);
        EXPECT_LT((brute - berger_curvature_endomorphism(p, a, b)).norm(), 1e-12);
        // κ e_a∧e_b with the metric wedge (e_a∧e_b)Z = g(e_a,Z)e_b − g(e_b,Z)e_a.
        const Vec3 ea = Vec3::Unit(a), eb = Vec3::Unit(b);
        const Mat3 wedge_g = eb * (g * ea).transpose() - ea * (g * eb).transpose();
        EXPECT_LT((brute - curvature_berger(p, a, b) * wedge_g).norm(), 1e-12);
        // Orthonormal frame: D R(e_a,e_b) D⁻¹ / (|e_a||e_b|).
        const Mat3 ortho = d * brute * d.inverse() / (d(a, a) * d(b, b));
        EXPECT_LT((ortho - curvature_berger_orthonormal(p, a, b).matrix()).norm(), 1e-12);
        // Sectional curvature g(R(e_a,e_b)e_b, e_a) / (|e_a|²|e_b|²).
        const double k = (g * ea).dot(brute * eb) / (g(a, a) * g(b, b));
        EXPECT_NEAR(berger_sectional_curvature(p, a, b), k, 1e-12);
      }
    }
    const double a2 = p.a * p.a, b4 = std::pow(p.b, 4);
    EXPECT_NEAR(curvature_berger(p, 0, 1), -a2 / b4, 1e-13);
    EXPECT_NEAR(curvature_berger(p, 0, 2), -a2 / b4, 1e-13);
    EXPECT_NEAR(curvature_berger(p, 1, 2), (3 * a2 - 4 * p.b * p.b) / b4, 1e-12);
    EXPECT_NEAR(curvature_berger(p, 1, 0), -a2 / b4, 1e-13);
  }
  EXPECT_NEAR(berger_sectional_curvature({1.0, 1.0}, 1, 2), 1.0, 1e-14);
}

TEST(CovariantDerivative, ConstantEndomorphisms) {
  const auto conn = round_connection(Chirality::left);
  EndoJet id;
  id.value = Mat3::Identity();
  for (int a = 0; a < 3; ++a) {
    EXPECT_LT(covariant_derivative(id, conn, Vec3::Unit(a)).norm(), 1e-15);
  }
  // (∇_X A)Y = X × AY − A(X × Y) by hand for A = diag(1,−3,−3).
  EndoJet a0;
  a0.value = Vec3(1, -3, -3).asDiagonal();
  EXPECT_LT((d_nabla_A(a0, Vec3::UnitX(), Vec3::UnitY(), conn) - 4.0 * Vec3::UnitZ()).norm(), 1e-14);
  EXPECT_LT((d_nabla_A(a0, Vec3::UnitX(), Vec3::UnitZ(), conn) + 4.0 * Vec3::UnitY()).norm(), 1e-14);
  EXPECT_LT((d_nabla_A(a0, Vec3::UnitY(), Vec3::UnitZ(), conn) + 8.0 * Vec3::UnitX()).norm(), 1e-14);
  // δA = −Σ (∇_{e_k} A) e_k.
  Vec3 div = Vec3::Zero();
  for (int k = 0; k < 3; ++k) {
    const Vec3 ek = Vec3::Unit(k);
    div -= ek.cross(a0.value * ek) - a0.value * ek.cross(ek);
  }
  EXPECT_LT((divergence_A(a0, conn) - div).norm(), 1e-14);
}

TEST(CovariantDerivative, BergerWeingartenDisplay) {
  const BergerParams p{0.8, 1.6};
  const double adot = -0.4, bdot = 2.1;
  EndoJet a;
  a.value = Vec3(-adot / p.a, -bdot / p.b, -bdot / p.b).asDiagonal();
  const Vec3 d23 = d_nabla_A(a, Vec3::UnitY(), Vec3::UnitZ(), berger_connection(p));
  EXPECT_LT((d23 - 2.0 * (adot / p.a - bdot / p.b) * Vec3::UnitX()).norm(), 1e-13);
}

TEST(CovariantDerivative, FrameDerivativeTerm) {
  const auto conn = round_connection(Chirality::left);
  EndoJet j;
  j.d[1] = Mat3::Identity();
  const Vec3 x(0.0, 2.0, 0.0);
  EXPECT_LT((covariant_derivative(j, conn, x) - 2.0 * Mat3::Identity()).norm(), 1e-15);
  EXPECT_LT((conn.omega_along(x) - 2.0 * conn.omega[1]).norm(), 1e-15);
}

}  // namespace
}  // namespace cauchy
