#include <algorithm>
#include <cmath>
#include <set>

#include <gtest/gtest.h>

#include "cauchy/classification.hpp"

namespace cauchy {
namespace {

constexpr KnownKind kAllKinds[] = {KnownKind::plus_id, KnownKind::minus_id, KnownKind::left_133,
                                   KnownKind::right_133};

// Left system with u = d + 1: u_a u_b = 2 u_c cyclically. Multiplying the three
// equations gives (uvw)² = 8 uvw; if uvw = 0 every u is 0, otherwise each
// u_c = u_a u_b / 2 forces u_c² = 4. Candidates: zero, or all entries ±2.
std::vector<DiagonalTriple> enumerate_left() {
  std::vector<DiagonalTriple> out{Vec3(-1, -1, -1)};
  for (int mask = 0; mask < 8; ++mask) {
    const Vec3 u((mask & 1) ? -2 : 2, (mask & 2) ? -2 : 2, (mask & 4) ? -2 : 2);
    if (u[0] * u[1] == 2 * u[2] && u[1] * u[2] == 2 * u[0] && u[2] * u[0] == 2 * u[1]) {
      out.push_back(u - Vec3::Ones());
    }
  }
  return out;
}

// Plain Newton iteration in test code, from seeded random starts.
std::vector<DiagonalTriple> newton_roots(Chirality c, int starts) {
  Sampler s(77);
  std::vector<DiagonalTriple> roots;
  for (int n = 0; n < starts; ++n) {
    Vec3 d = 3.0 * s.gaussian3();
    for (int it = 0; it < 100; ++it) {
      const auto f = constant_frame_residual(d, c);
      Mat3 jac;
      const double h = 1e-7;
      for (int k = 0; k < 3; ++k) {
        Vec3 dp = d, dm = d;
        dp[k] += h;
        dm[k] -= h;
        const auto fp = constant_frame_residual(dp, c), fm = constant_frame_residual(dm, c);
        for (int i = 0; i < 3; ++i) jac(i, k) = (fp[i] - fm[i]) / (2 * h);
      }
      const Vec3 fv(f[0], f[1], f[2]);
      if (fv.norm() < 1e-13) break;
      d -= jac.fullPivLu().solve(fv);
      if (!d.allFinite()) break;
    }
    const auto f = constant_frame_residual(d, c);
    if (d.allFinite() && Vec3(f[0], f[1], f[2]).norm() < 1e-10) {
      const bool seen = std::any_of(roots.begin(), roots.end(), [&](const Vec3& r) { return (r - d).norm() < 1e-6; });
      if (!seen) roots.push_back(d);
    }
  }
  return roots;
}

TEST(ConstantFrame, ResidualDefinition) {
  const auto r = constant_frame_residual(Vec3(0.5, 2.0, -1.0));
  EXPECT_NEAR(r[0], 1.5 * 3.0 - 0.0, 1e-15);
  EXPECT_NEAR(r[1], 3.0 * 0.0 - 2 * 1.5, 1e-15);
  EXPECT_NEAR(r[2], 0.0 * 1.5 - 2 * 3.0, 1e-15);
  for (double v : constant_frame_residual(Vec3(-1, 3, 3), Chirality::right)) EXPECT_NEAR(v, 0.0, 1e-15);
}

TEST(ConstantFrame, CaseSplitMatchesSignEnumeration) {
  const auto left = constant_frame_solutions(Chirality::left);
  EXPECT_EQ(left.size(), 5u);
  EXPECT_TRUE(same_triple_set(left, enumerate_left()));
  std::vector<DiagonalTriple> negated;
  for (const auto& d : enumerate_left()) negated.push_back(-d);
  EXPECT_TRUE(same_triple_set(constant_frame_solutions(Chirality::right), negated));
  EXPECT_FALSE(same_triple_set(left, negated));
}

TEST(ConstantFrame, NewtonFromRandomStartsFindsNothingElse) {
  for (Chirality c : {Chirality::left, Chirality::right}) {
    const auto roots = newton_roots(c, 400);
    EXPECT_TRUE(same_triple_set(roots, constant_frame_solutions(c))) << to_string(c);
    EXPECT_TRUE(same_triple_set(constant_frame_grid_search(c), constant_frame_solutions(c)));
  }
}

TEST(ConstantFrame, ClassifiedSetAndGeometricCheck) {
  const auto all = classify_constant_solutions();
  ASSERT_EQ(all.size(), 8u);
  std::multiset<std::string> families;
  const auto pts = sample_s3(3, 100);
  for (const auto& t : all) {
    families.insert(t.family);
    const std::set<double> distinct(t.eigenvalues.begin(), t.eigenvalues.end());
    EXPECT_LT(distinct.size(), 3u);
    ASSERT_FALSE(t.frames.empty());
    for (Chirality c : t.frames) {
      const auto field = SymEnd3Field::constant(Mat3(t.eigenvalues.asDiagonal()), c);
      EXPECT_LT(flatness_stats(field, pts).max(), 1e-12);
    }
  }
  EXPECT_EQ(families.count("plus-id"), 1u);
  EXPECT_EQ(families.count("minus-id"), 1u);
  EXPECT_EQ(families.count("left-133"), 3u);
  EXPECT_EQ(families.count("right-133"), 3u);
  // ±Id solve in both frames.
  for (const auto& t : all) {
    if (t.family == "plus-id" || t.family == "minus-id") EXPECT_EQ(t.frames.size(), 2u);
  }
  const auto bad = SymEnd3Field::constant(Mat3(Vec3(1, 1, -3).asDiagonal()));
  EXPECT_GT(flatness_stats(bad, pts).max(), 1.0);
}

HopfReducedData random_reduced(Sampler& s) {
  auto rp = [&] { return s.polynomial<3>(2); };
  Poly3Mat m;
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = i; j < 3; ++j) m[i][j] = m[j][i] = rp();
  return {S2ScalarField(rp()), S2VectorField({rp(), rp(), rp()}), S2EndoField(m)};
}

Vec3 eval3(const std::array<Poly4, 3>& p, const Eigen::Vector4d& a) { return {p[0](a), p[1](a), p[2](a)}; }

// The flatness residual of a lifted field against the reduced equations.
TEST(HopfReduction, LiftCrossCheck) {
  Sampler s(11);
  const auto yp = hopf_map_poly();
  const auto ep = hopf_horizontal_poly();
  for (int trial = 0; trial < 3; ++trial) {
    const HopfReducedData h = random_reduced(s);
    const SymEnd3Field a = lift_to_s3(h);
    for (int n = 0; n < 10; ++n) {
      const UnitQuaternion q = s.point_s3();
      const Eigen::Vector4d amb = q.ambient();
      const Vec3 y = eval3(yp, amb);
      const std::array<Vec3, 2> e{eval3(ep[0], amb), eval3(ep[1], amb)};
      EXPECT_NEAR(y.norm(), 1.0, 1e-14);
      EXPECT_NEAR(e[0].cross(e[1]).dot(y), 1.0, 1e-14);
      EXPECT_LT(lie_derivative_endo(a, VectorField3::constant(Vec3::UnitX()), q).norm(), 1e-11);
      const ReducedResidual r = hopf_reduction_components(h, y);
      for (int j = 0; j < 2; ++j) {
        const Vec3 res = flatness_residual(a, q, Vec3::UnitX(), Vec3::Unit(j + 1)).vec();
        EXPECT_NEAR(res[0], r.eq1.dot(e[j]), 1e-10);
        const Vec3 horizontal = res[1] * e[0] + res[2] * e[1];
        EXPECT_LT((horizontal - r.eq2 * e[j]).norm(), 1e-10);
      }
      const Vec3 res = flatness_residual(a, q, Vec3::UnitY(), Vec3::UnitZ()).vec();
      EXPECT_NEAR(res[0], -r.eq3, 1e-10);
      EXPECT_LT((res[1] * e[0] + res[2] * e[1] + r.eq4).norm(), 1e-10);
    }
  }
}

TEST(HopfReduction, KnownFamiliesAndZeroControl) {
  const auto ys = sample_s2(5, 100);
  for (KnownKind k : kAllKinds) {
    const auto h = hopf_reduce(known_example(k));
    for (const auto& y : ys) {
      for (double v : hopf_reduction_residual(h, y)) EXPECT_LT(v, 1e-12) << to_string(k);
      const auto sc = special_case_residual(h.f, h.b, y);
      EXPECT_LT(sc.eq1, 1e-12);
      EXPECT_LT(std::abs(sc.eq2), 1e-12);
      EXPECT_LT(sc.eq3.norm(), 1e-12);
    }
    // The lift reproduces the field in the left frame.
    const auto back = lift_to_s3(h);
    const UnitQuaternion q(0.3, 0.1, 0.8, -0.2);
    const double sign = known_chirality(k) == Chirality::left ? 1.0 : -1.0;
    EXPECT_LT((back.value(q) - sign * known_matrix(k)).norm(), 1e-13);
  }
  const HopfReducedData zero{S2ScalarField::constant(0.0), S2VectorField::zero(), S2EndoField::constant(Mat3::Zero())};
  for (const auto& y : ys) {
    const auto v = hopf_reduction_residual(zero, y);
    EXPECT_GT(*std::max_element(v.begin(), v.end()), 0.5);
    EXPECT_NEAR(v[2], 1.0, 1e-14);  // 2(1 + 0) − det(P)
  }
}

TEST(HopfReduction, RejectsUnsupportedFields) {
  EXPECT_THROW(hopf_reduce(SymEnd3Field::constant(Mat3(Vec3(1, 2, 3).asDiagonal()))), std::invalid_argument);
  EXPECT_THROW(hopf_reduce(SymEnd3Field::from_polynomials({Poly4::variable(0), {}, {}, {}, {}, {}})),
               std::invalid_argument);
  EXPECT_NO_THROW(hopf_reduce(SymEnd3Field::constant(Mat3(Vec3(2, 5, 5).asDiagonal()))));
}

TEST(Rigidity, IdentitiesVanish) {
  for (const auto& y : sample_s2(1, 100)) {
    for (double c : {1.0, -1.0}) {
      const auto r = s2_rigidity_residual(S2EndoField::multiple_of_identity(c), y);
      EXPECT_NEAR(r.det, 0.0, 1e-12);
      EXPECT_LT(r.divergence.norm(), 1e-12);
    }
  }
}

TEST(Rigidity, PerturbationScaling) {
  Sampler s(6);
  Poly3Mat m;
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = i; j < 3; ++j) m[i][j] = m[j][i] = s.polynomial<3>(2);
  const S2EndoField pert(m);
  const S2EndoField traceless = pert.traceless_part();
  const auto ys = sample_s2(2, 100);
  auto max_res = [&](const S2EndoField& p, double eps) {
    const auto u = S2EndoField::multiple_of_identity(1.0).plus_scaled(eps, p);
    double det = 0.0, div = 0.0;
    for (const auto& y : ys) {
      const auto r = s2_rigidity_residual(u, y);
      det = std::max(det, std::abs(r.det));
      div = std::max(div, r.divergence.norm());
    }
    return std::pair{det, div};
  };
  const auto [d1, v1] = max_res(pert, 1e-2);
  const auto [d2, v2] = max_res(pert, 1e-3);
  EXPECT_NEAR(d1 / d2, 10.0, 1.0);
  EXPECT_NEAR(v1 / v2, 10.0, 1e-6);
  // Traceless perturbations change the determinant only at second order.
  const auto [t1, w1] = max_res(traceless, 1e-2);
  const auto [t2, w2] = max_res(traceless, 1e-3);
  EXPECT_NEAR(t1 / t2, 100.0, 5.0);
  EXPECT_NEAR(w1 / w2, 10.0, 1e-6);
}

TEST(Codazzi, DivergenceEquivalence) {
  Sampler s(40);
  for (int trial = 0; trial < 3; ++trial) {
    Poly3Mat m;
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = i; j < 3; ++j) m[i][j] = m[j][i] = s.polynomial<3>(3);
    const S2EndoField exact(m);
    const S2EndoField fd = exact.with_finite_difference(1e-5);
    for (const auto& y : sample_s2(100 + trial, 100)) {
      const auto [l1, r1] = codazzi_divfree_equiv(exact, y);
      EXPECT_LT((l1 - r1).norm(), 1e-11);
      const auto [l2, r2] = codazzi_divfree_equiv(fd, y);
      EXPECT_LT((l2 - r2).norm(), 1e-6);
      EXPECT_LT((l1 - l2).norm(), 1e-6);
    }
    const auto ys = sample_s2(7, 5);
    const auto batch = codazzi_divfree_equiv(exact, ys);
    for (std::size_t i = 0; i < ys.size(); ++i) {
      EXPECT_EQ(batch[i], codazzi_divfree_equiv(exact, ys[i]));
    }
  }
}

// The tangent identity is a Codazzi tensor; J·J = −1 keeps JSJ = −P divergence free.
TEST(Codazzi, IdentityIsCodazzi) {
  const auto p = S2EndoField::multiple_of_identity(1.0);
  for (const auto& y : sample_s2(8, 20)) {
    const auto [l, r] = codazzi_divfree_equiv(p, y);
    EXPECT_LT(l.norm(), 1e-13);
    EXPECT_LT(r.norm(), 1e-13);
    EXPECT_LT((p.conjugate_by_j().value(y) + tangent_projector(y)).norm(), 1e-14);
  }
}

TEST(Sphere2, FrameAndComplexStructure) {
  for (const auto& y : sample_s2(4, 20)) {
    const auto [x, jx] = s2_frame(y);
    EXPECT_NEAR(x.norm(), 1.0, 1e-14);
    EXPECT_NEAR(x.dot(y), 0.0, 1e-14);
    EXPECT_LT((jx - apply_j(y, x)).norm(), 1e-14);
    EXPECT_LT((apply_j(y, jx) + x).norm(), 1e-14);
    EXPECT_LT((j_matrix(y) * x - jx).norm(), 1e-14);
    EXPECT_NEAR(tangent_operator_norm(tangent_projector(y), y), 1.0, 1e-14);
  }
}

TEST(Sphere2, ScalarGradientIsTangent) {
  const S2ScalarField f(Poly3::variable(0) * Poly3::variable(1));
  for (const auto& y : sample_s2(3, 10)) {
    const Vec3 g = f.gradient(y);
    EXPECT_NEAR(g.dot(y), 0.0, 1e-14);
    const Vec3 ambient(y[1], y[0], 0.0);
    EXPECT_LT((g - tangent_projector(y) * ambient).norm(), 1e-14);
    EXPECT_LT((f.with_finite_difference(1e-5).gradient(y) - g).norm(), 1e-8);
  }
}

}  // namespace
}  // namespace cauchy
