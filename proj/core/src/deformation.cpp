#include "cauchy/deformation.hpp"

#include <cmath>

#include <Eigen/SVD>

#include "cauchy/sampling.hpp"

namespace cauchy {

namespace {

double second(const ScalarField& f, const UnitQuaternion& q, int i, int j) {
  const std::array<int, 2> word{i, j};
  return f.derivative(q, word, Chirality::left);
}

Mat3 a0_matrix() { return known_matrix(KnownKind::left_133); }

std::vector<Poly4> monomials(int degree) {
  std::vector<Poly4> out;
  for (int d = 0; d <= degree; ++d)
    for (int i = 0; i <= d; ++i)
      for (int j = 0; j <= d - i; ++j)
        for (int k = 0; k <= d - i - j; ++k) {
          out.push_back(Poly4::monomial({i, j, k, d - i - j - k}));
        }
  return out;
}

// Linearly independent functions on S³ spanned by the monomials.
std::vector<Poly4> sphere_basis(const std::vector<Poly4>& mono, Sampler& s) {
  const int n = static_cast<int>(mono.size());
  const int m = 4 * n;
  Eigen::MatrixXd e(m, n);
  for (int r = 0; r < m; ++r) {
    const Eigen::Vector4d x = s.point_s3().ambient();
    for (int c = 0; c < n; ++c) e(r, c) = mono[c](x);
  }
  const Eigen::JacobiSVD<Eigen::MatrixXd> svd(e, Eigen::ComputeFullV);
  const Eigen::VectorXd sv = svd.singularValues();
  std::vector<Poly4> out;
  for (int j = 0; j < n && sv[j] > 1e-8 * sv[0]; ++j) {
    Poly4 p;
    for (int i = 0; i < n; ++i) {
      const double v = svd.matrixV()(i, j);
      if (std::abs(v) > 1e-15) p += v * mono[i];
    }
    out.push_back(p);
  }
  return out;
}

VectorField3 field_from_coefficients(const std::vector<Poly4>& basis, const Eigen::VectorXd& c) {
  const std::size_t nb = basis.size();
  std::array<Poly4, 3> comp;
  for (std::size_t k = 0; k < 3; ++k)
    for (std::size_t j = 0; j < nb; ++j) {
      const double v = c[static_cast<Eigen::Index>(k * nb + j)];
      if (std::abs(v) > 1e-14) comp[k] += v * basis[j];
    }
  return VectorField3({ScalarField::polynomial(comp[0]), ScalarField::polynomial(comp[1]),
                       ScalarField::polynomial(comp[2])});
}

}  // namespace

double berger_laplacian(const ScalarField& f, const UnitQuaternion& q) {
  return -(3.0 * second(f, q, 0, 0) + second(f, q, 1, 1) + second(f, q, 2, 2));
}

double round_laplacian(const ScalarField& f, const UnitQuaternion& q) {
  return -(second(f, q, 0, 0) + second(f, q, 1, 1) + second(f, q, 2, 2));
}

std::array<double, 4> lemma_derivative_checks(int k, const UnitQuaternion& q) {
  const ScalarField f = harmonic_quadratic(k);
  const double v = f(q);
  return {second(f, q, 1, 2), second(f, q, 2, 1), second(f, q, 1, 1) + 4.0 * v,
          second(f, q, 2, 2) + 4.0 * v};
}

Poly4 deformation_x1(const Vec3& p) {
  Poly4 x;
  for (int k = 0; k < 3; ++k) {
    if (p[k] != 0.0) x += p[k] * harmonic_quadratic_poly(k);
  }
  return x;
}

VectorField3 deformation_field(const DeformVector& d) {
  const ScalarField x1 = ScalarField::polynomial(deformation_x1(d.p));
  const Poly4 e2x = *x1.derivative_field(1, Chirality::left).poly();
  const Poly4 e3x = *x1.derivative_field(2, Chirality::left).poly();
  return VectorField3({x1, ScalarField::polynomial(-0.5 * e3x + Poly4::constant(d.c2)),
                       ScalarField::polynomial(0.5 * e2x + Poly4::constant(d.c3))});
}

Vec3 eq_a0_residual(const VectorField3& x, const UnitQuaternion& q) {
  const Vec3 xv = x.value(q);
  return exterior_derivative(x, q).vec() + a0_matrix() * xv + 5.0 * xv;
}

Sym3 nabla_A0_of_deformation(const DeformVector& d, const UnitQuaternion& q) {
  return nabla_A_of_vector(known_example(KnownKind::left_133), deformation_field(d), q);
}

SymEnd3Field nabla_A_field(const Mat3& a, const VectorField3& x) {
  const FrameConnection conn = round_connection(Chirality::left);
  // Column j of ∇^A X: e_j(x) + Ω_j x + (A e_j) × x, with x linear in the
  // coefficient polynomials.
  std::array<std::array<Poly4, 3>, 3> m;  // m[row][col]
  std::array<Poly4, 3> xp;
  for (int i = 0; i < 3; ++i) xp[i] = *x.coeff(i).poly();
  for (int j = 0; j < 3; ++j) {
    const Mat3 lin = conn.omega[j] + TwoForm(a.col(j)).matrix();
    for (int i = 0; i < 3; ++i) {
      Poly4 entry = *x.coeff(i).derivative_field(j, Chirality::left).poly();
      for (int k = 0; k < 3; ++k) {
        if (lin(i, k) != 0.0) entry += lin(i, k) * xp[k];
      }
      m[i][j] = entry;
    }
  }
  std::array<Poly4, 6> packed;
  for (int i = 0; i < 3; ++i)
    for (int j = i; j < 3; ++j) packed[SymEnd3Field::packed_index(i, j)] = 0.5 * (m[i][j] + m[j][i]);
  return SymEnd3Field::from_polynomials(packed, Chirality::left);
}

std::array<Mat3, 2> lie_derivatives_a0() {
  const SymEnd3Field a0 = known_example(KnownKind::left_133);
  const UnitQuaternion one = UnitQuaternion::identity();
  return {lie_derivative_endo(a0, VectorField3::constant(frame_vector(1)), one),
          lie_derivative_endo(a0, VectorField3::constant(frame_vector(2)), one)};
}

std::array<double, 2> deformation_pairing() {
  const auto lie = lie_derivatives_a0();
  const UnitQuaternion one = UnitQuaternion::identity();
  const Mat3 m2 = nabla_A0_of_deformation({Vec3::Zero(), 1.0, 0.0}, one);
  const Mat3 m3 = nabla_A0_of_deformation({Vec3::Zero(), 0.0, 1.0}, one);
  return {(m2.array() * lie[0].array()).sum() / lie[0].squaredNorm(),
          (m3.array() * lie[1].array()).sum() / lie[1].squaredNorm()};
}

SolutionSpaceReport deformation_solution_space(std::uint64_t seed, int degree) {
  Sampler sampler(seed);
  const std::vector<Poly4> basis = sphere_basis(monomials(degree), sampler);
  const int nb = static_cast<int>(basis.size());
  const int unknowns = 3 * nb;
  const int npts = unknowns;  // three residual rows per point: 3x oversampling

  std::vector<UnitQuaternion> pts;
  for (int i = 0; i < npts; ++i) pts.push_back(sampler.point_s3());

  Eigen::MatrixXd r(3 * npts, unknowns);
  for (int k = 0; k < 3; ++k)
    for (int j = 0; j < nb; ++j) {
      std::array<ScalarField, 3> comp{ScalarField::constant(0.0), ScalarField::constant(0.0),
                                      ScalarField::constant(0.0)};
      comp[static_cast<std::size_t>(k)] = ScalarField::polynomial(basis[static_cast<std::size_t>(j)]);
      const VectorField3 x(comp);
      for (int i = 0; i < npts; ++i) r.block<3, 1>(3 * i, k * nb + j) = eq_a0_residual(x, pts[i]);
    }

  const Eigen::JacobiSVD<Eigen::MatrixXd> svd(r, Eigen::ComputeFullV);
  SolutionSpaceReport rep;
  rep.ansatz_functions = nb;
  rep.singular_values = svd.singularValues();
  const double smax = rep.singular_values[0];
  int rank = 0;
  while (rank < unknowns && rep.singular_values[rank] > 1e-9 * smax) ++rank;
  rep.kernel_dimension = unknowns - rank;
  if (rank > 0 && rank < unknowns) {
    rep.gap_ratio = rep.singular_values[rank - 1] / std::max(rep.singular_values[rank], 1e-300);
  }

  const auto lie = lie_derivatives_a0();
  Eigen::Matrix<double, 9, 2> span;
  span.col(0) = Eigen::Map<const Eigen::Matrix<double, 9, 1>>(lie[0].data());
  span.col(1) = Eigen::Map<const Eigen::Matrix<double, 9, 1>>(lie[1].data());
  const Eigen::Matrix<double, 9, 9> proj =
      span * (span.transpose() * span).inverse() * span.transpose();

  std::vector<UnitQuaternion> check;
  check.push_back(UnitQuaternion::identity());
  for (int i = 0; i < 5; ++i) check.push_back(sampler.point_s3());

  const SymEnd3Field a0 = known_example(KnownKind::left_133);
  Eigen::MatrixXd image(9 * static_cast<Eigen::Index>(check.size()), rep.kernel_dimension);
  for (int j = 0; j < rep.kernel_dimension; ++j) {
    const VectorField3 x = field_from_coefficients(basis, svd.matrixV().col(rank + j));
    for (int i = 0; i < 20; ++i) {
      rep.max_kernel_residual =
          std::max(rep.max_kernel_residual, eq_a0_residual(x, sampler.point_s3()).norm());
    }
    for (std::size_t i = 0; i < check.size(); ++i) {
      const Mat3 m = nabla_A_of_vector(a0, x, check[i]);
      const Eigen::Matrix<double, 9, 1> flat = Eigen::Map<const Eigen::Matrix<double, 9, 1>>(m.data());
      image.block<9, 1>(9 * static_cast<Eigen::Index>(i), j) = flat;
      rep.max_span_defect = std::max(rep.max_span_defect, (flat - proj * flat).norm());
    }
  }

  if (rep.kernel_dimension > 0) {
    const Eigen::JacobiSVD<Eigen::MatrixXd> isvd(image, Eigen::ComputeThinU);
    rep.image_singular_values = isvd.singularValues();
    const double imax = rep.image_singular_values[0];
    while (rep.image_rank < rep.image_singular_values.size() &&
           rep.image_singular_values[rep.image_rank] > 1e-8 * std::max(imax, 1.0)) {
      ++rep.image_rank;
    }
    for (int j = 0; j < rep.image_rank; ++j) {
      Mat3 m;
      for (int c = 0; c < 9; ++c) {
        m.data()[c] = isvd.matrixU()(c, j) * std::sqrt(static_cast<double>(check.size()));
      }
      rep.image_basis.push_back(m);
    }
  }
  return rep;
}

}  // namespace cauchy
