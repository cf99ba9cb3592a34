#pragma once

#include <array>
#include <memory>
#include <vector>

#include "cauchy/polynomial.hpp"
#include "cauchy/scalar_field.hpp"
#include "cauchy/tensor.hpp"

namespace cauchy {

using Poly3Vec = std::array<Poly3, 3>;
using Poly3Mat = std::array<std::array<Poly3, 3>, 3>;

/// Tangent projector I − y yᵀ.
Mat3 tangent_projector(const Vec3& y);
/// Complex structure of the unit sphere: J X = y × X. This is the orientation
/// induced through the Hopf map from J = −∇ξ.
Vec3 apply_j(const Vec3& y, const Vec3& x);
Mat3 j_matrix(const Vec3& y);
/// Orthonormal tangent pair (X, JX) at y, deterministic in y.
std::array<Vec3, 2> s2_frame(const Vec3& y);

/// Field on the unit sphere whose values are r×c matrices of ambient
/// polynomials (already projected where needed). Directional derivatives along
/// tangent vectors are exact in polynomial mode or central differences along
/// great circles in finite-difference mode.
class S2Tensor {
 public:
  S2Tensor(int rows, int cols, std::vector<Poly3> entries);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  const Poly3& entry(int i, int j) const { return entries_[static_cast<std::size_t>(i * cols_ + j)]; }

  Eigen::MatrixXd value(const Vec3& y) const;
  /// D_X of the ambient values along a tangent vector X at y.
  Eigen::MatrixXd directional(const Vec3& y, const Vec3& x) const;

  S2Tensor with_finite_difference(double h) const;
  DerivativeMode mode() const { return mode_; }
  double fd_step() const { return h_; }

 private:
  int rows_;
  int cols_;
  std::vector<Poly3> entries_;
  std::shared_ptr<const std::vector<std::array<Poly3, 3>>> partials_;
  DerivativeMode mode_ = DerivativeMode::exact_polynomial;
  double h_ = kDefaultFdStep;
};

class S2ScalarField {
 public:
  explicit S2ScalarField(Poly3 p);
  static S2ScalarField constant(double c) { return S2ScalarField(Poly3::constant(c)); }

  double value(const Vec3& y) const;
  /// Tangent gradient.
  Vec3 gradient(const Vec3& y) const;
  S2ScalarField with_finite_difference(double h) const;
  const Poly3& poly() const { return poly_; }

 private:
  Poly3 poly_;
  S2Tensor t_;
};

/// Tangent vector field P·v(y) for an ambient polynomial vector v.
class S2VectorField {
 public:
  explicit S2VectorField(Poly3Vec v);
  static S2VectorField zero();

  Vec3 value(const Vec3& y) const;
  /// ∇_X V = P D_X(P v).
  Vec3 covariant(const Vec3& y, const Vec3& x) const;
  /// Matrix of X ↦ ∇_X V on the tangent plane (zero on the normal).
  Mat3 covariant_matrix(const Vec3& y) const;
  S2VectorField with_finite_difference(double h) const;
  const Poly3Vec& ambient() const { return raw_; }

 private:
  Poly3Vec raw_;
  S2Tensor t_;
};

/// Symmetric tangent endomorphism field P·M(y)·P.
class S2EndoField {
 public:
  explicit S2EndoField(Poly3Mat m);
  static S2EndoField constant(const Mat3& m);
  /// c · P (c times the tangent identity).
  static S2EndoField multiple_of_identity(double c);

  Mat3 value(const Vec3& y) const;
  /// ∇_X U = P D_X(P M P) P.
  Mat3 covariant(const Vec3& y, const Vec3& x) const;
  /// δU = −Σ_k (∇_{X_k} U) X_k.
  Vec3 divergence(const Vec3& y) const;
  /// d^∇U(X, Y) = (∇_X U)Y − (∇_Y U)X.
  Vec3 d_nabla(const Vec3& y, const Vec3& x, const Vec3& z) const;
  /// Determinant of the restriction to the tangent plane.
  double det(const Vec3& y) const;

  /// J U J, again a polynomial field.
  S2EndoField conjugate_by_j() const;
  /// U − ½ tr(U) P.
  S2EndoField traceless_part() const;
  /// this + s·other.
  S2EndoField plus_scaled(double s, const S2EndoField& other) const;

  S2EndoField with_finite_difference(double h) const;
  const Poly3Mat& ambient() const { return raw_; }

 private:
  S2EndoField same_mode(S2EndoField f) const;

  Poly3Mat raw_;
  S2Tensor t_;
};

/// Ambient components of y ↦ y as polynomials.
Poly3Vec s2_coordinates();

}  // namespace cauchy
