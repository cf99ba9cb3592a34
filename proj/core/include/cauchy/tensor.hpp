#pragma once

#include <array>
#include <cmath>

#include <Eigen/Dense>

#include "cauchy/quaternion.hpp"

namespace cauchy {

using Vec3 = Eigen::Vector3d;
using Mat3 = Eigen::Matrix3d;
/// Symmetric 3×3 matrix in an orthonormal frame.
using Sym3 = Eigen::Matrix3d;

/// A 2-form in three dimensions, stored as one 3-vector w. The same storage is
/// read as the skew endomorphism Z ↦ w × Z and, through the Hodge star, as the
/// vector w. With this storage (X∧Y)Z = ⟨X,Z⟩Y − ⟨Y,Z⟩X and X∧Y ↔ X × Y.
class TwoForm {
 public:
  TwoForm() : w_(Vec3::Zero()) {}
  explicit TwoForm(const Vec3& w) : w_(w) {}

  /// e_a ∧ e_b for frame indices a, b ∈ {0,1,2}.
  static TwoForm basis(int a, int b);

  const Vec3& vec() const { return w_; }
  Vec3 operator()(const Vec3& z) const { return w_.cross(z); }
  Mat3 matrix() const;
  double norm() const { return w_.norm(); }
  /// Frobenius norm of the skew matrix, √2 · norm().
  double matrix_norm() const { return std::sqrt(2.0) * w_.norm(); }
  /// Coefficient on e_a ∧ e_b.
  double coeff(int a, int b) const;

  TwoForm& operator+=(const TwoForm& o) { w_ += o.w_; return *this; }
  TwoForm& operator-=(const TwoForm& o) { w_ -= o.w_; return *this; }
  friend TwoForm operator+(TwoForm a, const TwoForm& b) { return a += b; }
  friend TwoForm operator-(TwoForm a, const TwoForm& b) { return a -= b; }
  friend TwoForm operator-(const TwoForm& a) { return TwoForm(-a.w_); }
  friend TwoForm operator*(double s, const TwoForm& a) { return TwoForm(s * a.w_); }

 private:
  Vec3 w_;
};

using SkewEnd3 = TwoForm;

TwoForm wedge_endo(const Vec3& x, const Vec3& y);
/// Skew endomorphism matrix → 2-form; the symmetric part is discarded.
TwoForm two_form_from_matrix(const Mat3& m);

/// *e₁ = e₂∧e₃ cyclically, orientation (e₁,e₂,e₃) positive.
TwoForm hodge_star(const Vec3& v);
Vec3 hodge_star(const TwoForm& w);

/// X ⌟ ω.
Vec3 interior(const Vec3& x, const TwoForm& w);
/// The 2-form X ∧ α for a 1-form α (identified with a vector).
TwoForm wedge(const Vec3& x, const Vec3& alpha);

/// [e_a, e_b] as frame coefficients, indexed [a][b].
using StructureConstants = std::array<std::array<Vec3, 3>, 3>;

/// The bracket table [e_a, e_b] = 2 e_c of the left-invariant frame.
StructureConstants left_structure_constants();

/// Brackets measured from the flows: (e_a e_b − e_b e_a) applied to the
/// ambient coordinate functions at the identity, read off in the frame there.
StructureConstants measured_structure_constants(Chirality c);

struct BergerParams {
  double a = 1.0;
  double b = 1.0;

  /// Throws std::invalid_argument unless a, b > 0.
  void validate() const;
  double ratio_sq() const { return (a * a) / (b * b); }
};

/// Connection of a constant-metric frame: ∇_{e_a} e_b = Ω_a e_b, together with
/// the frame's brackets and Gram matrix. Frame fields have constant
/// coefficients, so covariant derivatives of endomorphism fields reduce to
/// D_a A + Ω_a A − A Ω_a.
struct FrameConnection {
  std::array<Mat3, 3> omega;
  StructureConstants brackets;
  Mat3 gram = Mat3::Identity();

  /// ∇_X Y for constant-coefficient X, Y.
  Vec3 covariant(const Vec3& x, const Vec3& y) const;
  /// Σ_a X^a Ω_a.
  Mat3 omega_along(const Vec3& x) const;
};

/// Levi-Civita connection from brackets and a constant Gram matrix by the
/// Koszul formula.
FrameConnection koszul_connection(const StructureConstants& c,
                                  const Mat3& gram = Mat3::Identity());

/// Round-metric connection in the invariant frame of the given chirality:
/// ∇_X Y = X × Y (left) and −X × Y (right).
FrameConnection round_connection(Chirality c);

/// Berger metric a²e¹² + b²(e²² + e³²) in the Hopf frame, from the table.
FrameConnection berger_connection(const BergerParams& p);

/// ∇_{e_a} e_b for the round metric, left frame.
Vec3 levi_civita_round(int a, int b);
/// ∇_{e_a} e_b for the Berger metric, Hopf-frame coefficients.
Vec3 levi_civita_berger(const BergerParams& p, int a, int b);

/// R(X,Y) = −X∧Y.
TwoForm curvature_round(const Vec3& x, const Vec3& y);

/// Coefficient κ with R(e_a,e_b) = κ e_a∧e_b in the Hopf frame, where the
/// wedge uses the Berger metric: (e_a∧e_b)Z = g(e_a,Z)e_b − g(e_b,Z)e_a.
/// Values: −a²/b⁴ on (1,2) and (1,3), (3a²−4b²)/b⁴ on (2,3).
double curvature_berger(const BergerParams& p, int a, int b);
/// R(e_a,e_b) as a Hopf-frame matrix.
Mat3 berger_curvature_endomorphism(const BergerParams& p, int a, int b);
/// R(f_a,f_b) in the orthonormal frame f = (e₁/a, e₂/b, e₃/b).
TwoForm curvature_berger_orthonormal(const BergerParams& p, int a, int b);
/// Sectional curvature of the plane (e_a, e_b).
double berger_sectional_curvature(const BergerParams& p, int a, int b);

/// Value and first frame derivatives of an endomorphism field at a point:
/// d[k] holds e_k applied to the frame coefficients.
struct EndoJet {
  Mat3 value = Mat3::Zero();
  std::array<Mat3, 3> d{Mat3::Zero(), Mat3::Zero(), Mat3::Zero()};
};

/// ∇_X A = Σ X^a (D_a A + Ω_a A − A Ω_a).
Mat3 covariant_derivative(const EndoJet& a, const FrameConnection& conn, const Vec3& x);

/// d^∇A(X,Y) = (∇_X A)Y − (∇_Y A)X.
Vec3 d_nabla_A(const EndoJet& a, const Vec3& x, const Vec3& y, const FrameConnection& conn);

/// δ^∇A = −Σ_k (∇_{e_k} A) e_k, for an orthonormal frame.
Vec3 divergence_A(const EndoJet& a, const FrameConnection& conn);

/// Cyclic successor: (a, b, c) with c the remaining index for an even
/// permutation, or -1 sign for odd ones.
int third_index(int a, int b);
double levi_civita_symbol(int a, int b, int c);

}  // namespace cauchy
