#pragma once

#include <array>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>

#include "cauchy/sampling.hpp"
#include "cauchy/scalar_field.hpp"
#include "cauchy/tensor.hpp"

namespace cauchy {

/// Symmetric endomorphism field on S³ given by its coefficients in an
/// invariant orthonormal frame of the stated chirality.
class SymEnd3Field {
 public:
  /// Upper-triangle order: (0,0), (0,1), (0,2), (1,1), (1,2), (2,2).
  SymEnd3Field(std::array<ScalarField, 6> coeffs, Chirality c);

  /// Constant coefficients; the symmetric part of m is used.
  static SymEnd3Field constant(const Mat3& m, Chirality c = Chirality::left);
  static SymEnd3Field from_polynomials(const std::array<Poly4, 6>& p,
                                       Chirality c = Chirality::left);

  static int packed_index(int i, int j);

  Chirality chirality() const { return chirality_; }
  const ScalarField& coeff(int i, int j) const { return coeffs_[packed_index(i, j)]; }
  bool is_constant() const;

  Mat3 value(const UnitQuaternion& q) const;
  /// e_k applied to every coefficient.
  Mat3 derivative(const UnitQuaternion& q, int k) const;
  EndoJet jet(const UnitQuaternion& q) const;

  /// this + s·other; both must share a chirality.
  SymEnd3Field plus_scaled(double s, const SymEnd3Field& other) const;
  SymEnd3Field with_finite_difference(double h) const;

 private:
  std::array<ScalarField, 6> coeffs_;
  Chirality chirality_;
};

/// Vector field with coefficients in an invariant frame.
class VectorField3 {
 public:
  explicit VectorField3(std::array<ScalarField, 3> coeffs, Chirality c = Chirality::left);

  static VectorField3 constant(const Vec3& v, Chirality c = Chirality::left);
  static VectorField3 zero(Chirality c = Chirality::left) { return constant(Vec3::Zero(), c); }

  Chirality chirality() const { return chirality_; }
  const ScalarField& coeff(int i) const { return coeffs_.at(static_cast<std::size_t>(i)); }

  Vec3 value(const UnitQuaternion& q) const;
  Vec3 derivative(const UnitQuaternion& q, int k) const;
  /// Column k is e_k applied to the coefficients.
  Mat3 jacobian(const UnitQuaternion& q) const;

 private:
  std::array<ScalarField, 3> coeffs_;
  Chirality chirality_;
};

/// Endomorphism-valued 1-form, evaluated pointwise: column k is B(e_k).
using MatrixField = std::function<Mat3(const UnitQuaternion&)>;

/// ∇^A_X Y = ∇_X Y + (*A(X))(Y) for constant-coefficient X, Y.
Vec3 modified_connection(const SymEnd3Field& a, const UnitQuaternion& q, const Vec3& x,
                         const Vec3& y);

/// d^∇A(X,Y) with the round connection of A's frame.
Vec3 d_nabla_A(const SymEnd3Field& a, const UnitQuaternion& q, const Vec3& x, const Vec3& y);
/// d^∇A(X,Y) with an explicit frame connection.
Vec3 d_nabla_A(const SymEnd3Field& a, const UnitQuaternion& q, const Vec3& x, const Vec3& y,
               const FrameConnection& conn);
/// δ^∇A = −Σ_k (∇_{e_k}A) e_k with the round connection.
Vec3 divergence_A(const SymEnd3Field& a, const UnitQuaternion& q);

/// R(X,Y) + *d^∇A(X,Y) + A(X)∧A(Y) on the round sphere.
TwoForm flatness_residual(const SymEnd3Field& a, const UnitQuaternion& q, const Vec3& x,
                          const Vec3& y);

struct GaussCodazziResidual {
  double scalar = 0.0;      ///< 6 − tr(A)² + tr(A²)
  Vec3 vector = Vec3::Zero();  ///< δ^∇A + d tr A
};
GaussCodazziResidual gauss_codazzi_residual(const SymEnd3Field& a, const UnitQuaternion& q);

enum class KnownKind { plus_id, minus_id, left_133, right_133 };

const char* to_string(KnownKind k);
std::optional<KnownKind> parse_known_kind(std::string_view name);
/// Constant frame matrix of a known family before rotation.
Mat3 known_matrix(KnownKind k);
Chirality known_chirality(KnownKind k);

/// The constant solution of the given kind conjugated by an orthogonal
/// rotation R (coefficients R M Rᵀ). Throws std::invalid_argument if R is not
/// orthogonal to 1e-10.
SymEnd3Field known_example(KnownKind k, const Mat3& rotation = Mat3::Identity());

/// Twisted exterior derivative of Ȧ for ∇^A:
/// d^∇Ȧ(X,Y) + A(X)×Ȧ(Y) − A(Y)×Ȧ(X).
Vec3 linearized_residual(const SymEnd3Field& a, const SymEnd3Field& adot,
                         const UnitQuaternion& q, const Vec3& x, const Vec3& y);

/// dX of the metric-dual 1-form, as a 2-form.
TwoForm exterior_derivative(const VectorField3& x, const UnitQuaternion& q);

/// dX − *(X tr A − AX) + Σ_k e_k ∧ B(e_k).
TwoForm symmetry_residual(const SymEnd3Field& a, const VectorField3& x, const UnitQuaternion& q,
                          const MatrixField& b = {});

struct XiValue {
  TwoForm form;
  double divergence = 0.0;
};
/// (dX − *(X tr A − AX), δ(X tr A − AX)).
XiValue xi_operator(const SymEnd3Field& a, const VectorField3& x, const UnitQuaternion& q);

struct Definiteness {
  bool definite = false;
  int sign = 0;           ///< sign of B − tr(B) Id when definite, else 0
  double pair_sum = 0.0;  ///< λ₁λ₂ + λ₁λ₃ + λ₂λ₃
};
Definiteness definiteness_check(const Sym3& b);

/// Matrix of Y ↦ ∇^A_Y X: column j is ∇^A_{e_j} X.
Mat3 nabla_A_of_vector(const SymEnd3Field& a, const VectorField3& x, const UnitQuaternion& q);

/// (L_Z A) = ∇_Z A − (∇Z) A + A (∇Z), where (∇Z)Y = ∇_Y Z.
Mat3 lie_derivative_endo(const SymEnd3Field& a, const VectorField3& z, const UnitQuaternion& q);

/// Max/RMS of the flatness residual norm over points and the three frame pairs.
ResidualStats flatness_stats(const SymEnd3Field& a, std::span<const UnitQuaternion> points);

/// Frame pairs (e₁,e₂), (e₁,e₃), (e₂,e₃).
std::array<std::pair<Vec3, Vec3>, 3> frame_pairs();
Vec3 frame_vector(int k);

}  // namespace cauchy
