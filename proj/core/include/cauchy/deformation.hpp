#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include <Eigen/Dense>

#include "cauchy/fields.hpp"

namespace cauchy {

/// x¹ = Σ p_k Q_k in the harmonic-quadratic basis plus the constants c₂, c₃.
struct DeformVector {
  Vec3 p = Vec3::Zero();
  double c2 = 0.0;
  double c3 = 0.0;
};

/// Δ_B f = −(3 e₁e₁ + e₂e₂ + e₃e₃) f, left frame.
double berger_laplacian(const ScalarField& f, const UnitQuaternion& q);
/// Δ f = −(e₁e₁ + e₂e₂ + e₃e₃) f.
double round_laplacian(const ScalarField& f, const UnitQuaternion& q);

/// (e₂e₃Q_k, e₃e₂Q_k, e₂e₂Q_k + 4Q_k, e₃e₃Q_k + 4Q_k), each zero.
std::array<double, 4> lemma_derivative_checks(int k, const UnitQuaternion& q);

Poly4 deformation_x1(const Vec3& p);

/// x¹e₁ + (−½e₃(x¹) + c₂)e₂ + (½e₂(x¹) + c₃)e₃, left frame, exact.
VectorField3 deformation_field(const DeformVector& d);

/// dX + *(A₀X + 5X), the specialization of the symmetry residual to A₀.
Vec3 eq_a0_residual(const VectorField3& x, const UnitQuaternion& q);

/// Matrix of ∇^{A₀}X for the deformation field of d.
Sym3 nabla_A0_of_deformation(const DeformVector& d, const UnitQuaternion& q);

/// ∇^A X as an exact endomorphism field for constant A (left frame) and an
/// exact X; the symmetric part is kept.
SymEnd3Field nabla_A_field(const Mat3& a, const VectorField3& x);

/// L_{e₂}A₀ and L_{e₃}A₀ (constant matrices).
std::array<Mat3, 2> lie_derivatives_a0();

/// Scalars (κ₂, κ₃) with ∇^{A₀}X = κ₂ c₂ L_{e₂}A₀ + κ₃ c₃ L_{e₃}A₀, measured by
/// evaluating both sides at the identity.
std::array<double, 2> deformation_pairing();

struct SolutionSpaceReport {
  int ansatz_functions = 0;        ///< independent polynomial functions per component
  int kernel_dimension = 0;
  Eigen::VectorXd singular_values;  ///< of the residual map, descending
  double gap_ratio = 0.0;           ///< σ_{n−k} / σ_{n−k+1} across the kernel gap
  double max_kernel_residual = 0.0; ///< over fresh validation points
  int image_rank = 0;
  Eigen::VectorXd image_singular_values;
  double max_span_defect = 0.0;     ///< distance of image vectors from span{L_{e₂}A₀, L_{e₃}A₀}
  std::vector<Mat3> image_basis;    ///< constant image matrices (values at the identity)
};

/// Kernel of X ↦ dX + *(A₀X + 5X) inside vector fields with coefficients of
/// degree ≤ `degree` in a₁..a₄, and the rank of X ↦ ∇^{A₀}X on that kernel.
SolutionSpaceReport deformation_solution_space(std::uint64_t seed, int degree = 3);

}  // namespace cauchy
