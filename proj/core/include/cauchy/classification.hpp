#pragma once

#include <array>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "cauchy/fields.hpp"
#include "cauchy/sphere2.hpp"

namespace cauchy {

/// Eigenvalues (a, b, c) of a constant diagonal candidate.
using DiagonalTriple = Vec3;

/// Cyclic system of a constant diagonal field in the given frame. Left:
/// (a+1)(b+1) − 2(c+1) and cyclic; right: (a−1)(b−1) + 2(c−1) and cyclic.
std::array<double, 3> constant_frame_residual(const DiagonalTriple& d,
                                              Chirality c = Chirality::left);

/// Exhaustive real solution set by the case split: with u = a+1 etc.,
/// (uvw)² = 8uvw, so either u = v = w = 0 or u² = v² = w² = 4 with uvw = 8.
/// Right-frame solutions are the negatives. Sorted lexicographically.
std::vector<DiagonalTriple> constant_frame_solutions(Chirality c = Chirality::left);

struct GridSearchOptions {
  double lo = -6.0;
  double hi = 6.0;
  double step = 0.5;
  int newton_iterations = 60;
  double tolerance = 1e-12;
};

/// Newton refinement from every node of a cubic grid, deduplicated.
std::vector<DiagonalTriple> constant_frame_grid_search(Chirality c = Chirality::left,
                                                       const GridSearchOptions& opt = {});

struct ClassifiedTriple {
  DiagonalTriple eigenvalues;
  std::vector<Chirality> frames;  ///< frames in which it solves the system
  std::string family;             ///< plus-id, minus-id, left-133 or right-133
};

/// Union over both chiralities: ±Id and the permutations of (1,−3,−3) and
/// (−1,3,3), eight triples in total.
std::vector<ClassifiedTriple> classify_constant_solutions();

/// Equal as sets up to tol, matched element by element.
bool same_triple_set(const std::vector<DiagonalTriple>& a, const std::vector<DiagonalTriple>& b,
                     double tol = 1e-9);

/// Data of a ξ-invariant field with ξ = e₁, on the unit sphere model of the
/// Hopf base: A = f ξ⊗ξ + v⊗ξ + ξ⊗v + B.
struct HopfReducedData {
  S2ScalarField f;
  S2VectorField v;
  S2EndoField b;
};

/// Derivatives on the radius-½ base are twice the unit-sphere derivatives.
inline constexpr double kHopfHomothety = 2.0;

/// Reduction of a constant field invariant under the flow of e₁. A right-frame
/// field is first carried to the left frame by q ↦ q̄, which negates the
/// coefficients. Throws std::invalid_argument for non-constant or
/// non-invariant fields.
HopfReducedData hopf_reduce(const SymEnd3Field& a);

/// Ambient polynomials of y(q) = q i q̄ and of the horizontal images
/// E₂ = −q k q̄, E₃ = q j q̄ of e₂, e₃ on the unit-sphere model.
std::array<Poly4, 3> hopf_map_poly();
std::array<std::array<Poly4, 3>, 2> hopf_horizontal_poly();

/// The left-frame field on S³ whose reduction is h (exact).
SymEnd3Field lift_to_s3(const HopfReducedData& h);

/// Components of the reduced system at a unit-sphere point y:
///   eq1 = (B+1)Jv − df
///   eq2 = (f−1)J(B+1) − ∇̄v − v⊗Jv          (tangent operator)
///   eq3 = 2(1+f) − det(B+1) − d*(Jv)
///   eq4 = δ(BJ) − J(B+3)Jv
struct ReducedResidual {
  Vec3 eq1 = Vec3::Zero();
  Mat3 eq2 = Mat3::Zero();
  double eq3 = 0.0;
  Vec3 eq4 = Vec3::Zero();
};
ReducedResidual hopf_reduction_components(const HopfReducedData& h, const Vec3& y);
/// (|eq1|, operator norm of eq2, |eq3|, |eq4|).
std::array<double, 4> hopf_reduction_residual(const HopfReducedData& h, const Vec3& y);

/// The v = 0 system: ((f−1)J(B+1) operator norm, 2(1+f) − det(B+1), δ(BJ)).
struct SpecialCaseResidual {
  double eq1 = 0.0;
  double eq2 = 0.0;
  Vec3 eq3 = Vec3::Zero();
};
SpecialCaseResidual special_case_residual(const S2ScalarField& f, const S2EndoField& b,
                                          const Vec3& y);

/// (det U − 1, δU) on the unit sphere.
struct RigidityResidual {
  double det = 0.0;
  Vec3 divergence = Vec3::Zero();
};
RigidityResidual s2_rigidity_residual(const S2EndoField& u, const Vec3& y);

/// (d^∇S(X, JX), J δ(JSJ)) for the unit tangent X of s2_frame(y); equal for
/// every symmetric S.
std::pair<Vec3, Vec3> codazzi_divfree_equiv(const S2EndoField& s, const Vec3& y);
/// The same at many points, conjugating S once.
std::vector<std::pair<Vec3, Vec3>> codazzi_divfree_equiv(const S2EndoField& s, std::span<const Vec3> ys);

/// Operator norm of a tangent endomorphism at y.
double tangent_operator_norm(const Mat3& m, const Vec3& y);

}  // namespace cauchy
