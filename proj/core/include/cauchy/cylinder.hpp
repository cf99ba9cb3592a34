#pragma once

#include <array>
#include <span>
#include <utility>
#include <vector>

#include "cauchy/tensor.hpp"

namespace cauchy {

/// A slice of the cylinder dt² + a²η₁² + b²(η₂² + η₃²) with first and second
/// t-derivatives of the profile.
struct CylinderJet {
  double t = 0.0;
  double a = 1.0;
  double b = 1.0;
  double adot = 0.0;
  double bdot = 0.0;
  double addot = 0.0;
  double bddot = 0.0;
};

/// ȧ = −a²/b², ḃ = a/b + 2. Throws std::invalid_argument unless a, b > 0.
std::pair<double, double> reduced_rhs(double a, double b);

/// Both equations of the slice system; zero on solutions.
std::array<double, 2> full_system_residual(double a, double b, double adot, double bdot);

/// (1/(ab))(b/a + 1), equal to 2 along the orbit through a = b = 1.
double conserved_quantity(double a, double b);

/// (α, β) = (√(s/(2s−1)), √(s(2s−1))) with s = ab. Throws for s ≤ ½.
std::pair<double, double> closed_form(double s);

/// t(s) = ∫₁ˢ √((2σ−1)/(4σ)) dσ by adaptive Gauss–Kronrod quadrature; s ≥ ½.
double t_of_s(double s);

/// t(1) − t(½) = (√2 − ln(1+√2))/(2√2), the distance from t = 0 to the
/// singular slice.
double boundary_distance_closed_form();

/// State on the orbit at (a, b) with derivatives from the reduced system;
/// second derivatives by differentiating it analytically.
CylinderJet jet_on_orbit(double a, double b, double t = 0.0);
/// Orbit state at parameter s via the closed form.
CylinderJet closed_form_jet(double s);

/// diag(−ȧ/a, −ḃ/b, −ḃ/b) in the Hopf frame.
Sym3 weingarten(const CylinderJet& j);

/// R^t(X,Y) + *d^∇A_t(X,Y) + A_t X ∧ A_t Y for the frame pair (i, j), as a
/// 2-form in the orthonormal frame (e₁/a, e₂/b, e₃/b).
TwoForm slice_residual(const CylinderJet& j, int i, int k);
double slice_residual_max(const CylinderJet& j);

/// Coefficients of (ds², η₁², η₂², η₃²): r²((2s−1)/(4s), s/(2s−1), s(2s−1), s(2s−1)).
std::array<double, 4> metric_4d(double s, double r = 1.0);
/// Same metric in the variable u = r s: ((2u−r)/(4u), r²u/(2u−r), u(2u−r), u(2u−r)).
std::array<double, 4> metric_4d_u(double u, double r);
/// ((As+B)/s)·(1, 4B²s²/(As+B)², 4s², 4s²).
std::array<double, 4> taub_nut_coeffs(double a_param, double b_param, double s);

/// Ricci tensor of the 4-metric in the orthonormal coframe (dt, aη₁, bη₂, bη₃).
Eigen::Matrix4d ricci_4d(const CylinderJet& j);
/// Sectional curvatures of the coframe planes (01, 02, 03, 12, 13, 23).
std::array<double, 6> sectional_curvatures_4d(const CylinderJet& j);
/// max |K| over the coframe planes.
double curvature_proxy(const CylinderJet& j);
std::vector<double> curvature_blowup_probe(std::span<const double> s_values);

enum class Direction { forward, backward };

struct IntegrationBound {
  enum class Kind { t, s };
  Kind kind = Kind::t;
  double value = 1.0;

  static IntegrationBound until_t(double t) { return {Kind::t, t}; }
  static IntegrationBound until_s(double s) { return {Kind::s, s}; }
};

struct IntegratorOptions {
  double rtol = 1e-10;
  double atol = 1e-12;
  double initial_step = 1e-3;
  double max_step = 0.05;
  double min_step = 1e-14;
  double singular_epsilon = 1e-6;  ///< stop when ab ≤ ½ + ε
  bool project = true;             ///< project onto the conserved level set
  std::size_t max_steps = 1000000;
};

struct CylinderNode {
  double t = 0.0;
  double a = 1.0;
  double b = 1.0;
  double raw_defect = 0.0;  ///< |C − 2| before projection
};

/// Accepted steps of an integration from a = b = 1 at t = 0.
class CylinderProfile {
 public:
  CylinderProfile(std::vector<CylinderNode> nodes, Direction dir, bool singular,
                  IntegratorOptions opt);

  const std::vector<CylinderNode>& nodes() const { return nodes_; }
  Direction direction() const { return direction_; }
  bool singularity_reached() const { return singular_; }
  double t_end() const { return nodes_.back().t; }

  /// Orbit state at t (between the first and last node), by re-stepping from
  /// the nearest earlier node.
  CylinderJet at(double t) const;
  CylinderJet node_jet(std::size_t i) const;

  double max_conserved_drift() const;
  double max_raw_defect() const;
  double max_full_system_residual() const;

 private:
  std::vector<CylinderNode> nodes_;
  Direction direction_;
  bool singular_;
  IntegratorOptions opt_;
};

/// Dormand–Prince 5(4) integration of the reduced system from a(0) = b(0) = 1.
/// Backward runs stop at the singular slice ab = ½ + ε with
/// singularity_reached() set, as do runs whose step size underflows.
CylinderProfile integrate(Direction dir, IntegrationBound until, const IntegratorOptions& opt = {});

Eigen::Matrix4d ricci_4d(const CylinderProfile& p, double t);

/// One row of the trajectory export.
struct TrajectoryRow {
  double t, s, a, b, adot, bdot, conserved, slice_residual_max, ricci_norm;
};
std::vector<TrajectoryRow> trajectory_rows(const CylinderProfile& p);
TrajectoryRow trajectory_row(const CylinderJet& j);

}  // namespace cauchy
