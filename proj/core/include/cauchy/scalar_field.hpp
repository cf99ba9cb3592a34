#pragma once

#include <functional>
#include <memory>
#include <span>
#include <vector>

#include "cauchy/polynomial.hpp"
#include "cauchy/quaternion.hpp"

namespace cauchy {

/// How frame derivatives of a ScalarField are evaluated.
enum class DerivativeMode { exact_polynomial, finite_difference };

inline constexpr double kDefaultFdStep = 1e-5;

/// A real function on S³. In exact mode the function is the restriction of an
/// ambient polynomial and frame derivatives are exact; in finite-difference
/// mode derivatives are central differences along one-parameter flows.
class ScalarField {
 public:
  using Evaluator = std::function<double(const UnitQuaternion&)>;

  /// The zero polynomial.
  ScalarField();

  static ScalarField constant(double c);
  static ScalarField polynomial(Poly4 p);
  /// Throws std::invalid_argument unless h > 0.
  static ScalarField function(Evaluator f, double h = kDefaultFdStep);

  /// Same function, derivatives by central differences with step h. Works for
  /// polynomial fields too (used to compare the two modes).
  ScalarField with_finite_difference(double h) const;

  DerivativeMode mode() const { return mode_; }
  double fd_step() const { return h_; }
  /// Ambient polynomial, or nullptr in finite-difference mode.
  const Poly4* poly() const;
  /// True for exact fields whose polynomial is constant.
  bool is_constant() const;

  double operator()(const UnitQuaternion& q) const;

  /// e_k f as a field. Exact mode only; throws std::logic_error otherwise.
  ScalarField derivative_field(int k, Chirality c) const;

  /// e_{w[0]} e_{w[1]} ... f at q (the last letter acts first).
  /// Finite-difference mode supports words of length at most 2.
  double derivative(const UnitQuaternion& q, std::span<const int> word, Chirality c) const;
  double derivative(const UnitQuaternion& q, int k, Chirality c) const;

 private:
  struct PolyData;
  explicit ScalarField(std::shared_ptr<const PolyData> data);

  DerivativeMode mode_ = DerivativeMode::exact_polynomial;
  double h_ = kDefaultFdStep;
  std::shared_ptr<const PolyData> poly_;
  Evaluator eval_;
};

/// Pointwise arithmetic. The result is exact when both operands are; otherwise
/// it is a finite-difference field using the step of a finite-difference
/// operand.
ScalarField operator+(const ScalarField& f, const ScalarField& g);
ScalarField operator-(const ScalarField& f, const ScalarField& g);
ScalarField operator*(const ScalarField& f, const ScalarField& g);
ScalarField operator*(double s, const ScalarField& f);

/// Free-function form of ScalarField::derivative.
double directional_derivative(const ScalarField& f, const UnitQuaternion& q,
                              std::span<const int> word, Chirality c);

/// Ambient coordinate a_{i+1} as an exact field (i = 0..3).
ScalarField coordinate_field(int i);

/// The harmonic quadratics spanning the eigenvalue-8 space of the Berger
/// Laplacian, k = 0, 1, 2:
///   a₁²+a₂²−a₃²−a₄²,  a₁a₄+a₂a₃,  a₁a₃−a₂a₄.
Poly4 harmonic_quadratic_poly(int k);
ScalarField harmonic_quadratic(int k);

}  // namespace cauchy
