#pragma once

#include <Eigen/Dense>

namespace cauchy {

/// Which family of invariant vector fields on S³ a frame belongs to.
enum class Chirality { left, right };

const char* to_string(Chirality c);

/// Plain quaternion w + x i + y j + z k; the ambient coordinates
/// (a₁, a₂, a₃, a₄) are (w, x, y, z).
struct Quaternion {
  double w = 0.0;
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;

  static Quaternion from_vector(const Eigen::Vector4d& v) {
    return {v[0], v[1], v[2], v[3]};
  }
  /// Pure imaginary quaternion with the given vector part.
  static Quaternion imaginary(const Eigen::Vector3d& v) { return {0.0, v[0], v[1], v[2]}; }

  Eigen::Vector4d vec() const { return {w, x, y, z}; }
  Eigen::Vector3d imag() const { return {x, y, z}; }
  Quaternion conj() const { return {w, -x, -y, -z}; }
  double norm() const;

  friend Quaternion operator*(const Quaternion& p, const Quaternion& q);
  friend Quaternion operator+(const Quaternion& p, const Quaternion& q) {
    return {p.w + q.w, p.x + q.x, p.y + q.y, p.z + q.z};
  }
  friend Quaternion operator*(double s, const Quaternion& q) {
    return {s * q.w, s * q.x, s * q.y, s * q.z};
  }
};

/// The imaginary unit u_k ∈ {i, j, k} for frame index k ∈ {0, 1, 2}.
Quaternion imaginary_unit(int k);

/// A point of S³. Construction always renormalizes, so |q| = 1 to rounding.
class UnitQuaternion {
 public:
  UnitQuaternion() = default;
  /// Normalizes; throws std::invalid_argument on a zero (or non-finite) input.
  explicit UnitQuaternion(const Quaternion& q);
  UnitQuaternion(double w, double x, double y, double z)
      : UnitQuaternion(Quaternion{w, x, y, z}) {}

  static UnitQuaternion identity() { return {}; }

  const Quaternion& q() const { return q_; }
  Eigen::Vector4d ambient() const { return q_.vec(); }
  double w() const { return q_.w; }
  double x() const { return q_.x; }
  double y() const { return q_.y; }
  double z() const { return q_.z; }

  UnitQuaternion conj() const;

 private:
  Quaternion q_{1.0, 0.0, 0.0, 0.0};
};

UnitQuaternion quat_mul(const UnitQuaternion& p, const UnitQuaternion& q);

/// Value of the k-th invariant vector field at q as an ambient 4-vector:
/// q·u_k for the left-invariant field, u_k·q for the right-invariant one.
Eigen::Vector4d invariant_vector(const UnitQuaternion& q, int k, Chirality c);

/// The linear map a ↦ invariant_vector(a, k, c) on ℝ⁴ (the field is linear in
/// the ambient coordinates).
Eigen::Matrix4d invariant_field_matrix(int k, Chirality c);

/// One-parameter subgroup flow: q·exp(s u_k) (left) or exp(s u_k)·q (right).
UnitQuaternion flow(const UnitQuaternion& q, int k, double s, Chirality c);

/// Hopf projection q ↦ ½ q i q̄ onto the sphere of radius ½ in Im ℍ ≅ ℝ³.
Eigen::Vector3d hopf_project(const UnitQuaternion& q);

/// A unit quaternion q with q i q̄ = y for a unit vector y (a lift through the
/// unit-radius Hopf map). The fiber phase is arbitrary but deterministic.
UnitQuaternion hopf_lift(const Eigen::Vector3d& y);

}  // namespace cauchy
