#include "cauchy/quaternion.hpp"

#include <cmath>
#include <stdexcept>

namespace cauchy {

const char* to_string(Chirality c) { return c == Chirality::left ? "left" : "right"; }

double Quaternion::norm() const { return std::sqrt(w * w + x * x + y * y + z * z); }

Quaternion operator*(const Quaternion& p, const Quaternion& q) {
  return {p.w * q.w - p.x * q.x - p.y * q.y - p.z * q.z,
          p.w * q.x + p.x * q.w + p.y * q.z - p.z * q.y,
          p.w * q.y - p.x * q.z + p.y * q.w + p.z * q.x,
          p.w * q.z + p.x * q.y - p.y * q.x + p.z * q.w};
}

Quaternion imaginary_unit(int k) {
  switch (k) {
    case 0: return {0.0, 1.0, 0.0, 0.0};
    case 1: return {0.0, 0.0, 1.0, 0.0};
    case 2: return {0.0, 0.0, 0.0, 1.0};
    default: throw std::out_of_range("frame index must be 0, 1 or 2");
  }
}

UnitQuaternion::UnitQuaternion(const Quaternion& q) {
  const double n = q.norm();
  if (!(n > 0.0) || !std::isfinite(n)) {
    throw std::invalid_argument("cannot normalize a zero or non-finite quaternion");
  }
  q_ = (1.0 / n) * q;
}

UnitQuaternion UnitQuaternion::conj() const { return UnitQuaternion(q_.conj()); }

UnitQuaternion quat_mul(const UnitQuaternion& p, const UnitQuaternion& q) {
  return UnitQuaternion(p.q() * q.q());
}

Eigen::Vector4d invariant_vector(const UnitQuaternion& q, int k, Chirality c) {
  const Quaternion u = imaginary_unit(k);
  return (c == Chirality::left ? q.q() * u : u * q.q()).vec();
}

Eigen::Matrix4d invariant_field_matrix(int k, Chirality c) {
  const Quaternion u = imaginary_unit(k);
  Eigen::Matrix4d m;
  for (int col = 0; col < 4; ++col) {
    Eigen::Vector4d basis = Eigen::Vector4d::Zero();
    basis[col] = 1.0;
    const Quaternion b = Quaternion::from_vector(basis);
    m.col(col) = (c == Chirality::left ? b * u : u * b).vec();
  }
  return m;
}

UnitQuaternion flow(const UnitQuaternion& q, int k, double s, Chirality c) {
  const Quaternion u = imaginary_unit(k);
  const Quaternion e = Quaternion{std::cos(s), 0.0, 0.0, 0.0} + std::sin(s) * u;
  return UnitQuaternion(c == Chirality::left ? q.q() * e : e * q.q());
}

Eigen::Vector3d hopf_project(const UnitQuaternion& q) {
  return 0.5 * (q.q() * imaginary_unit(0) * q.q().conj()).imag();
}

UnitQuaternion hopf_lift(const Eigen::Vector3d& y) {
  // Half-angle rotation taking i to y; for y near −i rotate about j instead.
  const Eigen::Vector3d i_axis(1.0, 0.0, 0.0);
  const double d = i_axis.dot(y);
  if (d > -0.5) {
    const Eigen::Vector3d axis = i_axis.cross(y);
    return UnitQuaternion(1.0 + d, axis[0], axis[1], axis[2]);
  }
  // q = r·j with r rotating −i to y; j i j̄ = −i.
  const Eigen::Vector3d m(-1.0, 0.0, 0.0);
  const Eigen::Vector3d axis = m.cross(y);
  const UnitQuaternion r(1.0 + m.dot(y), axis[0], axis[1], axis[2]);
  return quat_mul(r, UnitQuaternion(0.0, 0.0, 1.0, 0.0));
}

}  // namespace cauchy
