#include "cauchy/tensor.hpp"

#include <stdexcept>

#include <Eigen/LU>

#include "cauchy/polynomial.hpp"

namespace cauchy {

namespace {

Vec3 unit(int a) {
  Vec3 v = Vec3::Zero();
  v[a] = 1.0;
  return v;
}

Mat3 cross_matrix(const Vec3& w) {
  Mat3 m;
  m << 0.0, -w[2], w[1],
       w[2], 0.0, -w[0],
       -w[1], w[0], 0.0;
  return m;
}

}  // namespace

int third_index(int a, int b) { return 3 - a - b; }

double levi_civita_symbol(int a, int b, int c) {
  if (a == b || b == c || a == c) return 0.0;
  return ((b - a + 3) % 3 == 1) ? 1.0 : -1.0;
}

TwoForm TwoForm::basis(int a, int b) { return TwoForm(unit(a).cross(unit(b))); }

Mat3 TwoForm::matrix() const { return cross_matrix(w_); }

double TwoForm::coeff(int a, int b) const {
  if (a == b) return 0.0;
  return levi_civita_symbol(a, b, third_index(a, b)) * w_[third_index(a, b)];
}

TwoForm wedge_endo(const Vec3& x, const Vec3& y) { return TwoForm(x.cross(y)); }

TwoForm two_form_from_matrix(const Mat3& m) {
  const Mat3 s = 0.5 * (m - m.transpose());
  return TwoForm(Vec3(s(2, 1), s(0, 2), s(1, 0)));
}

TwoForm hodge_star(const Vec3& v) { return TwoForm(v); }
Vec3 hodge_star(const TwoForm& w) { return w.vec(); }

Vec3 interior(const Vec3& x, const TwoForm& w) { return w(x); }
TwoForm wedge(const Vec3& x, const Vec3& alpha) { return TwoForm(x.cross(alpha)); }

StructureConstants left_structure_constants() {
  StructureConstants c;
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b) c[a][b] = 2.0 * unit(a).cross(unit(b));
  return c;
}

StructureConstants measured_structure_constants(Chirality ch) {
  const UnitQuaternion one = UnitQuaternion::identity();
  std::array<Eigen::Matrix4d, 3> m;
  std::array<Eigen::Vector4d, 3> at_one;
  for (int k = 0; k < 3; ++k) {
    m[k] = invariant_field_matrix(k, ch);
    at_one[k] = invariant_vector(one, k, ch);
  }
  StructureConstants c;
  for (int a = 0; a < 3; ++a) {
    for (int b = 0; b < 3; ++b) {
      Eigen::Vector4d bracket;
      for (int i = 0; i < 4; ++i) {
        const Poly4 xi = Poly4::variable(i);
        const Poly4 ab = xi.along_linear_field(m[b]).along_linear_field(m[a]);
        const Poly4 ba = xi.along_linear_field(m[a]).along_linear_field(m[b]);
        bracket[i] = (ab - ba)(one.ambient());
      }
      for (int k = 0; k < 3; ++k) c[a][b][k] = bracket.dot(at_one[k]);
    }
  }
  return c;
}

void BergerParams::validate() const {
  if (!(a > 0.0) || !(b > 0.0)) {
    throw std::invalid_argument("Berger parameters must be positive");
  }
}

Vec3 FrameConnection::covariant(const Vec3& x, const Vec3& y) const {
  return omega_along(x) * y;
}

Mat3 FrameConnection::omega_along(const Vec3& x) const {
  return x[0] * omega[0] + x[1] * omega[1] + x[2] * omega[2];
}

FrameConnection koszul_connection(const StructureConstants& c, const Mat3& gram) {
  FrameConnection conn;
  conn.brackets = c;
  conn.gram = gram;
  const Mat3 ginv = gram.inverse();
  auto g = [&](const Vec3& u, int k) { return u.dot(gram.col(k)); };
  for (int a = 0; a < 3; ++a) {
    for (int b = 0; b < 3; ++b) {
      Vec3 lowered;
      for (int k = 0; k < 3; ++k) {
        lowered[k] = 0.5 * (g(c[a][b], k) - g(c[b][k], a) + g(c[k][a], b));
      }
      conn.omega[a].col(b) = ginv * lowered;
    }
  }
  return conn;
}

FrameConnection round_connection(Chirality ch) {
  FrameConnection conn;
  const double sign = ch == Chirality::left ? 1.0 : -1.0;
  conn.brackets = left_structure_constants();
  for (int a = 0; a < 3; ++a) {
    conn.omega[a] = sign * cross_matrix(unit(a));
    for (int b = 0; b < 3; ++b) conn.brackets[a][b] *= sign;
  }
  return conn;
}

Vec3 levi_civita_round(int a, int b) { return unit(a).cross(unit(b)); }

Vec3 levi_civita_berger(const BergerParams& p, int a, int b) {
  p.validate();
  const double r = p.ratio_sq();
  Vec3 v = Vec3::Zero();
  if (a == 0 && b == 1) v[2] = 2.0 - r;
  if (a == 1 && b == 0) v[2] = -r;
  if (a == 0 && b == 2) v[1] = r - 2.0;
  if (a == 2 && b == 0) v[1] = r;
  if (a == 1 && b == 2) v[0] = 1.0;
  if (a == 2 && b == 1) v[0] = -1.0;
  return v;
}

FrameConnection berger_connection(const BergerParams& p) {
  p.validate();
  FrameConnection conn;
  conn.brackets = left_structure_constants();
  conn.gram = Vec3(p.a * p.a, p.b * p.b, p.b * p.b).asDiagonal();
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b) conn.omega[a].col(b) = levi_civita_berger(p, a, b);
  return conn;
}

TwoForm curvature_round(const Vec3& x, const Vec3& y) { return -wedge_endo(x, y); }

double curvature_berger(const BergerParams& p, int a, int b) {
  p.validate();
  if (a == b) return 0.0;
  const double a2 = p.a * p.a, b2 = p.b * p.b, b4 = b2 * b2;
  const bool vertical = (a == 0 || b == 0);
  return vertical ? -a2 / b4 : (3.0 * a2 - 4.0 * b2) / b4;
}

Mat3 berger_curvature_endomorphism(const BergerParams& p, int a, int b) {
  const Mat3 g = Vec3(p.a * p.a, p.b * p.b, p.b * p.b).asDiagonal();
  const Vec3 ea = unit(a), eb = unit(b);
  return curvature_berger(p, a, b) * (eb * ea.transpose() * g - ea * eb.transpose() * g);
}

TwoForm curvature_berger_orthonormal(const BergerParams& p, int a, int b) {
  return curvature_berger(p, a, b) * TwoForm::basis(a, b);
}

double berger_sectional_curvature(const BergerParams& p, int a, int b) {
  if (a == b) throw std::invalid_argument("sectional curvature needs two distinct directions");
  return -curvature_berger(p, a, b);
}

Mat3 covariant_derivative(const EndoJet& a, const FrameConnection& conn, const Vec3& x) {
  Mat3 out = Mat3::Zero();
  for (int k = 0; k < 3; ++k) {
    if (x[k] == 0.0) continue;
    out += x[k] * (a.d[k] + conn.omega[k] * a.value - a.value * conn.omega[k]);
  }
  return out;
}

Vec3 d_nabla_A(const EndoJet& a, const Vec3& x, const Vec3& y, const FrameConnection& conn) {
  return covariant_derivative(a, conn, x) * y - covariant_derivative(a, conn, y) * x;
}

Vec3 divergence_A(const EndoJet& a, const FrameConnection& conn) {
  Vec3 out = Vec3::Zero();
  for (int k = 0; k < 3; ++k) out -= covariant_derivative(a, conn, unit(k)).col(k);
  return out;
}

}  // namespace cauchy
