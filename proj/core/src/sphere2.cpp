#include "cauchy/sphere2.hpp"

#include <cmath>
#include <stdexcept>

namespace cauchy {

namespace {

Poly3Mat projector_poly() {
  const Poly3Vec y = s2_coordinates();
  Poly3Mat p;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) p[i][j] = Poly3::constant(i == j ? 1.0 : 0.0) - y[i] * y[j];
  return p;
}

Poly3Mat multiply(const Poly3Mat& a, const Poly3Mat& b) {
  Poly3Mat c;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k) {
        if (!a[i][k].is_zero() && !b[k][j].is_zero()) c[i][j] += a[i][k] * b[k][j];
      }
  return c;
}

// Matrix of X ↦ y × X as polynomials.
Poly3Mat j_poly() {
  const Poly3Vec y = s2_coordinates();
  Poly3Mat m;
  m[0][1] = -y[2];
  m[0][2] = y[1];
  m[1][0] = y[2];
  m[1][2] = -y[0];
  m[2][0] = -y[1];
  m[2][1] = y[0];
  return m;
}

std::vector<Poly3> flatten(const Poly3Mat& m) {
  std::vector<Poly3> out;
  for (const auto& row : m)
    for (const auto& e : row) out.push_back(e);
  return out;
}

}  // namespace

Poly3Vec s2_coordinates() {
  return {Poly3::variable(0), Poly3::variable(1), Poly3::variable(2)};
}

Mat3 tangent_projector(const Vec3& y) { return Mat3::Identity() - y * y.transpose(); }

Vec3 apply_j(const Vec3& y, const Vec3& x) { return y.cross(x); }

Mat3 j_matrix(const Vec3& y) {
  Mat3 m;
  for (int k = 0; k < 3; ++k) m.col(k) = apply_j(y, Vec3::Unit(k));
  return m;
}

std::array<Vec3, 2> s2_frame(const Vec3& y) {
  int axis = 0;
  for (int k = 1; k < 3; ++k) {
    if (std::abs(y[k]) < std::abs(y[axis])) axis = k;
  }
  const Vec3 x = (tangent_projector(y) * Vec3::Unit(axis)).normalized();
  return {x, apply_j(y, x)};
}

S2Tensor::S2Tensor(int rows, int cols, std::vector<Poly3> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
  if (static_cast<int>(entries_.size()) != rows * cols) {
    throw std::invalid_argument("S2Tensor: entry count does not match shape");
  }
  auto partials = std::make_shared<std::vector<std::array<Poly3, 3>>>();
  for (const Poly3& p : entries_) partials->push_back({p.partial(0), p.partial(1), p.partial(2)});
  partials_ = partials;
}

Eigen::MatrixXd S2Tensor::value(const Vec3& y) const {
  Eigen::MatrixXd m(rows_, cols_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) m(i, j) = entry(i, j)(y);
  return m;
}

Eigen::MatrixXd S2Tensor::directional(const Vec3& y, const Vec3& x) const {
  if (mode_ == DerivativeMode::exact_polynomial) {
    Eigen::MatrixXd m(rows_, cols_);
    for (int i = 0; i < rows_; ++i)
      for (int j = 0; j < cols_; ++j) {
        const auto& d = (*partials_)[static_cast<std::size_t>(i * cols_ + j)];
        m(i, j) = d[0](y) * x[0] + d[1](y) * x[1] + d[2](y) * x[2];
      }
    return m;
  }
  const double n = x.norm();
  if (n == 0.0) return Eigen::MatrixXd::Zero(rows_, cols_);
  const Vec3 u = x / n;
  auto at = [&](double s) {
    const Vec3 p = std::cos(s * n) * y + std::sin(s * n) * u;
    return value(p.normalized());
  };
  return (at(h_) - at(-h_)) / (2.0 * h_);
}

S2Tensor S2Tensor::with_finite_difference(double h) const {
  if (!(h > 0.0)) throw std::invalid_argument("finite-difference step must be positive");
  S2Tensor t = *this;
  t.mode_ = DerivativeMode::finite_difference;
  t.h_ = h;
  return t;
}

S2ScalarField::S2ScalarField(Poly3 p) : poly_(p), t_(1, 1, {std::move(p)}) {}

double S2ScalarField::value(const Vec3& y) const { return poly_(y); }

Vec3 S2ScalarField::gradient(const Vec3& y) const {
  const auto [x1, x2] = s2_frame(y);
  return t_.directional(y, x1)(0, 0) * x1 + t_.directional(y, x2)(0, 0) * x2;
}

S2ScalarField S2ScalarField::with_finite_difference(double h) const {
  S2ScalarField f = *this;
  f.t_ = t_.with_finite_difference(h);
  return f;
}

namespace {

std::vector<Poly3> projected_vector(const Poly3Vec& v) {
  const Poly3Mat p = projector_poly();
  std::vector<Poly3> out(3);
  for (int i = 0; i < 3; ++i)
    for (int k = 0; k < 3; ++k) out[i] += p[i][k] * v[k];
  return out;
}

}  // namespace

S2VectorField::S2VectorField(Poly3Vec v) : raw_(v), t_(3, 1, projected_vector(v)) {}

S2VectorField S2VectorField::zero() { return S2VectorField(Poly3Vec{}); }

Vec3 S2VectorField::value(const Vec3& y) const { return t_.value(y); }

Vec3 S2VectorField::covariant(const Vec3& y, const Vec3& x) const {
  return tangent_projector(y) * Vec3(t_.directional(y, x));
}

Mat3 S2VectorField::covariant_matrix(const Vec3& y) const {
  const auto [x1, x2] = s2_frame(y);
  return covariant(y, x1) * x1.transpose() + covariant(y, x2) * x2.transpose();
}

S2VectorField S2VectorField::with_finite_difference(double h) const {
  S2VectorField f = *this;
  f.t_ = t_.with_finite_difference(h);
  return f;
}

S2EndoField::S2EndoField(Poly3Mat m)
    : raw_(m), t_(3, 3, flatten(multiply(multiply(projector_poly(), m), projector_poly()))) {}

S2EndoField S2EndoField::constant(const Mat3& m) {
  Poly3Mat p;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) p[i][j] = Poly3::constant(m(i, j));
  return S2EndoField(p);
}

S2EndoField S2EndoField::multiple_of_identity(double c) { return constant(c * Mat3::Identity()); }

Mat3 S2EndoField::value(const Vec3& y) const { return t_.value(y); }

Mat3 S2EndoField::covariant(const Vec3& y, const Vec3& x) const {
  const Mat3 p = tangent_projector(y);
  return p * Mat3(t_.directional(y, x)) * p;
}

Vec3 S2EndoField::divergence(const Vec3& y) const {
  const auto frame = s2_frame(y);
  Vec3 out = Vec3::Zero();
  for (const Vec3& x : frame) out -= covariant(y, x) * x;
  return out;
}

Vec3 S2EndoField::d_nabla(const Vec3& y, const Vec3& x, const Vec3& z) const {
  return covariant(y, x) * z - covariant(y, z) * x;
}

double S2EndoField::det(const Vec3& y) const {
  const auto [x1, x2] = s2_frame(y);
  const Mat3 u = value(y);
  return x1.dot(u * x1) * x2.dot(u * x2) - x1.dot(u * x2) * x2.dot(u * x1);
}

S2EndoField S2EndoField::conjugate_by_j() const {
  const Poly3Mat j = j_poly();
  return same_mode(S2EndoField(multiply(multiply(j, raw_), j)));
}

S2EndoField S2EndoField::traceless_part() const {
  const Poly3Mat p = projector_poly();
  const Poly3Mat pmp = multiply(multiply(p, raw_), p);
  const Poly3 half_trace = 0.5 * (pmp[0][0] + pmp[1][1] + pmp[2][2]);
  Poly3Mat out = pmp;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) out[i][j] -= half_trace * p[i][j];
  return same_mode(S2EndoField(out));
}

S2EndoField S2EndoField::plus_scaled(double s, const S2EndoField& other) const {
  Poly3Mat out = raw_;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) out[i][j] += s * other.raw_[i][j];
  return same_mode(S2EndoField(out));
}

S2EndoField S2EndoField::same_mode(S2EndoField f) const {
  if (t_.mode() == DerivativeMode::finite_difference) f.t_ = f.t_.with_finite_difference(t_.fd_step());
  return f;
}

S2EndoField S2EndoField::with_finite_difference(double h) const {
  S2EndoField f = *this;
  f.t_ = t_.with_finite_difference(h);
  return f;
}

}  // namespace cauchy
