#include "cauchy/sampling.hpp"

#include <algorithm>
#include <cmath>

#include <Eigen/QR>

namespace cauchy {

double Sampler::uniform(double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(rng_);
}

Eigen::Vector3d Sampler::gaussian3() {
  Eigen::Vector3d v;
  for (int i = 0; i < 3; ++i) v[i] = gaussian();
  return v;
}

UnitQuaternion Sampler::point_s3() {
  for (;;) {
    Quaternion q{gaussian(), gaussian(), gaussian(), gaussian()};
    if (q.norm() > 1e-8) return UnitQuaternion(q);
  }
}

Eigen::Vector3d Sampler::point_s2() {
  for (;;) {
    Eigen::Vector3d v = gaussian3();
    const double n = v.norm();
    if (n > 1e-8) return v / n;
  }
}

Eigen::Matrix3d Sampler::rotation() {
  Eigen::Matrix3d g;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) g(i, j) = gaussian();
  Eigen::HouseholderQR<Eigen::Matrix3d> qr(g);
  Eigen::Matrix3d q = qr.householderQ();
  const Eigen::Matrix3d r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (int j = 0; j < 3; ++j) {
    if (r(j, j) < 0.0) q.col(j) *= -1.0;
  }
  if (q.determinant() < 0.0) q.col(0) *= -1.0;
  return q;
}

Eigen::Matrix3d Sampler::symmetric3() {
  Eigen::Matrix3d m;
  for (int i = 0; i < 3; ++i)
    for (int j = i; j < 3; ++j) m(i, j) = m(j, i) = gaussian();
  return m;
}

std::vector<UnitQuaternion> sample_s3(std::uint64_t seed, std::size_t n) {
  Sampler s(seed);
  std::vector<UnitQuaternion> out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) out.push_back(s.point_s3());
  return out;
}

std::vector<Eigen::Vector3d> sample_s2(std::uint64_t seed, std::size_t n) {
  Sampler s(seed);
  std::vector<Eigen::Vector3d> out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) out.push_back(s.point_s2());
  return out;
}

void ResidualStats::add(double magnitude) {
  const double m = std::abs(magnitude);
  if (std::isnan(m)) {
    max_ = m;
  } else if (!std::isnan(max_)) {
    max_ = std::max(max_, m);
  }
  // Neumaier summation of squares.
  const double sq = m * m;
  const double t = sum_sq_ + sq;
  if (std::abs(sum_sq_) >= std::abs(sq)) {
    comp_ += (sum_sq_ - t) + sq;
  } else {
    comp_ += (sq - t) + sum_sq_;
  }
  sum_sq_ = t;
  ++count_;
}

void ResidualStats::merge(const ResidualStats& other) {
  if (std::isnan(other.max_) || std::isnan(max_)) {
    max_ = std::nan("");
  } else {
    max_ = std::max(max_, other.max_);
  }
  sum_sq_ += other.sum_sq_;
  comp_ += other.comp_;
  count_ += other.count_;
}

double ResidualStats::rms() const {
  return count_ == 0 ? 0.0 : std::sqrt((sum_sq_ + comp_) / static_cast<double>(count_));
}

}  // namespace cauchy
