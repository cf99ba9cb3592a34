#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <vector>

#include <Eigen/Dense>

#include "cauchy/polynomial.hpp"
#include "cauchy/quaternion.hpp"

namespace cauchy {

/// Seeded source of random points and vectors. Points on spheres are
/// normalized standard Gaussian vectors.
class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : rng_(seed) {}

  double gaussian() { return normal_(rng_); }
  double uniform(double lo, double hi);
  Eigen::Vector3d gaussian3();
  UnitQuaternion point_s3();
  Eigen::Vector3d point_s2();
  /// Haar-random rotation (QR of a Gaussian matrix with sign fix, det +1).
  Eigen::Matrix3d rotation();
  Eigen::Matrix3d symmetric3();

  /// Gaussian coefficients on every monomial of total degree ≤ degree.
  template <int N>
  Polynomial<N> polynomial(int degree) {
    Polynomial<N> p;
    typename Polynomial<N>::Exponent e{};
    fill_monomials<N>(p, e, 0, degree);
    return p;
  }

 private:
  std::mt19937_64 rng_;
  std::normal_distribution<double> normal_{0.0, 1.0};

  template <int N>
  void fill_monomials(Polynomial<N>& p, typename Polynomial<N>::Exponent& e, int var, int left) {
    if (var == N) {
      p += Polynomial<N>::monomial(e, gaussian());
      return;
    }
    for (int d = 0; d <= left; ++d) {
      e[static_cast<std::size_t>(var)] = d;
      fill_monomials<N>(p, e, var + 1, left - d);
    }
    e[static_cast<std::size_t>(var)] = 0;
  }
};

std::vector<UnitQuaternion> sample_s3(std::uint64_t seed, std::size_t n);
std::vector<Eigen::Vector3d> sample_s2(std::uint64_t seed, std::size_t n);

/// Running max / root-mean-square of residual magnitudes, accumulated in
/// insertion order so results are reproducible bit for bit.
class ResidualStats {
 public:
  void add(double magnitude);
  void merge(const ResidualStats& other);

  double max() const { return max_; }
  double rms() const;
  std::size_t count() const { return count_; }

 private:
  double max_ = 0.0;
  double sum_sq_ = 0.0;
  double comp_ = 0.0;
  std::size_t count_ = 0;
};

}  // namespace cauchy
