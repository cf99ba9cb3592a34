#pragma once

#include <array>
#include <cstddef>
#include <map>
#include <span>
#include <string>

#include <Eigen/Dense>

namespace cauchy {

/// Sparse real polynomial in N ambient variables with exact arithmetic on the
/// coefficient map. Used as the exact-derivative representation of fields on
/// S³ (N = 4) and S² (N = 3).
template <int N>
class Polynomial {
 public:
  using Exponent = std::array<int, N>;
  using Point = Eigen::Matrix<double, N, 1>;
  using LinearMap = Eigen::Matrix<double, N, N>;

  Polynomial() = default;

  static Polynomial constant(double c);
  static Polynomial variable(int i);
  static Polynomial monomial(const Exponent& e, double c = 1.0);

  double operator()(const Point& x) const;

  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  Polynomial& operator*=(double s);

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(Polynomial a, double s) { return a *= s; }
  friend Polynomial operator*(double s, Polynomial a) { return a *= s; }
  friend Polynomial operator-(Polynomial a) { return a *= -1.0; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    return a.times(b);
  }

  Polynomial pow(int n) const;

  /// ∂/∂x_i
  Polynomial partial(int i) const;

  /// Derivative along the linear vector field x ↦ M x, i.e. Σ_i (M x)_i ∂_i p.
  Polynomial along_linear_field(const LinearMap& m) const;

  /// Substitute polynomials in M variables for each of the N variables.
  template <int M>
  Polynomial<M> compose(const std::array<Polynomial<M>, N>& subs) const;

  int degree() const;
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  const std::map<Exponent, double>& terms() const { return terms_; }

  std::string to_string() const;

 private:
  Polynomial times(const Polynomial& o) const;
  void add_term(const Exponent& e, double c);

  std::map<Exponent, double> terms_;
};

extern template class Polynomial<3>;
extern template class Polynomial<4>;

using Poly4 = Polynomial<4>;
using Poly3 = Polynomial<3>;

template <int N>
template <int M>
Polynomial<M> Polynomial<N>::compose(
    const std::array<Polynomial<M>, N>& subs) const {
  Polynomial<M> out;
  for (const auto& [e, c] : terms_) {
    Polynomial<M> term = Polynomial<M>::constant(c);
    for (int i = 0; i < N; ++i) {
      if (e[i] > 0) term = term * subs[i].pow(e[i]);
    }
    out += term;
  }
  return out;
}

}  // namespace cauchy
