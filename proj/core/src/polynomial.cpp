#include "cauchy/polynomial.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace cauchy {

template <int N>
Polynomial<N> Polynomial<N>::constant(double c) {
  Polynomial p;
  p.add_term(Exponent{}, c);
  return p;
}

template <int N>
Polynomial<N> Polynomial<N>::variable(int i) {
  if (i < 0 || i >= N) throw std::out_of_range("polynomial variable index");
  Exponent e{};
  e[i] = 1;
  return monomial(e);
}

template <int N>
Polynomial<N> Polynomial<N>::monomial(const Exponent& e, double c) {
  Polynomial p;
  p.add_term(e, c);
  return p;
}

template <int N>
void Polynomial<N>::add_term(const Exponent& e, double c) {
  if (c == 0.0) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0.0) terms_.erase(it);
  }
}

template <int N>
double Polynomial<N>::operator()(const Point& x) const {
  double sum = 0.0;
  for (const auto& [e, c] : terms_) {
    double t = c;
    for (int i = 0; i < N; ++i) {
      for (int k = 0; k < e[i]; ++k) t *= x[i];
    }
    sum += t;
  }
  return sum;
}

template <int N>
Polynomial<N>& Polynomial<N>::operator+=(const Polynomial& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

template <int N>
Polynomial<N>& Polynomial<N>::operator-=(const Polynomial& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

template <int N>
Polynomial<N>& Polynomial<N>::operator*=(double s) {
  if (s == 0.0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, c] : terms_) c *= s;
  return *this;
}

template <int N>
Polynomial<N> Polynomial<N>::times(const Polynomial& o) const {
  Polynomial out;
  for (const auto& [ea, ca] : terms_) {
    for (const auto& [eb, cb] : o.terms_) {
      Exponent e;
      for (int i = 0; i < N; ++i) e[i] = ea[i] + eb[i];
      out.add_term(e, ca * cb);
    }
  }
  return out;
}

template <int N>
Polynomial<N> Polynomial<N>::pow(int n) const {
  if (n < 0) throw std::invalid_argument("negative polynomial power");
  Polynomial out = constant(1.0);
  for (int k = 0; k < n; ++k) out = out * *this;
  return out;
}

template <int N>
Polynomial<N> Polynomial<N>::partial(int i) const {
  Polynomial out;
  for (const auto& [e, c] : terms_) {
    if (e[i] == 0) continue;
    Exponent d = e;
    d[i] -= 1;
    out.add_term(d, c * e[i]);
  }
  return out;
}

template <int N>
Polynomial<N> Polynomial<N>::along_linear_field(const LinearMap& m) const {
  Polynomial out;
  for (int i = 0; i < N; ++i) {
    Polynomial di = partial(i);
    if (di.is_zero()) continue;
    Polynomial component;
    for (int j = 0; j < N; ++j) {
      if (m(i, j) != 0.0) component += variable(j) * m(i, j);
    }
    out += di * component;
  }
  return out;
}

template <int N>
int Polynomial<N>::degree() const {
  int d = 0;
  for (const auto& [e, c] : terms_) {
    int s = 0;
    for (int v : e) s += v;
    d = std::max(d, s);
  }
  return d;
}

template <int N>
bool Polynomial<N>::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == Exponent{});
}

template <int N>
std::string Polynomial<N>::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  os.precision(17);
  bool first = true;
  for (const auto& [e, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << c;
    for (int i = 0; i < N; ++i) {
      if (e[i] == 0) continue;
      os << "*x" << (i + 1);
      if (e[i] > 1) os << "^" << e[i];
    }
  }
  return os.str();
}

template class Polynomial<3>;
template class Polynomial<4>;

}  // namespace cauchy
