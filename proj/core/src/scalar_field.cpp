#include "cauchy/scalar_field.hpp"

#include <array>
#include <functional>
#include <stdexcept>

namespace cauchy {

struct ScalarField::PolyData {
  Poly4 p;
  // First derivatives along e_k, indexed [chirality][k].
  std::array<std::array<Poly4, 3>, 2> d;
};

namespace {

int chirality_index(Chirality c) { return c == Chirality::left ? 0 : 1; }

}  // namespace

ScalarField::ScalarField() : ScalarField(polynomial(Poly4{})) {}

ScalarField::ScalarField(std::shared_ptr<const PolyData> data)
    : mode_(DerivativeMode::exact_polynomial), poly_(std::move(data)) {
  auto d = poly_;
  eval_ = [d](const UnitQuaternion& q) { return d->p(q.ambient()); };
}

ScalarField ScalarField::constant(double c) { return polynomial(Poly4::constant(c)); }

ScalarField ScalarField::polynomial(Poly4 p) {
  auto data = std::make_shared<PolyData>();
  for (Chirality c : {Chirality::left, Chirality::right}) {
    for (int k = 0; k < 3; ++k) {
      data->d[chirality_index(c)][k] = p.along_linear_field(invariant_field_matrix(k, c));
    }
  }
  data->p = std::move(p);
  return ScalarField(std::shared_ptr<const PolyData>(std::move(data)));
}

ScalarField ScalarField::function(Evaluator f, double h) {
  if (!(h > 0.0)) throw std::invalid_argument("finite-difference step must be positive");
  ScalarField out = polynomial(Poly4{});
  out.mode_ = DerivativeMode::finite_difference;
  out.h_ = h;
  out.poly_.reset();
  out.eval_ = std::move(f);
  return out;
}

ScalarField ScalarField::with_finite_difference(double h) const {
  return function(eval_, h);
}

const Poly4* ScalarField::poly() const { return poly_ ? &poly_->p : nullptr; }

bool ScalarField::is_constant() const { return poly_ && poly_->p.is_constant(); }

double ScalarField::operator()(const UnitQuaternion& q) const { return eval_(q); }

ScalarField ScalarField::derivative_field(int k, Chirality c) const {
  if (!poly_) throw std::logic_error("derivative_field requires an exact polynomial field");
  return polynomial(poly_->d[chirality_index(c)].at(k));
}

double ScalarField::derivative(const UnitQuaternion& q, int k, Chirality c) const {
  if (poly_) return poly_->d[chirality_index(c)].at(k)(q.ambient());
  return (eval_(flow(q, k, h_, c)) - eval_(flow(q, k, -h_, c))) / (2.0 * h_);
}

double ScalarField::derivative(const UnitQuaternion& q, std::span<const int> word,
                               Chirality c) const {
  if (word.empty()) return eval_(q);
  if (poly_) {
    if (word.size() == 1) return derivative(q, word[0], c);
    Poly4 p = poly_->d[chirality_index(c)].at(word.back());
    for (std::size_t i = word.size() - 1; i-- > 0;) {
      p = p.along_linear_field(invariant_field_matrix(word[i], c));
    }
    return p(q.ambient());
  }
  if (word.size() > 2) {
    throw std::invalid_argument("finite-difference mode supports derivative words of length <= 2");
  }
  if (word.size() == 1) return derivative(q, word[0], c);
  const int inner = word[1];
  auto first = [&](const UnitQuaternion& p) { return derivative(p, inner, c); };
  return (first(flow(q, word[0], h_, c)) - first(flow(q, word[0], -h_, c))) / (2.0 * h_);
}

double directional_derivative(const ScalarField& f, const UnitQuaternion& q,
                              std::span<const int> word, Chirality c) {
  return f.derivative(q, word, c);
}

namespace {

template <class Op, class PolyOp>
ScalarField combine(const ScalarField& f, const ScalarField& g, Op op, PolyOp pop) {
  if (f.poly() && g.poly()) return ScalarField::polynomial(pop(*f.poly(), *g.poly()));
  const double h = f.poly() ? g.fd_step() : f.fd_step();
  return ScalarField::function(
      [f, g, op](const UnitQuaternion& q) { return op(f(q), g(q)); }, h);
}

}  // namespace

ScalarField operator+(const ScalarField& f, const ScalarField& g) {
  return combine(f, g, std::plus<>{}, [](const Poly4& a, const Poly4& b) { return a + b; });
}

ScalarField operator-(const ScalarField& f, const ScalarField& g) {
  return combine(f, g, std::minus<>{}, [](const Poly4& a, const Poly4& b) { return a - b; });
}

ScalarField operator*(const ScalarField& f, const ScalarField& g) {
  return combine(f, g, std::multiplies<>{}, [](const Poly4& a, const Poly4& b) { return a * b; });
}

ScalarField operator*(double s, const ScalarField& f) {
  return ScalarField::constant(s) * f;
}

ScalarField coordinate_field(int i) { return ScalarField::polynomial(Poly4::variable(i)); }

Poly4 harmonic_quadratic_poly(int k) {
  const Poly4 a1 = Poly4::variable(0), a2 = Poly4::variable(1);
  const Poly4 a3 = Poly4::variable(2), a4 = Poly4::variable(3);
  switch (k) {
    case 0: return a1 * a1 + a2 * a2 - a3 * a3 - a4 * a4;
    case 1: return a1 * a4 + a2 * a3;
    case 2: return a1 * a3 - a2 * a4;
    default: throw std::out_of_range("harmonic quadratic index must be 0, 1 or 2");
  }
}

ScalarField harmonic_quadratic(int k) { return ScalarField::polynomial(harmonic_quadratic_poly(k)); }

}  // namespace cauchy
