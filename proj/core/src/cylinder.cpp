#include "cauchy/cylinder.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <boost/math/tools/roots.hpp>

namespace cauchy {

std::pair<double, double> reduced_rhs(double a, double b) {
  if (!(a > 0.0) || !(b > 0.0)) throw std::invalid_argument("a and b must be positive");
  return {-(a * a) / (b * b), a / b + 2.0};
}

std::array<double, 2> full_system_residual(double a, double b, double adot, double bdot) {
  const double b2 = b * b, b3 = b2 * b, b4 = b2 * b2;
  const double a2 = a * a;
  return {-a2 / b4 - adot / b2 + a * bdot / b3 + adot * bdot / (a * b),
          (3.0 * a2 - 4.0 * b2) / b4 + 2.0 * adot / b2 - 2.0 * a * bdot / b3 +
              (bdot / b) * (bdot / b)};
}

double conserved_quantity(double a, double b) { return (b / a + 1.0) / (a * b); }

std::pair<double, double> closed_form(double s) {
  if (!(s > 0.5)) throw std::invalid_argument("closed form requires s > 1/2");
  return {std::sqrt(s / (2.0 * s - 1.0)), std::sqrt(s * (2.0 * s - 1.0))};
}

double t_of_s(double s) {
  if (!(s >= 0.5)) throw std::invalid_argument("t(s) requires s >= 1/2");
  // σ = ½ + u² turns the integrand into 2u²/√(1 + 2u²), smooth at σ = ½.
  auto f = [](double u) { return 2.0 * u * u / std::sqrt(1.0 + 2.0 * u * u); };
  const double u0 = std::sqrt(0.5);
  const double u1 = std::sqrt(s - 0.5);
  if (u1 == u0) return 0.0;
  using boost::math::quadrature::gauss_kronrod;
  const double lo = std::min(u0, u1), hi = std::max(u0, u1);
  const double v = gauss_kronrod<double, 31>::integrate(f, lo, hi, 15, 1e-13);
  return u1 > u0 ? v : -v;
}

double boundary_distance_closed_form() {
  const double r2 = std::sqrt(2.0);
  return (r2 - std::log(1.0 + r2)) / (2.0 * r2);
}

CylinderJet jet_on_orbit(double a, double b, double t) {
  const auto [ad, bd] = reduced_rhs(a, b);
  CylinderJet j;
  j.t = t;
  j.a = a;
  j.b = b;
  j.adot = ad;
  j.bdot = bd;
  j.addot = -2.0 * a * ad / (b * b) + 2.0 * a * a * bd / (b * b * b);
  j.bddot = ad / b - a * bd / (b * b);
  return j;
}

CylinderJet closed_form_jet(double s) {
  const auto [a, b] = closed_form(s);
  return jet_on_orbit(a, b, t_of_s(s));
}

Sym3 weingarten(const CylinderJet& j) {
  return Vec3(-j.adot / j.a, -j.bdot / j.b, -j.bdot / j.b).asDiagonal();
}

TwoForm slice_residual(const CylinderJet& j, int i, int k) {
  const BergerParams p{j.a, j.b};
  const Vec3 len(j.a, j.b, j.b);
  EndoJet at;
  at.value = weingarten(j);
  const Vec3 ei = Vec3::Unit(i), ek = Vec3::Unit(k);
  // d^∇A_t on the Hopf pair, converted to orthonormal components.
  const Vec3 d = len.asDiagonal() * d_nabla_A(at, ei, ek, berger_connection(p));
  const double scale = len[i] * len[k];
  const double coeff = curvature_berger(p, i, k) + at.value(i, i) * at.value(k, k);
  // Evaluated on the orthonormal pair (e_i/|e_i|, e_k/|e_k|).
  return (1.0 / scale) * (coeff * scale * TwoForm::basis(i, k) + hodge_star(d));
}

double slice_residual_max(const CylinderJet& j) {
  double m = 0.0;
  for (auto [i, k] : {std::pair{0, 1}, std::pair{0, 2}, std::pair{1, 2}}) {
    m = std::max(m, slice_residual(j, i, k).norm());
  }
  return m;
}

std::array<double, 4> metric_4d(double s, double r) {
  if (!(s > 0.5)) throw std::invalid_argument("metric requires s > 1/2");
  if (!(r > 0.0)) throw std::invalid_argument("metric requires r > 0");
  const double r2 = r * r, q = 2.0 * s - 1.0;
  return {r2 * q / (4.0 * s), r2 * s / q, r2 * s * q, r2 * s * q};
}

std::array<double, 4> metric_4d_u(double u, double r) {
  if (!(r > 0.0) || !(2.0 * u > r)) throw std::invalid_argument("metric requires u > r/2 > 0");
  const double q = 2.0 * u - r;
  return {q / (4.0 * u), r * r * u / q, u * q, u * q};
}

std::array<double, 4> taub_nut_coeffs(double a_param, double b_param, double s) {
  const double w = a_param * s + b_param;
  if (s == 0.0 || w == 0.0) throw std::invalid_argument("Taub-NUT coefficients undefined here");
  const double f = w / s;
  return {f, f * 4.0 * b_param * b_param * s * s / (w * w), f * 4.0 * s * s, f * 4.0 * s * s};
}

std::array<double, 6> sectional_curvatures_4d(const CylinderJet& j) {
  const double a = j.a, b = j.b, b2 = b * b, b4 = b2 * b2;
  const double mixed = j.adot * j.bdot / (a * b);
  const double k01 = -j.addot / a;
  const double k02 = -j.bddot / b;
  const double k12 = a * a / b4 - mixed;
  const double k23 = (4.0 - j.bdot * j.bdot) / b2 - 3.0 * a * a / b4;
  return {k01, k02, k02, k12, k12, k23};
}

Eigen::Matrix4d ricci_4d(const CylinderJet& j) {
  const auto k = sectional_curvatures_4d(j);
  Eigen::Matrix4d r = Eigen::Matrix4d::Zero();
  r(0, 0) = k[0] + k[1] + k[2];
  r(1, 1) = k[0] + k[3] + k[4];
  r(2, 2) = k[1] + k[3] + k[5];
  r(3, 3) = k[2] + k[4] + k[5];
  return r;
}

double curvature_proxy(const CylinderJet& j) {
  double m = 0.0;
  for (double k : sectional_curvatures_4d(j)) m = std::max(m, std::abs(k));
  return m;
}

std::vector<double> curvature_blowup_probe(std::span<const double> s_values) {
  std::vector<double> out;
  out.reserve(s_values.size());
  for (double s : s_values) {
    const auto [a, b] = closed_form(s);
    out.push_back(curvature_proxy(jet_on_orbit(a, b)));
  }
  return out;
}

namespace {

using State = std::array<double, 2>;

State rhs(const State& y) {
  const auto [ad, bd] = reduced_rhs(y[0], y[1]);
  return {ad, bd};
}

State project(State y) {
  for (int it = 0; it < 4; ++it) {
    const double a = y[0], b = y[1];
    const double c = conserved_quantity(a, b) - 2.0;
    const double ga = -2.0 / (a * a * a) - 1.0 / (a * a * b);
    const double gb = -1.0 / (a * b * b);
    const double n2 = ga * ga + gb * gb;
    y[0] -= c * ga / n2;
    y[1] -= c * gb / n2;
  }
  return y;
}

struct StepResult {
  State y;
  double error;  // scaled error norm
};

// One Dormand–Prince 5(4) step of signed size h.
StepResult dp45_step(const State& y, double h, const IntegratorOptions& opt) {
  static constexpr double a21 = 1.0 / 5.0;
  static constexpr double a31 = 3.0 / 40.0, a32 = 9.0 / 40.0;
  static constexpr double a41 = 44.0 / 45.0, a42 = -56.0 / 15.0, a43 = 32.0 / 9.0;
  static constexpr double a51 = 19372.0 / 6561.0, a52 = -25360.0 / 2187.0,
                          a53 = 64448.0 / 6561.0, a54 = -212.0 / 729.0;
  static constexpr double a61 = 9017.0 / 3168.0, a62 = -355.0 / 33.0, a63 = 46732.0 / 5247.0,
                          a64 = 49.0 / 176.0, a65 = -5103.0 / 18656.0;
  static constexpr double b1 = 35.0 / 384.0, b3 = 500.0 / 1113.0, b4 = 125.0 / 192.0,
                          b5 = -2187.0 / 6784.0, b6 = 11.0 / 84.0;
  static constexpr double e1 = 71.0 / 57600.0, e3 = -71.0 / 16695.0, e4 = 71.0 / 1920.0,
                          e5 = -17253.0 / 339200.0, e6 = 22.0 / 525.0, e7 = -1.0 / 40.0;

  auto add = [](const State& y0, double h0, std::initializer_list<std::pair<double, State>> ks) {
    State out = y0;
    for (const auto& [c, k] : ks) {
      out[0] += h0 * c * k[0];
      out[1] += h0 * c * k[1];
    }
    return out;
  };
  auto positive = [](const State& s) { return s[0] > 0.0 && s[1] > 0.0 && std::isfinite(s[0]) && std::isfinite(s[1]); };
  const double inf = std::numeric_limits<double>::infinity();

  const State k1 = rhs(y);
  State t = add(y, h, {{a21, k1}});
  if (!positive(t)) return {y, inf};
  const State k2 = rhs(t);
  t = add(y, h, {{a31, k1}, {a32, k2}});
  if (!positive(t)) return {y, inf};
  const State k3 = rhs(t);
  t = add(y, h, {{a41, k1}, {a42, k2}, {a43, k3}});
  if (!positive(t)) return {y, inf};
  const State k4 = rhs(t);
  t = add(y, h, {{a51, k1}, {a52, k2}, {a53, k3}, {a54, k4}});
  if (!positive(t)) return {y, inf};
  const State k5 = rhs(t);
  t = add(y, h, {{a61, k1}, {a62, k2}, {a63, k3}, {a64, k4}, {a65, k5}});
  if (!positive(t)) return {y, inf};
  const State k6 = rhs(t);
  const State y5 = add(y, h, {{b1, k1}, {b3, k3}, {b4, k4}, {b5, k5}, {b6, k6}});
  if (!positive(y5)) return {y, inf};
  const State k7 = rhs(y5);

  double err = 0.0;
  for (int i = 0; i < 2; ++i) {
    const double e = h * (e1 * k1[i] + e3 * k3[i] + e4 * k4[i] + e5 * k5[i] + e6 * k6[i] + e7 * k7[i]);
    const double sc = opt.atol + opt.rtol * std::max(std::abs(y[i]), std::abs(y5[i]));
    err = std::max(err, std::abs(e) / sc);
  }
  return {y5, err};
}

State advance(const State& y, double h, const IntegratorOptions& opt) {
  if (h == 0.0) return y;
  const State out = dp45_step(y, h, opt).y;
  return opt.project ? project(out) : out;
}

// Signed step h* in (0, h] with ab(advance(y, h*)) = target.
double locate(const State& y, double h, double target, const IntegratorOptions& opt) {
  auto g = [&](double x) {
    const State s = advance(y, x, opt);
    return s[0] * s[1] - target;
  };
  const double g0 = g(0.0), g1 = g(h);
  if (g1 == 0.0) return h;
  if ((g0 > 0.0) == (g1 > 0.0)) return h;
  boost::math::tools::eps_tolerance<double> tol(50);
  std::uintmax_t iters = 100;
  const double lo = std::min(0.0, h), hi = std::max(0.0, h);
  const auto r = boost::math::tools::toms748_solve(g, lo, hi, h > 0 ? g0 : g1, h > 0 ? g1 : g0,
                                                   tol, iters);
  return 0.5 * (r.first + r.second);
}

}  // namespace

CylinderProfile::CylinderProfile(std::vector<CylinderNode> nodes, Direction dir, bool singular,
                                 IntegratorOptions opt)
    : nodes_(std::move(nodes)), direction_(dir), singular_(singular), opt_(opt) {}

CylinderJet CylinderProfile::node_jet(std::size_t i) const {
  const CylinderNode& n = nodes_.at(i);
  return jet_on_orbit(n.a, n.b, n.t);
}

CylinderJet CylinderProfile::at(double t) const {
  const double sign = direction_ == Direction::forward ? 1.0 : -1.0;
  const double lo = std::min(nodes_.front().t, nodes_.back().t);
  const double hi = std::max(nodes_.front().t, nodes_.back().t);
  if (t < lo - 1e-15 || t > hi + 1e-15) throw std::out_of_range("t outside the integrated range");
  // Last node not beyond t in the direction of integration.
  auto it = std::upper_bound(nodes_.begin(), nodes_.end(), t, [sign](double v, const CylinderNode& n) {
    return sign * v < sign * n.t;
  });
  const CylinderNode& n = *std::prev(it == nodes_.begin() ? std::next(it) : it);
  const State y = advance({n.a, n.b}, t - n.t, opt_);
  return jet_on_orbit(y[0], y[1], t);
}

double CylinderProfile::max_conserved_drift() const {
  double m = 0.0;
  for (const auto& n : nodes_) m = std::max(m, std::abs(conserved_quantity(n.a, n.b) - 2.0));
  return m;
}

double CylinderProfile::max_raw_defect() const {
  double m = 0.0;
  for (const auto& n : nodes_) m = std::max(m, n.raw_defect);
  return m;
}

double CylinderProfile::max_full_system_residual() const {
  double m = 0.0;
  for (std::size_t i = 0; i < nodes_.size(); ++i) {
    const CylinderJet j = node_jet(i);
    for (double r : full_system_residual(j.a, j.b, j.adot, j.bdot)) m = std::max(m, std::abs(r));
  }
  return m;
}

CylinderProfile integrate(Direction dir, IntegrationBound until, const IntegratorOptions& opt) {
  const double sign = dir == Direction::forward ? 1.0 : -1.0;
  if (until.kind == IntegrationBound::Kind::t && sign * until.value < 0.0) {
    throw std::invalid_argument("t bound lies on the wrong side of t = 0");
  }
  if (until.kind == IntegrationBound::Kind::s && sign * (until.value - 1.0) < 0.0) {
    throw std::invalid_argument("s bound is not reachable in this direction");
  }
  const double s_singular = 0.5 + opt.singular_epsilon;

  std::vector<CylinderNode> nodes{{0.0, 1.0, 1.0, 0.0}};
  State y{1.0, 1.0};
  double t = 0.0;
  double h = sign * opt.initial_step;
  bool singular = false;

  for (std::size_t step = 0; step < opt.max_steps; ++step) {
    if (until.kind == IntegrationBound::Kind::t) {
      const double remaining = until.value - t;
      if (std::abs(remaining) <= 1e-15 * std::max(1.0, std::abs(until.value))) break;
      if (std::abs(h) > std::abs(remaining)) h = remaining;
    }
    if (std::abs(h) > opt.max_step) h = sign * opt.max_step;
    if (std::abs(h) < opt.min_step) {
      singular = true;
      break;
    }
    const StepResult r = dp45_step(y, h, opt);
    if (!(r.error <= 1.0)) {
      const double f = std::isfinite(r.error) ? std::max(0.2, 0.9 * std::pow(r.error, -0.2)) : 0.2;
      h *= f;
      continue;
    }
    const double raw = std::abs(conserved_quantity(r.y[0], r.y[1]) - 2.0);
    State ynew = opt.project ? project(r.y) : r.y;
    const double s_new = ynew[0] * ynew[1];

    double target = std::numeric_limits<double>::quiet_NaN();
    bool hit_singular = false;
    if (dir == Direction::backward && s_new <= s_singular) {
      target = s_singular;
      hit_singular = true;
    }
    if (until.kind == IntegrationBound::Kind::s && sign * (s_new - until.value) >= 0.0 &&
        !(hit_singular && until.value < s_singular)) {
      target = until.value;
      hit_singular = false;
    }
    if (!std::isnan(target)) {
      const double hs = locate(y, h, target, opt);
      ynew = advance(y, hs, opt);
      nodes.push_back({t + hs, ynew[0], ynew[1], raw});
      singular = hit_singular;
      break;
    }

    t += h;
    y = ynew;
    nodes.push_back({t, y[0], y[1], raw});
    const double grow = r.error > 0.0 ? std::min(5.0, 0.9 * std::pow(r.error, -0.2)) : 5.0;
    h *= grow;
  }
  return CylinderProfile(std::move(nodes), dir, singular, opt);
}

Eigen::Matrix4d ricci_4d(const CylinderProfile& p, double t) { return ricci_4d(p.at(t)); }

TrajectoryRow trajectory_row(const CylinderJet& j) {
  return {j.t,     j.a * j.b, j.a, j.b, j.adot, j.bdot, conserved_quantity(j.a, j.b),
          slice_residual_max(j), ricci_4d(j).norm()};
}

std::vector<TrajectoryRow> trajectory_rows(const CylinderProfile& p) {
  std::vector<TrajectoryRow> rows;
  rows.reserve(p.nodes().size());
  for (std::size_t i = 0; i < p.nodes().size(); ++i) rows.push_back(trajectory_row(p.node_jet(i)));
  return rows;
}

}  // namespace cauchy
