#include "cauchy/classification.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace cauchy {

namespace {

double frame_shift(Chirality c) { return c == Chirality::left ? 1.0 : -1.0; }

Vec3 cyclic_residual(const Vec3& d, double s) {
  Vec3 r;
  for (int k = 0; k < 3; ++k) {
    const int a = k, b = (k + 1) % 3, c = (k + 2) % 3;
    r[k] = (d[a] + s) * (d[b] + s) - 2.0 * s * (d[c] + s);
  }
  return r;
}

Mat3 cyclic_jacobian(const Vec3& d, double s) {
  Mat3 j = Mat3::Zero();
  for (int k = 0; k < 3; ++k) {
    const int a = k, b = (k + 1) % 3, c = (k + 2) % 3;
    j(k, a) += d[b] + s;
    j(k, b) += d[a] + s;
    j(k, c) += -2.0 * s;
  }
  return j;
}

bool lex_less(const Vec3& x, const Vec3& y) {
  for (int k = 0; k < 3; ++k) {
    if (x[k] != y[k]) return x[k] < y[k];
  }
  return false;
}

void sort_triples(std::vector<DiagonalTriple>& v) { std::sort(v.begin(), v.end(), lex_less); }

// q u_k q̄ as ambient polynomials in a₁..a₄.
std::array<Poly4, 3> conjugation_poly(int k) {
  const std::array<Poly4, 4> q{Poly4::variable(0), Poly4::variable(1), Poly4::variable(2),
                               Poly4::variable(3)};
  using Q = std::array<Poly4, 4>;
  auto mul = [](const Q& p, const Q& r) {
    return Q{p[0] * r[0] - p[1] * r[1] - p[2] * r[2] - p[3] * r[3],
             p[0] * r[1] + p[1] * r[0] + p[2] * r[3] - p[3] * r[2],
             p[0] * r[2] - p[1] * r[3] + p[2] * r[0] + p[3] * r[1],
             p[0] * r[3] + p[1] * r[2] - p[2] * r[1] + p[3] * r[0]};
  };
  Q u;
  for (int i = 0; i < 4; ++i) u[i] = Poly4::constant(i == k + 1 ? 1.0 : 0.0);
  const Q qbar{q[0], -q[1], -q[2], -q[3]};
  const Q out = mul(mul(q, u), qbar);
  return {out[1], out[2], out[3]};
}

}  // namespace

std::array<double, 3> constant_frame_residual(const DiagonalTriple& d, Chirality c) {
  const Vec3 r = cyclic_residual(d, frame_shift(c));
  return {r[0], r[1], r[2]};
}

std::vector<DiagonalTriple> constant_frame_solutions(Chirality c) {
  // Shifted unknowns u = a + 1 (left frame): uv = 2w, vw = 2u, wu = 2v.
  std::vector<DiagonalTriple> shifted;
  // uvw = 0: one vanishing factor forces the other two to vanish.
  shifted.emplace_back(0.0, 0.0, 0.0);
  // uvw = 8: u² = v² = w² = 4 with an even number of negative signs.
  for (int mask = 0; mask < 8; ++mask) {
    const Vec3 u((mask & 1) ? -2.0 : 2.0, (mask & 2) ? -2.0 : 2.0, (mask & 4) ? -2.0 : 2.0);
    if (u.prod() > 0.0) shifted.push_back(u);
  }
  std::vector<DiagonalTriple> out;
  const double sign = c == Chirality::left ? 1.0 : -1.0;
  for (const Vec3& u : shifted) out.push_back(sign * (u - Vec3::Ones()));
  sort_triples(out);
  return out;
}

std::vector<DiagonalTriple> constant_frame_grid_search(Chirality c, const GridSearchOptions& opt) {
  const double s = frame_shift(c);
  std::vector<DiagonalTriple> found;
  const int n = static_cast<int>(std::floor((opt.hi - opt.lo) / opt.step + 0.5)) + 1;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) {
        Vec3 d(opt.lo + i * opt.step, opt.lo + j * opt.step, opt.lo + k * opt.step);
        bool ok = false;
        for (int it = 0; it < opt.newton_iterations; ++it) {
          const Vec3 r = cyclic_residual(d, s);
          if (r.norm() < opt.tolerance) {
            ok = true;
            break;
          }
          const Mat3 jac = cyclic_jacobian(d, s);
          const Eigen::FullPivLU<Mat3> lu(jac);
          if (!lu.isInvertible()) break;
          d -= lu.solve(r);
          if (!d.allFinite() || d.norm() > 1e6) break;
        }
        if (!ok) continue;
        const Vec3 rounded = (d * 1e9).array().round() / 1e9;
        const bool seen = std::any_of(found.begin(), found.end(), [&](const Vec3& f) {
          return (f - rounded).norm() < 1e-6;
        });
        if (!seen) found.push_back(rounded);
      }
  sort_triples(found);
  return found;
}

std::vector<ClassifiedTriple> classify_constant_solutions() {
  std::vector<ClassifiedTriple> out;
  for (Chirality c : {Chirality::left, Chirality::right}) {
    for (const Vec3& t : constant_frame_solutions(c)) {
      auto it = std::find_if(out.begin(), out.end(),
                             [&](const ClassifiedTriple& e) { return (e.eigenvalues - t).norm() < 1e-12; });
      if (it != out.end()) {
        it->frames.push_back(c);
        continue;
      }
      ClassifiedTriple e;
      e.eigenvalues = t;
      e.frames.push_back(c);
      if (t.isApprox(Vec3::Ones())) {
        e.family = "plus-id";
      } else if (t.isApprox(-Vec3::Ones())) {
        e.family = "minus-id";
      } else {
        e.family = c == Chirality::left ? "left-133" : "right-133";
      }
      out.push_back(e);
    }
  }
  std::sort(out.begin(), out.end(), [](const ClassifiedTriple& x, const ClassifiedTriple& y) {
    return lex_less(x.eigenvalues, y.eigenvalues);
  });
  return out;
}

bool same_triple_set(const std::vector<DiagonalTriple>& a, const std::vector<DiagonalTriple>& b,
                     double tol) {
  if (a.size() != b.size()) return false;
  std::vector<bool> used(b.size(), false);
  for (const auto& x : a) {
    bool matched = false;
    for (std::size_t j = 0; j < b.size() && !matched; ++j) {
      if (!used[j] && (x - b[j]).norm() <= tol) used[j] = matched = true;
    }
    if (!matched) return false;
  }
  return true;
}

HopfReducedData hopf_reduce(const SymEnd3Field& a) {
  if (!a.is_constant()) {
    throw std::invalid_argument("Hopf reduction is implemented for constant fields");
  }
  Mat3 m = a.value(UnitQuaternion::identity());
  if (a.chirality() == Chirality::right) m = -m;
  const double tol = 1e-12 * std::max(1.0, m.cwiseAbs().maxCoeff());
  if (std::abs(m(0, 1)) > tol || std::abs(m(0, 2)) > tol || std::abs(m(1, 2)) > tol ||
      std::abs(m(1, 1) - m(2, 2)) > tol) {
    throw std::invalid_argument("field is not invariant under the flow of e1");
  }
  return {S2ScalarField::constant(m(0, 0)), S2VectorField::zero(),
          S2EndoField::multiple_of_identity(m(1, 1))};
}

std::array<Poly4, 3> hopf_map_poly() { return conjugation_poly(0); }

std::array<std::array<Poly4, 3>, 2> hopf_horizontal_poly() {
  const auto j = conjugation_poly(1);
  const auto k = conjugation_poly(2);
  return {std::array<Poly4, 3>{-k[0], -k[1], -k[2]}, j};
}

SymEnd3Field lift_to_s3(const HopfReducedData& h) {
  const auto y = hopf_map_poly();
  const auto e = hopf_horizontal_poly();
  std::array<Poly4, 3> v;
  for (int i = 0; i < 3; ++i) v[i] = h.v.ambient()[i].compose<4>(y);
  Poly4 mat[3][3];
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) mat[i][j] = h.b.ambient()[i][j].compose<4>(y);

  auto dot = [](const std::array<Poly4, 3>& x, const std::array<Poly4, 3>& z) {
    return x[0] * z[0] + x[1] * z[1] + x[2] * z[2];
  };
  std::array<Poly4, 6> packed;
  packed[SymEnd3Field::packed_index(0, 0)] = h.f.poly().compose<4>(y);
  for (int j = 0; j < 2; ++j) packed[SymEnd3Field::packed_index(0, j + 1)] = dot(v, e[j]);
  for (int i = 0; i < 2; ++i)
    for (int j = i; j < 2; ++j) {
      std::array<Poly4, 3> me;
      for (int r = 0; r < 3; ++r) me[r] = mat[r][0] * e[j][0] + mat[r][1] * e[j][1] + mat[r][2] * e[j][2];
      packed[SymEnd3Field::packed_index(i + 1, j + 1)] = dot(e[i], me);
    }
  return SymEnd3Field::from_polynomials(packed, Chirality::left);
}

double tangent_operator_norm(const Mat3& m, const Vec3& y) {
  const auto [x1, x2] = s2_frame(y);
  Eigen::Matrix2d t;
  t << x1.dot(m * x1), x1.dot(m * x2), x2.dot(m * x1), x2.dot(m * x2);
  return Eigen::JacobiSVD<Eigen::Matrix2d>(t).singularValues()[0];
}

namespace {

double tangent_det(const Mat3& m, const Vec3& y) {
  const auto [x1, x2] = s2_frame(y);
  return x1.dot(m * x1) * x2.dot(m * x2) - x1.dot(m * x2) * x2.dot(m * x1);
}

// δ(BJ) = −Σ_k (∇_{X_k}B) J X_k on the unit sphere (J is parallel).
Vec3 divergence_bj(const S2EndoField& b, const Vec3& y) {
  Vec3 out = Vec3::Zero();
  for (const Vec3& x : s2_frame(y)) out -= b.covariant(y, x) * apply_j(y, x);
  return out;
}

}  // namespace

ReducedResidual hopf_reduction_components(const HopfReducedData& h, const Vec3& y) {
  constexpr double k = kHopfHomothety;
  const Mat3 p = tangent_projector(y);
  const Mat3 j = j_matrix(y) * p;
  const double f = h.f.value(y);
  const Vec3 v = h.v.value(y);
  const Vec3 jv = j * v;
  const Mat3 b = h.b.value(y);
  const Mat3 nv = h.v.covariant_matrix(y);

  ReducedResidual r;
  r.eq1 = (b + p) * jv - k * h.f.gradient(y);
  r.eq2 = ((f - 1.0) * j * (b + p) - k * nv - jv * v.transpose()) * p;
  double div_jv = 0.0;
  for (const Vec3& x : s2_frame(y)) div_jv += x.dot(j * (nv * x));
  r.eq3 = 2.0 * (1.0 + f) - tangent_det(b + p, y) + k * div_jv;
  r.eq4 = k * divergence_bj(h.b, y) - j * (b + 3.0 * p) * jv;
  return r;
}

std::array<double, 4> hopf_reduction_residual(const HopfReducedData& h, const Vec3& y) {
  const ReducedResidual r = hopf_reduction_components(h, y);
  return {r.eq1.norm(), tangent_operator_norm(r.eq2, y), std::abs(r.eq3), r.eq4.norm()};
}

SpecialCaseResidual special_case_residual(const S2ScalarField& f, const S2EndoField& b,
                                          const Vec3& y) {
  const Mat3 p = tangent_projector(y);
  const Mat3 j = j_matrix(y) * p;
  const double fv = f.value(y);
  const Mat3 bp = b.value(y) + p;
  SpecialCaseResidual r;
  r.eq1 = tangent_operator_norm((fv - 1.0) * j * bp, y);
  r.eq2 = 2.0 * (1.0 + fv) - tangent_det(bp, y);
  r.eq3 = kHopfHomothety * divergence_bj(b, y);
  return r;
}

RigidityResidual s2_rigidity_residual(const S2EndoField& u, const Vec3& y) {
  return {u.det(y) - 1.0, u.divergence(y)};
}

std::pair<Vec3, Vec3> codazzi_divfree_equiv(const S2EndoField& s, const Vec3& y) {
  const auto [x, jx] = s2_frame(y);
  return {s.d_nabla(y, x, jx), apply_j(y, s.conjugate_by_j().divergence(y))};
}

std::vector<std::pair<Vec3, Vec3>> codazzi_divfree_equiv(const S2EndoField& s, std::span<const Vec3> ys) {
  const S2EndoField jsj = s.conjugate_by_j();
  std::vector<std::pair<Vec3, Vec3>> out;
  out.reserve(ys.size());
  for (const auto& y : ys) {
    const auto [x, jx] = s2_frame(y);
    out.emplace_back(s.d_nabla(y, x, jx), apply_j(y, jsj.divergence(y)));
  }
  return out;
}

}  // namespace cauchy
