#include "cauchy/fields.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include <Eigen/Eigenvalues>

namespace cauchy {

Vec3 frame_vector(int k) {
  Vec3 v = Vec3::Zero();
  v[k] = 1.0;
  return v;
}

std::array<std::pair<Vec3, Vec3>, 3> frame_pairs() {
  return {{{frame_vector(0), frame_vector(1)},
           {frame_vector(0), frame_vector(2)},
           {frame_vector(1), frame_vector(2)}}};
}

SymEnd3Field::SymEnd3Field(std::array<ScalarField, 6> coeffs, Chirality c)
    : coeffs_(std::move(coeffs)), chirality_(c) {}

int SymEnd3Field::packed_index(int i, int j) {
  if (i > j) std::swap(i, j);
  static constexpr int table[3][3] = {{0, 1, 2}, {1, 3, 4}, {2, 4, 5}};
  return table[i][j];
}

SymEnd3Field SymEnd3Field::constant(const Mat3& m, Chirality c) {
  const Mat3 s = 0.5 * (m + m.transpose());
  std::array<ScalarField, 6> coeffs;
  for (int i = 0; i < 3; ++i)
    for (int j = i; j < 3; ++j) coeffs[packed_index(i, j)] = ScalarField::constant(s(i, j));
  return SymEnd3Field(std::move(coeffs), c);
}

SymEnd3Field SymEnd3Field::from_polynomials(const std::array<Poly4, 6>& p, Chirality c) {
  std::array<ScalarField, 6> coeffs;
  for (std::size_t i = 0; i < 6; ++i) coeffs[i] = ScalarField::polynomial(p[i]);
  return SymEnd3Field(std::move(coeffs), c);
}

bool SymEnd3Field::is_constant() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(),
                     [](const ScalarField& f) { return f.is_constant(); });
}

Mat3 SymEnd3Field::value(const UnitQuaternion& q) const {
  Mat3 m;
  for (int i = 0; i < 3; ++i)
    for (int j = i; j < 3; ++j) m(i, j) = m(j, i) = coeffs_[packed_index(i, j)](q);
  return m;
}

Mat3 SymEnd3Field::derivative(const UnitQuaternion& q, int k) const {
  Mat3 m;
  for (int i = 0; i < 3; ++i)
    for (int j = i; j < 3; ++j) {
      m(i, j) = m(j, i) = coeffs_[packed_index(i, j)].derivative(q, k, chirality_);
    }
  return m;
}

EndoJet SymEnd3Field::jet(const UnitQuaternion& q) const {
  EndoJet jet;
  jet.value = value(q);
  if (!is_constant()) {
    for (int k = 0; k < 3; ++k) jet.d[k] = derivative(q, k);
  }
  return jet;
}

SymEnd3Field SymEnd3Field::plus_scaled(double s, const SymEnd3Field& other) const {
  if (other.chirality_ != chirality_) {
    throw std::invalid_argument("cannot combine fields given in frames of different chirality");
  }
  std::array<ScalarField, 6> coeffs;
  for (std::size_t i = 0; i < 6; ++i) coeffs[i] = coeffs_[i] + s * other.coeffs_[i];
  return SymEnd3Field(std::move(coeffs), chirality_);
}

SymEnd3Field SymEnd3Field::with_finite_difference(double h) const {
  std::array<ScalarField, 6> coeffs;
  for (std::size_t i = 0; i < 6; ++i) coeffs[i] = coeffs_[i].with_finite_difference(h);
  return SymEnd3Field(std::move(coeffs), chirality_);
}

VectorField3::VectorField3(std::array<ScalarField, 3> coeffs, Chirality c)
    : coeffs_(std::move(coeffs)), chirality_(c) {}

VectorField3 VectorField3::constant(const Vec3& v, Chirality c) {
  return VectorField3({ScalarField::constant(v[0]), ScalarField::constant(v[1]),
                       ScalarField::constant(v[2])},
                      c);
}

Vec3 VectorField3::value(const UnitQuaternion& q) const {
  return {coeffs_[0](q), coeffs_[1](q), coeffs_[2](q)};
}

Vec3 VectorField3::derivative(const UnitQuaternion& q, int k) const {
  return {coeffs_[0].derivative(q, k, chirality_), coeffs_[1].derivative(q, k, chirality_),
          coeffs_[2].derivative(q, k, chirality_)};
}

Mat3 VectorField3::jacobian(const UnitQuaternion& q) const {
  Mat3 m;
  for (int k = 0; k < 3; ++k) m.col(k) = derivative(q, k);
  return m;
}

Vec3 modified_connection(const SymEnd3Field& a, const UnitQuaternion& q, const Vec3& x,
                         const Vec3& y) {
  return round_connection(a.chirality()).covariant(x, y) + (a.value(q) * x).cross(y);
}

Vec3 d_nabla_A(const SymEnd3Field& a, const UnitQuaternion& q, const Vec3& x, const Vec3& y,
               const FrameConnection& conn) {
  return d_nabla_A(a.jet(q), x, y, conn);
}

Vec3 d_nabla_A(const SymEnd3Field& a, const UnitQuaternion& q, const Vec3& x, const Vec3& y) {
  return d_nabla_A(a, q, x, y, round_connection(a.chirality()));
}

Vec3 divergence_A(const SymEnd3Field& a, const UnitQuaternion& q) {
  return divergence_A(a.jet(q), round_connection(a.chirality()));
}

namespace {

TwoForm flatness_from_jet(const EndoJet& jet, const FrameConnection& conn, const Vec3& x,
                          const Vec3& y) {
  const Vec3 ax = jet.value * x;
  const Vec3 ay = jet.value * y;
  return curvature_round(x, y) + hodge_star(d_nabla_A(jet, x, y, conn)) + wedge_endo(ax, ay);
}

}  // namespace

TwoForm flatness_residual(const SymEnd3Field& a, const UnitQuaternion& q, const Vec3& x,
                          const Vec3& y) {
  return flatness_from_jet(a.jet(q), round_connection(a.chirality()), x, y);
}

GaussCodazziResidual gauss_codazzi_residual(const SymEnd3Field& a, const UnitQuaternion& q) {
  const EndoJet jet = a.jet(q);
  const double tr = jet.value.trace();
  GaussCodazziResidual r;
  r.scalar = 6.0 - tr * tr + (jet.value * jet.value).trace();
  Vec3 dtr;
  for (int k = 0; k < 3; ++k) dtr[k] = jet.d[k].trace();
  r.vector = divergence_A(jet, round_connection(a.chirality())) + dtr;
  return r;
}

const char* to_string(KnownKind k) {
  switch (k) {
    case KnownKind::plus_id: return "plus-id";
    case KnownKind::minus_id: return "minus-id";
    case KnownKind::left_133: return "left-133";
    case KnownKind::right_133: return "right-133";
  }
  return "?";
}

std::optional<KnownKind> parse_known_kind(std::string_view name) {
  for (KnownKind k : {KnownKind::plus_id, KnownKind::minus_id, KnownKind::left_133,
                      KnownKind::right_133}) {
    if (name == to_string(k)) return k;
  }
  return std::nullopt;
}

Mat3 known_matrix(KnownKind k) {
  switch (k) {
    case KnownKind::plus_id: return Mat3::Identity();
    case KnownKind::minus_id: return -Mat3::Identity();
    case KnownKind::left_133: return Vec3(1.0, -3.0, -3.0).asDiagonal();
    case KnownKind::right_133: return Vec3(-1.0, 3.0, 3.0).asDiagonal();
  }
  return Mat3::Zero();
}

Chirality known_chirality(KnownKind k) {
  return k == KnownKind::right_133 ? Chirality::right : Chirality::left;
}

SymEnd3Field known_example(KnownKind k, const Mat3& rotation) {
  if (!rotation.allFinite() ||
      (rotation.transpose() * rotation - Mat3::Identity()).cwiseAbs().maxCoeff() > 1e-10) {
    throw std::invalid_argument("frame rotation must be orthogonal");
  }
  return SymEnd3Field::constant(rotation * known_matrix(k) * rotation.transpose(),
                                known_chirality(k));
}

Vec3 linearized_residual(const SymEnd3Field& a, const SymEnd3Field& adot,
                         const UnitQuaternion& q, const Vec3& x, const Vec3& y) {
  const Mat3 av = a.value(q);
  const EndoJet jet = adot.jet(q);
  return d_nabla_A(jet, x, y, round_connection(adot.chirality())) +
         (av * x).cross(jet.value * y) - (av * y).cross(jet.value * x);
}

TwoForm exterior_derivative(const VectorField3& x, const UnitQuaternion& q) {
  const Mat3 jac = x.jacobian(q);  // jac(i, k) = e_k(x^i)
  const Vec3 v = x.value(q);
  const StructureConstants c = round_connection(x.chirality()).brackets;
  Vec3 out;
  for (int k = 0; k < 3; ++k) {
    const int a = (k + 1) % 3, b = (k + 2) % 3;
    out[k] = jac(b, a) - jac(a, b) - v.dot(c[a][b]);
  }
  return TwoForm(out);
}

TwoForm symmetry_residual(const SymEnd3Field& a, const VectorField3& x, const UnitQuaternion& q,
                          const MatrixField& b) {
  const Mat3 av = a.value(q);
  const Vec3 xv = x.value(q);
  Vec3 out = exterior_derivative(x, q).vec() - (xv * av.trace() - av * xv);
  if (b) {
    const Mat3 bv = b(q);
    for (int k = 0; k < 3; ++k) out += frame_vector(k).cross(bv.col(k));
  }
  return TwoForm(out);
}

XiValue xi_operator(const SymEnd3Field& a, const VectorField3& x, const UnitQuaternion& q) {
  const EndoJet jet = a.jet(q);
  const Vec3 xv = x.value(q);
  const Mat3 jac = x.jacobian(q);
  const double tr = jet.value.trace();
  const Vec3 w = xv * tr - jet.value * xv;
  const FrameConnection conn = round_connection(x.chirality());

  XiValue out;
  out.form = TwoForm(exterior_derivative(x, q).vec() - w);
  double div = 0.0;
  for (int k = 0; k < 3; ++k) {
    const Vec3 dw = jet.d[k].trace() * xv + tr * jac.col(k) - jet.d[k] * xv -
                    jet.value * jac.col(k);
    div -= dw[k] + (conn.omega[k] * w)[k];
  }
  out.divergence = div;
  return out;
}

Definiteness definiteness_check(const Sym3& b) {
  const Eigen::SelfAdjointEigenSolver<Mat3> es(0.5 * (b + b.transpose()),
                                               Eigen::EigenvaluesOnly);
  const Vec3 l = es.eigenvalues();
  Definiteness d;
  d.pair_sum = l[0] * l[1] + l[0] * l[2] + l[1] * l[2];
  d.definite = d.pair_sum > 0.0;
  if (d.definite) {
    // Eigenvalues of B − tr(B) Id are λ_i − tr B; all share a sign here.
    d.sign = (l[0] - l.sum()) > 0.0 ? 1 : -1;
  }
  return d;
}

Mat3 nabla_A_of_vector(const SymEnd3Field& a, const VectorField3& x, const UnitQuaternion& q) {
  const Mat3 av = a.value(q);
  const Vec3 xv = x.value(q);
  const Mat3 jac = x.jacobian(q);
  const FrameConnection conn = round_connection(x.chirality());
  Mat3 m;
  for (int j = 0; j < 3; ++j) {
    m.col(j) = jac.col(j) + conn.omega[j] * xv + av.col(j).cross(xv);
  }
  return m;
}

Mat3 lie_derivative_endo(const SymEnd3Field& a, const VectorField3& z, const UnitQuaternion& q) {
  if (a.chirality() != z.chirality()) {
    throw std::invalid_argument("field and direction must use the same frame");
  }
  const FrameConnection conn = round_connection(a.chirality());
  const EndoJet jet = a.jet(q);
  const Vec3 zv = z.value(q);
  const Mat3 jac = z.jacobian(q);
  Mat3 nz;
  for (int i = 0; i < 3; ++i) nz.col(i) = jac.col(i) + conn.omega[i] * zv;
  return covariant_derivative(jet, conn, zv) - nz * jet.value + jet.value * nz;
}

ResidualStats flatness_stats(const SymEnd3Field& a, std::span<const UnitQuaternion> points) {
  const FrameConnection conn = round_connection(a.chirality());
  ResidualStats stats;
  for (const UnitQuaternion& q : points) {
    const EndoJet jet = a.jet(q);
    for (const auto& [x, y] : frame_pairs()) stats.add(flatness_from_jet(jet, conn, x, y).norm());
  }
  return stats;
}

}  // namespace cauchy
