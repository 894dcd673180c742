#include "evenfix/bifurcation.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "evenfix/equivariants.hpp"
#include "evenfix/errors.hpp"
#include "evenfix/parallel.hpp"
#include "evenfix/repanalysis.hpp"
#include "evenfix/tolerances.hpp"

namespace evenfix {

PolyMap tangent_field(const PolyMap& e) {
  const Polynomial r2 = squared_norm(e.n);
  const Polynomial radial = dot(e, PolyMap::identity(e.n)).pruned();
  PolyMap t = multiply(r2, e);
  if (!radial.is_zero()) {
    PolyMap back = times_identity(radial);
    back *= -1.0;
    t += back;
  }
  for (auto& c : t.components) c = c.pruned();
  return t;
}

PhaseFieldFamily::PhaseFieldFamily(double a_, PolyMap e1_, PolyMap e2_, bool b_zero_)
    : a(a_), b_zero(b_zero_), e1(std::move(e1_)), e2(std::move(e2_)) {
  if (e1.n != e2.n) throw ParameterError("phase field cubics live in different dimensions");
  t1 = tangent_field(e1);
  t2 = tangent_field(e2);
}

PhaseFieldFamily PhaseFieldFamily::g3(double a, bool b_zero) {
  auto [e1, e2] = g3_cubic_basis();
  return PhaseFieldFamily(a, std::move(e1), std::move(e2), b_zero);
}

Eigen::VectorXd PhaseFieldFamily::tangent(int which, const Eigen::VectorXd& v) const {
  const Eigen::VectorXd e = (which == 0 ? e1 : e2).evaluate(v);
  return v.squaredNorm() * e - e.dot(v) * v;
}

Eigen::VectorXd PhaseFieldFamily::evaluate(const Eigen::VectorXd& v) const {
  Eigen::VectorXd f = a * tangent(0, v);
  if (!b_zero) f += tangent(1, v);
  return f;
}

CircleScalar::CircleScalar(Subspace plane, PhaseFieldFamily field) : plane_(std::move(plane)), field_(std::move(field)) {
  if (plane_.dim() != 2) throw ParameterError("circle scalar needs a 2-dimensional fixed space");
  if (plane_.ambient() != field_.dim()) throw ParameterError("plane and field live in different dimensions");
}

Eigen::VectorXd CircleScalar::point(double phi) const {
  return std::cos(phi) * plane_.basis().col(0) + std::sin(phi) * plane_.basis().col(1);
}

double CircleScalar::operator()(double phi) const {
  const Eigen::VectorXd n = -std::sin(phi) * plane_.basis().col(0) + std::cos(phi) * plane_.basis().col(1);
  return field_.evaluate(point(phi)).dot(n);
}

CircleScalar circle_scalar(const Subspace& fix, const PhaseFieldFamily& field) {
  CircleScalar f(fix, field);
  for (int s = 0; s < 64; ++s) {
    const double phi = 2.0 * std::numbers::pi * (s + 0.37) / 64.0;
    const Eigen::VectorXd v = f.point(phi);
    const Eigen::VectorXd F = field.evaluate(v);
    const Eigen::VectorXd n = -std::sin(phi) * fix.basis().col(0) + std::cos(phi) * fix.basis().col(1);
    const double off = (F - F.dot(n) * n).norm();
    if (off > tol::orth * std::max(1.0, F.norm()))
      throw StructuralFault("field is not tangent to the circle in its fixed space (off-line part " +
                            std::to_string(off) + ")");
  }
  return f;
}

bool BranchReport::all_regular() const {
  return std::all_of(zeros.begin(), zeros.end(), [](const BranchZero& z) { return z.regular; });
}

namespace {

double wrap(double phi) {
  const double two_pi = 2.0 * std::numbers::pi;
  phi = std::fmod(phi, two_pi);
  return phi < 0 ? phi + two_pi : phi;
}

BranchZero make_zero(const CircleScalar& f, double phi, bool sign_change) {
  BranchZero z;
  z.angle = wrap(phi);
  z.point = f.point(z.angle);
  z.residual = std::abs(f(z.angle));
  z.derivative = (f(z.angle + kDerivativeStep) - f(z.angle - kDerivativeStep)) / (2 * kDerivativeStep);
  z.regular = sign_change && std::abs(z.derivative) > tol::regular;
  return z;
}

}  // namespace

std::optional<double> degenerate_parameter(const Subspace& fix, const PhaseFieldFamily& field) {
  PhaseFieldFamily only1 = field, only2 = field;
  only1.a = 1.0;
  only1.b_zero = true;
  only2.a = 0.0;
  only2.b_zero = false;
  const CircleScalar f1(fix, only1), f2(fix, only2);
  std::vector<double> x(kCircleGrid), y(kCircleGrid);
  double xx = 0.0, xy = 0.0;
  for (int i = 0; i < kCircleGrid; ++i) {
    const double phi = 2.0 * std::numbers::pi * i / kCircleGrid;
    x[static_cast<std::size_t>(i)] = f1(phi);
    y[static_cast<std::size_t>(i)] = f2(phi);
    xx += x[static_cast<std::size_t>(i)] * x[static_cast<std::size_t>(i)];
    xy += x[static_cast<std::size_t>(i)] * y[static_cast<std::size_t>(i)];
  }
  if (xx == 0.0) return std::nullopt;
  const double a = -xy / xx;
  for (int i = 0; i < kCircleGrid; ++i)
    if (std::abs(a * x[static_cast<std::size_t>(i)] + y[static_cast<std::size_t>(i)]) > tol::degenerate) return std::nullopt;
  return a;
}

BranchReport find_branches(const Subspace& fix, const PhaseFieldFamily& field, std::string label) {
  const CircleScalar f = circle_scalar(fix, field);
  BranchReport rep;
  rep.label = std::move(label);
  rep.a = field.a;
  rep.degenerate_parameter = degenerate_parameter(fix, field);

  const double step = 2.0 * std::numbers::pi / kCircleGrid;
  std::vector<double> grid(kCircleGrid);
  parallel_for(kCircleGrid, [&](std::size_t i) { grid[i] = f(step * static_cast<double>(i)); });
  double peak = 0.0;
  for (double g : grid) peak = std::max(peak, std::abs(g));
  if (peak < tol::degenerate) {
    rep.degenerate = true;
    return rep;
  }

  auto at = [&](int i) { return grid[static_cast<std::size_t>((i % kCircleGrid + kCircleGrid) % kCircleGrid)]; };
  for (int i = 0; i < kCircleGrid; ++i) {
    const double lo = at(i), hi = at(i + 1);
    if (lo == 0.0) {
      const bool crosses = at(i - 1) * at(i + 1) < 0.0;
      rep.zeros.push_back(make_zero(f, step * i, crosses));
      continue;
    }
    if (lo * hi < 0.0) {
      double a = step * i, b = step * (i + 1), fa = lo;
      while (b - a > kBisectionWidth) {
        const double mid = 0.5 * (a + b), fm = f(mid);
        if (fm == 0.0) {
          a = b = mid;
          break;
        }
        if ((fa < 0.0) == (fm < 0.0)) {
          a = mid;
          fa = fm;
        } else {
          b = mid;
        }
      }
      const BranchZero z = make_zero(f, 0.5 * (a + b), true);
      if (z.residual > tol::zero_residual) throw InternalFault("refinement lost the sign change near angle " + std::to_string(z.angle));
      rep.zeros.push_back(z);
      continue;
    }
    // Touching zeros: a local minimum of |f| without a sign change.
    const double prev = at(i - 1);
    if (std::abs(lo) <= std::abs(prev) && std::abs(lo) <= std::abs(hi) && prev * lo > 0.0 && std::abs(lo) < 1e-6) {
      double a = step * (i - 1), b = step * (i + 1);
      for (int it = 0; it < 200 && b - a > kBisectionWidth; ++it) {
        const double m1 = a + (b - a) / 3.0, m2 = b - (b - a) / 3.0;
        if (std::abs(f(m1)) < std::abs(f(m2))) b = m2; else a = m1;
      }
      const BranchZero z = make_zero(f, 0.5 * (a + b), false);
      if (z.residual < tol::zero_residual) rep.zeros.push_back(z);
    }
  }
  std::sort(rep.zeros.begin(), rep.zeros.end(), [](const BranchZero& x, const BranchZero& y) { return x.angle < y.angle; });
  return rep;
}

std::vector<LabelledPlane> g3_fixed_planes(const FiniteMatrixGroup& G3) {
  const Quaternion i = Quaternion::i(), j = Quaternion::j(), k = Quaternion::k();
  std::vector<LabelledPlane> out;
  const std::pair<const char*, QuaternionPair> defs[3] = {{"H1", {j, i}}, {"H2", {j, j}}, {"H3", {j, k}}};
  for (const auto& [name, pair] : defs) {
    LabelledPlane p;
    p.label = name;
    p.element = G3.index_of(Eigen::MatrixXd(quaternion_pair_to_matrix(pair)));
    p.fix = fixed_subspace(G3, {p.element});
    if (p.fix.dim() != 2) throw InternalFault("expected a 2-dimensional fixed plane for " + p.label);
    out.push_back(std::move(p));
  }
  return out;
}

std::vector<BranchReport> g3_branches(int m, double a, bool b_zero) {
  const FiniteMatrixGroup G = close_group(build_g3_generators(m));
  const PhaseFieldFamily field = PhaseFieldFamily::g3(a, b_zero);
  std::vector<BranchReport> out;
  for (const auto& p : g3_fixed_planes(G)) out.push_back(find_branches(p.fix, field, p.label));
  return out;
}

namespace {

PolyMap lift_cubic(const std::vector<PolyMap>& basis, const std::vector<Eigen::VectorXd>& restricted,
                   const PolyMap& target) {
  Eigen::MatrixXd M(restricted.front().size(), static_cast<Eigen::Index>(restricted.size()));
  for (std::size_t i = 0; i < restricted.size(); ++i) M.col(static_cast<Eigen::Index>(i)) = restricted[i];
  const Eigen::VectorXd y = coefficient_vector(target);
  const Eigen::VectorXd x = M.completeOrthogonalDecomposition().solve(y);
  if ((M * x - y).norm() > 1e-9 * std::max(1.0, y.norm()))
    throw StructuralFault("cubic equivariant is not a restriction of an ambient equivariant");
  PolyMap lifted = PolyMap::zero(basis.front().n, basis.front().degree);
  for (std::size_t i = 0; i < basis.size(); ++i) {
    if (std::abs(x[static_cast<Eigen::Index>(i)]) < 1e-14) continue;
    PolyMap term = basis[i];
    term *= x[static_cast<Eigen::Index>(i)];
    lifted += term;
  }
  for (auto& c : lifted.components) c = c.pruned(1e-13);
  return lifted;
}

}  // namespace

std::vector<BranchReport> lift_branches_g8(int l, double a) {
  const FiniteMatrixGroup G = close_group(build_g8_generators(l));
  const Eigen::MatrixXd R2 = G.g8()->R2;
  const IndexSet H = subgroup_generated(G, {G.index_of(R2 * R2)});
  const WeylAction wa = weyl_action(G, H);
  const Eigen::MatrixXd& B = wa.fix.basis();

  const EquivariantBasis basis = reynolds_equivariant_basis(G, 3);
  std::vector<Eigen::VectorXd> restricted;
  for (const auto& p : basis.maps) restricted.push_back(coefficient_vector(restrict_to(p, B)));
  const auto [e1, e2] = g3_cubic_basis();
  const PhaseFieldFamily field(a, lift_cubic(basis.maps, restricted, e1), lift_cubic(basis.maps, restricted, e2));

  // Reference planes in Fix(H) coordinates, matched against the Weyl types.
  const FiniteMatrixGroup ref = close_group(build_g3_generators(G.tau()));
  const auto planes = g3_fixed_planes(ref);
  const auto types = isotropy_types(wa.group);
  const auto& W = wa.group;

  std::vector<BranchReport> out;
  for (const auto& p : planes) {
    bool matched = false;
    for (const auto& t : types) {
      if (t.fixed_dim != 2) continue;
      const Subspace tf = fixed_subspace(W, t.representative);
      for (std::size_t w = 0; w < W.order() && !matched; ++w)
        matched = Subspace(tf.ambient(), W.matrix(w) * tf.basis()).same_as(p.fix);
      if (matched) break;
    }
    if (!matched) throw StructuralFault("plane " + p.label + " is not a Weyl isotropy fixed space");

    const Subspace plane(8, B * p.fix.basis());
    BranchReport rep = find_branches(plane, field, p.label);
    rep.lifted = true;
    for (auto& z : rep.zeros) z.isotropy_fixed_dim = fixed_subspace(G, stabilizer(G, z.point)).dim();
    out.push_back(std::move(rep));
  }
  return out;
}

std::vector<SweepRow> sweep_g3(int m, double a0, double a1, int steps) {
  if (steps < 1) throw ParameterError("sweep needs at least one step");
  const FiniteMatrixGroup G = close_group(build_g3_generators(m));
  const auto planes = g3_fixed_planes(G);
  std::vector<SweepRow> rows;
  for (int s = 0; s < steps; ++s) {
    const double a = steps == 1 ? a0 : a0 + (a1 - a0) * s / (steps - 1);
    const PhaseFieldFamily field = PhaseFieldFamily::g3(a);
    for (const auto& p : planes) {
      const BranchReport r = find_branches(p.fix, field, p.label);
      rows.push_back({a, p.label, r.zeros.size(), r.degenerate, r.all_regular()});
    }
  }
  return rows;
}

}  // namespace evenfix
