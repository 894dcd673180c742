#include "evenfix/equivariants.hpp"

#include <cmath>
#include <map>
#include <random>
#include <sstream>

#include "evenfix/errors.hpp"
#include "evenfix/parallel.hpp"
#include "evenfix/tolerances.hpp"

namespace evenfix {

CharacterCount equivariant_character(const FiniteMatrixGroup& G, int d) {
  if (d < 0 || d > kMaxCharacterDegree)
    throw ParameterError("degree must lie in [0, " + std::to_string(kMaxCharacterDegree) + "]");
  std::vector<double> term(G.order());
  parallel_for(G.order(), [&](std::size_t gi) {
    const Eigen::MatrixXd& g = G.matrix(gi);
    std::vector<double> p(static_cast<std::size_t>(d) + 1, 0.0), h(static_cast<std::size_t>(d) + 1, 0.0);
    Eigen::MatrixXd power = g;
    for (int i = 1; i <= d; ++i, power = power * g) p[static_cast<std::size_t>(i)] = power.trace();
    h[0] = 1.0;
    for (int j = 1; j <= d; ++j) {
      double s = 0.0;
      for (int i = 1; i <= j; ++i) s += p[static_cast<std::size_t>(i)] * h[static_cast<std::size_t>(j - i)];
      h[static_cast<std::size_t>(j)] = s / j;
    }
    term[gi] = g.trace() * h[static_cast<std::size_t>(d)];
  });
  CharacterCount cc;
  for (double t : term) cc.raw += t;
  cc.raw /= static_cast<double>(G.order());
  cc.dimension = static_cast<int>(std::llround(cc.raw));
  if (std::abs(cc.raw - cc.dimension) > tol::character_rounding) {
    std::ostringstream os;
    os << "character average " << cc.raw << " is not an integer";
    throw ToleranceFault(os.str());
  }
  return cc;
}

int equivariant_dimension(const FiniteMatrixGroup& G, int d) { return equivariant_character(G, d).dimension; }

namespace {

// S with mon(g v) = S mon(v) over the degree-d monomials.
Eigen::MatrixXd substitution_matrix(const Eigen::MatrixXd& g, const std::vector<Exponent>& mons,
                                    const std::map<Exponent, std::size_t, GradedLex>& pos, int d) {
  const int n = static_cast<int>(g.rows());
  std::vector<std::vector<Polynomial>> powers(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    Polynomial lin(n);
    for (int k = 0; k < n; ++k) {
      Exponent e(static_cast<std::size_t>(n), 0);
      e[static_cast<std::size_t>(k)] = 1;
      lin.add_term(e, g(i, k));
    }
    auto& pw = powers[static_cast<std::size_t>(i)];
    pw.push_back(Polynomial::constant(n, 1.0));
    for (int e = 1; e <= d; ++e) pw.push_back(pw.back() * lin);
  }
  const auto m = static_cast<Eigen::Index>(mons.size());
  Eigen::MatrixXd S = Eigen::MatrixXd::Zero(m, m);
  for (Eigen::Index b = 0; b < m; ++b) {
    const Exponent& e = mons[static_cast<std::size_t>(b)];
    Polynomial prod = Polynomial::constant(n, 1.0);
    for (int i = 0; i < n; ++i)
      if (e[static_cast<std::size_t>(i)] > 0) prod = prod * powers[static_cast<std::size_t>(i)][static_cast<std::size_t>(e[static_cast<std::size_t>(i)])];
    for (const auto& [ex, c] : prod.terms()) S(b, static_cast<Eigen::Index>(pos.at(ex))) = c;
  }
  return S;
}

}  // namespace

EquivariantBasis reynolds_equivariant_basis(const FiniteMatrixGroup& G, int d) {
  const int n = G.dim();
  if (d < 0) throw ParameterError("degree must be nonnegative");
  long budget = 1;
  for (int i = 0; i <= d; ++i) budget *= n;
  if (budget > kReynoldsBudget)
    throw ParameterError("n^(d+1) = " + std::to_string(budget) + " exceeds the averaging budget");

  const auto mons = monomials(n, d);
  std::map<Exponent, std::size_t, GradedLex> pos;
  for (std::size_t b = 0; b < mons.size(); ++b) pos.emplace(mons[b], b);
  const auto m = static_cast<Eigen::Index>(mons.size());
  const Eigen::Index N = m * n;

  std::vector<Eigen::MatrixXd> S(G.order());
  parallel_for(G.order(), [&](std::size_t gi) { S[gi] = substitution_matrix(G.matrix(gi), mons, pos, d); });

  // P(a' + n b', a + n b) = avg_g S_g(b, b') g(a, a'); one worker per column block b.
  Eigen::MatrixXd P = Eigen::MatrixXd::Zero(N, N);
  parallel_for(static_cast<std::size_t>(m), [&](std::size_t bu) {
    const auto b = static_cast<Eigen::Index>(bu);
    for (std::size_t gi = 0; gi < G.order(); ++gi) {
      const Eigen::MatrixXd& g = G.matrix(gi);
      for (Eigen::Index bp = 0; bp < m; ++bp) {
        const double s = S[gi](b, bp);
        if (s == 0.0) continue;
        for (int a = 0; a < n; ++a)
          for (int ap = 0; ap < n; ++ap) P(ap + n * bp, a + n * b) += s * g(a, ap);
      }
    }
  });
  P /= static_cast<double>(G.order());

  // Greedy Gram-Schmidt over the columns of P.
  EquivariantBasis out;
  out.degree = d;
  std::vector<Eigen::VectorXd> q;
  for (Eigen::Index c = 0; c < N; ++c) {
    Eigen::VectorXd v = P.col(c);
    for (int pass = 0; pass < 2; ++pass)
      for (const auto& u : q) v -= u.dot(v) * u;
    const double r = v.norm();
    if (r >= tol::rank) {
      q.push_back(v / r);
      ++out.decision.rank;
      out.decision.smallest_kept = std::min(out.decision.smallest_kept, r);
    } else {
      out.decision.largest_dropped = std::max(out.decision.largest_dropped, r);
    }
  }
  if (out.decision.gap() < tol::rank_gap) throw ToleranceFault("averaging projector has no clean rank gap");

  // Row echelon form of the image.
  const auto r = static_cast<Eigen::Index>(q.size());
  Eigen::MatrixXd R(r, N);
  for (Eigen::Index i = 0; i < r; ++i) R.row(i) = q[static_cast<std::size_t>(i)].transpose();
  Eigen::Index row = 0;
  for (Eigen::Index c = 0; c < N && row < r; ++c) {
    Eigen::Index piv;
    const double best = R.col(c).segment(row, r - row).cwiseAbs().maxCoeff(&piv);
    if (best < 1e-9) continue;
    piv += row;
    R.row(row).swap(R.row(piv));
    R.row(row) /= R(row, c);
    for (Eigen::Index i = 0; i < r; ++i)
      if (i != row) R.row(i) -= R(i, c) * R.row(row);
    ++row;
  }
  if (row != r) throw InternalFault("echelon reduction lost rank");
  R = R.unaryExpr([](double x) { return std::abs(x) < 1e-12 ? 0.0 : x; });
  for (Eigen::Index i = 0; i < r; ++i) out.maps.push_back(from_coefficient_vector(n, d, R.row(i).transpose()));
  return out;
}

PolyMap reynolds_average(const FiniteMatrixGroup& G, const PolyMap& p) {
  std::vector<PolyMap> parts(G.order());
  parallel_for(G.order(), [&](std::size_t gi) { parts[gi] = act(G.matrix(gi), p); });
  PolyMap sum = PolyMap::zero(p.n, p.degree);
  for (const auto& x : parts) sum += x;
  sum *= 1.0 / static_cast<double>(G.order());
  for (auto& c : sum.components) c = c.pruned();
  return sum;
}

double equivariance_defect(const FiniteMatrixGroup& G, const PolyMap& p, int points, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> normal;
  double worst = 0.0;
  for (int s = 0; s < points; ++s) {
    Eigen::VectorXd v(p.n);
    for (int i = 0; i < p.n; ++i) v[i] = normal(rng);
    const Eigen::VectorXd pv = p.evaluate(v);
    for (std::size_t gi : G.generators()) {
      const Eigen::MatrixXd& g = G.matrix(gi);
      worst = std::max(worst, (g * pv - p.evaluate(g * v)).cwiseAbs().maxCoeff());
    }
  }
  return worst;
}

namespace {

struct G3Vars {
  Polynomial v1, v2, v3, v4, rho1, rho2, sigma1, sigma2, tau1, tau2;
};

G3Vars g3_vars() {
  G3Vars x;
  x.v1 = Polynomial::variable(4, 0);
  x.v2 = Polynomial::variable(4, 1);
  x.v3 = Polynomial::variable(4, 2);
  x.v4 = Polynomial::variable(4, 3);
  x.rho1 = x.v1 * x.v1 + x.v2 * x.v2;
  x.rho2 = x.v3 * x.v3 + x.v4 * x.v4;
  x.sigma1 = x.v1 * x.v1 - x.v2 * x.v2;
  x.sigma2 = x.v3 * x.v3 - x.v4 * x.v4;
  x.tau1 = x.v1 * x.v2;
  x.tau2 = x.v3 * x.v4;
  return x;
}

}  // namespace

std::pair<PolyMap, PolyMap> g3_cubic_basis() {
  const G3Vars x = g3_vars();
  PolyMap e1(4, 3, {x.rho2 * x.v1, x.rho2 * x.v2, x.rho1 * x.v3, x.rho1 * x.v4});
  PolyMap e2(4, 3,
             {x.sigma2 * x.v1 + 2.0 * (x.v2 * x.tau2), x.v1 * x.tau2 * 2.0 - x.sigma2 * x.v2,
              x.sigma1 * x.v3 + 2.0 * (x.tau1 * x.v4), x.tau1 * x.v3 * 2.0 - x.sigma1 * x.v4});
  return {e1, e2};
}

std::pair<Polynomial, Polynomial> g3_quartic_invariants() {
  const G3Vars x = g3_vars();
  return {0.5 * (x.rho1 * x.rho2), 0.5 * (x.sigma1 * x.sigma2 + 4.0 * (x.tau1 * x.tau2))};
}

PolyMap radial_cubic(int n) { return times_identity(squared_norm(n)); }

GradientCheck check_gradient(const Polynomial& invariant, const PolyMap& candidate, std::uint64_t seed) {
  GradientCheck out;
  if (invariant.homogeneous_degree() != candidate.degree + 1 || invariant.nvars() != candidate.n)
    throw ParameterError("invariant degree must exceed the candidate degree by one");
  const Eigen::VectorXd g = coefficient_vector(gradient(invariant));
  const Eigen::VectorXd c = coefficient_vector(candidate);
  const double cc = c.squaredNorm();
  if (cc == 0.0 || g.norm() == 0.0) return out;
  out.scale = g.dot(c) / cc;
  out.symbolic_residual = (g - out.scale * c).norm() / g.norm();
  out.symbolic = out.scale != 0.0 && out.symbolic_residual < 1e-10;

  std::mt19937_64 rng(seed);
  std::normal_distribution<double> normal;
  const double h = 1e-5;
  for (int s = 0; s < 20; ++s) {
    Eigen::VectorXd v(candidate.n);
    for (int i = 0; i < v.size(); ++i) v[i] = normal(rng);
    const Eigen::VectorXd expect = out.scale * candidate.evaluate(v);
    for (int i = 0; i < v.size(); ++i) {
      Eigen::VectorXd up = v, down = v;
      up[i] += h;
      down[i] -= h;
      const double fd = (invariant.evaluate(up) - invariant.evaluate(down)) / (2 * h);
      out.numeric_error = std::max(out.numeric_error, std::abs(fd - expect[i]) / std::max(1.0, std::abs(expect[i])));
    }
  }
  out.numeric = out.scale != 0.0 && out.numeric_error < 1e-6;
  return out;
}

bool gradient_check(const Polynomial& invariant, const PolyMap& candidate) {
  return check_gradient(invariant, candidate).holds();
}

RestrictionRank restriction_rank(const FiniteMatrixGroup& G, const IndexSet& K, int d) {
  const Subspace fix = fixed_subspace(G, K);
  if (fix.dim() == 0) throw ParameterError("restriction_rank: Fix(K) is zero");
  RestrictionRank out;
  const EquivariantBasis basis = reynolds_equivariant_basis(G, d);
  out.domain_dim = static_cast<int>(basis.maps.size());
  const int m = fix.dim();
  const auto mons = monomials(m, d);
  Eigen::MatrixXd coeffs(static_cast<Eigen::Index>(mons.size()) * m, out.domain_dim);
  for (int i = 0; i < out.domain_dim; ++i)
    coeffs.col(i) = coefficient_vector(restrict_to(basis.maps[static_cast<std::size_t>(i)], fix.basis()));
  out.image_rank = span_rank(coeffs);
  const WeylAction wa = weyl_action(G, K);
  out.target_dim = equivariant_dimension(wa.group, d);
  return out;
}

}  // namespace evenfix
