#include "evenfix/repanalysis.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>
#include <numeric>
#include <random>
#include <set>

#include "evenfix/errors.hpp"
#include "evenfix/parallel.hpp"
#include "evenfix/quaternion.hpp"
#include "evenfix/tolerances.hpp"

namespace evenfix {

Subspace fixed_subspace(const FiniteMatrixGroup& G, const IndexSet& S) {
  const int n = G.dim();
  const Eigen::MatrixXd I = Eigen::MatrixXd::Identity(n, n);
  Eigen::MatrixXd stacked(static_cast<Eigen::Index>(S.size()) * n, n);
  for (std::size_t s = 0; s < S.size(); ++s)
    stacked.middleRows(static_cast<Eigen::Index>(s) * n, n) = G.matrix(S[s]) - I;
  return Subspace(n, null_space(stacked));
}

CommutantReport commutant(const FiniteMatrixGroup& G) {
  const int n = G.dim();
  const int n2 = n * n;
  const Eigen::MatrixXd I = Eigen::MatrixXd::Identity(n, n);
  const auto& gens = G.generators();
  Eigen::MatrixXd stacked(static_cast<Eigen::Index>(gens.size()) * n2, n2);
  for (std::size_t s = 0; s < gens.size(); ++s) {
    const Eigen::MatrixXd& g = G.matrix(gens[s]);
    // vec(T g - g T) = (g^T (x) I - I (x) g) vec(T), column-major vec
    Eigen::MatrixXd block(n2, n2);
    for (int r1 = 0; r1 < n; ++r1)
      for (int c1 = 0; c1 < n; ++c1)
        block.block(r1 * n, c1 * n, n, n) = g(c1, r1) * I - (r1 == c1 ? g : Eigen::MatrixXd::Zero(n, n));
    stacked.middleRows(static_cast<Eigen::Index>(s) * n2, n2) = block;
  }
  CommutantReport rep;
  rep.dimension = static_cast<int>(null_space(stacked, &rep.decision).cols());
  return rep;
}

int commutant_dimension(const FiniteMatrixGroup& G) { return commutant(G).dimension; }

namespace {

bool fixes(const Eigen::MatrixXd& g, const Eigen::VectorXd& v) {
  return (g * v - v).cwiseAbs().maxCoeff() < tol::orth * std::max(1.0, v.norm());
}

}  // namespace

IndexSet stabilizer(const FiniteMatrixGroup& G, const Eigen::VectorXd& v) {
  IndexSet out;
  for (std::size_t i = 0; i < G.order(); ++i)
    if (fixes(G.matrix(i), v)) out.push_back(i);
  return out;
}

IndexSet pointwise_stabilizer(const FiniteMatrixGroup& G, const Subspace& W) {
  IndexSet out;
  for (std::size_t i = 0; i < G.order(); ++i) {
    const Eigen::MatrixXd& g = G.matrix(i);
    bool ok = true;
    for (int c = 0; c < W.dim() && ok; ++c) ok = fixes(g, W.basis().col(c));
    if (ok) out.push_back(i);
  }
  return out;
}

IndexSet conjugate_subgroup(const FiniteMatrixGroup& G, const IndexSet& H, std::size_t g) {
  const std::size_t gi = G.inverse(g);
  IndexSet out;
  out.reserve(H.size());
  for (std::size_t h : H) out.push_back(G.multiply(G.multiply(g, h), gi));
  std::sort(out.begin(), out.end());
  return out;
}

SubgroupClass subgroup_class(const FiniteMatrixGroup& G, const IndexSet& H) {
  std::set<IndexSet> all;
  for (std::size_t g = 0; g < G.order(); ++g) all.insert(conjugate_subgroup(G, H, g));
  return {*all.begin(), all.size()};
}

IsotropyAnalysis analyze_isotropy(const FiniteMatrixGroup& G, std::uint64_t seed) {
  const int n = G.dim();
  const std::size_t N = G.order();
  IsotropyAnalysis out;

  IndexSet everything(N);
  std::iota(everything.begin(), everything.end(), std::size_t{0});
  out.fix_of_group_dim = fixed_subspace(G, everything).dim();

  // Atoms: proper nonzero Fix(g), keyed by their pointwise stabilizers.
  std::vector<Subspace> per_element(N);
  std::vector<IndexSet> per_stab(N);
  parallel_for(N, [&](std::size_t i) {
    per_element[i] = fixed_subspace(G, {i});
    if (per_element[i].dim() > 0 && per_element[i].dim() < n) per_stab[i] = pointwise_stabilizer(G, per_element[i]);
  });
  std::map<IndexSet, Subspace> lattice;
  for (std::size_t i = 0; i < N; ++i)
    if (!per_stab[i].empty()) lattice.emplace(per_stab[i], per_element[i]);
  const std::vector<std::pair<IndexSet, Subspace>> atoms(lattice.begin(), lattice.end());

  std::vector<std::pair<IndexSet, Subspace>> frontier = atoms;
  while (!frontier.empty()) {
    std::vector<std::vector<std::pair<IndexSet, Subspace>>> found(frontier.size());
    parallel_for(frontier.size(), [&](std::size_t f) {
      for (const auto& atom : atoms) {
        if (std::includes(frontier[f].first.begin(), frontier[f].first.end(), atom.first.begin(), atom.first.end()))
          continue;  // atom's space already contains the member
        Subspace w = frontier[f].second.intersect(atom.second);
        if (w.dim() == 0) continue;
        found[f].emplace_back(pointwise_stabilizer(G, w), std::move(w));
      }
    });
    std::vector<std::pair<IndexSet, Subspace>> next;
    for (auto& row : found)
      for (auto& [stab, w] : row)
        if (lattice.emplace(stab, w).second) next.emplace_back(stab, w);
    frontier = std::move(next);
  }
  out.lattice_size = lattice.size();

  std::set<IndexSet> assigned;
  std::vector<IsotropyType> types;
  for (const auto& [stab, w] : lattice) {
    if (assigned.count(stab)) continue;
    std::set<IndexSet> conj;
    for (std::size_t g = 0; g < N; ++g) conj.insert(conjugate_subgroup(G, stab, g));
    assigned.insert(conj.begin(), conj.end());
    if (stab.size() == N) continue;  // reported through fix_of_group_dim
    IsotropyType t;
    t.representative = *conj.begin();
    t.conjugates = conj.size();
    t.subgroup_order = stab.size();
    t.fixed_dim = w.dim();
    types.push_back(std::move(t));
  }
  std::sort(types.begin(), types.end(), [](const IsotropyType& x, const IsotropyType& y) {
    return std::tie(x.fixed_dim, x.subgroup_order, x.conjugates, x.representative) <
           std::tie(y.fixed_dim, y.subgroup_order, y.conjugates, y.representative);
  });

  std::mt19937_64 rng(seed);
  std::normal_distribution<double> normal;
  for (auto& t : types) {
    const Subspace w = fixed_subspace(G, t.representative);
    if (w.dim() != t.fixed_dim) throw InternalFault("canonical representative changed fixed dimension");
    bool verified = false;
    for (int attempt = 0; attempt < 64 && !verified; ++attempt) {
      Eigen::VectorXd c(w.dim());
      for (int i = 0; i < w.dim(); ++i) c[i] = normal(rng);
      Eigen::VectorXd v = w.basis() * c;
      v.normalize();
      if (stabilizer(G, v) == t.representative) {
        t.witness = v;
        verified = true;
      }
    }
    if (!verified) throw InternalFault("no witness realizes an isotropy type");
  }
  out.types = std::move(types);
  return out;
}

std::vector<IsotropyType> isotropy_types(const FiniteMatrixGroup& G, std::uint64_t seed) {
  return analyze_isotropy(G, seed).types;
}

IndexSet normalizer(const FiniteMatrixGroup& G, const IndexSet& H) {
  IndexSet h = H;
  std::sort(h.begin(), h.end());
  h.erase(std::unique(h.begin(), h.end()), h.end());
  if (!is_subgroup(G, h)) throw ParameterError("normalizer: H is not closed under multiplication");
  IndexSet out;
  for (std::size_t g = 0; g < G.order(); ++g)
    if (conjugate_subgroup(G, h, g) == h) out.push_back(g);
  return out;
}

WeylAction weyl_action(const FiniteMatrixGroup& G, const IndexSet& H) {
  WeylAction wa;
  wa.fix = fixed_subspace(G, H);
  if (wa.fix.dim() == 0) throw ParameterError("weyl_action: Fix(H) is zero");
  wa.normalizer = normalizer(G, H);
  const Eigen::MatrixXd& B = wa.fix.basis();
  const Eigen::MatrixXd eye = Eigen::MatrixXd::Identity(B.cols(), B.cols());
  std::map<Key, Eigen::MatrixXd> restricted;
  for (std::size_t g : wa.normalizer) {
    const Eigen::MatrixXd gB = G.matrix(g) * B;
    const Eigen::MatrixXd M = B.transpose() * gB;
    if ((gB - B * M).cwiseAbs().maxCoeff() > tol::orth) throw StructuralFault("normalizer element leaves Fix(H)");
    if ((M - eye).cwiseAbs().maxCoeff() < tol::orth) ++wa.kernel_order;
    restricted.emplace(quantize(M), M);
  }
  std::vector<Eigen::MatrixXd> mats;
  for (auto& [k, m] : restricted) mats.push_back(m);
  wa.group = close_group(custom_generators(mats));
  return wa;
}

WeylCheck verify_weyl_is_g3(const FiniteMatrixGroup& G, const IndexSet& H, int tau) {
  const WeylAction wa = weyl_action(G, H);
  const FiniteMatrixGroup ref = close_group(build_g3_generators(tau));
  WeylCheck wc;
  wc.weyl_order = wa.group.order();
  wc.reference_order = ref.order();
  wc.histogram_match = wc.weyl_order == wc.reference_order && order_histogram(wa.group) == order_histogram(ref);
  wc.isomorphism = find_isomorphism(wa.group, ref);
  return wc;
}

namespace {

Eigen::MatrixXd mpow(const Eigen::MatrixXd& m, int e) {
  Eigen::MatrixXd r = Eigen::MatrixXd::Identity(m.rows(), m.cols());
  for (int i = 0; i < e; ++i) r = r * m;
  return r;
}

std::array<double, 3> block_deviation(const std::array<Eigen::MatrixXd, 3>& omega, const Quaternion& e_tau,
                                      PairAction action) {
  const Quaternion one = Quaternion::one(), i = Quaternion::i(), j = Quaternion::j();
  const std::array<Eigen::Matrix4d, 3> M = {quaternion_pair_to_matrix({e_tau, i}, action),
                                            quaternion_pair_to_matrix({one, j}, action),
                                            quaternion_pair_to_matrix({j, j}, action)};
  std::array<double, 3> d{};
  for (int s = 0; s < 3; ++s) d[s] = (omega[s].topLeftCorner(4, 4) - M[s]).cwiseAbs().maxCoeff();
  return d;
}

bool all_small(const std::array<double, 3>& d) {
  return std::all_of(d.begin(), d.end(), [](double x) { return x < tol::orth; });
}

IndexSet cyclic(const FiniteMatrixGroup& G, std::size_t g) { return subgroup_generated(G, {g}); }

const G8Matrices& require_g8(const FiniteMatrixGroup& G) {
  if (G.family() != Family::g8 || !G.g8()) throw ParameterError("expected a G(l) group");
  return *G.g8();
}

}  // namespace

OmegaReport verify_omega_formulas(const FiniteMatrixGroup& G) {
  const G8Matrices& m = require_g8(G);
  const int tau = G.tau();
  OmegaReport rep;
  rep.tau = tau;
  rep.q1 = tau % 4 == 3 ? 2 * tau + 2 : 8 * tau - 16;
  rep.q2 = tau % 4 == 3 ? 3 * tau : tau;
  static constexpr int c_by_residue[8] = {0, 5, 0, 3, 0, 1, 0, 7};
  rep.c = c_by_residue[tau % 8];
  rep.q3 = (rep.c * tau + 1) / 2;

  const std::array<Eigen::MatrixXd, 3> xi = {m.A * m.R1, mpow(m.R1, 2), mpow(m.A, 2)};
  const std::array<Eigen::MatrixXd, 3> omega = {xi[1] * mpow(xi[2], rep.q1), mpow(xi[2], rep.q2),
                                                xi[0] * xi[1] * mpow(xi[2], rep.q3)};
  const Eigen::MatrixXd R2sq = m.R2 * m.R2;
  const IndexSet N = normalizer(G, cyclic(G, G.index_of(R2sq)));
  for (int s = 0; s < 3; ++s) {
    rep.xi[s] = G.index_of(xi[s]);
    rep.omega[s] = G.index_of(omega[s]);
    rep.in_normalizer[s] = std::binary_search(N.begin(), N.end(), rep.omega[s]);
  }

  rep.strict_deviation =
      block_deviation(omega, Quaternion::complex_unit(std::numbers::pi / tau), PairAction::left_conjugate);
  rep.strict_pass = all_small(rep.strict_deviation);
  rep.reconciled_deviation.fill(std::numeric_limits<double>::infinity());
  for (int w = 1; w < 2 * tau; w += 2) {
    if (std::gcd(w, tau) != 1) continue;
    const Quaternion e = Quaternion::complex_unit(std::numbers::pi * w / tau);
    if (all_small(block_deviation(omega, e, PairAction::left_conjugate))) rep.strict_pass_any_root = true;
    const auto d = block_deviation(omega, e, PairAction::right_conjugate);
    if (!rep.reconciled_pass && all_small(d)) {
      rep.reconciled_pass = true;
      rep.reconciled_root = w;
      rep.reconciled_deviation = d;
    }
  }
  return rep;
}

OmegaReport verify_omega_formulas(int l) { return verify_omega_formulas(close_group(build_g8_generators(l))); }

NormalizerReport normalizer_report(const FiniteMatrixGroup& G) {
  const G8Matrices& m = require_g8(G);
  NormalizerReport rep;
  rep.l = G.parameter();
  rep.tau = G.tau();
  const Eigen::MatrixXd R2sq = m.R2 * m.R2;
  rep.H = cyclic(G, G.index_of(R2sq));
  rep.H_prime = cyclic(G, G.index_of(-R2sq));
  rep.normalizer = normalizer(G, rep.H);
  rep.normalizer_prime = normalizer(G, rep.H_prime);
  rep.index_in_G = G.order() / rep.normalizer.size();

  const Subspace fix = fixed_subspace(G, rep.H), fix_p = fixed_subspace(G, rep.H_prime);
  rep.fix_dim_H = fix.dim();
  rep.fix_dim_H_prime = fix_p.dim();
  Eigen::MatrixXd both(8, fix.dim() + fix_p.dim());
  both << fix.basis(), fix_p.basis();
  rep.direct_sum_rank = span_rank(both);

  rep.antidiagonal = true;
  for (std::size_t g = 0; g < G.order(); ++g) {
    if (std::binary_search(rep.normalizer.begin(), rep.normalizer.end(), g)) continue;
    for (int c = 0; c < fix.dim(); ++c)
      rep.antidiagonal = rep.antidiagonal && fix_p.contains(G.matrix(g) * fix.basis().col(c));
    for (int c = 0; c < fix_p.dim(); ++c)
      rep.antidiagonal = rep.antidiagonal && fix.contains(G.matrix(g) * fix_p.basis().col(c));
  }

  const WeylAction wa = weyl_action(G, rep.H);
  rep.weyl_order = wa.group.order();
  rep.weyl_commutant_dim = commutant_dimension(wa.group);
  const Eigen::MatrixXd& B = wa.fix.basis();
  for (const Eigen::MatrixXd& x : {Eigen::MatrixXd(m.A * m.R1), mpow(m.R1, 2), mpow(m.A, 2)})
    rep.weyl_generators.push_back(B.transpose() * x * B);
  rep.omega = verify_omega_formulas(G);
  return rep;
}

}  // namespace evenfix
