#include "oracles.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <random>
#include <set>

#include "evenfix/errors.hpp"
#include "evenfix/wordgroup.hpp"

namespace evenfix::oracle {
namespace {

// Averaging projector onto Fix(<g>).
Eigen::MatrixXd cyclic_projector(const Eigen::MatrixXd& g) {
  const auto n = g.rows();
  Eigen::MatrixXd sum = Eigen::MatrixXd::Zero(n, n), p = Eigen::MatrixXd::Identity(n, n);
  int count = 0;
  do {
    sum += p;
    p = p * g;
    ++count;
  } while ((p - Eigen::MatrixXd::Identity(n, n)).cwiseAbs().maxCoeff() > 1e-9 && count < 100000);
  return sum / count;
}

Eigen::MatrixXd kernel(const Eigen::MatrixXd& m) {
  Eigen::FullPivLU<Eigen::MatrixXd> lu(m);
  lu.setThreshold(1e-8);
  if (lu.rank() == m.cols()) return Eigen::MatrixXd(m.cols(), 0);
  return lu.kernel();
}

int fix_dim(const FiniteMatrixGroup& G, const IndexSet& S) {
  const auto n = G.dim();
  Eigen::MatrixXd stacked(static_cast<Eigen::Index>(S.size()) * n, n);
  for (std::size_t i = 0; i < S.size(); ++i)
    stacked.middleRows(static_cast<Eigen::Index>(i) * n, n) = G.matrix(S[i]) - Eigen::MatrixXd::Identity(n, n);
  Eigen::FullPivLU<Eigen::MatrixXd> lu(stacked);
  lu.setThreshold(1e-8);
  return static_cast<int>(n - lu.rank());
}

StabilizerType classify(const FiniteMatrixGroup& G, const IndexSet& H) {
  std::set<IndexSet> conj;
  for (std::size_t g = 0; g < G.order(); ++g) {
    IndexSet c;
    for (std::size_t h : H) c.push_back(G.multiply(G.multiply(g, h), G.inverse(g)));
    std::sort(c.begin(), c.end());
    conj.insert(std::move(c));
  }
  return {*conj.begin(), fix_dim(G, H), H.size(), conj.size()};
}

}  // namespace

std::vector<StabilizerType> random_stabilizer_types(const FiniteMatrixGroup& G, std::size_t samples,
                                                    std::uint64_t seed) {
  const auto n = G.dim();
  std::vector<Eigen::MatrixXd> complement(G.order());
  for (std::size_t i = 0; i < G.order(); ++i)
    complement[i] = Eigen::MatrixXd::Identity(n, n) - cyclic_projector(G.matrix(i));

  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> pick(0, G.order() - 1);
  std::uniform_int_distribution<int> size(1, 3);
  std::normal_distribution<double> gauss;

  std::set<IndexSet> stabilizers;
  for (std::size_t s = 0; s < samples; ++s) {
    const int k = size(rng);
    Eigen::MatrixXd stacked(k * n, n);
    for (int i = 0; i < k; ++i) stacked.middleRows(i * n, n) = complement[pick(rng)];
    const Eigen::MatrixXd K = kernel(stacked);
    if (K.cols() == 0) continue;
    Eigen::VectorXd c(K.cols());
    for (Eigen::Index i = 0; i < c.size(); ++i) c(i) = gauss(rng);
    Eigen::VectorXd v = K * c;
    v.normalize();
    IndexSet stab;
    for (std::size_t g = 0; g < G.order(); ++g)
      if ((G.matrix(g) * v - v).norm() < 1e-9) stab.push_back(g);
    if (stab.size() > 1 && stab.size() < G.order()) stabilizers.insert(std::move(stab));
  }

  std::set<StabilizerType> types;
  for (const auto& H : stabilizers) types.insert(classify(G, H));
  return {types.begin(), types.end()};
}

std::vector<StabilizerType> lattice_types(const FiniteMatrixGroup& G, std::uint64_t seed) {
  std::vector<StabilizerType> out;
  for (const auto& t : isotropy_types(G, seed)) out.push_back({t.representative, t.fixed_dim, t.subgroup_order, t.conjugates});
  std::sort(out.begin(), out.end());
  return out;
}

std::size_t commuting_quotient_order(int k, int s) {
  const WordGroup W(make_presentation(k));
  const std::size_t N = W.order();
  const std::size_t e = W.trace(Word{});
  std::vector<std::size_t> inv(N);
  for (std::size_t x = 0; x < N; ++x)
    for (std::size_t y = 0; y < N; ++y)
      if (W.mul(x, y) == e) {
        inv[x] = y;
        break;
      }

  const std::size_t w = W.trace(Word::r(2) * Word::a() * Word::r(-2) * Word::a(-s));
  std::set<std::size_t> closure{e};
  std::vector<std::size_t> queue{e};
  std::vector<std::size_t> gens;
  for (std::size_t g = 0; g < N; ++g) gens.push_back(W.mul(W.mul(g, w), inv[g]));
  for (std::size_t h = 0; h < queue.size(); ++h)
    for (std::size_t g : gens) {
      const std::size_t y = W.mul(queue[h], g);
      if (closure.insert(y).second) queue.push_back(y);
    }
  return N / closure.size();
}

std::vector<Eigen::VectorXd> analytic_zero_points(const std::string& label) {
  // Each plane is parametrized by (x, y) on the unit circle of its defining
  // coordinates; the loci are x = 0, y = 0, x = +-y.
  std::vector<Eigen::VectorXd> out;
  const double h = std::sqrt(0.5);
  const std::pair<double, double> xy[] = {{1, 0}, {-1, 0}, {0, 1}, {0, -1}, {h, h}, {h, -h}, {-h, h}, {-h, -h}};
  for (auto [x, y] : xy) {
    Eigen::VectorXd v(4);
    if (label == "H1") {
      // v1 = v4 = x / sqrt2, v2 = v3 = y / sqrt2
      v << x * h, y * h, y * h, x * h;
    } else if (label == "H2") {
      v << x, 0, y, 0;
    } else if (label == "H3") {
      // v1 = -v2, v3 = v4
      v << x * h, -x * h, y * h, y * h;
    } else {
      throw ParameterError("unknown plane label " + label);
    }
    out.push_back(v);
  }
  return out;
}

bool contains_point(const std::vector<Eigen::VectorXd>& points, const Eigen::VectorXd& p, double tol) {
  return std::any_of(points.begin(), points.end(), [&](const Eigen::VectorXd& q) { return (q - p).norm() < tol; });
}

}  // namespace evenfix::oracle
