#include "evenfix/matgroup.hpp"

#include <algorithm>
#include <cmath>
#include <mutex>
#include <numbers>
#include <numeric>
#include <set>
#include <sstream>

#include "evenfix/errors.hpp"
#include "evenfix/parallel.hpp"

namespace evenfix {

const char* to_string(Family f) noexcept {
  switch (f) {
    case Family::g3: return "g3";
    case Family::g8: return "g8";
    case Family::custom: return "custom";
  }
  return "custom";
}

GeneratorSet build_g3_generators(int m, int root) {
  if (m < 3 || m % 2 == 0) throw ParameterError("G3(m) needs odd m >= 3, got m = " + std::to_string(m));
  if (std::gcd(root, 2 * m) != 1) throw ParameterError("root index must be coprime to 2m");
  const Quaternion em = Quaternion::complex_unit(std::numbers::pi * root / m);
  const Quaternion one = Quaternion::one(), i = Quaternion::i(), j = Quaternion::j();
  GeneratorSet g;
  g.dim = 4;
  g.family = Family::g3;
  g.parameter = m;
  g.root = root;
  for (const QuaternionPair& p : {QuaternionPair{em, one}, QuaternionPair{one, i}, QuaternionPair{j, one},
                                  QuaternionPair{one, j}})
    g.generators.emplace_back(Eigen::MatrixXd(quaternion_pair_to_matrix(p)));
  g.labels = {"[e_m,1]", "[1,i]", "[j,1]", "[1,j]"};
  return g;
}

namespace {

Eigen::Matrix2d m2(double a, double b, double c, double d) {
  Eigen::Matrix2d m;
  m << a, b, c, d;
  return m;
}

Eigen::MatrixXd block2(const Eigen::MatrixXd& a, const Eigen::MatrixXd& b, const Eigen::MatrixXd& c,
                       const Eigen::MatrixXd& d) {
  const Eigen::Index n = a.rows();
  Eigen::MatrixXd m(2 * n, 2 * n);
  m << a, b, c, d;
  return m;
}

}  // namespace

GeneratorSet build_g8_generators(int l, int root) {
  if (l < 1) throw ParameterError("G(l) needs l >= 1, got l = " + std::to_string(l));
  const int k = 4 + 8 * l;
  if (std::gcd(root, k) != 1) throw ParameterError("root index must be coprime to k");
  const double angle = 2.0 * std::numbers::pi * root / k;
  const double d1 = std::cos(angle), d2 = std::sin(angle);
  const double f = std::sqrt(0.5);

  const Eigen::Matrix2d F1 = m2(-f, -f, -f, f), F2 = m2(-f, f, f, f);
  const Eigen::Matrix2d D = m2(-d2, -d1, d1, -d2);
  const Eigen::Matrix2d T1 = m2(-1, 0, 0, 1), T2 = m2(1, 0, 0, -1);
  const Eigen::Matrix2d S1 = m2(0, -1, -1, 0), S2 = m2(0, 1, 1, 0);
  const Eigen::MatrixXd Z2 = Eigen::MatrixXd::Zero(2, 2), Z4 = Eigen::MatrixXd::Zero(4, 4);

  const Eigen::MatrixXd FF = block2(Z2, F1, F2, Z2);
  const Eigen::MatrixXd SS = block2(S1, Z2, Z2, S2);
  const Eigen::MatrixXd TT = block2(Z2, T1, T2, Z2);
  const Eigen::MatrixXd DD = block2(D, Z2, Z2, D);

  G8Matrices r;
  r.R1 = block2(Z4, FF, FF, Z4);
  r.R2 = block2(SS, Z4, Z4, TT);
  r.R3 = block2(DD, Z4, Z4, DD);
  r.A = r.R1 * r.R2 * r.R3;

  GeneratorSet g;
  g.dim = 8;
  g.family = Family::g8;
  g.parameter = l;
  g.k = k;
  g.tau = k / 4;
  g.root = root;
  g.generators = {MatrixElement(r.R1), MatrixElement(r.R2), MatrixElement(r.R3)};
  g.labels = {"R1", "R2", "R3"};
  g.g8 = std::move(r);
  return g;
}

GeneratorSet custom_generators(const std::vector<Eigen::MatrixXd>& mats, std::vector<std::string> labels) {
  if (mats.empty()) throw ParameterError("custom generator set is empty");
  GeneratorSet g;
  g.dim = static_cast<int>(mats.front().rows());
  for (const auto& m : mats) {
    if (m.rows() != g.dim || m.cols() != g.dim) throw ParameterError("generators must share one square shape");
    g.generators.emplace_back(m);
  }
  if (labels.empty())
    for (std::size_t i = 0; i < mats.size(); ++i) labels.push_back("g" + std::to_string(i));
  g.labels = std::move(labels);
  return g;
}

struct FiniteMatrixGroup::Table {
  std::once_flag once;
  std::vector<std::uint32_t> product;  // row-major order x order
  std::vector<std::uint32_t> inverse;
};

std::optional<std::size_t> FiniteMatrixGroup::find(const Eigen::MatrixXd& m) const {
  if (m.rows() != dim_ || m.cols() != dim_) return std::nullopt;
  auto it = index_.find(quantize(m));
  if (it == index_.end()) {
    for (const Key& alt : neighbour_keys(m)) {
      it = index_.find(alt);
      if (it != index_.end()) break;
    }
    if (it == index_.end()) return std::nullopt;
  }
  const double dist = (elements_[it->second].matrix() - m).cwiseAbs().maxCoeff();
  if (dist > 2.0 * tol::key_grid) {
    std::ostringstream os;
    os << "key collision with entry distance " << dist;
    throw ToleranceFault(os.str());
  }
  return it->second;
}

std::size_t FiniteMatrixGroup::index_of(const Eigen::MatrixXd& m) const {
  const auto i = find(m);
  if (!i) throw InternalFault("matrix is not an element of the group");
  return *i;
}

const FiniteMatrixGroup::Table& FiniteMatrixGroup::table() const {
  Table& t = *table_;
  std::call_once(t.once, [&] {
    const std::size_t n = order();
    t.product.assign(n * n, 0);
    t.inverse.assign(n, 0);
    parallel_for(n, [&](std::size_t i) {
      for (std::size_t j = 0; j < n; ++j)
        t.product[i * n + j] = static_cast<std::uint32_t>(index_of(elements_[i].matrix() * elements_[j].matrix()));
      t.inverse[i] = static_cast<std::uint32_t>(index_of(elements_[i].matrix().transpose()));
    });
  });
  return t;
}

std::size_t FiniteMatrixGroup::inverse(std::size_t i) const { return table().inverse[i]; }

std::size_t FiniteMatrixGroup::multiply(std::size_t i, std::size_t j) const {
  return table().product[i * order() + j];
}

std::size_t FiniteMatrixGroup::element_order(std::size_t i) const {
  std::size_t n = 1, x = i;
  while (x != identity_) {
    x = multiply(x, i);
    if (++n > order()) throw InternalFault("element order exceeds group order");
  }
  return n;
}

FiniteMatrixGroup close_group(const GeneratorSet& g, std::size_t max_order) {
  if (g.generators.empty()) throw ParameterError("generator set is empty");
  const int n = g.dim;
  for (const auto& x : g.generators)
    if (x.dim() != n) throw ParameterError("generator dimension mismatch");

  std::map<Key, Eigen::MatrixXd> found;
  auto lookup = [&](const Eigen::MatrixXd& m) -> std::map<Key, Eigen::MatrixXd>::iterator {
    auto it = found.find(quantize(m));
    if (it != found.end()) return it;
    for (const Key& alt : neighbour_keys(m)) {
      it = found.find(alt);
      if (it != found.end()) return it;
    }
    return found.end();
  };

  const Eigen::MatrixXd eye = Eigen::MatrixXd::Identity(n, n);
  found.emplace(quantize(eye), eye);
  std::vector<Key> frontier{quantize(eye)};

  while (!frontier.empty()) {
    std::sort(frontier.begin(), frontier.end());
    std::vector<Eigen::MatrixXd> heads;
    heads.reserve(frontier.size());
    for (const Key& key : frontier) heads.push_back(found.at(key));

    std::vector<std::vector<Eigen::MatrixXd>> products(heads.size());
    parallel_for(heads.size(), [&](std::size_t i) {
      products[i].reserve(g.generators.size());
      for (const auto& gen : g.generators) products[i].push_back(heads[i] * gen.matrix());
    });

    std::vector<Key> next;
    for (auto& row : products) {
      for (auto& y : row) {
        auto it = lookup(y);
        if (it != found.end()) {
          const double dist = (it->second - y).cwiseAbs().maxCoeff();
          if (dist > 2.0 * tol::key_grid) {
            std::ostringstream os;
            os << "key collision with entry distance " << dist;
            throw ToleranceFault(os.str());
          }
          continue;
        }
        Key key = quantize(y);
        found.emplace(key, std::move(y));
        next.push_back(std::move(key));
        if (found.size() > max_order)
          throw ClosureFault("not closed within bound " + std::to_string(max_order));
      }
    }
    frontier = std::move(next);
  }

  FiniteMatrixGroup G;
  G.dim_ = n;
  G.family_ = g.family;
  G.parameter_ = g.parameter;
  G.k_ = g.k;
  G.tau_ = g.tau;
  G.g8_ = g.g8;
  G.labels_ = g.labels;
  G.table_ = std::make_shared<FiniteMatrixGroup::Table>();
  G.elements_.reserve(found.size());
  for (auto& [key, m] : found) {
    G.index_.emplace(key, G.elements_.size());
    G.elements_.emplace_back(std::move(m));
  }
  G.identity_ = G.index_of(eye);
  for (const auto& gen : g.generators) G.generators_.push_back(G.index_of(gen.matrix()));

  if (g.family != Family::custom) {
    for (const auto& e : G.elements_) {
      if (std::abs(e.det() - 1.0) > tol::orth) throw ToleranceFault("element with determinant != 1");
    }
  }

  // Separation audit: keys are only trustworthy if distinct elements sit far
  // apart relative to the grid.
  const std::size_t N = G.order();
  std::vector<double> row_min(N, std::numeric_limits<double>::infinity());
  G.separation_exhaustive_ = N <= 4096;
  parallel_for(N, [&](std::size_t i) {
    const std::size_t stop = G.separation_exhaustive_ ? N : std::min(N, i + 2);
    for (std::size_t j = i + 1; j < stop; ++j)
      row_min[i] = std::min(row_min[i], (G.elements_[i].matrix() - G.elements_[j].matrix()).cwiseAbs().maxCoeff());
  });
  G.min_separation_ = N > 1 ? *std::min_element(row_min.begin(), row_min.end()) : 2.0;
  if (G.min_separation_ <= 2.0 * tol::key_grid) throw ToleranceFault("elements closer than the key grid allows");
  return G;
}

int element_order(const Eigen::MatrixXd& g, int bound) {
  const Eigen::MatrixXd eye = Eigen::MatrixXd::Identity(g.rows(), g.cols());
  Eigen::MatrixXd x = g;
  for (int n = 1; n <= bound; ++n) {
    if ((x - eye).cwiseAbs().maxCoeff() < tol::orth) return n;
    x = x * g;
  }
  throw ClosureFault("element order exceeds bound " + std::to_string(bound));
}

std::vector<std::size_t> subgroup_generated(const FiniteMatrixGroup& G, const std::vector<std::size_t>& gens) {
  std::vector<char> seen(G.order(), 0);
  std::vector<std::size_t> queue{G.identity()};
  seen[G.identity()] = 1;
  for (std::size_t h = 0; h < queue.size(); ++h) {
    for (std::size_t s : gens) {
      const std::size_t y = G.multiply(queue[h], s);
      if (!seen[y]) {
        seen[y] = 1;
        queue.push_back(y);
      }
    }
  }
  std::sort(queue.begin(), queue.end());
  return queue;
}

bool is_subgroup(const FiniteMatrixGroup& G, const std::vector<std::size_t>& s) {
  if (s.empty()) return false;
  std::vector<char> in(G.order(), 0);
  for (std::size_t i : s) in[i] = 1;
  for (std::size_t x : s)
    for (std::size_t y : s)
      if (!in[G.multiply(x, y)]) return false;
  return true;
}

bool RelationReport::all_hold() const {
  return std::all_of(checks.begin(), checks.end(), [](const RelationCheck& c) { return c.holds; });
}

const RelationCheck* RelationReport::find(const std::string& name) const {
  for (const auto& c : checks)
    if (c.name == name) return &c;
  return nullptr;
}

namespace {

Eigen::MatrixXd mpow(const Eigen::MatrixXd& m, int e) {
  Eigen::MatrixXd r = Eigen::MatrixXd::Identity(m.rows(), m.cols());
  for (int i = 0; i < e; ++i) r = r * m;
  return r;
}

double dev(const Eigen::MatrixXd& a, const Eigen::MatrixXd& b) { return (a - b).cwiseAbs().maxCoeff(); }

}  // namespace

RelationReport verify_matrix_relations(int l) {
  const GeneratorSet gs = build_g8_generators(l);
  const auto& M = *gs.g8;
  const Eigen::MatrixXd& R1 = M.R1;
  const Eigen::MatrixXd& R2 = M.R2;
  const Eigen::MatrixXd& R3 = M.R3;
  const Eigen::MatrixXd& A = M.A;
  const int k = gs.k, tau = gs.tau;
  const Eigen::MatrixXd I = Eigen::MatrixXd::Identity(8, 8);

  RelationReport rep;
  rep.l = l;
  rep.k = k;
  rep.tau = tau;
  auto add = [&](std::string name, double d) { rep.checks.push_back({std::move(name), d < tol::orth, d}); };

  add("R1^8 = I", dev(mpow(R1, 8), I));
  add("A^2k = I", dev(mpow(A, 2 * k), I));
  add("A^k = -I", dev(mpow(A, k), -I));
  add("R1^4 = -I", dev(mpow(R1, 4), -I));
  add("(A R1)^2 = I", dev(mpow(A * R1, 2), I));
  add("(R1 A)^2 = I", dev(mpow(R1 * A, 2), I));
  add("(A^3 R1^3)^2 = I", dev(mpow(mpow(A, 3) * mpow(R1, 3), 2), I));
  add("R1^2 A^2 R1^2 = A^2", dev(mpow(R1, 2) * mpow(A, 2) * mpow(R1, 2), mpow(A, 2)));
  add("R3^2tau = I", dev(mpow(R3, 2 * tau), I));
  {
    const double d = dev(mpow(R3, tau), I);
    const bool identity = d < tol::orth;
    rep.checks.push_back({"R3^tau = I iff tau = 3 mod 4", identity == (tau % 4 == 3), d});
  }
  add("A^8 = R3^8", dev(mpow(A, 8), mpow(R3, 8)));
  add("R2^2 = R1 A^2 R1^3 A^2", dev(R2 * R2, R1 * mpow(A, 2) * mpow(R1, 3) * mpow(A, 2)));
  add("-R2^2 = R1 A^2 R1^3 A^(2+k)", dev(-R2 * R2, R1 * mpow(A, 2) * mpow(R1, 3) * mpow(A, 2 + k)));
  {
    double closest = std::numeric_limits<double>::infinity();
    const Eigen::MatrixXd lhs = A * mpow(R1, 2);
    Eigen::MatrixXd As = I;
    for (int s = 0; s < 2 * k; ++s, As = As * A) closest = std::min(closest, dev(lhs, mpow(R1, 2) * As));
    rep.checks.push_back({"no sigma with A R1^2 = R1^2 A^sigma", closest > tol::orth, closest});
  }
  rep.order_A = element_order(A, 4 * k);
  rep.order_R1 = element_order(R1, 64);
  rep.checks.push_back({"ord(A) = 2k", rep.order_A == 2 * k, 0.0});
  rep.checks.push_back({"ord(R1) = 8", rep.order_R1 == 8, 0.0});
  {
    const auto full = close_group(gs);
    const auto sub = close_group(custom_generators({R1, A}, {"R1", "A"}));
    rep.checks.push_back({"<R1, A> = G", full.order() == sub.order() && full.order() == 16u * k, 0.0});
  }
  return rep;
}

}  // namespace evenfix
