#include "evenfix/subspace.hpp"

#include <sstream>

#include "evenfix/errors.hpp"
#include "evenfix/tolerances.hpp"

namespace evenfix {

double RankDecision::gap() const {
  if (largest_dropped == 0.0 || smallest_kept == std::numeric_limits<double>::infinity())
    return std::numeric_limits<double>::infinity();
  return smallest_kept / largest_dropped;
}

RankDecision decide_rank(const Eigen::VectorXd& s) {
  RankDecision d;
  for (Eigen::Index i = 0; i < s.size(); ++i) {
    if (s[i] >= tol::rank) {
      ++d.rank;
      d.smallest_kept = std::min(d.smallest_kept, s[i]);
    } else {
      d.largest_dropped = std::max(d.largest_dropped, s[i]);
    }
  }
  if (d.gap() < tol::rank_gap) {
    std::ostringstream os;
    os << "no spectral gap at rank threshold: kept " << d.smallest_kept << ", dropped " << d.largest_dropped;
    throw ToleranceFault(os.str());
  }
  return d;
}

Eigen::MatrixXd null_space(const Eigen::MatrixXd& m, RankDecision* decision) {
  const Eigen::Index n = m.cols();
  if (m.rows() == 0) return Eigen::MatrixXd::Identity(n, n);
  Eigen::BDCSVD<Eigen::MatrixXd> svd(m, Eigen::ComputeFullV);
  Eigen::VectorXd s = Eigen::VectorXd::Zero(n);
  s.head(svd.singularValues().size()) = svd.singularValues();
  const RankDecision d = decide_rank(s);
  if (decision) *decision = d;
  return svd.matrixV().rightCols(n - d.rank);
}

namespace {

Eigen::MatrixXd canonical_basis(const Eigen::MatrixXd& projector) {
  const Eigen::Index n = projector.rows();
  std::vector<Eigen::VectorXd> cols;
  for (Eigen::Index i = 0; i < n; ++i) {
    Eigen::VectorXd v = projector.col(i);
    for (int pass = 0; pass < 2; ++pass)
      for (const auto& q : cols) v -= q.dot(v) * q;
    const double nv = v.norm();
    if (nv > 1e-6) cols.push_back(v / nv);
  }
  Eigen::MatrixXd b(n, static_cast<Eigen::Index>(cols.size()));
  for (std::size_t c = 0; c < cols.size(); ++c) b.col(static_cast<Eigen::Index>(c)) = cols[c];
  // Snap round-off so exactly-sparse bases print cleanly.
  return b.unaryExpr([](double x) { return std::abs(x) < 1e-14 ? 0.0 : x; });
}

}  // namespace

Subspace::Subspace(int ambient, const Eigen::MatrixXd& spanning) : ambient_(ambient) {
  if (spanning.cols() == 0) {
    basis_ = Eigen::MatrixXd(ambient, 0);
    return;
  }
  Eigen::BDCSVD<Eigen::MatrixXd> svd(spanning, Eigen::ComputeThinU);
  const RankDecision d = decide_rank(svd.singularValues());
  const Eigen::MatrixXd U = svd.matrixU().leftCols(d.rank);
  basis_ = d.rank == 0 ? Eigen::MatrixXd(ambient, 0) : canonical_basis(U * U.transpose());
  if (basis_.cols() != d.rank) throw InternalFault("canonical basis lost rank");
}

Subspace Subspace::full(int n) { return Subspace(n, Eigen::MatrixXd::Identity(n, n)); }
Subspace Subspace::zero(int n) { return Subspace(n, Eigen::MatrixXd(n, 0)); }

bool Subspace::contains(const Eigen::VectorXd& v) const { return (v - project(v)).norm() < tol::orth * std::max(1.0, v.norm()); }

bool Subspace::same_as(const Subspace& other) const {
  return ambient_ == other.ambient_ && dim() == other.dim() &&
         (dim() == 0 || (projector() - other.projector()).cwiseAbs().maxCoeff() < tol::orth);
}

Subspace Subspace::intersect(const Subspace& other) const {
  const Eigen::MatrixXd I = Eigen::MatrixXd::Identity(ambient_, ambient_);
  Eigen::MatrixXd stacked(2 * ambient_, ambient_);
  stacked << I - projector(), I - other.projector();
  return Subspace(ambient_, null_space(stacked));
}

int span_rank(const Eigen::MatrixXd& vectors, RankDecision* decision) {
  if (vectors.cols() == 0 || vectors.rows() == 0) return 0;
  Eigen::BDCSVD<Eigen::MatrixXd> svd(vectors);
  const RankDecision d = decide_rank(svd.singularValues());
  if (decision) *decision = d;
  return d.rank;
}

}  // namespace evenfix
