#pragma once

#include <limits>
#include <vector>

#include <Eigen/Dense>

namespace evenfix {

/// Outcome of a thresholded rank decision.
struct RankDecision {
  int rank = 0;
  double smallest_kept = std::numeric_limits<double>::infinity();
  double largest_dropped = 0.0;
  double gap() const;  // smallest_kept / largest_dropped (infinite if either side is empty)
};

/// Splits singular values at tol::rank and enforces tol::rank_gap; throws
/// ToleranceFault when the spectrum has no clean gap.
RankDecision decide_rank(const Eigen::VectorXd& singular_values);

/// Orthonormal basis (as columns) of the null space of `m`.
Eigen::MatrixXd null_space(const Eigen::MatrixXd& m, RankDecision* decision = nullptr);

class Subspace {
 public:
  Subspace() = default;
  /// `spanning` columns need not be orthonormal; the stored basis is the
  /// canonical one: Gram-Schmidt on P e_1, P e_2, ... with P the projector.
  Subspace(int ambient, const Eigen::MatrixXd& spanning);

  static Subspace full(int n);
  static Subspace zero(int n);

  int ambient() const { return ambient_; }
  int dim() const { return static_cast<int>(basis_.cols()); }
  const Eigen::MatrixXd& basis() const { return basis_; }
  Eigen::MatrixXd projector() const { return basis_ * basis_.transpose(); }
  Eigen::VectorXd project(const Eigen::VectorXd& v) const { return basis_ * (basis_.transpose() * v); }
  bool contains(const Eigen::VectorXd& v) const;
  bool same_as(const Subspace& other) const;

  Subspace intersect(const Subspace& other) const;

 private:
  int ambient_ = 0;
  Eigen::MatrixXd basis_;
};

/// Rank of the column span of `vectors` with a gap check.
int span_rank(const Eigen::MatrixXd& vectors, RankDecision* decision = nullptr);

}  // namespace evenfix
