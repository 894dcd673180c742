#pragma once

#include <cstdint>
#include <vector>

#include <Eigen/Dense>

namespace evenfix {

/// Row-major entries rounded to the key grid.
using Key = std::vector<std::int64_t>;

Key quantize(const Eigen::MatrixXd& m);

/// Keys of the grid cells adjacent to `m` along entries that sit within
/// `margin` grid units of a rounding boundary. The exact key is not included.
/// At most `cap` alternatives are produced.
std::vector<Key> neighbour_keys(const Eigen::MatrixXd& m, double margin = 1e-3, std::size_t cap = 256);

double orthogonality_defect(const Eigen::MatrixXd& m);  // max |m^T m - I|

class MatrixElement {
 public:
  MatrixElement() = default;
  /// Throws ToleranceFault unless m is square and orthogonal within tol::orth.
  explicit MatrixElement(Eigen::MatrixXd m);

  int dim() const { return static_cast<int>(m_.rows()); }
  const Eigen::MatrixXd& matrix() const { return m_; }
  const Key& key() const { return key_; }
  double det() const { return m_.determinant(); }
  MatrixElement inverse() const { return MatrixElement(m_.transpose()); }

  friend bool operator==(const MatrixElement& a, const MatrixElement& b) { return a.key_ == b.key_; }

 private:
  Eigen::MatrixXd m_;
  Key key_;
};

MatrixElement operator*(const MatrixElement& a, const MatrixElement& b);

}  // namespace evenfix
