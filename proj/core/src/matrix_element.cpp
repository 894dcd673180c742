#include "evenfix/matrix_element.hpp"

#include <cmath>
#include <sstream>

#include "evenfix/errors.hpp"
#include "evenfix/tolerances.hpp"

namespace evenfix {

Key quantize(const Eigen::MatrixXd& m) {
  Key key;
  key.reserve(static_cast<std::size_t>(m.size()));
  for (Eigen::Index r = 0; r < m.rows(); ++r)
    for (Eigen::Index c = 0; c < m.cols(); ++c)
      key.push_back(static_cast<std::int64_t>(std::llround(m(r, c) / tol::key_grid)));
  return key;
}

std::vector<Key> neighbour_keys(const Eigen::MatrixXd& m, double margin, std::size_t cap) {
  const Key base = quantize(m);
  std::vector<std::pair<std::size_t, std::int64_t>> flips;
  std::size_t pos = 0;
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    for (Eigen::Index c = 0; c < m.cols(); ++c, ++pos) {
      const double scaled = m(r, c) / tol::key_grid;
      const double frac = scaled - std::floor(scaled);
      if (std::abs(frac - 0.5) < margin) {
        const std::int64_t other = frac < 0.5 ? base[pos] + 1 : base[pos] - 1;
        flips.emplace_back(pos, other);
      }
    }
  }
  std::vector<Key> out;
  if (flips.empty()) return out;
  const std::size_t bits = std::min<std::size_t>(flips.size(), 16);
  const std::size_t combos = std::size_t{1} << bits;
  for (std::size_t mask = 1; mask < combos && out.size() < cap; ++mask) {
    Key k = base;
    for (std::size_t b = 0; b < bits; ++b)
      if (mask & (std::size_t{1} << b)) k[flips[b].first] = flips[b].second;
    out.push_back(std::move(k));
  }
  return out;
}

double orthogonality_defect(const Eigen::MatrixXd& m) {
  const Eigen::MatrixXd eye = Eigen::MatrixXd::Identity(m.rows(), m.cols());
  return (m.transpose() * m - eye).cwiseAbs().maxCoeff();
}

MatrixElement::MatrixElement(Eigen::MatrixXd m) : m_(std::move(m)) {
  if (m_.rows() != m_.cols() || m_.rows() == 0) throw ParameterError("matrix element must be square and nonempty");
  const double defect = orthogonality_defect(m_);
  if (defect > tol::orth) {
    std::ostringstream os;
    os << "matrix is not orthogonal: max |g^T g - I| = " << defect;
    throw ToleranceFault(os.str());
  }
  key_ = quantize(m_);
}

MatrixElement operator*(const MatrixElement& a, const MatrixElement& b) {
  return MatrixElement(a.matrix() * b.matrix());
}

}  // namespace evenfix
