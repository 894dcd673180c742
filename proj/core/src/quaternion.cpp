#include "evenfix/quaternion.hpp"

#include <cmath>
#include <sstream>

#include "evenfix/errors.hpp"
#include "evenfix/tolerances.hpp"

namespace evenfix {

Quaternion Quaternion::complex_unit(double theta) { return {std::cos(theta), std::sin(theta), 0, 0}; }

double Quaternion::norm() const { return std::sqrt(w * w + x * x + y * y + z * z); }

Quaternion operator*(const Quaternion& p, const Quaternion& q) {
  return {p.w * q.w - p.x * q.x - p.y * q.y - p.z * q.z,
          p.w * q.x + p.x * q.w + p.y * q.z - p.z * q.y,
          p.w * q.y - p.x * q.z + p.y * q.w + p.z * q.x,
          p.w * q.z + p.x * q.y - p.y * q.x + p.z * q.w};
}

QuaternionPair QuaternionPair::normalized() const {
  for (double c : {left.w, left.x, left.y, left.z}) {
    if (std::abs(c) > tol::norm) return c > 0 ? *this : QuaternionPair{-left, -right};
  }
  return *this;
}

Eigen::Matrix4d quaternion_pair_to_matrix(const QuaternionPair& p, PairAction action) {
  for (const Quaternion* q : {&p.left, &p.right}) {
    const double dev = std::abs(q->norm() - 1.0);
    if (dev > tol::norm) {
      std::ostringstream os;
      os << "quaternion pair component has norm " << q->norm() << " (deviation " << dev << ")";
      throw ParameterError(os.str());
    }
  }
  const QuaternionPair n = p.normalized();
  const Quaternion basis[4] = {Quaternion::one(), Quaternion::i(), Quaternion::j(), Quaternion::k()};
  Eigen::Matrix4d m;
  for (int c = 0; c < 4; ++c) {
    const Quaternion img = action == PairAction::left_conjugate ? n.left.conj() * basis[c] * n.right
                                                                : n.left * basis[c] * n.right.conj();
    m.col(c) = img.vec();
  }
  return m;
}

}  // namespace evenfix
