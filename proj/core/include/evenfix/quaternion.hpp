#pragma once

#include <Eigen/Dense>

namespace evenfix {

struct Quaternion {
  double w = 1.0, x = 0.0, y = 0.0, z = 0.0;

  static Quaternion one() { return {1, 0, 0, 0}; }
  static Quaternion i() { return {0, 1, 0, 0}; }
  static Quaternion j() { return {0, 0, 1, 0}; }
  static Quaternion k() { return {0, 0, 0, 1}; }
  // cos(theta) + i sin(theta)
  static Quaternion complex_unit(double theta);

  Quaternion conj() const { return {w, -x, -y, -z}; }
  Quaternion operator-() const { return {-w, -x, -y, -z}; }
  double norm() const;
  Eigen::Vector4d vec() const { return {w, x, y, z}; }
  static Quaternion from_vec(const Eigen::Vector4d& v) { return {v[0], v[1], v[2], v[3]}; }
};

Quaternion operator*(const Quaternion& p, const Quaternion& q);

/// How a pair [a,b] acts on v in H = R^4.
enum class PairAction {
  left_conjugate,   // v -> conj(a) v b
  right_conjugate,  // v -> a v conj(b)
};

struct QuaternionPair {
  Quaternion left, right;

  /// [a,b] and [-a,-b] are the same map; flip so that the first nonzero
  /// component of `left` is positive.
  QuaternionPair normalized() const;
};

/// 4x4 matrix of the pair's action in the basis (1, i, j, k). Throws
/// ParameterError if either component is off the unit sphere.
Eigen::Matrix4d quaternion_pair_to_matrix(const QuaternionPair& p,
                                          PairAction action = PairAction::left_conjugate);

}  // namespace evenfix
