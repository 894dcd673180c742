#include <doctest.h>

#include "evenfix/errors.hpp"
#include "evenfix/quaternion.hpp"

using namespace evenfix;

TEST_SUITE("quaternion") {
  TEST_CASE("identity pair") {
    const auto m = quaternion_pair_to_matrix({Quaternion::one(), Quaternion::one()});
    CHECK((m - Eigen::Matrix4d::Identity()).cwiseAbs().maxCoeff() < 1e-15);
  }

  TEST_CASE("[j,i] reverses coordinates") {
    const auto m = quaternion_pair_to_matrix({Quaternion::j(), Quaternion::i()});
    const Eigen::Vector4d v(1, 2, 3, 4);
    CHECK((m * v - Eigen::Vector4d(4, 3, 2, 1)).norm() < 1e-14);
  }

  TEST_CASE("[j,k] action") {
    const auto m = quaternion_pair_to_matrix({Quaternion::j(), Quaternion::k()});
    const Eigen::Vector4d v(1, 2, 3, 4);
    CHECK((m * v - Eigen::Vector4d(-2, -1, 4, 3)).norm() < 1e-14);
  }

  TEST_CASE("sign of the pair does not matter") {
    const QuaternionPair p{Quaternion::complex_unit(0.3), Quaternion::j()};
    const QuaternionPair q{-p.left, -p.right};
    CHECK((quaternion_pair_to_matrix(p) - quaternion_pair_to_matrix(q)).cwiseAbs().maxCoeff() < 1e-15);
    CHECK(q.normalized().left.w > 0);
  }

  TEST_CASE("matrices are special orthogonal") {
    const QuaternionPair p{Quaternion::complex_unit(1.1), Quaternion::complex_unit(0.4) * Quaternion::j()};
    for (auto action : {PairAction::left_conjugate, PairAction::right_conjugate}) {
      const auto m = quaternion_pair_to_matrix(p, action);
      CHECK((m.transpose() * m - Eigen::Matrix4d::Identity()).cwiseAbs().maxCoeff() < 1e-14);
      CHECK(m.determinant() == doctest::Approx(1.0));
    }
  }

  TEST_CASE("non-unit quaternion is rejected") {
    const QuaternionPair p{{2, 0, 0, 0}, Quaternion::one()};
    CHECK_THROWS_AS(quaternion_pair_to_matrix(p), ParameterError);
  }

  TEST_CASE("multiplication table") {
    const auto i = Quaternion::i(), j = Quaternion::j(), k = Quaternion::k();
    CHECK((i * j).vec() == k.vec());
    CHECK((j * i).vec() == (-k).vec());
    CHECK((i * i).vec() == (-Quaternion::one()).vec());
  }
}
