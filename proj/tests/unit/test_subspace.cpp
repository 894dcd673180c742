#include <doctest.h>

#include "evenfix/errors.hpp"
#include "evenfix/subspace.hpp"

using namespace evenfix;

TEST_SUITE("subspace") {
  TEST_CASE("rank decision with a clear gap") {
    Eigen::VectorXd s(4);
    s << 3.0, 1.0, 1e-14, 0.0;
    const auto d = decide_rank(s);
    CHECK(d.rank == 2);
    CHECK(d.gap() > 1e3);
  }

  TEST_CASE("ambiguous spectrum is refused") {
    Eigen::VectorXd s(3);
    s << 1.0, 1e-6, 1e-8;
    CHECK_THROWS_AS(decide_rank(s), ToleranceFault);
  }

  TEST_CASE("null space") {
    Eigen::MatrixXd m(2, 3);
    m << 1, 0, 0, 0, 1, 0;
    const auto n = null_space(m);
    REQUIRE(n.cols() == 1);
    CHECK(std::abs(std::abs(n(2, 0)) - 1.0) < 1e-12);
  }

  TEST_CASE("membership, intersection, equality") {
    Eigen::MatrixXd a(3, 2), b(3, 2);
    a << 1, 0, 0, 1, 0, 0;
    b << 0, 0, 1, 0, 0, 1;
    const Subspace A(3, a), B(3, b);
    CHECK(A.dim() == 2);
    CHECK(A.contains(Eigen::Vector3d(2, -1, 0)));
    CHECK_FALSE(A.contains(Eigen::Vector3d(0, 0, 1)));
    const Subspace C = A.intersect(B);
    CHECK(C.dim() == 1);
    CHECK(C.contains(Eigen::Vector3d(0, 5, 0)));
    CHECK(Subspace::full(3).intersect(A).same_as(A));
    CHECK(Subspace::zero(3).dim() == 0);
  }

  TEST_CASE("basis is orthonormal") {
    Eigen::MatrixXd span(4, 3);
    span << 1, 1, 2, 1, -1, 0, 0, 1, 1, 0, 0, 1;
    const Subspace S(4, span);
    CHECK(S.dim() == 3);
    CHECK((S.basis().transpose() * S.basis() - Eigen::MatrixXd::Identity(3, 3)).cwiseAbs().maxCoeff() < 1e-12);
    CHECK(span_rank(span) == 3);
  }
}
