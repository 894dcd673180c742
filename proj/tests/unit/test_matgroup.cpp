#include <doctest.h>

#include "evenfix/errors.hpp"
#include "evenfix/matgroup.hpp"

using namespace evenfix;

namespace {

Eigen::MatrixXd power(const Eigen::MatrixXd& m, int e) {
  Eigen::MatrixXd p = Eigen::MatrixXd::Identity(m.rows(), m.cols());
  for (int i = 0; i < e; ++i) p = p * m;
  return p;
}

}  // namespace

TEST_SUITE("matgroup") {
  TEST_CASE("G3 orders") {
    for (int m : {3, 5, 7, 9}) CHECK(close_group(build_g3_generators(m)).order() == static_cast<std::size_t>(16 * m));
  }

  TEST_CASE("G8 orders") {
    for (int l : {1, 2, 3}) CHECK(close_group(build_g8_generators(l)).order() == static_cast<std::size_t>(64 + 128 * l));
  }

  TEST_CASE("parameter validation") {
    CHECK_THROWS_AS(build_g3_generators(4), ParameterError);
    CHECK_THROWS_AS(build_g3_generators(1), ParameterError);
    CHECK_THROWS_AS(build_g8_generators(0), ParameterError);
  }

  TEST_CASE("generators of G3 include [1,i]") {
    const auto gs = build_g3_generators(3);
    const Eigen::MatrixXd one_i = quaternion_pair_to_matrix({Quaternion::one(), Quaternion::i()});
    bool found = false;
    for (const auto& g : gs.generators) found = found || (g.matrix() - one_i).cwiseAbs().maxCoeff() < 1e-14;
    CHECK(found);
  }

  TEST_CASE("trivial group") {
    const auto G = close_group(custom_generators({Eigen::MatrixXd::Identity(3, 3)}));
    CHECK(G.order() == 1);
    CHECK(G.element_order(G.identity()) == 1);
  }

  TEST_CASE("elements lie in SO(n)") {
    const auto G = close_group(build_g8_generators(1));
    for (std::size_t i = 0; i < G.order(); ++i) {
      CHECK(orthogonality_defect(G.matrix(i)) < tol::orth);
      CHECK(std::abs(G.matrix(i).determinant() - 1.0) < tol::orth);
    }
  }

  TEST_CASE("closing a closed group reproduces its element list") {
    const auto G = close_group(build_g3_generators(5));
    std::vector<Eigen::MatrixXd> all;
    for (std::size_t i = 0; i < G.order(); ++i) all.push_back(G.matrix(i));
    const auto H = close_group(custom_generators(all));
    REQUIRE(H.order() == G.order());
    for (std::size_t i = 0; i < G.order(); ++i) CHECK(H[i] == G[i]);
  }

  TEST_CASE("identity, inverses and closure") {
    const auto G = close_group(build_g3_generators(3));
    CHECK((G.matrix(G.identity()) - Eigen::MatrixXd::Identity(4, 4)).cwiseAbs().maxCoeff() < 1e-12);
    for (std::size_t i = 0; i < G.order(); ++i) {
      CHECK(G.multiply(i, G.inverse(i)) == G.identity());
      CHECK(G.find(G.matrix(i).transpose()).has_value());
    }
    CHECK(G.min_separation() > 2 * tol::key_grid);
  }

  TEST_CASE("Lagrange") {
    const auto G = close_group(build_g8_generators(2));
    for (std::size_t i = 0; i < G.order(); ++i) CHECK(G.order() % G.element_order(i) == 0);
  }

  TEST_CASE("G(1) embeds in G(4)") {
    // k = 12 divides k = 36
    const auto small = close_group(build_g8_generators(1));
    const auto big = close_group(build_g8_generators(4));
    CHECK(big.order() == 576);
    std::size_t found = 0;
    for (std::size_t i = 0; i < small.order(); ++i) found += big.find(small.matrix(i)).has_value() ? 1 : 0;
    CHECK(found == small.order());
  }

  TEST_CASE("element orders of R1 and A") {
    for (int l : {1, 2, 3}) {
      const auto gs = build_g8_generators(l);
      CHECK(element_order(gs.g8->R1) == 8);
      CHECK(element_order(gs.g8->A) == 2 * gs.k);
    }
    CHECK(element_order(Eigen::MatrixXd::Identity(8, 8)) == 1);
  }

  TEST_CASE("A^8 = R3^8 and R3 periodicity") {
    const auto l1 = build_g8_generators(1);
    CHECK((power(l1.g8->A, 8) - power(l1.g8->R3, 8)).cwiseAbs().maxCoeff() < 1e-9);
    CHECK((power(l1.g8->R3, 3) - Eigen::MatrixXd::Identity(8, 8)).cwiseAbs().maxCoeff() < 1e-9);
    const auto l2 = build_g8_generators(2);
    CHECK((power(l2.g8->R3, 5) - Eigen::MatrixXd::Identity(8, 8)).cwiseAbs().maxCoeff() > 1e-3);
    CHECK((power(l2.g8->R3, 10) - Eigen::MatrixXd::Identity(8, 8)).cwiseAbs().maxCoeff() < 1e-9);
  }

  TEST_CASE("relation report") {
    for (int l : {1, 2, 3}) {
      const auto r = verify_matrix_relations(l);
      for (const auto& c : r.checks) CHECK_MESSAGE(c.holds, "l=" << l << ": " << c.name);
      CHECK(r.order_A == 2 * r.k);
      CHECK(r.order_R1 == 8);
    }
    REQUIRE(verify_matrix_relations(1).find("no sigma with A R1^2 = R1^2 A^sigma") != nullptr);
  }

  TEST_CASE("closure bound") {
    Eigen::MatrixXd rot(2, 2);
    rot << std::cos(1.0), -std::sin(1.0), std::sin(1.0), std::cos(1.0);
    CHECK_THROWS_AS(close_group(custom_generators({rot}), 100), ClosureFault);
  }

  TEST_CASE("non-orthogonal generator") {
    Eigen::MatrixXd m = Eigen::MatrixXd::Identity(2, 2);
    m(0, 1) = 0.1;
    CHECK_THROWS_AS(MatrixElement{m}, ToleranceFault);
  }

  TEST_CASE("subgroups") {
    const auto G = close_group(build_g3_generators(3));
    const auto H = subgroup_generated(G, {G.generators()[0]});
    CHECK(is_subgroup(G, H));
    CHECK(G.order() % H.size() == 0);
    CHECK_FALSE(is_subgroup(G, {G.generators()[0]}));
  }
}
