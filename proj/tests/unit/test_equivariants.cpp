#include <doctest.h>

#include <random>

#include "evenfix/equivariants.hpp"
#include "evenfix/errors.hpp"

using namespace evenfix;

namespace {

double coefficient_distance(const PolyMap& a, const PolyMap& b) {
  return (coefficient_vector(a) - coefficient_vector(b)).cwiseAbs().maxCoeff();
}

}  // namespace

TEST_SUITE("equivariants") {
  TEST_CASE("dimensions of G3") {
    for (int m : {3, 5}) {
      const auto G = close_group(build_g3_generators(m));
      CHECK(equivariant_dimension(G, 1) == 1);
      CHECK(equivariant_dimension(G, 2) == 0);
      CHECK(equivariant_dimension(G, 3) == 3);
      CHECK(reynolds_equivariant_basis(G, 3).maps.size() == 3);
    }
  }

  TEST_CASE("character count equals Reynolds rank") {
    for (auto G : {close_group(build_g3_generators(3)), close_group(build_g8_generators(1))})
      for (int d = 1; d <= 3; ++d)
        CHECK(equivariant_dimension(G, d) == static_cast<int>(reynolds_equivariant_basis(G, d).maps.size()));
    const auto G3 = close_group(build_g3_generators(3));
    for (int d = 4; d <= 5; ++d)
      CHECK(equivariant_dimension(G3, d) == static_cast<int>(reynolds_equivariant_basis(G3, d).maps.size()));
  }

  TEST_CASE("even degrees vanish when -I is present") {
    for (auto G : {close_group(build_g3_generators(5)), close_group(build_g8_generators(2))})
      for (int d : {2, 4, 6}) CHECK(equivariant_dimension(G, d) == 0);
  }

  TEST_CASE("trivial group") {
    const auto G = close_group(custom_generators({Eigen::MatrixXd::Identity(2, 2)}));
    CHECK(reynolds_equivariant_basis(G, 1).maps.size() == 4);
    CHECK(equivariant_dimension(G, 1) == 4);
  }

  TEST_CASE("conjugated group has the same dimensions") {
    const auto gs = build_g3_generators(3);
    Eigen::MatrixXd Q = Eigen::HouseholderQR<Eigen::MatrixXd>(Eigen::MatrixXd::Random(4, 4)).householderQ();
    std::vector<Eigen::MatrixXd> conj;
    for (const auto& g : gs.generators) conj.push_back(Q * g.matrix() * Q.transpose());
    const auto G = close_group(custom_generators(conj));
    for (int d = 1; d <= 5; ++d) CHECK(equivariant_dimension(G, d) == equivariant_dimension(close_group(gs), d));
  }

  TEST_CASE("basis maps are equivariant and normalized") {
    const auto G = close_group(build_g8_generators(1));
    const auto b = reynolds_equivariant_basis(G, 3);
    CHECK(b.decision.gap() >= tol::rank_gap);
    for (const auto& p : b.maps) {
      CHECK(equivariance_defect(G, p) < tol::equivariance);
      const Eigen::VectorXd c = coefficient_vector(p);
      Eigen::Index first = 0;
      while (std::abs(c(first)) < 1e-12) ++first;
      CHECK(c(first) == doctest::Approx(1.0));
    }
  }

  TEST_CASE("cubic equivariants of G3") {
    const auto [e1, e2] = g3_cubic_basis();
    CHECK((e1.evaluate(Eigen::Vector4d(1, 0, 1, 0)) - Eigen::Vector4d(1, 0, 1, 0)).norm() < 1e-14);
    CHECK(e1.evaluate(Eigen::Vector4d(1, 0, 0, 0)).norm() < 1e-14);
    for (int m : {3, 5}) {
      const auto G = close_group(build_g3_generators(m));
      CHECK(equivariance_defect(G, e1) < tol::equivariance);
      CHECK(equivariance_defect(G, e2) < tol::equivariance);
    }
  }

  TEST_CASE("gradients of the quartic invariants") {
    const auto [e1, e2] = g3_cubic_basis();
    const auto [i1, i2] = g3_quartic_invariants();
    CHECK(gradient_check(i1, e1));
    CHECK(gradient_check(i2, e2));
    CHECK_FALSE(gradient_check(i1, e2));
    const GradientCheck c = check_gradient(i1, e1);
    CHECK(c.numeric_error < 1e-6);
  }

  TEST_CASE("radial map completes the cubic basis") {
    const auto [e1, e2] = g3_cubic_basis();
    Eigen::MatrixXd cols(coefficient_vector(e1).size(), 3);
    cols << coefficient_vector(e1), coefficient_vector(e2), coefficient_vector(radial_cubic());
    CHECK(span_rank(cols) == 3);
  }

  TEST_CASE("Reynolds average is idempotent") {
    const auto G = close_group(build_g3_generators(3));
    const auto [e1, e2] = g3_cubic_basis();
    CHECK(coefficient_distance(reynolds_average(G, e1), e1) < 1e-10);
    const PolyMap once = reynolds_average(G, from_coefficient_vector(4, 3, Eigen::VectorXd::LinSpaced(80, -1, 1)));
    CHECK(coefficient_distance(reynolds_average(G, once), once) < 1e-10);
  }

  TEST_CASE("restriction to Fix(<R2^2>)") {
    const auto G = close_group(build_g8_generators(1));
    const Eigen::MatrixXd R2 = G.g8()->R2;
    const IndexSet H = subgroup_generated(G, {G.index_of(R2 * R2)});
    const auto r3 = restriction_rank(G, H, 3);
    CHECK(r3.domain_dim == equivariant_dimension(G, 3));
    CHECK(r3.image_rank == 3);
    CHECK(r3.target_dim == 3);
    CHECK(r3.surjective());
    CHECK(restriction_rank(G, H, 1).image_rank == 1);
  }

  TEST_CASE("limits") {
    const auto G = close_group(build_g8_generators(1));
    CHECK_THROWS_AS(reynolds_equivariant_basis(G, 5), ParameterError);
    CHECK_THROWS_AS(equivariant_dimension(G, kMaxCharacterDegree + 1), ParameterError);
  }
}
