#include <doctest.h>

#include <random>

#include "evenfix/errors.hpp"
#include "evenfix/polymap.hpp"

using namespace evenfix;

TEST_SUITE("polymap") {
  TEST_CASE("monomial counts and order") {
    CHECK(monomials(4, 3).size() == 20);
    CHECK(monomials(8, 3).size() == 120);
    const auto m = monomials(2, 2);
    CHECK(m.front() == Exponent{2, 0});
    CHECK(m.back() == Exponent{0, 2});
  }

  TEST_CASE("arithmetic and evaluation") {
    const auto x = Polynomial::variable(2, 0), y = Polynomial::variable(2, 1);
    const Polynomial p = (x + y).pow(2) - x * x - y * y;
    CHECK(p.coefficient({1, 1}) == doctest::Approx(2.0));
    CHECK(p.pruned().terms().size() == 1);
    CHECK(p.evaluate(Eigen::Vector2d(3, 5)) == doctest::Approx(30.0));
    CHECK(p.homogeneous_degree() == 2);
    CHECK(p.derivative(0).evaluate(Eigen::Vector2d(3, 5)) == doctest::Approx(10.0));
  }

  TEST_CASE("gradient of the squared norm") {
    const PolyMap g = gradient(squared_norm(3));
    const Eigen::Vector3d v(1, -2, 4);
    CHECK((g.evaluate(v) - 2 * v).norm() < 1e-14);
  }

  TEST_CASE("coefficient vectors round-trip") {
    std::mt19937_64 rng(1);
    std::normal_distribution<double> g;
    Eigen::VectorXd c(4 * 20);
    for (Eigen::Index i = 0; i < c.size(); ++i) c(i) = g(rng);
    const PolyMap p = from_coefficient_vector(4, 3, c);
    CHECK((coefficient_vector(p) - c).norm() < 1e-14);
  }

  TEST_CASE("action and restriction") {
    const PolyMap id = PolyMap::identity(3);
    Eigen::MatrixXd rot = Eigen::MatrixXd::Zero(3, 3);
    rot << 0, -1, 0, 1, 0, 0, 0, 0, 1;
    const Eigen::Vector3d v(0.3, 0.1, -2);
    CHECK((act(rot, id).evaluate(v) - v).norm() < 1e-14);
    Eigen::MatrixXd B(3, 1);
    B << 0, 0, 1;
    const PolyMap r = restrict_to(multiply(squared_norm(3), id), B);
    CHECK(r.n == 1);
    CHECK(r.evaluate(Eigen::VectorXd::Constant(1, 2.0))(0) == doctest::Approx(8.0));
  }

  TEST_CASE("shape validation") {
    CHECK_THROWS_AS(PolyMap(2, 1, {Polynomial::variable(2, 0)}), ParameterError);
    CHECK_THROWS_AS(PolyMap(2, 2, {Polynomial::variable(2, 0), Polynomial::variable(2, 1)}), ParameterError);
  }
}
