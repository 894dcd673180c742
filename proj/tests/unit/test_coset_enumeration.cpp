#include <doctest.h>

#include "evenfix/coset_enumeration.hpp"
#include "evenfix/errors.hpp"

using namespace evenfix;
using namespace evenfix::detail;

TEST_SUITE("coset_enumeration") {
  TEST_CASE("cyclic group") {
    CHECK(enumerate_cosets({power(X, 7), power(Y, 1)}).size() == 7);
  }

  TEST_CASE("symmetric group S3") {
    const auto t = enumerate_cosets({power(X, 2), power(Y, 2), concat({power(X, 1), power(Y, 1), power(X, 1), power(Y, 1), power(X, 1), power(Y, 1)})});
    CHECK(t.size() == 6);
    CHECK(t.trace(0, {X, X}) == 0);
    CHECK(t.trace(0, {X, Y, X, Y, X, Y}) == 0);
  }

  TEST_CASE("alternating group A4") {
    const Relator xy = concat({power(X, 1), power(Y, 1)});
    CHECK(enumerate_cosets({power(X, 2), power(Y, 3), concat({xy, xy, xy})}).size() == 12);
  }

  TEST_CASE("a presentation of the trivial group forces coincidences") {
    // y^-1 x y = x^2, x^-1 y x = y^2
    const auto t = enumerate_cosets({concat({power(Y, -1), power(X, 1), power(Y, 1), power(X, -2)}),
                                     concat({power(X, -1), power(Y, 1), power(X, 1), power(Y, -2)})});
    CHECK(t.size() == 1);
  }

  TEST_CASE("infinite group exceeds the bound") {
    CHECK_THROWS_AS(enumerate_cosets({concat({power(X, 1), power(Y, 1), power(X, -1), power(Y, -1)})}, 1000), InternalFault);
  }
}
