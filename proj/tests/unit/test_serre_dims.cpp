#include "doctest.h"

#include "cyclotome/dominant.hpp"
#include "cyclotome/errors.hpp"
#include "cyclotome/serre_dims.hpp"

using namespace cyclotome;

TEST_CASE("Serre quotient dimensions") {
  const Quiver a2 = Quiver::load("A2", "linear");
  CHECK(serre_quotient_dim(a2, {1, 1}) == 2);
  CHECK(serre_quotient_dim(a2, {2, 1}) == 2);
  CHECK(serre_quotient_dim(a2, {2, 2}) == 3);
  CHECK(serre_quotient_dim(a2, {3, 0}) == 1);
  const Quiver a3 = Quiver::load("A3", "alternating");
  // 1 and 3 commute
  CHECK(serre_quotient_dim(a3, {1, 0, 1}) == 1);
  CHECK(serre_quotient_dim(a3, {1, 1, 1}) == 4);
}

TEST_CASE("dimensions agree with Kostant on D4 in low degree") {
  const Quiver d4 = Quiver::load("D4", "linear");
  for (const auto& [beta, dim] : serre_quotient_dims(d4, 3)) CHECK(dim == kostant_partitions(d4, beta));
}

TEST_CASE("degree cap") {
  CHECK_THROWS_AS(serre_quotient_dims(Quiver::load("A2", "linear"), 7), DegreeTooLarge);
}
