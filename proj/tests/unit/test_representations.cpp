#include "doctest.h"

#include "cyclotome/representations.hpp"

using namespace cyclotome;

TEST_CASE("rank and left kernel over Q") {
  RatMatrix m(2, 3);
  m.at(0, 0) = 1;
  m.at(0, 1) = 2;
  m.at(1, 0) = 2;
  m.at(1, 1) = 4;
  CHECK(rank(m) == 1);
  const RatMatrix k = left_kernel(m);
  CHECK(k.rows == 1);
  for (int j = 0; j < 3; ++j) CHECK(k.at(0, 0) * m.at(0, j) + k.at(0, 1) * m.at(1, j) == 0);
}

TEST_CASE("reflection functors build indecomposables with the right dimensions") {
  for (const char* t : {"A3", "D4", "D5", "E6"}) {
    for (const char* o : {"linear", "alternating"}) {
      const Quiver q = Quiver::load(t, o);
      for (const auto& r : q.positive_roots()) {
        const Representation rep = build_indecomposable(q, r);
        for (int i = 0; i < q.rank(); ++i) CHECK(rep.dims[static_cast<std::size_t>(i)] == r[static_cast<std::size_t>(i)]);
        // indecomposable and rigid: End = k, Ext^1 = 0
        CHECK(hom_space_dim(q, rep, rep) == 1);
        CHECK(ext1_space_dim(q, rep, rep) == 0);
      }
    }
  }
}

TEST_CASE("explicit Hom and Ext agree with the Euler form") {
  const Quiver q = Quiver::load("D4", "alternating");
  for (const auto& a : q.positive_roots())
    for (const auto& b : q.positive_roots()) {
      const auto ra = build_indecomposable(q, a), rb = build_indecomposable(q, b);
      CHECK(hom_space_dim(q, ra, rb) - ext1_space_dim(q, ra, rb) == q.euler_form(a, b));
    }
}
