#include "doctest.h"

#include "cyclotome/cyclic_index.hpp"

using namespace cyclotome;

namespace {

std::vector<CycIndex> sample() {
  std::vector<CycIndex> out;
  for (const char* t : {"A1", "A2", "A3", "A4", "D4", "D5", "E6"})
    for (const char* o : {"linear", "alternating"}) out.push_back(CycIndex::build(Quiver::load(t, o)));
  return out;
}

}  // namespace

TEST_CASE("A2 index sets") {
  const CycIndex ci = CycIndex::build(Quiver::load("A2", "linear"));
  const auto& cat = ci.category();
  CHECK(ci.h() == 3);
  auto at = [&](int i, int a) { return cat.name(ci.section(ci.make(i - 1, a))); };
  CHECK(at(1, 1) == "S1");
  CHECK(at(1, 3) == "S2");
  CHECK(at(1, 5) == "SigmaP2");
  CHECK(at(2, 0) == "SigmaS2");
  CHECK(at(2, 2) == "P2");
  CHECK(at(2, 4) == "SigmaS1");
  CHECK(ci.name(ci.make(0, 0)) == "sigma(S1)");
  CHECK(ci.name(ci.make(1, 1)) == "sigma(P2)");
}

TEST_CASE("A1 index sets") {
  const CycIndex ci = CycIndex::build(Quiver::load("A1", "linear"));
  CHECK(ci.period() == 4);
  CHECK(ci.sigma_hat_vertices().size() == 2);
  CHECK(ci.name(ci.make(0, 1)) == "S1");
  CHECK(ci.name(ci.make(0, 3)) == "SigmaS1");
}

TEST_CASE("section and cover are inverse bijections") {
  for (const auto& ci : sample()) {
    const auto& win = ci.category().window();
    CHECK(ci.sigma_hat_vertices().size() == win.size());
    CHECK(ci.hat_vertices().size() == win.size());
    for (const auto& x : ci.sigma_hat_vertices()) CHECK(ci.cover(ci.section(x)) == x);
    for (const auto& w : win) CHECK(ci.section(ci.cover(w.object)) == w.object);
    for (const auto& y : ci.hat_vertices()) {
      CHECK(ci.in_hat(y));
      CHECK(ci.in_sigma_hat(ci.sigma(y)));
      CHECK(ci.in_sigma_hat(ci.sigma_inv(y)));
    }
  }
}

TEST_CASE("Sigma is an involution commuting with sigma and covering the shift") {
  for (const auto& ci : sample()) {
    const auto& cat = ci.category();
    for (const auto& x : ci.sigma_hat_vertices()) {
      CHECK(ci.Sigma(ci.Sigma(x)) == x);
      CHECK(ci.Sigma(ci.sigma(x)) == ci.sigma(ci.Sigma(x)));
      CHECK(ci.in_sigma_hat(ci.Sigma(x)));
      const DerivedObject m = ci.section(x);
      CHECK(ci.section(ci.Sigma(x)) == ci.section(ci.cover(cat.sigma_shift(m))));
      CHECK(ci.section(ci.tau(x)) == ci.section(ci.cover(cat.tau(m))));
    }
    for (const auto& y : ci.hat_vertices()) CHECK(ci.Sigma(ci.Sigma(y)) == y);
  }
}

TEST_CASE("q-Cartan matrix commutes with Sigma^*") {
  for (const auto& ci : sample()) {
    for (const auto& x : ci.sigma_hat_vertices()) {
      const VVector e = VVector::unit(x);
      const WVector ce = ci.q_cartan_apply(e);
      CHECK(ci.Sigma_star(ce) == ci.q_cartan_apply(ci.Sigma_star(e)));
      CHECK(ce.total() == 2 - static_cast<std::int64_t>(ci.quiver().neighbours(x.vertex).size()));
      for (const auto& [y, m] : ce.entries()) CHECK(ci.in_hat(y));
    }
  }
}

TEST_CASE("sigma pullbacks") {
  const CycIndex ci = CycIndex::build(Quiver::load("A3", "alternating"));
  for (const auto& x : ci.sigma_hat_vertices()) {
    const VVector v = VVector::unit(x, 3);
    // (sigma^* v)(y) = v(sigma y)
    const WVector w = ci.sigma_star(v);
    for (const auto& y : ci.hat_vertices()) CHECK(w.at(y) == v.at(ci.sigma(y)));
    CHECK(ci.sigma_star(w) == VVector::unit(ci.sigma_inv(ci.sigma_inv(x)), 3));
  }
}

TEST_CASE("names parse back") {
  for (const auto& ci : sample()) {
    for (const auto& x : ci.sigma_hat_vertices()) CHECK(ci.parse_name(ci.name(x)) == x);
    for (const auto& y : ci.hat_vertices()) CHECK(ci.parse_name(ci.name(y)) == y);
  }
}

TEST_CASE("sparse vectors") {
  VVector a = VVector::unit({0, 1}, 2);
  a.add({0, 1}, -2);
  CHECK(a.is_zero());
  CHECK((2 * VVector::unit({1, 3})).total() == 2);
  CHECK(VVector::unit({0, 1}).dominates(VVector()));
  CHECK_FALSE(VVector().dominates(VVector::unit({0, 1})));
  const CycIndex ci = CycIndex::build(Quiver::load("A2", "linear"));
  CHECK(to_string(ci, VVector::unit(ci.make(0, 1)) - 2 * VVector::unit(ci.make(1, 2))) == "e[S1] - 2 e[P2]");
  CHECK(to_string(ci, WVector()) == "0");
}
