#include "doctest.h"

#include "cyclotome/derived.hpp"
#include "cyclotome/errors.hpp"

using namespace cyclotome;

namespace {

std::vector<Quiver> sample() {
  std::vector<Quiver> out;
  for (const char* t : {"A1", "A2", "A3", "A4", "D4", "D5", "E6"})
    for (const char* o : {"linear", "alternating"}) out.push_back(Quiver::load(t, o));
  return out;
}

}  // namespace

TEST_CASE("knitting finds every indecomposable once") {
  for (const auto& q : sample()) {
    CAPTURE(q.type().name());
    const DerivedCategory cat(q);
    CHECK(cat.modules().size() == q.positive_roots().size());
    for (const auto& r : q.positive_roots()) CHECK(cat.module_with_root(r).has_value());
    for (int i = 0; i < q.rank(); ++i) {
      CHECK(cat.root(cat.projective(i)) == q.projective_dim(i));
      CHECK(cat.root(cat.injective(i)) == q.injective_dim(i));
      CHECK(cat.root(cat.simple(i)) == q.simple_root(i));
      CHECK(cat.is_injective(cat.injective(i)));
    }
  }
}

TEST_CASE("window has n h objects and mesh relations hold") {
  for (const auto& q : sample()) {
    CAPTURE(q.type().name());
    const DerivedCategory cat(q);
    const auto& win = cat.window();
    CHECK(win.size() == static_cast<std::size_t>(q.rank() * q.coxeter_number()));
    for (const auto& w : win) {
      CHECK(cat.signed_class(w.object) == w.signed_class);
      CHECK(cat.object_at(w.position) == w.object);
      if (w.position.step == 0) continue;
      // [tau x] + [x] = sum of the middle terms
      DimensionVector lhs = cat.signed_class(cat.object_at({w.position.vertex, w.position.step - 1})) + w.signed_class;
      DimensionVector rhs(static_cast<std::size_t>(q.rank()));
      for (const auto& m : w.middle) rhs += cat.signed_class(cat.object_at(m));
      CHECK(lhs == rhs);
    }
  }
}

TEST_CASE("tau^h = Sigma^-2 and tau is inverse to tau^-1") {
  for (const auto& q : sample()) {
    const DerivedCategory cat(q);
    for (const auto& w : cat.window()) {
      CHECK(cat.tau_power(w.object, q.coxeter_number()) == cat.sigma_shift(w.object, -2));
      CHECK(cat.tau(cat.tau_inv(w.object)) == w.object);
      CHECK(cat.signed_class(cat.tau(w.object)) == q.coxeter_matrix().apply(w.signed_class));
    }
  }
}

TEST_CASE("Serre duality Hom(x, y) = Hom(y, nu x)") {
  for (const auto& q : sample()) {
    const DerivedCategory cat(q);
    for (const auto& x : cat.window())
      for (const auto& y : cat.window())
        CHECK(cat.hom_dim(x.object, y.object) == cat.hom_dim(y.object, cat.nu(x.object)));
  }
}

TEST_CASE("Hom between modules is bounded by the Euler form") {
  for (const auto& q : sample()) {
    const DerivedCategory cat(q);
    for (const auto& m : cat.modules())
      for (const auto& n : cat.modules()) {
        const DerivedObject x{m, 0}, y{n, 0};
        CHECK(cat.hom_dim(x, y) - cat.hom_dim(x, cat.sigma_shift(y)) == q.euler_form(cat.root(m), cat.root(n)));
        CHECK(cat.hom_dim(x, cat.sigma_shift(y, 2)) == 0);
        CHECK(cat.hom_dim(x, cat.sigma_shift(y, -1)) == 0);
      }
  }
}

TEST_CASE("names round-trip") {
  const DerivedCategory cat(Quiver::load("A2", "linear"));
  CHECK(cat.name(cat.simple(0)) == "S1");
  CHECK(cat.name(IndModule{1, 0}) == "P2");
  CHECK(cat.name(DerivedObject{cat.simple(1), 1}) == "SigmaS2");
  CHECK(cat.name(DerivedObject{cat.simple(1), -2}) == "Sigma^-2S2");
  for (const auto& w : cat.window()) CHECK(cat.parse_name(cat.name(w.object)) == w.object);
  CHECK(cat.parse_name("\xCE\xA3S1") == DerivedObject{cat.simple(0), 1});
  CHECK_FALSE(cat.parse_name("P7").has_value());
  CHECK_FALSE(cat.parse_name("Q1").has_value());
}

TEST_CASE("AR quiver DOT output") {
  const DerivedCategory cat(Quiver::load("A3", "linear"));
  const std::string dot = cat.ar_quiver_dot();
  CHECK(dot.rfind("digraph ar_quiver {", 0) == 0);
  CHECK(dot.find("style=dashed") != std::string::npos);
  CHECK(dot.back() == '\n');
}
