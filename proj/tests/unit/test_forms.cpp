#include "doctest.h"

#include "cyclotome/errors.hpp"
#include "cyclotome/forms.hpp"
#include "cyclotome/literal.hpp"

using namespace cyclotome;

namespace {

std::vector<VWPair> test_pairs(const CycIndex& ci) {
  std::vector<VWPair> out;
  for (const auto& m : ci.category().modules()) out.push_back(iota(ci, m));
  for (int i = 0; i < ci.rank(); ++i) {
    out.push_back({v_f(ci, i), w_f(ci, i)});
    out.push_back({v_sigma_f(ci, i), w_f(ci, i)});
    out.push_back({{}, ci.e_sigma(DerivedObject{ci.category().simple(i), 1})});
  }
  return out;
}

}  // namespace

TEST_CASE("Phi on simple generators") {
  const CycIndex ci = CycIndex::build(Quiver::load("A3", "alternating"));
  const auto& cat = ci.category();
  for (int i = 0; i < 3; ++i) {
    const auto a = ci.quiver().simple_root(i);
    const DimensionVector z(3);
    CHECK(phi(ci, ci.e_sigma(DerivedObject{cat.simple(i), 0})) == GradedClass{a, z});
    CHECK(phi(ci, ci.e_sigma(DerivedObject{cat.simple(i), 1})) == GradedClass{z, a});
    CHECK(phi(ci, w_f(ci, i)) == GradedClass{a, a});
  }
}

TEST_CASE("form identities") {
  for (const char* t : {"A2", "A3", "D4"}) {
    for (const auto& q : Quiver::all_orientations(DynkinType::parse(t))) {
      const CycIndex ci = CycIndex::build(q);
      const auto ps = test_pairs(ci);
      for (const auto& a : ps) {
        CHECK(exponent_L(ci, a.w) == exponent_K(ci, a.w) - HalfInt(deg_phi(ci, a.w)));
        for (const auto& b : ps) {
          CHECK(leading_exponent_tilde(ci, a, b) == -leading_exponent_tilde(ci, b, a));
          CHECK(twist_exponent(ci, a.w, b.w) == -twist_exponent(ci, b.w, a.w));
          CHECK(d_form(ci, {ci.Sigma_star(a.v), ci.Sigma_star(a.w)}, {ci.Sigma_star(b.v), ci.Sigma_star(b.w)}) ==
                d_form(ci, a, b));
          CHECK(d_form(ci, a + b, a) == d_form(ci, a, a) + d_form(ci, b, a));
          CHECK(d_form(ci, a, a + b) == d_form(ci, a, a) + d_form(ci, a, b));
        }
      }
    }
  }
}

TEST_CASE("A2 values") {
  const CycIndex ci = CycIndex::build(Quiver::load("A2", "linear"));
  const VWPair e1 = parse_pair_literal(ci, "w=sigma(S1)");
  const VWPair k1p = parse_pair_literal(ci, "v=S1,P2;w=sigma(S1),sigma(SigmaS1)");
  CHECK(d_form(ci, e1, k1p) == 0);
  CHECK(d_form(ci, k1p, e1) == 1);
  CHECK(leading_exponent(ci, e1, k1p) - leading_exponent(ci, k1p, e1) == HalfInt(2));
  CHECK(N_phi(ci, k1p.w) == 2);
  CHECK(exponent_K(ci, e1.w) == HalfInt::half(1));
}

TEST_CASE("hl_form") {
  const CycIndex ci = CycIndex::build(Quiver::load("D4", "alternating"));
  const auto& mods = ci.category().modules();
  for (const auto& m : mods) {
    CHECK(hl_form(ci, m, m) == 0);
    for (const auto& n : mods) {
      CHECK(hl_form(ci, m, n) == -hl_form(ci, n, m));
      if (m == n) continue;
      const WVector em = ci.e_sigma(DerivedObject{m, 0}), en = ci.e_sigma(DerivedObject{n, 0});
      CHECK(hl_form(ci, em, en) == hl_form(ci, m, n));
      CHECK(hl_form_extended(ci, em + en, en) == hl_form(ci, m, n));
    }
  }
  const auto s = ci.e_sigma(DerivedObject{ci.category().simple(0), 0});
  CHECK_THROWS_AS(hl_form(ci, 2 * s, s), NotIndecomposable);
  CHECK_THROWS_AS(hl_form(ci, ci.e_sigma(DerivedObject{ci.category().simple(0), 1}), s), NotIndecomposable);
  CHECK_THROWS_AS(hl_form_extended(ci, ci.e_sigma(DerivedObject{ci.category().simple(0), 1}), s), NotInWPlus);
}
