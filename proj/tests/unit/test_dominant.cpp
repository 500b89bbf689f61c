#include "doctest.h"

#include "cyclotome/dominant.hpp"
#include "cyclotome/errors.hpp"
#include "cyclotome/literal.hpp"

using namespace cyclotome;

namespace {

std::vector<CycIndex> sample() {
  std::vector<CycIndex> out;
  for (const char* t : {"A1", "A2", "A3", "A4", "D4", "D5", "E6"})
    for (const auto& q : Quiver::all_orientations(DynkinType::parse(t))) {
      out.push_back(CycIndex::build(q));
      if (out.size() % 4 == 0) break;
    }
  return out;
}

WVector w_of(const CycIndex& ci, const std::vector<std::int64_t>& plus, const std::vector<std::int64_t>& minus) {
  WVector w;
  const auto& cat = ci.category();
  for (int i = 0; i < ci.rank(); ++i) {
    w.add(ci.sigma(ci.cover(DerivedObject{cat.simple(i), 0})), plus[static_cast<std::size_t>(i)]);
    w.add(ci.sigma(ci.cover(DerivedObject{cat.simple(i), 1})), minus[static_cast<std::size_t>(i)]);
  }
  return w;
}

}  // namespace

TEST_CASE("A2 generators") {
  const CycIndex ci = CycIndex::build(Quiver::load("A2", "linear"));
  CHECK(v_f(ci, 0) == parse_v_literal(ci, "S1,P2"));
  CHECK(v_sigma_f(ci, 0) == parse_v_literal(ci, "SigmaP2,SigmaS1"));
  CHECK(v_f(ci, 1) == parse_v_literal(ci, "S2,SigmaS1"));
  CHECK(v_sigma_f(ci, 1) == parse_v_literal(ci, "S1,SigmaS2"));
  CHECK(w_f(ci, 0) == parse_w_literal(ci, "sigma(S1),sigma(SigmaS1)"));
}

TEST_CASE("generators are l-dominant with zero residual") {
  for (const auto& ci : sample())
    for (int i = 0; i < ci.rank(); ++i) {
      CHECK(residual(ci, {v_f(ci, i), w_f(ci, i)}).is_zero());
      CHECK(residual(ci, {v_sigma_f(ci, i), w_f(ci, i)}).is_zero());
      CHECK(ci.Sigma_star(v_f(ci, i)) == v_sigma_f(ci, i));
      CHECK(ci.Sigma_star(w_f(ci, i)) == w_f(ci, i));
    }
}

TEST_CASE("iota of indecomposables") {
  for (const auto& ci : sample()) {
    const Cones cones(ci);
    for (const auto& m : ci.category().modules()) {
      const VWPair p = iota(ci, m);
      CHECK(is_l_dominant(ci, p));
      CHECK(residual(ci, p) == ci.e_sigma(DerivedObject{m, 0}));
      CHECK(cones.in_V_plus(p.v));
      CHECK(cones.in_W_S(p.w));
      CHECK(solve_w_tilde(ci, residual(ci, p)) == p);
    }
  }
  const CycIndex a2 = CycIndex::build(Quiver::load("A2", "linear"));
  CHECK(iota(a2, IndModule{1, 0}) == parse_pair_literal(a2, "v=S1;w=sigma(S1),sigma(S2)"));
}

TEST_CASE("lift is additive") {
  const CycIndex ci = CycIndex::build(Quiver::load("A3", "alternating"));
  const auto& mods = ci.category().modules();
  for (std::size_t a = 0; a < mods.size(); ++a)
    for (std::size_t b = a; b < mods.size(); ++b) {
      const VWPair sum = iota(ci, mods[a]) + iota(ci, mods[b]);
      CHECK(iota_additive(ci, {mods[a], mods[b]}) == sum);
      CHECK(solve_w_tilde(ci, residual(ci, sum)) == sum);
    }
}

TEST_CASE("Kostant partitions") {
  const Quiver a2 = Quiver::load("A2", "linear");
  const Quiver a3 = Quiver::load("A3", "linear");
  CHECK(kostant_partitions(a2, {0, 0}) == 1);
  CHECK(kostant_partitions(a2, {1, 1}) == 2);
  CHECK(kostant_partitions(a2, {2, 2}) == 3);
  CHECK(kostant_partitions(a3, {1, 1, 1}) == 4);
  CHECK(kostant_partitions(a3, {1, 0, 1}) == 1);
  CHECK(kostant_partitions(a3, {1, 2, 1}) == 5);
  const DerivedCategory cat(Quiver::load("D4", "alternating"));
  for (const auto& beta : {DimensionVector{1, 1, 1, 1}, DimensionVector{1, 2, 1, 1}, DimensionVector{2, 2, 1, 1}})
    CHECK(static_cast<std::int64_t>(kostant_partition_list(cat, beta).size()) == kostant_partitions(cat.quiver(), beta));
}

TEST_CASE("structural enumeration matches brute force and the counting formula") {
  for (const char* t : {"A2", "A3", "D4"}) {
    for (const auto& q : Quiver::all_orientations(DynkinType::parse(t))) {
      const CycIndex ci = CycIndex::build(q);
      const int n = ci.rank();
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
          std::vector<std::int64_t> plus(static_cast<std::size_t>(n)), minus(static_cast<std::size_t>(n));
          plus[static_cast<std::size_t>(i)] += 1;
          minus[static_cast<std::size_t>(j)] += 1;
          plus[static_cast<std::size_t>(j)] += 1;
          const WVector w = w_of(ci, plus, minus);
          const auto vs = enumerate_l_dominant(ci, w, {true, {}});
          CHECK(static_cast<std::int64_t>(vs.size()) == dominant_count(ci, w));
          for (const auto& v : vs) {
            const VWPair p{v, w};
            const Decomposition d = decompose(ci, p);
            CHECK(d.positive + d.cartan + d.negative == p);
          }
        }
    }
  }
}

TEST_CASE("errors") {
  const CycIndex ci = CycIndex::build(Quiver::load("A2", "linear"));
  CHECK_THROWS_AS(enumerate_l_dominant(ci, parse_w_literal(ci, "sigma(P2)")), NotSupported);
  CHECK_THROWS_AS(decompose(ci, parse_pair_literal(ci, "v=S1;w=sigma(S1)")), NotDominant);
  CHECK_THROWS_AS(solve_w_tilde(ci, parse_w_literal(ci, "sigma(SigmaS1)")), NotInWPlus);
  CHECK_FALSE(is_l_dominant(ci, parse_pair_literal(ci, "v=S1")));
}
