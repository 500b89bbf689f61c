// Acceptance gate: one line per criterion, exact equality throughout.
#include <algorithm>
#include <chrono>
#include <iomanip>
#include <functional>
#include <iostream>
#include <map>
#include <set>

#include "cyclotome/literal.hpp"
#include "cyclotome/representations.hpp"
#include "cyclotome/serre_dims.hpp"
#include "cyclotome/verify.hpp"

using namespace cyclotome;

namespace {

struct Tally {
  std::size_t cases = 0;
  std::size_t failures = 0;
  std::string first;

  void expect(bool ok, const std::string& what) {
    ++cases;
    if (!ok && failures++ == 0) first = what;
  }
};

std::vector<Quiver> orientations(const std::string& type) { return Quiver::all_orientations(DynkinType::parse(type)); }

std::string where(const Quiver& q) { return q.type().name() + " [" + q.orientation_label() + "]"; }

// ---------------------------------------------------------------- oracles

int coxeter_number_table(const std::string& t) {
  const int n = std::stoi(t.substr(1));
  switch (t[0]) {
    case 'A': return n + 1;
    case 'D': return 2 * n - 2;
    default: return n == 6 ? 12 : n == 7 ? 18 : 30;
  }
}

// C e_(i,a) = e_(i,a+1) + e_(i,a-1) - sum over edges {i,j} of e_(j,a)
WVector q_cartan_oracle(const CycIndex& ci, const VVector& v) {
  WVector out;
  for (const auto& [x, m] : v.entries()) {
    out.add(ci.make(x.vertex, x.height + 1), m);
    out.add(ci.make(x.vertex, x.height - 1), m);
    for (const auto& a : ci.quiver().arrows()) {
      if (a.source == x.vertex) out.add(ci.make(a.target, x.height), -m);
      if (a.target == x.vertex) out.add(ci.make(a.source, x.height), -m);
    }
  }
  return out;
}

// Kostant partition function of A_n: positive roots are the intervals [a, b].
class TypeAKostant {
 public:
  explicit TypeAKostant(int n) : n_(n) {
    for (int a = 0; a < n; ++a)
      for (int b = a; b < n; ++b) roots_.emplace_back(a, b);
  }
  std::int64_t operator()(const std::vector<std::int64_t>& beta) { return count(beta, 0); }

 private:
  std::int64_t count(const std::vector<std::int64_t>& beta, std::size_t k) {
    bool zero = true;
    for (auto b : beta) zero = zero && b == 0;
    if (zero) return 1;
    if (k == roots_.size()) return 0;
    auto key = std::make_pair(beta, k);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    std::int64_t total = count(beta, k + 1);
    auto [a, b] = roots_[k];
    std::vector<std::int64_t> rest = beta;
    bool fits = true;
    for (int i = a; i <= b; ++i) fits = fits && --rest[static_cast<std::size_t>(i)] >= 0;
    if (fits) total += count(rest, k);
    memo_[key] = total;
    return total;
  }

  int n_;
  std::vector<std::pair<int, int>> roots_;
  std::map<std::pair<std::vector<std::int64_t>, std::size_t>, std::int64_t> memo_;
};

void for_each_vector(int n, int max_total, const std::function<void(const std::vector<std::int64_t>&)>& fn) {
  std::vector<std::int64_t> b(static_cast<std::size_t>(n), 0);
  std::function<void(int, int)> go = [&](int k, int left) {
    if (k == n) {
      fn(b);
      return;
    }
    for (int x = 0; x <= left; ++x) {
      b[static_cast<std::size_t>(k)] = x;
      go(k + 1, left - x);
    }
    b[static_cast<std::size_t>(k)] = 0;
  };
  go(0, max_total);
}

WVector w_on_simples(const CycIndex& ci, const std::vector<std::int64_t>& beta) {
  WVector w;
  for (int i = 0; i < ci.rank(); ++i)
    w.add(ci.sigma(ci.cover(DerivedObject{ci.category().simple(i), 0})), beta[static_cast<std::size_t>(i)]);
  return w;
}

// --------------------------------------------------------------- criteria

Tally criterion_1() {
  Tally t;
  for (const std::string type : {"A1", "A2", "A3", "A4", "A5", "D4", "D5", "E6"})
    for (const auto& q : orientations(type)) {
      const CycIndex ci = CycIndex::build(q);
      const int n = q.rank(), h = coxeter_number_table(type);
      std::size_t count = 0;
      for (int i = 0; i < n; ++i)
        for (int a = 0; a < 2 * h; ++a)
          if (!ci.in_hat(ci.make(i, a))) ++count;
      t.expect(ci.h() == h && count == static_cast<std::size_t>(n * h) && ci.sigma_hat_vertices().size() == count,
               where(q) + ": |sigma I-hat| = " + std::to_string(ci.sigma_hat_vertices().size()));
      std::set<DerivedObject> seen;
      for (const auto& x : ci.sigma_hat_vertices()) seen.insert(ci.section(x));
      t.expect(seen.size() == count, where(q) + ": section is not injective");
    }
  return t;
}

Tally criterion_2() {
  Tally t;
  for (const std::string type : {"A1", "A2", "A3", "A4", "A5", "D4", "D5", "E6"})
    for (const auto& q : orientations(type)) {
      const CycIndex ci = CycIndex::build(q);
      for (int i = 0; i < q.rank(); ++i) {
        const WVector w = w_f(ci, i);
        t.expect(w == q_cartan_oracle(ci, v_f(ci, i)), where(q) + ": w^f - C v^f at " + std::to_string(i + 1));
        t.expect(w == q_cartan_oracle(ci, v_sigma_f(ci, i)), where(q) + ": w^f - C v^Sf at " + std::to_string(i + 1));
      }
    }
  return t;
}

Tally criterion_3() {
  Tally t;
  const CycIndex a1 = CycIndex::build(Quiver::load("A1", "linear"));
  t.expect(v_f(a1, 0) == parse_v_literal(a1, "S1"), "A1 v^f");
  t.expect(v_sigma_f(a1, 0) == parse_v_literal(a1, "SigmaS1"), "A1 v^Sf");
  t.expect(w_f(a1, 0) == parse_w_literal(a1, "sigma(S1),sigma(SigmaS1)"), "A1 w^f");
  const CycIndex a2 = CycIndex::build(Quiver::load("A2", "linear"));
  t.expect(v_f(a2, 0) == parse_v_literal(a2, "S1,P2"), "A2 v^f1");
  t.expect(v_f(a2, 1) == parse_v_literal(a2, "S2,SigmaS1"), "A2 v^f2");
  t.expect(v_sigma_f(a2, 0) == parse_v_literal(a2, "SigmaS1,SigmaP2"), "A2 v^Sf1");
  t.expect(v_sigma_f(a2, 1) == parse_v_literal(a2, "SigmaS2,S1"), "A2 v^Sf2");
  t.expect(w_f(a2, 0) == parse_w_literal(a2, "sigma(S1),sigma(SigmaS1)"), "A2 w^f1");
  t.expect(w_f(a2, 1) == parse_w_literal(a2, "sigma(S2),sigma(SigmaS2)"), "A2 w^f2");
  const auto& cat = a2.category();
  t.expect(iota(a2, cat.simple(0)) == parse_pair_literal(a2, "v=0;w=sigma(S1)"), "A2 iota(S1)");
  t.expect(iota(a2, cat.simple(1)) == parse_pair_literal(a2, "v=0;w=sigma(S2)"), "A2 iota(S2)");
  t.expect(iota(a2, cat.projective(1)) == parse_pair_literal(a2, "v=S1;w=sigma(S1),sigma(S2)"), "A2 iota(P2)");
  // positions of the A2 index sets
  const std::pair<const char*, CycVertex> positions[] = {{"S1", {0, 1}},      {"S2", {0, 3}},     {"SigmaP2", {0, 5}},
                                                         {"SigmaS2", {1, 0}}, {"P2", {1, 2}},     {"SigmaS1", {1, 4}}};
  for (const auto& [name, x] : positions) t.expect(a2.parse_name(name) == x, std::string("A2 position of ") + name);
  return t;
}

Tally criterion_4() {
  Tally t;
  for (const std::string type : {"A1", "A2", "A3", "A4", "A5", "A6", "D4", "D5", "D6", "E6"})
    for (const auto& q : orientations(type)) {
      const CycIndex ci = CycIndex::build(q);
      for (const auto& m : ci.category().modules()) {
        const VWPair p = iota(ci, m);
        const WVector expected = WVector::unit(ci.sigma(ci.cover(m)));
        t.expect(p.w - q_cartan_oracle(ci, p.v) == expected && p.v.is_nonnegative() && p.w.is_nonnegative(),
                 where(q) + ": iota(" + ci.category().name(m) + ")");
      }
    }
  return t;
}

Tally criterion_5() {
  Tally t;
  for (const auto& q : orientations("A3")) {
    const CycIndex ci = CycIndex::build(q);
    const auto& cat = ci.category();
    std::vector<CycVertex> w_plus, v_plus, w_s;
    for (const auto& m : cat.modules()) {
      w_plus.push_back(ci.sigma(ci.cover(m)));
      if (!cat.is_injective(m)) v_plus.push_back(ci.cover(m));
    }
    for (int i = 0; i < q.rank(); ++i) w_s.push_back(ci.sigma(ci.cover(cat.simple(i))));
    auto in_w_s = [&](const WVector& w) {
      for (const auto& [y, m] : w.entries())
        if (m < 0 || std::find(w_s.begin(), w_s.end(), y) == w_s.end()) return false;
      return true;
    };
    for_each_vector(static_cast<int>(w_plus.size()), 4, [&](const std::vector<std::int64_t>& coeffs) {
      WVector wt;
      std::int64_t mass = 0;
      for (std::size_t k = 0; k < w_plus.size(); ++k) {
        wt.add(w_plus[k], coeffs[k]);
        mass += coeffs[k];
      }
      const std::int64_t cap = std::max<std::int64_t>(1, mass * ci.h());
      std::vector<VWPair> found;
      std::vector<std::int64_t> v(v_plus.size(), 0);
      std::function<void(std::size_t)> go = [&](std::size_t k) {
        if (k == v_plus.size()) {
          VVector vv;
          for (std::size_t s = 0; s < v_plus.size(); ++s) vv.add(v_plus[s], v[s]);
          const WVector w = wt + q_cartan_oracle(ci, vv);
          if (in_w_s(w)) found.push_back({vv, w});
          return;
        }
        for (v[k] = 0; v[k] <= cap; ++v[k]) go(k + 1);
        v[k] = 0;
      };
      go(0);
      t.expect(found.size() == 1 && found.front() == solve_w_tilde(ci, wt),
               where(q) + ": " + to_string(ci, wt) + " has " + std::to_string(found.size()) + " lifts");
    });
  }
  return t;
}

Tally criterion_6() {
  Tally t;
  for (const std::string type : {"A2", "A3"}) {
    TypeAKostant kostant(type == "A2" ? 2 : 3);
    for (const auto& q : orientations(type)) {
      const CycIndex ci = CycIndex::build(q);
      for_each_vector(q.rank(), 6, [&](const std::vector<std::int64_t>& beta) {
        const WVector w = w_on_simples(ci, beta);
        const auto vs = enumerate_l_dominant(ci, w);
        const auto brute = enumerate_l_dominant_bruteforce(ci, w);
        t.expect(static_cast<std::int64_t>(vs.size()) == kostant(beta) && brute && *brute == vs,
                 where(q) + ": " + to_string(ci, w) + " gives " + std::to_string(vs.size()));
      });
    }
  }
  return t;
}

Tally criterion_7() {
  Tally t;
  for (const std::string type : {"A2", "A3", "D4"})
    for (const auto& q : orientations(type)) {
      const CycIndex ci = CycIndex::build(q);
      for (const std::string which : {"ek", "ef", "kk", "serre"})
        for (const auto& r : verify_suite(ci, which)) {
          std::string failed;
          for (const auto& c : r.checks)
            if (!c.pass && failed.empty()) failed = c.name + ": " + c.computed + " vs " + c.expected;
          t.expect(r.pass(), where(q) + " " + r.relation + ": " + failed);
        }
      // the two EF shifts, independently of the driver
      for (int i = 0; i < q.rank(); ++i) {
        const VWPair f{{}, ci.e_sigma(DerivedObject{ci.category().simple(i), 1})};
        const WVector e = ci.e_sigma(DerivedObject{ci.category().simple(i), 0});
        t.expect(leading_exponent_tilde(ci, {v_f(ci, i), e}, f) == 1, where(q) + ": EF shift at v^f");
        t.expect(leading_exponent_tilde(ci, {v_sigma_f(ci, i), e}, f) == -1, where(q) + ": EF shift at v^Sf");
      }
    }
  return t;
}

Tally criterion_8() {
  Tally t;
  for (const std::string type : {"A3", "D4"})
    for (const auto& q : orientations(type)) {
      const CycIndex ci = CycIndex::build(q);
      const auto r = verify_same_form(ci);
      t.expect(r.pass() && !r.checks.empty(), where(q) + ": same-form");
    }
  for (const auto& q : orientations("A2")) {
    const CycIndex ci = CycIndex::build(q);
    const auto r = verify_same_N(ci, 3);
    t.expect(r.pass(), where(q) + ": same-N" + (r.notes.empty() ? "" : " " + r.notes.back()));
  }
  return t;
}

Tally criterion_9() {
  Tally t;
  for (const std::string type : {"A1", "A2", "A3", "A4", "D4"})
    for (const auto& q : orientations(type)) {
      const DerivedCategory cat(q);
      HomOracle oracle(cat);
      for (const auto& x : cat.window())
        for (const auto& y : cat.window())
          t.expect(cat.hom_dim(x.object, y.object) == oracle.hom_dim(x.object, y.object),
                   where(q) + ": Hom(" + cat.name(x.object) + ", " + cat.name(y.object) + ")");
    }
  return t;
}

Tally criterion_10() {
  Tally t;
  for (auto [type, maxdeg] : {std::pair{"A2", 5}, std::pair{"A3", 4}}) {
    const Quiver q = Quiver::load(type, "linear");
    TypeAKostant kostant(q.rank());
    const auto dims = serre_quotient_dims(q, maxdeg);
    std::size_t expected_entries = 0;
    for_each_vector(q.rank(), maxdeg, [&](const std::vector<std::int64_t>&) { ++expected_entries; });
    std::size_t seen = 0;
    for (const auto& [beta, d] : dims) {
      if (beta.total() == 0) continue;
      ++seen;
      t.expect(d == kostant(beta.coords()), std::string(type) + ": dim at " + beta.to_string());
    }
    t.expect(seen + 1 == expected_entries, std::string(type) + ": missing degrees");
  }
  return t;
}

Tally criterion_11() {
  Tally t;
  for (const std::string type : {"A1", "A2", "A3", "A4", "A5", "D4", "D5", "E6"})
    for (const auto& q : orientations(type)) {
      const CycIndex ci = CycIndex::build(q);
      const auto& cat = ci.category();
      const int h = ci.h();
      for (const auto& w : cat.window()) {
        DerivedObject x = w.object;
        for (int k = 0; k < h; ++k) x = cat.tau(x);
        t.expect(x == cat.sigma_shift(w.object, -2), where(q) + ": tau^h " + cat.name(w.object));
      }
      for (const auto& x : ci.sigma_hat_vertices()) t.expect(ci.Sigma(ci.Sigma(x)) == x, where(q) + ": Sigma^2");
      for (const auto& y : ci.hat_vertices()) t.expect(ci.Sigma(ci.Sigma(y)) == y, where(q) + ": Sigma^2");

      std::vector<VWPair> pairs;
      for (const auto& m : cat.modules()) pairs.push_back(iota(ci, m));
      for (int i = 0; i < q.rank(); ++i) {
        pairs.push_back({v_f(ci, i), w_f(ci, i)});
        pairs.push_back({{}, ci.e_sigma(DerivedObject{cat.simple(i), 0})});
      }
      auto star = [&](const VWPair& p) { return VWPair{ci.Sigma_star(p.v), ci.Sigma_star(p.w)}; };
      for (const auto& a : pairs)
        for (const auto& b : pairs)
          t.expect(d_form(ci, star(a), star(b)) == d_form(ci, a, b), where(q) + ": Sigma^* d_form");

      for (int i = 0; i < q.rank(); ++i)
        for (int j = 0; j < q.rank(); ++j) {
          const VWPair e{{}, ci.e_sigma(DerivedObject{cat.simple(i), 0})};
          const VWPair kp{v_f(ci, j), w_f(ci, j)};
          const HalfInt ex = leading_exponent(ci, e, kp) - leading_exponent(ci, kp, e);
          t.expect(ex == HalfInt(q.cartan_entry(i, j)),
                   where(q) + ": twisted EK exponent (" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")");
        }
    }
  return t;
}

}  // namespace

int main() {
  struct Row {
    int id;
    const char* text;
    Tally (*run)();
  };
  const Row rows[] = {
      {1, "|sigma I-hat| = n h for A1..A5, D4, D5, E6", criterion_1},
      {2, "w^f - C v^f = w^f - C v^Sf = 0, all orientations", criterion_2},
      {3, "A1/A2 fixtures for v^f, w^f, v^Sf and iota(S1), iota(S2), iota(P2)", criterion_3},
      {4, "iota_W(N) - C iota_V(N) = e_sigmaN up to rank 6", criterion_4},
      {5, "unique lift in V+ x W^S for mass <= 4 in A3", criterion_5},
      {6, "|enumerate(w)| = Kostant(beta) for |beta| <= 6 in A2, A3", criterion_6},
      {7, "EK, EF, KK, Serre for A2, A3, D4, all orientations", criterion_7},
      {8, "same_form in A3, D4 and same_N up to mass 3 in A2", criterion_8},
      {9, "hom_dim equals the linear-algebra oracle on the window", criterion_9},
      {10, "Serre quotient dims = Kostant up to degree 5 (A2), 4 (A3)", criterion_10},
      {11, "tau^h = Sigma^-2, Sigma^2 = id, Sigma^* d_form, twisted EK = a_ij", criterion_11},
  };
  int failed = 0;
  for (const auto& row : rows) {
    const auto start = std::chrono::steady_clock::now();
    const Tally t = row.run();
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool ok = t.failures == 0 && t.cases > 0;
    failed += ok ? 0 : 1;
    std::cout << (ok ? "PASS" : "FAIL") << "  criterion " << row.id << ": " << row.text << "  [" << t.cases
              << " cases, " << std::fixed << std::setprecision(2) << secs << "s]";
    if (!ok) std::cout << "  first failure: " << t.first;
    std::cout << std::endl;
  }
  std::cout << (failed == 0 ? "all criteria pass" : std::to_string(failed) + " criteria fail") << "\n";
  return failed == 0 ? 0 : 1;
}
