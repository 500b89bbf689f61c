#include "cyclotome/dominant.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <stdexcept>

#include "cyclotome/errors.hpp"

namespace cyclotome {

std::string to_string(const CycIndex& ci, const VWPair& p) {
  return "(" + to_string(ci, p.v) + ", " + to_string(ci, p.w) + ")";
}

// --------------------------------------------------------------------- Cones

Cones::Cones(const CycIndex& ci) : ci_(ci) {
  const auto& cat = ci.category();
  for (const auto& m : cat.modules()) {
    DerivedObject x{m, 0};
    DerivedObject sx{m, 1};
    w_plus_.push_back(ci.sigma(ci.cover(x)));
    w_minus_.push_back(ci.sigma(ci.cover(sx)));
    if (!cat.is_injective(m)) {
      v_plus_.push_back(ci.cover(x));
      v_minus_.push_back(ci.cover(sx));
    }
  }
  for (int i = 0; i < ci.rank(); ++i) {
    w_s_.push_back(ci.sigma(ci.cover(cat.simple(i))));
    w_sigma_s_.push_back(ci.sigma(ci.cover(DerivedObject{cat.simple(i), 1})));
  }
  for (auto* s : {&w_plus_, &w_minus_, &w_s_, &w_sigma_s_, &v_plus_, &v_minus_}) std::sort(s->begin(), s->end());
}

template <class Tag>
bool Cones::supported_on(const CycVector<Tag>& x, const std::vector<CycVertex>& support) {
  for (const auto& [k, m] : x.entries())
    if (m < 0 || !std::binary_search(support.begin(), support.end(), k)) return false;
  return true;
}

bool Cones::in_W_zero(const WVector& w) const {
  WVector rebuilt;
  for (int i = 0; i < ci_.rank(); ++i) {
    auto c = w.at(ci_.sigma(ci_.cover(ci_.category().simple(i))));
    if (c < 0) return false;
    rebuilt += c * w_f(ci_, i);
  }
  return rebuilt == w;
}

bool Cones::in_V_zero(const VVector& v) const {
  const auto& cat = ci_.category();
  VVector rebuilt;
  for (int i = 0; i < ci_.rank(); ++i) {
    auto b = v.at(ci_.cover(cat.injective(i)));
    auto b2 = v.at(ci_.cover(DerivedObject{cat.injective(i), 1}));
    if (b < 0 || b2 < 0) return false;
    rebuilt += b * v_f(ci_, i) + b2 * v_sigma_f(ci_, i);
  }
  return rebuilt == v;
}

// ------------------------------------------------------------- basic vectors

WVector residual(const CycIndex& ci, const VWPair& p) { return p.w - ci.q_cartan_apply(p.v); }

bool is_l_dominant(const CycIndex& ci, const VWPair& p) {
  return p.v.is_nonnegative() && p.w.is_nonnegative() && residual(ci, p).is_nonnegative();
}

VVector v_f(const CycIndex& ci, int i) {
  const auto& cat = ci.category();
  DerivedObject s{cat.simple(i), 0};
  VVector v;
  for (const auto& x : ci.sigma_hat_vertices()) v.add(x, cat.hom_dim(s, ci.section(x)));
  return v;
}

VVector v_sigma_f(const CycIndex& ci, int i) { return ci.Sigma_star(v_f(ci, i)); }

WVector w_f(const CycIndex& ci, int i) {
  const auto& cat = ci.category();
  return ci.e_sigma({cat.simple(i), 0}) + ci.e_sigma({cat.simple(i), 1});
}

// ---------------------------------------------------------------- decompose

Decomposition decompose(const CycIndex& ci, const VWPair& p) {
  if (!is_l_dominant(ci, p)) throw NotDominant("pair " + to_string(ci, p) + " is not l-dominant");
  const Cones cones(ci);
  const auto& cat = ci.category();
  {
    WVector ws, wss;
    for (const auto& [y, m] : p.w.entries()) {
      if (std::binary_search(cones.W_S_support().begin(), cones.W_S_support().end(), y))
        ws.add(y, m);
      else
        wss.add(y, m);
    }
    if (!cones.in_W_Sigma_S(wss)) throw DecompositionFailure("w lies outside W^S + W^{Sigma S}");
  }

  Decomposition d;
  for (int i = 0; i < ci.rank(); ++i) {
    const auto b = p.v.at(ci.cover(cat.injective(i)));
    const auto b2 = p.v.at(ci.cover(DerivedObject{cat.injective(i), 1}));
    d.cartan.v += b * v_f(ci, i) + b2 * v_sigma_f(ci, i);
    d.cartan.w += (b + b2) * w_f(ci, i);
  }
  const VVector rest_v = p.v - d.cartan.v;
  const WVector rest_w = p.w - d.cartan.w;
  const auto& vp = cones.V_plus_support();
  const auto& vm = cones.V_minus_support();
  for (const auto& [x, m] : rest_v.entries()) {
    if (std::binary_search(vp.begin(), vp.end(), x))
      d.positive.v.add(x, m);
    else if (std::binary_search(vm.begin(), vm.end(), x))
      d.negative.v.add(x, m);
    else
      throw DecompositionFailure("v - v0 has weight on an injective slot");
  }
  const auto& wp = cones.W_plus_support();
  for (const auto& [y, m] : rest_w.entries()) {
    if (std::binary_search(wp.begin(), wp.end(), y))
      d.positive.w.add(y, m);
    else
      d.negative.w.add(y, m);
  }

  if (!residual(ci, d.cartan).is_zero()) throw DecompositionFailure("w0 - C v0 is not zero");
  if (!(d.positive + d.cartan + d.negative == p)) throw DecompositionFailure("components do not add up");
  for (const auto* part : {&d.positive, &d.cartan, &d.negative})
    if (!is_l_dominant(ci, *part)) throw DecompositionFailure("component " + to_string(ci, *part) + " is not l-dominant");
  if (!cones.in_V_plus(d.positive.v) || !cones.in_W_S(d.positive.w) || !cones.in_V_minus(d.negative.v) ||
      !cones.in_W_Sigma_S(d.negative.w) || !cones.in_V_zero(d.cartan.v) || !cones.in_W_zero(d.cartan.w))
    throw DecompositionFailure("component outside its cone");
  return d;
}

// --------------------------------------------------------------------- iota

VWPair iota_additive(const CycIndex& ci, const std::vector<IndModule>& modules) {
  const auto& cat = ci.category();
  const int n = ci.rank();
  VWPair out;
  for (const auto& nm : modules) {
    const auto& dim = cat.root(nm);
    for (int i = 0; i < n; ++i) out.w.add(ci.sigma(ci.cover(cat.simple(i))), dim[i]);
    DerivedObject target{nm, 0};
    for (const auto& x : ci.sigma_hat_vertices()) {
      DerivedObject y = cat.tau_inv(ci.section(x));
      std::int64_t value = -cat.hom_dim(y, target);
      for (int i = 0; i < n; ++i)
        if (dim[i] != 0) value += dim[i] * cat.hom_dim(y, DerivedObject{cat.simple(i), 0});
      out.v.add(x, value);
    }
  }
  return out;
}

VWPair iota(const CycIndex& ci, const IndModule& n) { return iota_additive(ci, {n}); }

VWPair solve_w_tilde(const CycIndex& ci, const WVector& w_tilde) {
  const Cones cones(ci);
  if (!cones.in_W_plus(w_tilde)) throw NotInWPlus(to_string(ci, w_tilde) + " is not in W+");
  std::vector<IndModule> multiset;
  for (const auto& [y, m] : w_tilde.entries()) {
    DerivedObject x = ci.section(ci.sigma_inv(y));
    for (std::int64_t k = 0; k < m; ++k) multiset.push_back(x.module);
  }
  VWPair p = iota_additive(ci, multiset);
  if (!cones.in_V_plus(p.v) || !cones.in_W_S(p.w) || !is_l_dominant(ci, p) || !(residual(ci, p) == w_tilde))
    throw std::logic_error("lift of " + to_string(ci, w_tilde) + " violates its defining identity");
  return p;
}

// ----------------------------------------------------------------- Kostant

std::int64_t kostant_partitions(const Quiver& q, const DimensionVector& beta) {
  if (!beta.is_nonnegative()) return 0;
  const int n = q.rank();
  std::vector<std::int64_t> stride(n + 1, 1);
  for (int i = 0; i < n; ++i) stride[i + 1] = stride[i] * (beta[i] + 1);
  std::vector<std::int64_t> f(static_cast<std::size_t>(stride[n]), 0);
  f[0] = 1;
  for (const auto& r : q.positive_roots()) {
    if (!beta.dominates(r)) continue;
    std::int64_t shift = 0;
    for (int i = 0; i < n; ++i) shift += r[i] * stride[i];
    for (std::int64_t idx = 0; idx < stride[n]; ++idx) {
      bool fits = true;
      for (int i = 0; i < n && fits; ++i) fits = (idx / stride[i]) % (beta[i] + 1) >= r[i];
      if (fits) f[static_cast<std::size_t>(idx)] += f[static_cast<std::size_t>(idx - shift)];
    }
  }
  return f.back();
}

std::vector<std::vector<IndModule>> kostant_partition_list(const DerivedCategory& cat, const DimensionVector& beta) {
  std::vector<std::vector<IndModule>> out;
  const auto& mods = cat.modules();
  std::vector<IndModule> current;
  std::function<void(std::size_t, const DimensionVector&)> go = [&](std::size_t k, const DimensionVector& rest) {
    if (rest.is_zero()) {
      out.push_back(current);
      return;
    }
    for (std::size_t j = k; j < mods.size(); ++j) {
      const auto& r = cat.root(mods[j]);
      if (!rest.dominates(r)) continue;
      current.push_back(mods[j]);
      go(j, rest - r);
      current.pop_back();
    }
  };
  if (beta.is_nonnegative()) go(0, beta);
  return out;
}

// -------------------------------------------------------------- enumeration

std::optional<std::vector<VVector>> enumerate_l_dominant_bruteforce(const CycIndex& ci, const WVector& w,
                                                                    const SearchLimits& limits) {
  if (!w.is_nonnegative()) return std::vector<VVector>{};
  const Quiver& q = ci.quiver();
  const int n = q.rank();

  DimensionVector R(static_cast<std::size_t>(n));
  for (const auto& r : q.positive_roots()) R += r;
  for (int i = 0; i < n; ++i) {
    std::int64_t cr = 0;
    for (int j = 0; j < n; ++j) cr += q.cartan_entry(i, j) * R[j];
    if (cr != 2) throw std::logic_error("C * (sum of positive roots) != 2");
  }
  std::int64_t weighted = 0;
  for (const auto& [y, m] : w.entries()) weighted += R[y.vertex] * m;
  const std::int64_t mass = weighted / 2;
  const std::int64_t cap = std::min<std::int64_t>(mass, w.total() * ci.h());

  std::vector<CycVertex> vars = ci.sigma_hat_vertices();
  std::sort(vars.begin(), vars.end(), [](const CycVertex& a, const CycVertex& b) {
    return a.height != b.height ? a.height < b.height : a.vertex < b.vertex;
  });
  std::map<CycVertex, int> var_index;
  for (std::size_t k = 0; k < vars.size(); ++k) var_index[vars[k]] = static_cast<int>(k);

  const auto& cons = ci.hat_vertices();
  const std::size_t nc = cons.size();
  std::vector<std::int64_t> value(nc);
  std::vector<int> open_pos(nc, 0);
  struct Touch {
    int constraint;
    int sign;
  };
  std::vector<std::vector<Touch>> touches(vars.size());
  for (std::size_t c = 0; c < nc; ++c) {
    const auto& y = cons[c];
    value[c] = w.at(y);
    touches[var_index.at(ci.make(y.vertex, y.height + 1))].push_back({static_cast<int>(c), -1});
    touches[var_index.at(ci.make(y.vertex, y.height - 1))].push_back({static_cast<int>(c), -1});
    for (int j : q.neighbours(y.vertex)) {
      touches[var_index.at(ci.make(j, y.height))].push_back({static_cast<int>(c), -q.cartan_entry(y.vertex, j)});
      ++open_pos[c];
    }
  }

  std::vector<VVector> found;
  std::vector<std::int64_t> assignment(vars.size(), 0);
  std::int64_t nodes = 0;
  bool exhausted = false;

  std::function<void(std::size_t, std::int64_t)> dfs = [&](std::size_t p, std::int64_t used) {
    if (exhausted) return;
    if (++nodes > limits.max_nodes) {
      exhausted = true;
      return;
    }
    if (p == vars.size()) {
      VVector v;
      for (std::size_t k = 0; k < vars.size(); ++k) v.add(vars[k], assignment[k]);
      found.push_back(std::move(v));
      return;
    }
    for (const auto& t : touches[p])
      if (t.sign > 0) --open_pos[t.constraint];
    const std::int64_t top = std::min(cap, mass - used);
    for (std::int64_t a = 0; a <= top; ++a) {
      assignment[p] = a;
      for (const auto& t : touches[p]) value[t.constraint] += t.sign * a;
      const std::int64_t remaining = mass - used - a;
      bool ok = true;
      bool monotone_fail = false;  // raising a further cannot help
      for (const auto& t : touches[p]) {
        const auto c = t.constraint;
        const std::int64_t best = value[c] + (open_pos[c] > 0 ? remaining : 0);
        if (best < 0) {
          ok = false;
          if (t.sign < 0) monotone_fail = true;
        }
      }
      if (ok) dfs(p + 1, used + a);
      for (const auto& t : touches[p]) value[t.constraint] -= t.sign * a;
      if (monotone_fail) break;
      if (exhausted) break;
    }
    assignment[p] = 0;
    for (const auto& t : touches[p])
      if (t.sign > 0) ++open_pos[t.constraint];
  };
  dfs(0, 0);
  if (exhausted) return std::nullopt;
  std::sort(found.begin(), found.end());
  return found;
}

namespace {

struct SplitW {
  std::vector<std::int64_t> c;   // w(sigma S_i)
  std::vector<std::int64_t> c2;  // w(sigma Sigma S_i)
};

SplitW split_w(const CycIndex& ci, const WVector& w) {
  const Cones cones(ci);
  const auto& cat = ci.category();
  SplitW s;
  WVector rebuilt;
  for (int i = 0; i < ci.rank(); ++i) {
    const auto y = ci.sigma(ci.cover(cat.simple(i)));
    const auto y2 = ci.sigma(ci.cover(DerivedObject{cat.simple(i), 1}));
    s.c.push_back(w.at(y));
    s.c2.push_back(w.at(y2));
    rebuilt.add(y, w.at(y));
    rebuilt.add(y2, w.at(y2));
  }
  if (!(rebuilt == w) || !w.is_nonnegative())
    throw NotSupported(to_string(ci, w) + " is not in W^S + W^{Sigma S}");
  return s;
}

std::vector<VVector> enumerate_positive(const CycIndex& ci, const std::vector<std::int64_t>& beta) {
  std::vector<VVector> out;
  for (const auto& part : kostant_partition_list(ci.category(), DimensionVector(beta)))
    out.push_back(iota_additive(ci, part).v);
  return out;
}

// Calls f(k) for every integer vector 0 <= k <= bound.
void for_each_box(const std::vector<std::int64_t>& bound, const std::function<void(const std::vector<std::int64_t>&)>& f) {
  std::vector<std::int64_t> k(bound.size(), 0);
  for (;;) {
    f(k);
    std::size_t i = 0;
    while (i < k.size() && k[i] == bound[i]) k[i++] = 0;
    if (i == k.size()) return;
    ++k[i];
  }
}

}  // namespace

std::vector<VVector> enumerate_l_dominant(const CycIndex& ci, const WVector& w, const EnumerateOptions& opts) {
  const SplitW s = split_w(ci, w);
  const int n = ci.rank();
  std::vector<VVector> vf, vsf;
  for (int i = 0; i < n; ++i) {
    vf.push_back(v_f(ci, i));
    vsf.push_back(v_sigma_f(ci, i));
  }
  std::vector<std::int64_t> kmax(n);
  for (int i = 0; i < n; ++i) kmax[i] = std::min(s.c[i], s.c2[i]);

  std::set<VVector> result;
  std::size_t produced = 0;
  for_each_box(kmax, [&](const std::vector<std::int64_t>& k) {
    std::vector<std::int64_t> bplus(n), bminus(n);
    for (int i = 0; i < n; ++i) {
      bplus[i] = s.c[i] - k[i];
      bminus[i] = s.c2[i] - k[i];
    }
    const auto plus = enumerate_positive(ci, bplus);
    std::vector<VVector> minus;
    for (const auto& v : enumerate_positive(ci, bminus)) minus.push_back(ci.Sigma_star(v));
    for_each_box(k, [&](const std::vector<std::int64_t>& b) {
      VVector v0;
      for (int i = 0; i < n; ++i) v0 += b[i] * vf[i] + (k[i] - b[i]) * vsf[i];
      for (const auto& vp : plus)
        for (const auto& vm : minus) {
          result.insert(v0 + vp + vm);
          ++produced;
        }
    });
  });
  if (produced != result.size())
    throw EnumerationMismatch("structural generator produced " + std::to_string(produced) + " triples but " +
                              std::to_string(result.size()) + " distinct vectors");
  std::vector<VVector> out(result.begin(), result.end());
  for (const auto& v : out)
    if (!is_l_dominant(ci, {v, w})) throw EnumerationMismatch("generated a non-dominant pair " + to_string(ci, VWPair{v, w}));
  if (opts.cross_check) {
    auto brute = enumerate_l_dominant_bruteforce(ci, w, opts.limits);
    if (brute && *brute != out)
      throw EnumerationMismatch("structural (" + std::to_string(out.size()) + ") and brute-force (" +
                                std::to_string(brute->size()) + ") enumerations disagree for " + to_string(ci, w));
  }
  return out;
}

std::int64_t dominant_count(const CycIndex& ci, const WVector& w) {
  const SplitW s = split_w(ci, w);
  const int n = ci.rank();
  const Quiver& q = ci.quiver();
  std::vector<std::int64_t> kmax(n);
  for (int i = 0; i < n; ++i) kmax[i] = std::min(s.c[i], s.c2[i]);
  std::int64_t total = 0;
  for_each_box(kmax, [&](const std::vector<std::int64_t>& k) {
    std::int64_t mult = 1;
    DimensionVector bp(static_cast<std::size_t>(n)), bm(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
      mult *= k[i] + 1;
      bp[i] = s.c[i] - k[i];
      bm[i] = s.c2[i] - k[i];
    }
    total += mult * kostant_partitions(q, bp) * kostant_partitions(q, bm);
  });
  return total;
}

}  // namespace cyclotome
