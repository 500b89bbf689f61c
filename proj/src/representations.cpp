#include "cyclotome/representations.hpp"

#include <stdexcept>
#include <utility>

namespace cyclotome {

namespace {

// Reduced row echelon form in place; returns pivot columns.
std::vector<int> rref(RatMatrix& m) {
  std::vector<int> pivots;
  int row = 0;
  for (int col = 0; col < m.cols && row < m.rows; ++col) {
    int p = -1;
    for (int r = row; r < m.rows; ++r)
      if (m.at(r, col) != 0) {
        p = r;
        break;
      }
    if (p < 0) continue;
    if (p != row)
      for (int c = 0; c < m.cols; ++c) std::swap(m.at(p, c), m.at(row, c));
    Rational inv = 1 / m.at(row, col);
    for (int c = col; c < m.cols; ++c) m.at(row, c) *= inv;
    for (int r = 0; r < m.rows; ++r) {
      if (r == row || m.at(r, col) == 0) continue;
      Rational f = m.at(r, col);
      for (int c = col; c < m.cols; ++c) m.at(r, c) -= f * m.at(row, c);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

bool is_sink(const std::vector<Arrow>& arrows, int k) {
  for (const auto& a : arrows)
    if (a.source == k) return false;
  return true;
}

std::vector<Arrow> reflect(std::vector<Arrow> arrows, int k) {
  for (auto& a : arrows)
    if (a.source == k || a.target == k) std::swap(a.source, a.target);
  return arrows;
}

struct Builder {
  const Quiver& q;
  std::vector<int> order;

  Representation build(const std::vector<Arrow>& arrows, const DimensionVector& beta, std::size_t pos) {
    const int n = q.rank();
    const int k = order[pos % order.size()];
    if (beta == q.simple_root(k)) {
      Representation s;
      s.dims.assign(n, 0);
      s.dims[k] = 1;
      for (const auto& a : arrows) s.maps.emplace_back(s.dims[a.target], s.dims[a.source]);
      return s;
    }
    if (pos > 4 * order.size() * static_cast<std::size_t>(q.coxeter_number()))
      throw std::logic_error("reflection sequence did not reach a simple");
    DimensionVector reflected = beta;
    std::int64_t pairing = q.symmetric_form(beta, q.simple_root(k));
    reflected[k] -= pairing;
    if (!reflected.is_nonnegative() || reflected.is_zero())
      throw std::logic_error("reflection left the positive cone at " + beta.to_string());
    auto next_arrows = reflect(arrows, k);
    Representation prev = build(next_arrows, reflected, pos + 1);
    return coreflect(arrows, prev, k, beta);
  }

  // k is a source for the arrows of prev and a sink for `arrows`.
  Representation coreflect(const std::vector<Arrow>& arrows, const Representation& prev, int k,
                           const DimensionVector& beta) {
    std::vector<std::size_t> incident;
    int total = 0;
    for (std::size_t e = 0; e < arrows.size(); ++e)
      if (arrows[e].target == k) {
        incident.push_back(e);
        total += prev.dims[arrows[e].source];
      }
    RatMatrix stacked(total, prev.dims[k]);
    int offset = 0;
    for (auto e : incident) {
      const RatMatrix& a = prev.maps[e];  // k -> j in prev
      for (int r = 0; r < a.rows; ++r)
        for (int c = 0; c < a.cols; ++c) stacked.at(offset + r, c) = a.at(r, c);
      offset += a.rows;
    }
    RatMatrix y = left_kernel(stacked);
    Representation out;
    out.dims = prev.dims;
    out.dims[k] = y.rows;
    if (out.dims[k] != beta[k]) throw std::logic_error("coreflection produced the wrong dimension");
    out.maps = prev.maps;
    offset = 0;
    for (auto e : incident) {
      const int dj = prev.dims[arrows[e].source];
      RatMatrix block(y.rows, dj);
      for (int r = 0; r < y.rows; ++r)
        for (int c = 0; c < dj; ++c) block.at(r, c) = y.at(r, offset + c);
      out.maps[e] = std::move(block);
      offset += dj;
    }
    return out;
  }
};

RatMatrix intertwiner_system(const Quiver& q, const Representation& m, const Representation& n) {
  const int nv = q.rank();
  std::vector<int> var_offset(nv + 1, 0);
  for (int v = 0; v < nv; ++v) var_offset[v + 1] = var_offset[v] + n.dims[v] * m.dims[v];
  int rows = 0;
  for (const auto& a : q.arrows()) rows += n.dims[a.target] * m.dims[a.source];
  RatMatrix sys(rows, var_offset[nv]);
  int row = 0;
  for (std::size_t e = 0; e < q.arrows().size(); ++e) {
    const auto& a = q.arrows()[e];
    const int s = a.source, t = a.target;
    const RatMatrix& ne = n.maps[e];
    const RatMatrix& me = m.maps[e];
    for (int r = 0; r < n.dims[t]; ++r)
      for (int c = 0; c < m.dims[s]; ++c, ++row) {
        // (N_e f_s)[r][c] - (f_t M_e)[r][c]
        for (int p = 0; p < n.dims[s]; ++p) sys.at(row, var_offset[s] + p * m.dims[s] + c) += ne.at(r, p);
        for (int p = 0; p < m.dims[t]; ++p) sys.at(row, var_offset[t] + r * m.dims[t] + p) -= me.at(p, c);
      }
  }
  return sys;
}

}  // namespace

int rank(RatMatrix m) { return static_cast<int>(rref(m).size()); }

RatMatrix left_kernel(const RatMatrix& m) {
  RatMatrix t(m.cols, m.rows);
  for (int i = 0; i < m.rows; ++i)
    for (int j = 0; j < m.cols; ++j) t.at(j, i) = m.at(i, j);
  auto pivots = rref(t);
  std::vector<bool> is_pivot(m.rows, false);
  for (int p : pivots) is_pivot[p] = true;
  std::vector<std::vector<Rational>> basis;
  for (int free = 0; free < m.rows; ++free) {
    if (is_pivot[free]) continue;
    std::vector<Rational> v(m.rows);
    v[free] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -t.at(static_cast<int>(r), free);
    basis.push_back(std::move(v));
  }
  RatMatrix out(static_cast<int>(basis.size()), m.rows);
  for (int i = 0; i < out.rows; ++i)
    for (int j = 0; j < m.rows; ++j) out.at(i, j) = basis[i][j];
  return out;
}

Representation build_indecomposable(const Quiver& q, const DimensionVector& root) {
  Builder b{q, {}};
  std::vector<Arrow> arrows = q.arrows();
  std::vector<bool> used(q.rank(), false);
  for (int round = 0; round < q.rank(); ++round) {
    for (int k = 0; k < q.rank(); ++k)
      if (!used[k] && is_sink(arrows, k)) {
        used[k] = true;
        b.order.push_back(k);
        arrows = reflect(arrows, k);
        break;
      }
  }
  if (static_cast<int>(b.order.size()) != q.rank()) throw std::logic_error("no admissible sink sequence");
  return b.build(q.arrows(), root, 0);
}

std::int64_t hom_space_dim(const Quiver& q, const Representation& m, const Representation& n) {
  RatMatrix sys = intertwiner_system(q, m, n);
  return sys.cols - rank(sys);
}

std::int64_t ext1_space_dim(const Quiver& q, const Representation& m, const Representation& n) {
  RatMatrix sys = intertwiner_system(q, m, n);
  return sys.rows - rank(sys);
}

const Representation& HomOracle::representation(const IndModule& m) {
  auto it = cache_.find(m);
  if (it == cache_.end()) it = cache_.emplace(m, build_indecomposable(cat_.quiver(), cat_.root(m))).first;
  return it->second;
}

std::int64_t HomOracle::hom_dim(const DerivedObject& x, const DerivedObject& y) {
  const int gap = y.shift - x.shift;
  if (gap == 0) return hom_space_dim(cat_.quiver(), representation(x.module), representation(y.module));
  if (gap == 1) return ext1_space_dim(cat_.quiver(), representation(x.module), representation(y.module));
  return 0;
}

std::int64_t hom_dim_bruteforce(const DerivedCategory& cat, const DerivedObject& x, const DerivedObject& y) {
  HomOracle oracle(cat);
  return oracle.hom_dim(x, y);
}

}  // namespace cyclotome
