#include "cyclotome/serre_dims.hpp"

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

#include "cyclotome/errors.hpp"
#include "cyclotome/poly.hpp"

namespace cyclotome {

namespace {

using Word = std::vector<int>;

std::vector<Word> words_of_degree(const DimensionVector& beta) {
  Word w;
  for (std::size_t i = 0; i < beta.size(); ++i)
    for (std::int64_t k = 0; k < beta[i]; ++k) w.push_back(static_cast<int>(i));
  std::vector<Word> out;
  do {
    out.push_back(w);
  } while (std::next_permutation(w.begin(), w.end()));
  return out;
}

struct Relation {
  DimensionVector degree;
  std::vector<std::pair<IntPoly, Word>> terms;
};

// Serre elements with denominators cleared:
// a_ij = -1:  t E_i E_i E_j - (t^2 + 1) E_i E_j E_i + t E_j E_i E_i
// a_ij =  0:  E_i E_j - E_j E_i
std::vector<Relation> serre_relations(const Quiver& q) {
  std::vector<Relation> rels;
  const int n = q.rank();
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      const int a = q.cartan_entry(i, j);
      Relation r;
      if (a == -1) {
        r.degree = 2 * q.simple_root(i) + q.simple_root(j);
        r.terms = {{IntPoly::t_power(1), {i, i, j}},
                   {IntPoly::t_power(2, -1) - IntPoly(1), {i, j, i}},
                   {IntPoly::t_power(1), {j, i, i}}};
      } else if (a == 0) {
        if (i > j) continue;
        r.degree = q.simple_root(i) + q.simple_root(j);
        r.terms = {{IntPoly(1), {i, j}}, {IntPoly(-1), {j, i}}};
      } else {
        throw NotSimplyLaced("Cartan entry " + std::to_string(a));
      }
      rels.push_back(std::move(r));
    }
  return rels;
}

}  // namespace

std::int64_t serre_quotient_dim(const Quiver& q, const DimensionVector& beta) {
  if (!beta.is_nonnegative()) return 0;
  const auto words = words_of_degree(beta);
  std::map<Word, int> column;
  for (const auto& w : words) column.emplace(w, static_cast<int>(column.size()));

  std::vector<std::vector<std::pair<int, IntPoly>>> rows;
  for (const auto& rel : serre_relations(q)) {
    DimensionVector rest = beta - rel.degree;
    if (!rest.is_nonnegative()) continue;
    for (const auto& outer : words_of_degree(rest)) {
      for (std::size_t split = 0; split <= outer.size(); ++split) {
        std::map<int, IntPoly> row;
        for (const auto& [coef, mid] : rel.terms) {
          Word w(outer.begin(), outer.begin() + static_cast<std::ptrdiff_t>(split));
          w.insert(w.end(), mid.begin(), mid.end());
          w.insert(w.end(), outer.begin() + static_cast<std::ptrdiff_t>(split), outer.end());
          auto& slot = row[column.at(w)];
          slot = slot + coef;
        }
        std::vector<std::pair<int, IntPoly>> sparse;
        for (auto& [c, p] : row)
          if (!p.is_zero()) sparse.emplace_back(c, std::move(p));
        if (!sparse.empty()) rows.push_back(std::move(sparse));
      }
    }
  }
  if (rows.empty()) return static_cast<std::int64_t>(words.size());
  IntPolyMatrix m(static_cast<int>(rows.size()), static_cast<int>(words.size()));
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (const auto& [c, p] : rows[r]) m.at(static_cast<int>(r), c) = p;
  return static_cast<std::int64_t>(words.size()) - m.rank();
}

std::map<DimensionVector, std::int64_t> serre_quotient_dims(const Quiver& q, int maxdeg, int cap) {
  if (maxdeg > cap)
    throw DegreeTooLarge("total degree " + std::to_string(maxdeg) + " exceeds the cap " + std::to_string(cap));
  std::map<DimensionVector, std::int64_t> out;
  const int n = q.rank();
  DimensionVector beta(static_cast<std::size_t>(n));
  // odometer over all beta with |beta| <= maxdeg
  for (;;) {
    int k = 0;
    while (k < n) {
      beta[k] += 1;
      if (beta.total() <= maxdeg) break;
      beta[k] = 0;
      ++k;
    }
    if (k == n) break;
    out.emplace(beta, serre_quotient_dim(q, beta));
  }
  return out;
}

}  // namespace cyclotome
