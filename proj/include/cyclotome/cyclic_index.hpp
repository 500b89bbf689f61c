#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "cyclotome/derived.hpp"

namespace cyclotome {

struct CycVertex {
  int vertex = 0;
  int height = 0;  // residue mod 2h
  friend auto operator<=>(const CycVertex&, const CycVertex&) = default;
};

// Finitely supported integer vector on I x Z/2h; the tag records whether it
// lives on sigma(I-hat) (V side) or on I-hat (W side). Zero entries are never stored.
template <class Tag>
class CycVector {
 public:
  using Map = std::map<CycVertex, std::int64_t>;

  CycVector() = default;
  static CycVector unit(CycVertex x, std::int64_t m = 1) {
    CycVector v;
    v.add(x, m);
    return v;
  }

  std::int64_t at(const CycVertex& x) const {
    auto it = entries_.find(x);
    return it == entries_.end() ? 0 : it->second;
  }
  void add(const CycVertex& x, std::int64_t m) {
    if (m == 0) return;
    auto& slot = entries_[x];
    slot += m;
    if (slot == 0) entries_.erase(x);
  }
  const Map& entries() const { return entries_; }

  bool is_zero() const { return entries_.empty(); }
  bool is_nonnegative() const {
    for (const auto& [x, m] : entries_)
      if (m < 0) return false;
    return true;
  }
  std::int64_t total() const {
    std::int64_t s = 0;
    for (const auto& [x, m] : entries_) s += m;
    return s;
  }
  bool dominates(const CycVector& o) const { return (*this - o).is_nonnegative(); }

  CycVector& operator+=(const CycVector& o) {
    for (const auto& [x, m] : o.entries_) add(x, m);
    return *this;
  }
  CycVector& operator-=(const CycVector& o) {
    for (const auto& [x, m] : o.entries_) add(x, -m);
    return *this;
  }
  friend CycVector operator+(CycVector a, const CycVector& b) { return a += b; }
  friend CycVector operator-(CycVector a, const CycVector& b) { return a -= b; }
  friend CycVector operator-(const CycVector& a) { return CycVector() - a; }
  friend CycVector operator*(std::int64_t k, const CycVector& a) {
    CycVector r;
    if (k != 0)
      for (const auto& [x, m] : a.entries_) r.entries_[x] = k * m;
    return r;
  }
  friend bool operator==(const CycVector&, const CycVector&) = default;
  friend bool operator<(const CycVector& a, const CycVector& b) { return a.entries_ < b.entries_; }

 private:
  Map entries_;
};

struct SigmaHatSide {};
struct HatSide {};
using VVector = CycVector<SigmaHatSide>;
using WVector = CycVector<HatSide>;

class CycIndex {
 public:
  explicit CycIndex(std::shared_ptr<const DerivedCategory> cat);
  static CycIndex build(const Quiver& q);

  const DerivedCategory& category() const { return *cat_; }
  std::shared_ptr<const DerivedCategory> category_ptr() const { return cat_; }
  const Quiver& quiver() const { return cat_->quiver(); }
  int h() const { return h_; }
  int period() const { return 2 * h_; }
  int rank() const { return quiver().rank(); }
  const HeightFunction& xi() const { return xi_; }

  int normalize(int height) const;
  CycVertex make(int vertex, int height) const { return {vertex, normalize(height)}; }
  bool in_hat(const CycVertex& x) const;
  bool in_sigma_hat(const CycVertex& x) const { return !in_hat(x); }
  const std::vector<CycVertex>& hat_vertices() const { return hat_; }
  const std::vector<CycVertex>& sigma_hat_vertices() const { return sigma_hat_; }

  CycVertex sigma(const CycVertex& x) const { return make(x.vertex, x.height - 1); }
  CycVertex sigma_inv(const CycVertex& x) const { return make(x.vertex, x.height + 1); }
  CycVertex tau(const CycVertex& x) const { return make(x.vertex, x.height - 2); }
  CycVertex tau_inv(const CycVertex& x) const { return make(x.vertex, x.height + 2); }
  CycVertex Sigma(const CycVertex& x) const;

  // x in sigma(I-hat) -> tau^{-d} P_i with 0 <= d < h.
  DerivedObject section(const CycVertex& x) const;
  CycVertex cover(const DerivedObject& x) const;
  CycVertex cover(const IndModule& m) const { return cover(DerivedObject{m, 0}); }
  // integer height xi(i) + 1 + 2d of tau^{-d} P_i
  int eta(const IndModule& m) const { return xi_(m.vertex) + 1 + 2 * m.step; }

  WVector q_cartan_apply(const VVector& v) const;
  VVector Sigma_star(const VVector& v) const;
  WVector Sigma_star(const WVector& w) const;
  // pullbacks along sigma: (sigma^* v)(y) = v(sigma y) and (sigma^* w)(x) = w(sigma x)
  WVector sigma_star(const VVector& v) const;
  VVector sigma_star(const WVector& w) const;

  // e_{sigma M} for an object M of the window
  WVector e_sigma(const DerivedObject& x) const { return WVector::unit(sigma(cover(x))); }
  VVector e(const DerivedObject& x) const { return VVector::unit(cover(x)); }

  std::string name(const CycVertex& x) const;
  std::optional<CycVertex> parse_name(std::string_view text) const;

 private:
  std::shared_ptr<const DerivedCategory> cat_;
  int h_ = 0;
  HeightFunction xi_;
  std::vector<CycVertex> hat_;
  std::vector<CycVertex> sigma_hat_;
  std::map<CycVertex, CycVertex> Sigma_;
};

std::string to_string(const CycIndex& ci, const VVector& v);
std::string to_string(const CycIndex& ci, const WVector& w);

}  // namespace cyclotome
