#include "cyclotome/cyclic_index.hpp"

#include <stdexcept>

namespace cyclotome {

CycIndex::CycIndex(std::shared_ptr<const DerivedCategory> cat)
    : cat_(std::move(cat)), h_(cat_->coxeter_number()), xi_(cat_->quiver().height_function()) {
  const int n = rank();
  for (int i = 0; i < n; ++i)
    for (int a = 0; a < period(); ++a) {
      CycVertex x{i, a};
      (in_hat(x) ? hat_ : sigma_hat_).push_back(x);
    }
  for (const auto& x : sigma_hat_) {
    CycVertex sx = cover(cat_->sigma_shift(section(x)));
    Sigma_[x] = sx;
    Sigma_[sigma(x)] = sigma(sx);
  }
}

CycIndex CycIndex::build(const Quiver& q) { return CycIndex(std::make_shared<const DerivedCategory>(q)); }

int CycIndex::normalize(int height) const {
  const int p = period();
  int r = height % p;
  return r < 0 ? r + p : r;
}

bool CycIndex::in_hat(const CycVertex& x) const {
  int diff = x.height - xi_(x.vertex);
  return diff % 2 == 0;
}

CycVertex CycIndex::Sigma(const CycVertex& x) const { return Sigma_.at(make(x.vertex, x.height)); }

DerivedObject CycIndex::section(const CycVertex& x) const {
  if (!in_sigma_hat(x)) throw std::invalid_argument("section is defined on sigma(I-hat) only");
  const int d = normalize(x.height - xi_(x.vertex) - 1) / 2;
  return cat_->object_at({x.vertex, d});
}

CycVertex CycIndex::cover(const DerivedObject& x) const {
  OrbitPosition p = cat_->orbit_position(x);
  return make(p.vertex, xi_(p.vertex) + 1 + 2 * p.step);
}

WVector CycIndex::q_cartan_apply(const VVector& v) const {
  WVector out;
  const Quiver& q = quiver();
  for (const auto& [x, m] : v.entries()) {
    if (!in_sigma_hat(x)) throw std::invalid_argument("q-Cartan input must live on sigma(I-hat)");
    out.add(make(x.vertex, x.height + 1), m);
    out.add(make(x.vertex, x.height - 1), m);
    for (int j : q.neighbours(x.vertex)) out.add(make(j, x.height), q.cartan_entry(x.vertex, j) * m);
  }
  return out;
}

VVector CycIndex::Sigma_star(const VVector& v) const {
  VVector out;
  for (const auto& [x, m] : v.entries()) out.add(Sigma(x), m);
  return out;
}

WVector CycIndex::Sigma_star(const WVector& w) const {
  WVector out;
  for (const auto& [y, m] : w.entries()) out.add(Sigma(y), m);
  return out;
}

WVector CycIndex::sigma_star(const VVector& v) const {
  WVector out;
  for (const auto& [x, m] : v.entries()) out.add(sigma_inv(x), m);
  return out;
}

VVector CycIndex::sigma_star(const WVector& w) const {
  VVector out;
  for (const auto& [y, m] : w.entries()) out.add(sigma_inv(y), m);
  return out;
}

std::string CycIndex::name(const CycVertex& x) const {
  if (in_sigma_hat(x)) return cat_->name(section(x));
  return "sigma(" + cat_->name(section(sigma_inv(x))) + ")";
}

std::optional<CycVertex> CycIndex::parse_name(std::string_view text) const {
  bool hat = false;
  if (text.substr(0, 6) == "sigma(" && !text.empty() && text.back() == ')') {
    hat = true;
    text = text.substr(6, text.size() - 7);
  }
  auto obj = cat_->parse_name(text);
  if (!obj) return std::nullopt;
  CycVertex x = cover(*obj);
  return hat ? sigma(x) : x;
}

namespace {

template <class Tag>
std::string render(const CycIndex& ci, const CycVector<Tag>& v) {
  if (v.is_zero()) return "0";
  std::string s;
  for (const auto& [x, m] : v.entries()) {
    if (!s.empty()) s += m < 0 ? " - " : " + ";
    else if (m < 0) s += "-";
    std::int64_t a = m < 0 ? -m : m;
    if (a != 1) s += std::to_string(a) + " ";
    s += "e[" + ci.name(x) + "]";
  }
  return s;
}

}  // namespace

std::string to_string(const CycIndex& ci, const VVector& v) { return render(ci, v); }
std::string to_string(const CycIndex& ci, const WVector& w) { return render(ci, w); }

}  // namespace cyclotome
