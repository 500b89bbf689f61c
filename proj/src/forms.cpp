#include "cyclotome/forms.hpp"

#include "cyclotome/errors.hpp"

namespace cyclotome {

GradedClass phi(const CycIndex& ci, const WVector& w) {
  const auto n = static_cast<std::size_t>(ci.rank());
  GradedClass g{DimensionVector(n), DimensionVector(n)};
  const auto& cat = ci.category();
  for (const auto& [y, m] : w.entries()) {
    if (!ci.in_hat(y)) throw std::invalid_argument("Phi is defined on I-hat");
    DerivedObject x = ci.section(ci.sigma_inv(y));
    const auto& r = cat.root(x.module);
    (x.shift == 0 ? g.module_part : g.shifted_part) += m * r;
  }
  return g;
}

std::int64_t deg_phi(const CycIndex& ci, const WVector& w) {
  GradedClass g = phi(ci, w);
  return g.module_part.total() + g.shifted_part.total();
}

std::int64_t N_phi(const CycIndex& ci, const WVector& w) {
  GradedClass g = phi(ci, w);
  const Quiver& q = ci.quiver();
  std::int64_t pairing = q.symmetric_form(g.module_part, g.module_part) + q.symmetric_form(g.shifted_part, g.shifted_part);
  return pairing - (g.module_part.total() + g.shifted_part.total());
}

HalfInt exponent_K(const CycIndex& ci, const WVector& w) { return HalfInt::half(N_phi(ci, w)); }

HalfInt exponent_L(const CycIndex& ci, const WVector& w) { return exponent_K(ci, w) - HalfInt(deg_phi(ci, w)); }

std::int64_t d_form(const CycIndex& ci, const VWPair& m1, const VWPair& m2) {
  std::int64_t s = 0;
  const WVector r = residual(ci, m1);
  for (const auto& [y, a] : r.entries()) s += a * m2.v.at(ci.sigma(y));
  for (const auto& [x, a] : m1.v.entries()) s += a * m2.w.at(ci.sigma(x));
  return s;
}

std::int64_t euler_a(const Quiver& q, const GradedClass& x, const GradedClass& y) {
  return q.euler_form(x.module_part, y.module_part) - q.euler_form(y.module_part, x.module_part) +
         q.euler_form(x.shifted_part, y.shifted_part) - q.euler_form(y.shifted_part, x.shifted_part);
}

std::int64_t euler_sym(const Quiver& q, const GradedClass& x, const GradedClass& y) {
  return q.symmetric_form(x.module_part, y.module_part) + q.symmetric_form(x.shifted_part, y.shifted_part);
}

HalfInt twist_exponent(const CycIndex& ci, const WVector& w1, const WVector& w2) {
  return HalfInt::half(-euler_a(ci.quiver(), phi(ci, w1), phi(ci, w2)));
}

std::int64_t leading_exponent_tilde(const CycIndex& ci, const VWPair& m1, const VWPair& m2) {
  return d_form(ci, m2, m1) - d_form(ci, m1, m2);
}

HalfInt leading_exponent(const CycIndex& ci, const VWPair& m1, const VWPair& m2) {
  return HalfInt(leading_exponent_tilde(ci, m1, m2)) + twist_exponent(ci, m1.w, m2.w);
}

HalfInt script_N(const CycIndex& ci, const VWPair& m1, const VWPair& m2) {
  return HalfInt(d_form(ci, m2, m1) - d_form(ci, m1, m2)) +
         HalfInt::half(euler_a(ci.quiver(), phi(ci, m2.w), phi(ci, m1.w)));
}

std::strong_ordering q_degree_compare(const CycIndex& ci, const IndModule& m, const IndModule& n) {
  return ci.eta(m) <=> ci.eta(n);
}

std::int64_t hl_form(const CycIndex& ci, const IndModule& m, const IndModule& n) {
  if (m == n) return 0;
  const auto& cat = ci.category();
  const std::int64_t pairing = ci.quiver().symmetric_form(cat.root(m), cat.root(n));
  return ci.eta(m) <= ci.eta(n) ? pairing : -pairing;
}

namespace {

IndModule unit_module(const CycIndex& ci, const WVector& e) {
  if (e.entries().size() != 1 || e.entries().begin()->second != 1)
    throw NotIndecomposable(to_string(ci, e) + " is not a unit vector");
  const CycVertex y = e.entries().begin()->first;
  if (!ci.in_hat(y)) throw NotIndecomposable(to_string(ci, e) + " is not on I-hat");
  DerivedObject x = ci.section(ci.sigma_inv(y));
  if (x.shift != 0) throw NotIndecomposable(to_string(ci, e) + " is not sigma of a module");
  return x.module;
}

}  // namespace

std::int64_t hl_form(const CycIndex& ci, const WVector& e_m, const WVector& e_n) {
  return hl_form(ci, unit_module(ci, e_m), unit_module(ci, e_n));
}

std::int64_t hl_form_extended(const CycIndex& ci, const WVector& w1, const WVector& w2) {
  std::int64_t s = 0;
  for (const auto* w : {&w1, &w2})
    for (const auto& [y, m] : w->entries()) {
      if (!ci.in_hat(y) || ci.section(ci.sigma_inv(y)).shift != 0)
        throw NotInWPlus(to_string(ci, *w) + " is not supported on W+");
    }
  for (const auto& [y1, a] : w1.entries())
    for (const auto& [y2, b] : w2.entries())
      s += a * b * hl_form(ci, ci.section(ci.sigma_inv(y1)).module, ci.section(ci.sigma_inv(y2)).module);
  return s;
}

}  // namespace cyclotome
