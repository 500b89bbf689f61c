#pragma once

#include <compare>
#include <cstdint>

#include "cyclotome/dominant.hpp"
#include "cyclotome/laurent.hpp"

namespace cyclotome {

// A class in K0(Rep Q) + K0(Sigma Rep Q).
struct GradedClass {
  DimensionVector module_part;
  DimensionVector shifted_part;
  friend bool operator==(const GradedClass&, const GradedClass&) = default;
};

GradedClass phi(const CycIndex& ci, const WVector& w);
std::int64_t deg_phi(const CycIndex& ci, const WVector& w);
// (Phi w, Phi w) - deg Phi w, with ( , ) the symmetric Euler form on each part
std::int64_t N_phi(const CycIndex& ci, const WVector& w);
HalfInt exponent_K(const CycIndex& ci, const WVector& w);  // N/2
HalfInt exponent_L(const CycIndex& ci, const WVector& w);  // N/2 - deg

// (w1 - C v1) . sigma^* v2 + v1 . sigma^* w2
std::int64_t d_form(const CycIndex& ci, const VWPair& m1, const VWPair& m2);

std::int64_t euler_a(const Quiver& q, const GradedClass& x, const GradedClass& y);
std::int64_t euler_sym(const Quiver& q, const GradedClass& x, const GradedClass& y);

// -1/2 <Phi w1, Phi w2>_a
HalfInt twist_exponent(const CycIndex& ci, const WVector& w1, const WVector& w2);

// d(m2, m1) - d(m1, m2)
std::int64_t leading_exponent_tilde(const CycIndex& ci, const VWPair& m1, const VWPair& m2);
HalfInt leading_exponent(const CycIndex& ci, const VWPair& m1, const VWPair& m2);

// d(m2, m1) - d(m1, m2) + 1/2 <Phi w2, Phi w1>_a
HalfInt script_N(const CycIndex& ci, const VWPair& m1, const VWPair& m2);

std::strong_ordering q_degree_compare(const CycIndex& ci, const IndModule& m, const IndModule& n);
std::int64_t hl_form(const CycIndex& ci, const IndModule& m, const IndModule& n);
// On unit vectors e_{sigma M}, e_{sigma N}; NotIndecomposable otherwise.
std::int64_t hl_form(const CycIndex& ci, const WVector& e_m, const WVector& e_n);
// Bilinear extension to W+; NotInWPlus outside it.
std::int64_t hl_form_extended(const CycIndex& ci, const WVector& w1, const WVector& w2);

}  // namespace cyclotome
