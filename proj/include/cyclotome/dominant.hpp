#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "cyclotome/cyclic_index.hpp"

namespace cyclotome {

struct VWPair {
  VVector v;
  WVector w;
  friend bool operator==(const VWPair&, const VWPair&) = default;
  friend bool operator<(const VWPair& a, const VWPair& b) {
    if (a.v == b.v) return a.w < b.w;
    return a.v < b.v;
  }
  friend VWPair operator+(const VWPair& a, const VWPair& b) { return {a.v + b.v, a.w + b.w}; }
};

std::string to_string(const CycIndex& ci, const VWPair& p);

class Cones {
 public:
  explicit Cones(const CycIndex& ci);

  bool in_W_plus(const WVector& w) const { return supported_on(w, w_plus_); }
  bool in_W_minus(const WVector& w) const { return supported_on(w, w_minus_); }
  bool in_W_S(const WVector& w) const { return supported_on(w, w_s_); }
  bool in_W_Sigma_S(const WVector& w) const { return supported_on(w, w_sigma_s_); }
  bool in_V_plus(const VVector& v) const { return supported_on(v, v_plus_); }
  bool in_V_minus(const VVector& v) const { return supported_on(v, v_minus_); }
  bool in_W_zero(const WVector& w) const;
  bool in_V_zero(const VVector& v) const;

  // supports of the coordinate cones
  const std::vector<CycVertex>& W_plus_support() const { return w_plus_; }
  const std::vector<CycVertex>& W_minus_support() const { return w_minus_; }
  const std::vector<CycVertex>& W_S_support() const { return w_s_; }
  const std::vector<CycVertex>& W_Sigma_S_support() const { return w_sigma_s_; }
  const std::vector<CycVertex>& V_plus_support() const { return v_plus_; }
  const std::vector<CycVertex>& V_minus_support() const { return v_minus_; }

 private:
  template <class Tag>
  static bool supported_on(const CycVector<Tag>& x, const std::vector<CycVertex>& support);

  const CycIndex& ci_;
  std::vector<CycVertex> w_plus_, w_minus_, w_s_, w_sigma_s_, v_plus_, v_minus_;
};

bool is_l_dominant(const CycIndex& ci, const VWPair& p);
// w - C_q v
WVector residual(const CycIndex& ci, const VWPair& p);

VVector v_f(const CycIndex& ci, int i);
VVector v_sigma_f(const CycIndex& ci, int i);
WVector w_f(const CycIndex& ci, int i);

struct Decomposition {
  VWPair positive;
  VWPair cartan;
  VWPair negative;
};

Decomposition decompose(const CycIndex& ci, const VWPair& p);

VWPair iota(const CycIndex& ci, const IndModule& n);
VWPair iota_additive(const CycIndex& ci, const std::vector<IndModule>& modules);
VWPair solve_w_tilde(const CycIndex& ci, const WVector& w_tilde);

std::int64_t kostant_partitions(const Quiver& q, const DimensionVector& beta);
std::vector<std::vector<IndModule>> kostant_partition_list(const DerivedCategory& cat, const DimensionVector& beta);

struct SearchLimits {
  std::int64_t max_nodes = 20'000'000;
};

// Every v with (v, w) l-dominant, by depth-first search under the mass bound
// 2 * sum(v) <= sum_y R_{i(y)} w(y) (R = sum of positive roots) and the
// per-coordinate cap (sum w) * h. nullopt when the node budget runs out.
std::optional<std::vector<VVector>> enumerate_l_dominant_bruteforce(const CycIndex& ci, const WVector& w,
                                                                    const SearchLimits& limits = {});

struct EnumerateOptions {
  bool cross_check = false;
  SearchLimits limits;
};

// Sorted. Requires w in W^S + W^{Sigma S}; throws NotSupported otherwise and
// EnumerationMismatch if a requested cross-check disagrees.
std::vector<VVector> enumerate_l_dominant(const CycIndex& ci, const WVector& w, const EnumerateOptions& opts = {});

// sum over Cartan coefficients k <= min(c, c') of prod(k_i + 1) K(beta+ - k) K(beta- - k)
std::int64_t dominant_count(const CycIndex& ci, const WVector& w);

}  // namespace cyclotome
