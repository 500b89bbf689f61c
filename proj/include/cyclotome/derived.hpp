#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cyclotome/quiver.hpp"

namespace cyclotome {

// tau^{-step} P_vertex inside Rep(Q).
struct IndModule {
  int vertex = 0;
  int step = 0;
  friend auto operator<=>(const IndModule&, const IndModule&) = default;
};

// Sigma^shift of a module.
struct DerivedObject {
  IndModule module;
  int shift = 0;
  friend auto operator<=>(const DerivedObject&, const DerivedObject&) = default;
};

// Global position on ZQ: the object tau^{-step} P_vertex for any integer step.
struct OrbitPosition {
  int vertex = 0;
  int step = 0;
  friend auto operator<=>(const OrbitPosition&, const OrbitPosition&) = default;
};

struct WindowObject {
  OrbitPosition position;  // 0 <= step < h
  DimensionVector signed_class;
  DerivedObject object;
  std::vector<OrbitPosition> middle;  // AR triangle middle term ending here
};

class DerivedCategory {
 public:
  // Knits the AR quiver of Rep(Q) and the window of D^b(Q).
  explicit DerivedCategory(Quiver q);

  const Quiver& quiver() const { return quiver_; }
  int rank() const { return quiver_.rank(); }
  int coxeter_number() const { return h_; }

  const std::vector<IndModule>& modules() const { return modules_; }
  bool is_module(const IndModule& m) const;
  const DimensionVector& root(const IndModule& m) const;
  std::optional<IndModule> module_with_root(const DimensionVector& r) const;
  int last_step(int vertex) const { return last_[vertex]; }

  IndModule projective(int i) const { return {i, 0}; }
  IndModule injective(int i) const { return injective_[i]; }
  IndModule simple(int i) const;
  bool is_projective(const IndModule& m) const { return m.step == 0; }
  bool is_injective(const IndModule& m) const { return m.step == last_[m.vertex]; }
  bool is_simple(const IndModule& m) const { return root(m).total() == 1; }

  DerivedObject tau(const DerivedObject& x) const;
  DerivedObject tau_inv(const DerivedObject& x) const;
  DerivedObject tau_power(DerivedObject x, int k) const;  // tau^k
  DerivedObject sigma_shift(const DerivedObject& x, int k = 1) const { return {x.module, x.shift + k}; }
  DerivedObject nu(const DerivedObject& x) const { return tau(sigma_shift(x)); }

  OrbitPosition orbit_position(const DerivedObject& x) const;
  DerivedObject object_at(OrbitPosition p) const;
  DimensionVector signed_class(const DerivedObject& x) const;

  std::int64_t hom_dim(const DerivedObject& x, const DerivedObject& y) const;

  const std::vector<WindowObject>& window() const { return window_; }

  std::string name(const IndModule& m) const;
  std::string name(const DerivedObject& x) const;
  std::optional<DerivedObject> parse_name(std::string_view text) const;

  std::string ar_quiver_dot() const;

 private:
  OrbitPosition sigma_on_orbit(OrbitPosition p) const;
  OrbitPosition sigma_inv_on_orbit(OrbitPosition p) const;

  Quiver quiver_;
  int h_ = 0;
  std::vector<IndModule> modules_;
  std::map<IndModule, DimensionVector> roots_;
  std::map<DimensionVector, IndModule> by_root_;
  std::vector<int> last_;
  std::vector<IndModule> injective_;
  std::vector<int> sigma_target_;  // Sigma P_k sits on the orbit of P_{sigma_target_[k]}
  std::vector<int> sigma_offset_;  // ... at step sigma_offset_[k]
  std::vector<int> sigma_source_;
  std::vector<WindowObject> window_;
};

}  // namespace cyclotome
