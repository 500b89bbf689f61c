#include "cyclotome/derived.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "cyclotome/errors.hpp"

namespace cyclotome {

DerivedCategory::DerivedCategory(Quiver q) : quiver_(std::move(q)), h_(quiver_.coxeter_number()) {
  const int n = quiver_.rank();
  const IntMatrix phi_inv = quiver_.coxeter_inverse();
  last_.assign(n, -1);
  for (int i = 0; i < n; ++i) {
    DimensionVector c = quiver_.projective_dim(i);
    int d = 0;
    while (c.is_nonnegative() && !c.is_zero()) {
      IndModule m{i, d};
      roots_.emplace(m, c);
      if (!by_root_.emplace(c, m).second)
        throw std::logic_error("two slots share the root " + c.to_string());
      c = phi_inv.apply(c);
      ++d;
    }
    if (!c.is_nonpositive()) throw MixedSignClass("class " + c.to_string() + " leaving the module orbit");
    last_[i] = d - 1;
  }
  for (const auto& [m, r] : roots_) modules_.push_back(m);

  injective_.resize(n);
  sigma_target_.resize(n);
  sigma_offset_.resize(n);
  sigma_source_.assign(n, -1);
  for (int k = 0; k < n; ++k) {
    auto inj = module_with_root(quiver_.injective_dim(k));
    if (!inj || !is_injective(*inj)) throw std::logic_error("injective I" + std::to_string(k + 1) + " not at an orbit end");
    injective_[k] = *inj;
    sigma_target_[k] = inj->vertex;
    sigma_offset_[k] = inj->step + 1;
    sigma_source_[inj->vertex] = k;
  }

  // window objects from powers of the Coxeter matrix
  const HeightFunction xi = quiver_.height_function();
  IntMatrix power = IntMatrix::identity(n);
  std::vector<IntMatrix> powers;
  for (int d = 0; d < h_; ++d) {
    powers.push_back(power);
    power = power * phi_inv;
  }
  for (int i = 0; i < n; ++i) {
    for (int d = 0; d < h_; ++d) {
      WindowObject w;
      w.position = {i, d};
      w.signed_class = powers[d].apply(quiver_.projective_dim(i));
      if (!w.signed_class.is_nonnegative() && !w.signed_class.is_nonpositive())
        throw MixedSignClass("window class " + w.signed_class.to_string() + " at (" + std::to_string(i + 1) + "," +
                             std::to_string(d) + ")");
      w.object = object_at(w.position);
      if (!(signed_class(w.object) == w.signed_class))
        throw std::logic_error("orbit walk disagrees with Coxeter powers at (" + std::to_string(i + 1) + "," +
                               std::to_string(d) + ")");
      for (int j : quiver_.neighbours(i)) {
        if (xi(j) == xi(i) - 1)
          w.middle.push_back({j, d});
        else
          w.middle.push_back({j, d - 1});
      }
      window_.push_back(std::move(w));
    }
  }
}

bool DerivedCategory::is_module(const IndModule& m) const { return roots_.count(m) > 0; }

const DimensionVector& DerivedCategory::root(const IndModule& m) const {
  auto it = roots_.find(m);
  if (it == roots_.end())
    throw std::out_of_range("no module in slot (" + std::to_string(m.vertex + 1) + "," + std::to_string(m.step) + ")");
  return it->second;
}

std::optional<IndModule> DerivedCategory::module_with_root(const DimensionVector& r) const {
  auto it = by_root_.find(r);
  if (it == by_root_.end()) return std::nullopt;
  return it->second;
}

IndModule DerivedCategory::simple(int i) const { return *module_with_root(quiver_.simple_root(i)); }

DerivedObject DerivedCategory::tau(const DerivedObject& x) const {
  const auto& m = x.module;
  if (m.step >= 1) return {{m.vertex, m.step - 1}, x.shift};
  return {injective_[m.vertex], x.shift - 1};
}

DerivedObject DerivedCategory::tau_inv(const DerivedObject& x) const {
  const auto& m = x.module;
  if (m.step < last_[m.vertex]) return {{m.vertex, m.step + 1}, x.shift};
  return {{sigma_source_[m.vertex], 0}, x.shift + 1};
}

DerivedObject DerivedCategory::tau_power(DerivedObject x, int k) const {
  for (; k > 0; --k) x = tau(x);
  for (; k < 0; ++k) x = tau_inv(x);
  return x;
}

OrbitPosition DerivedCategory::sigma_on_orbit(OrbitPosition p) const {
  return {sigma_target_[p.vertex], p.step + sigma_offset_[p.vertex]};
}

OrbitPosition DerivedCategory::sigma_inv_on_orbit(OrbitPosition p) const {
  int k = sigma_source_[p.vertex];
  return {k, p.step - sigma_offset_[k]};
}

OrbitPosition DerivedCategory::orbit_position(const DerivedObject& x) const {
  OrbitPosition p{x.module.vertex, x.module.step};
  for (int s = x.shift; s > 0; --s) p = sigma_on_orbit(p);
  for (int s = x.shift; s < 0; ++s) p = sigma_inv_on_orbit(p);
  return p;
}

DerivedObject DerivedCategory::object_at(OrbitPosition p) const {
  int shift = 0;
  while (p.step > last_[p.vertex]) {
    p = sigma_inv_on_orbit(p);
    ++shift;
  }
  while (p.step < 0) {
    p = sigma_on_orbit(p);
    --shift;
  }
  return {{p.vertex, p.step}, shift};
}

DimensionVector DerivedCategory::signed_class(const DerivedObject& x) const {
  const auto& r = root(x.module);
  return (x.shift % 2 == 0) ? r : -r;
}

std::int64_t DerivedCategory::hom_dim(const DerivedObject& x, const DerivedObject& y) const {
  const int gap = y.shift - x.shift;
  if (gap != 0 && gap != 1) return 0;
  const auto e = quiver_.euler_form(root(x.module), root(y.module));
  return gap == 0 ? std::max<std::int64_t>(e, 0) : std::max<std::int64_t>(-e, 0);
}

std::string DerivedCategory::name(const IndModule& m) const {
  const auto& r = root(m);
  if (r.total() == 1) {
    for (std::size_t k = 0; k < r.size(); ++k)
      if (r[k] == 1) return "S" + std::to_string(k + 1);
  }
  if (is_projective(m)) return "P" + std::to_string(m.vertex + 1);
  if (is_injective(m)) return "I" + std::to_string(sigma_source_[m.vertex] + 1);
  return "t" + std::to_string(m.step) + "P" + std::to_string(m.vertex + 1);
}

std::string DerivedCategory::name(const DerivedObject& x) const {
  std::string base = name(x.module);
  if (x.shift == 0) return base;
  if (x.shift == 1) return "Sigma" + base;
  return "Sigma^" + std::to_string(x.shift) + base;
}

namespace {

bool read_int(std::string_view& s, int& out) {
  std::size_t k = 0;
  bool neg = false;
  if (k < s.size() && s[k] == '-') {
    neg = true;
    ++k;
  }
  std::size_t start = k;
  int v = 0;
  while (k < s.size() && s[k] >= '0' && s[k] <= '9') {
    v = v * 10 + (s[k] - '0');
    ++k;
    if (v > 1000000) return false;
  }
  if (k == start) return false;
  out = neg ? -v : v;
  s.remove_prefix(k);
  return true;
}

}  // namespace

std::optional<DerivedObject> DerivedCategory::parse_name(std::string_view s) const {
  int shift = 0;
  for (;;) {
    if (s.substr(0, 6) == "Sigma^") {
      s.remove_prefix(6);
      int k = 0;
      if (!read_int(s, k)) return std::nullopt;
      shift += k;
    } else if (s.substr(0, 5) == "Sigma") {
      s.remove_prefix(5);
      shift += 1;
    } else if (s.substr(0, 2) == "\xCE\xA3") {  // UTF-8 capital sigma
      s.remove_prefix(2);
      shift += 1;
    } else {
      break;
    }
  }
  if (s.empty()) return std::nullopt;
  const int n = quiver_.rank();
  char kind = s[0];
  s.remove_prefix(1);
  int a = 0;
  std::optional<IndModule> m;
  if (kind == 't') {
    int i = 0;
    if (!read_int(s, a) || s.empty() || s[0] != 'P') return std::nullopt;
    s.remove_prefix(1);
    if (!read_int(s, i) || i < 1 || i > n) return std::nullopt;
    IndModule cand{i - 1, a};
    if (is_module(cand)) m = cand;
  } else {
    if (!read_int(s, a) || a < 1 || a > n) return std::nullopt;
    if (kind == 'S') m = simple(a - 1);
    else if (kind == 'P') m = projective(a - 1);
    else if (kind == 'I') m = injective(a - 1);
  }
  if (!m || !s.empty()) return std::nullopt;
  return DerivedObject{*m, shift};
}

std::string DerivedCategory::ar_quiver_dot() const {
  const HeightFunction xi = quiver_.height_function();
  auto node = [](const OrbitPosition& p) {
    return "w" + std::to_string(p.vertex + 1) + "_" + std::to_string(p.step);
  };
  std::ostringstream out;
  out << "digraph ar_quiver {\n";
  out << "  graph [label=\"" << quiver_.type().name() << " " << quiver_.orientation_label()
      << "\", layout=neato, splines=true];\n";
  out << "  node [shape=plaintext];\n";
  for (const auto& w : window_) {
    const int column = xi(w.position.vertex) + 1 + 2 * w.position.step;
    out << "  " << node(w.position) << " [label=\"" << name(w.object) << "\\n" << w.signed_class.to_string()
        << "\", pos=\"" << column << "," << -w.position.vertex << "!\"];\n";
  }
  for (const auto& w : window_) {
    for (const auto& m : w.middle)
      if (m.step >= 0) out << "  " << node(m) << " -> " << node(w.position) << ";\n";
  }
  for (const auto& w : window_) {
    if (w.position.step >= 1)
      out << "  " << node(w.position) << " -> " << node({w.position.vertex, w.position.step - 1})
          << " [style=dashed, constraint=false];\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace cyclotome
