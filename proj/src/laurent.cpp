#include "cyclotome/laurent.hpp"

namespace cyclotome {

std::string HalfInt::to_string() const {
  if (is_integer()) return std::to_string(twice_ / 2);
  return std::to_string(twice_) + "/2";
}

HalfLaurent HalfLaurent::monomial(HalfInt e, std::int64_t c) {
  HalfLaurent p;
  p.add_term(e, c);
  return p;
}

// [n]_t = t^{n-1} + t^{n-3} + ... + t^{1-n}
HalfLaurent HalfLaurent::quantum_integer(int n) {
  HalfLaurent p;
  int sign = n < 0 ? -1 : 1;
  int m = n < 0 ? -n : n;
  for (int k = 0; k < m; ++k) p.add_term(m - 1 - 2 * k, sign);
  return p;
}

std::int64_t HalfLaurent::coefficient(HalfInt e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? 0 : it->second;
}

void HalfLaurent::add_term(HalfInt e, std::int64_t c) {
  if (c == 0) return;
  auto& slot = terms_[e];
  slot += c;
  if (slot == 0) terms_.erase(e);
}

HalfLaurent HalfLaurent::bar() const {
  HalfLaurent r;
  for (const auto& [e, c] : terms_) r.terms_.emplace(-e, c);
  return r;
}

HalfLaurent& HalfLaurent::operator+=(const HalfLaurent& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

HalfLaurent& HalfLaurent::operator-=(const HalfLaurent& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

HalfLaurent operator*(const HalfLaurent& a, const HalfLaurent& b) {
  HalfLaurent r;
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) r.add_term(ea + eb, ca * cb);
  return r;
}

std::string HalfLaurent::to_string() const {
  if (terms_.empty()) return "0";
  std::string s;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    auto [e, c] = *it;
    if (!s.empty()) s += c < 0 ? " - " : " + ";
    else if (c < 0) s += "-";
    std::int64_t a = c < 0 ? -c : c;
    if (e == HalfInt(0)) {
      s += std::to_string(a);
      continue;
    }
    if (a != 1) s += std::to_string(a) + "*";
    s += "t";
    if (!(e == HalfInt(1))) s += "^" + (e.is_integer() ? e.to_string() : "(" + e.to_string() + ")");
  }
  return s;
}

HalfLaurent hl_add(const HalfLaurent& a, const HalfLaurent& b) { return a + b; }
HalfLaurent hl_mul(const HalfLaurent& a, const HalfLaurent& b) { return a * b; }
HalfLaurent hl_bar(const HalfLaurent& a) { return a.bar(); }

}  // namespace cyclotome
