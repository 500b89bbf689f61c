#include "cyclotome/poly.hpp"

#include <algorithm>
#include <stdexcept>

namespace cyclotome {

IntPoly IntPoly::t_power(int k, long long c) {
  std::vector<BigInt> v(static_cast<std::size_t>(k) + 1);
  v[static_cast<std::size_t>(k)] = c;
  return IntPoly(std::move(v));
}

void IntPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

IntPoly operator+(const IntPoly& a, const IntPoly& b) {
  std::vector<BigInt> r(std::max(a.c_.size(), b.c_.size()));
  for (std::size_t i = 0; i < a.c_.size(); ++i) r[i] += a.c_[i];
  for (std::size_t i = 0; i < b.c_.size(); ++i) r[i] += b.c_[i];
  return IntPoly(std::move(r));
}

IntPoly operator-(const IntPoly& a, const IntPoly& b) {
  std::vector<BigInt> r(std::max(a.c_.size(), b.c_.size()));
  for (std::size_t i = 0; i < a.c_.size(); ++i) r[i] += a.c_[i];
  for (std::size_t i = 0; i < b.c_.size(); ++i) r[i] -= b.c_[i];
  return IntPoly(std::move(r));
}

IntPoly operator*(const IntPoly& a, const IntPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<BigInt> r(a.c_.size() + b.c_.size() - 1);
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i] == 0) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
  }
  return IntPoly(std::move(r));
}

IntPoly IntPoly::exact_div(const IntPoly& a, const IntPoly& b) {
  if (b.is_zero()) throw std::domain_error("division by the zero polynomial");
  if (a.is_zero()) return {};
  if (a.degree() < b.degree()) throw std::domain_error("inexact polynomial division");
  std::vector<BigInt> rem = a.c_;
  std::vector<BigInt> q(static_cast<std::size_t>(a.degree() - b.degree()) + 1);
  const BigInt& lead = b.c_.back();
  for (int k = a.degree() - b.degree(); k >= 0; --k) {
    const BigInt& top = rem[static_cast<std::size_t>(k + b.degree())];
    if (top == 0) continue;
    if (top % lead != 0) throw std::domain_error("inexact polynomial division");
    BigInt f = top / lead;
    q[static_cast<std::size_t>(k)] = f;
    for (std::size_t j = 0; j < b.c_.size(); ++j) rem[static_cast<std::size_t>(k) + j] -= f * b.c_[j];
  }
  for (const auto& r : rem)
    if (r != 0) throw std::domain_error("inexact polynomial division");
  return IntPoly(std::move(q));
}

std::string IntPoly::to_string() const {
  if (c_.empty()) return "0";
  std::string s;
  for (int k = degree(); k >= 0; --k) {
    const BigInt& c = c_[static_cast<std::size_t>(k)];
    if (c == 0) continue;
    if (!s.empty()) s += c < 0 ? " - " : " + ";
    else if (c < 0) s += "-";
    BigInt a = c < 0 ? BigInt(-c) : c;
    if (k == 0 || a != 1) s += a.str();
    if (k > 0) s += k == 1 ? "t" : "t^" + std::to_string(k);
  }
  return s;
}

int IntPolyMatrix::rank() const {
  std::vector<IntPoly> m = a_;
  auto at = [&](int i, int j) -> IntPoly& { return m[static_cast<std::size_t>(i) * cols_ + j]; };
  IntPoly prev(1);
  int r = 0;
  for (int col = 0; col < cols_ && r < rows_; ++col) {
    int p = -1;
    for (int i = r; i < rows_; ++i)
      if (!at(i, col).is_zero()) {
        p = i;
        break;
      }
    if (p < 0) continue;
    if (p != r)
      for (int j = 0; j < cols_; ++j) std::swap(at(p, j), at(r, j));
    const IntPoly pivot = at(r, col);
    for (int i = r + 1; i < rows_; ++i) {
      const IntPoly f = at(i, col);
      for (int j = col + 1; j < cols_; ++j) at(i, j) = IntPoly::exact_div(pivot * at(i, j) - f * at(r, j), prev);
      at(i, col) = IntPoly();
    }
    prev = pivot;
    ++r;
  }
  return r;
}

}  // namespace cyclotome
