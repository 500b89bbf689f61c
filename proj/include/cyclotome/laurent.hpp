#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <utility>

namespace cyclotome {

// An element of (1/2)Z stored as its double.
class HalfInt {
 public:
  constexpr HalfInt() = default;
  constexpr HalfInt(std::int64_t n) : twice_(2 * n) {}  // NOLINT(google-explicit-constructor)
  static constexpr HalfInt from_twice(std::int64_t t) {
    HalfInt h;
    h.twice_ = t;
    return h;
  }
  static constexpr HalfInt half(std::int64_t n) { return from_twice(n); }

  constexpr std::int64_t twice() const { return twice_; }
  constexpr bool is_integer() const { return twice_ % 2 == 0; }

  friend constexpr HalfInt operator+(HalfInt a, HalfInt b) { return from_twice(a.twice_ + b.twice_); }
  friend constexpr HalfInt operator-(HalfInt a, HalfInt b) { return from_twice(a.twice_ - b.twice_); }
  friend constexpr HalfInt operator-(HalfInt a) { return from_twice(-a.twice_); }
  friend constexpr HalfInt operator*(std::int64_t k, HalfInt a) { return from_twice(k * a.twice_); }
  HalfInt& operator+=(HalfInt o) { twice_ += o.twice_; return *this; }
  HalfInt& operator-=(HalfInt o) { twice_ -= o.twice_; return *this; }
  friend constexpr auto operator<=>(HalfInt, HalfInt) = default;
  friend constexpr bool operator==(HalfInt, HalfInt) = default;

  std::string to_string() const;

 private:
  std::int64_t twice_ = 0;
};

// Integer Laurent polynomial in t^{1/2}; exponents are HalfInt.
class HalfLaurent {
 public:
  using Terms = std::map<HalfInt, std::int64_t>;

  HalfLaurent() = default;
  HalfLaurent(std::int64_t c) { add_term(0, c); }  // NOLINT(google-explicit-constructor)
  static HalfLaurent monomial(HalfInt e, std::int64_t c = 1);
  static HalfLaurent t_power(HalfInt e) { return monomial(e); }
  static HalfLaurent quantum_integer(int n);

  const Terms& terms() const { return terms_; }
  std::int64_t coefficient(HalfInt e) const;
  bool is_zero() const { return terms_.empty(); }
  void add_term(HalfInt e, std::int64_t c);

  HalfLaurent bar() const;

  HalfLaurent& operator+=(const HalfLaurent& o);
  HalfLaurent& operator-=(const HalfLaurent& o);
  friend HalfLaurent operator+(HalfLaurent a, const HalfLaurent& b) { return a += b; }
  friend HalfLaurent operator-(HalfLaurent a, const HalfLaurent& b) { return a -= b; }
  friend HalfLaurent operator-(const HalfLaurent& a) { return HalfLaurent() - a; }
  friend HalfLaurent operator*(const HalfLaurent& a, const HalfLaurent& b);
  friend bool operator==(const HalfLaurent&, const HalfLaurent&) = default;

  std::string to_string() const;

 private:
  Terms terms_;
};

HalfLaurent hl_add(const HalfLaurent& a, const HalfLaurent& b);
HalfLaurent hl_mul(const HalfLaurent& a, const HalfLaurent& b);
HalfLaurent hl_bar(const HalfLaurent& a);

// Finite HalfLaurent-linear combination of opaque basis labels.
template <class Label>
class FormalSum {
 public:
  using Terms = std::map<Label, HalfLaurent>;

  FormalSum() = default;
  static FormalSum term(const Label& l, HalfLaurent c = 1) {
    FormalSum s;
    s.add(l, std::move(c));
    return s;
  }

  void add(const Label& l, const HalfLaurent& c) {
    if (c.is_zero()) return;
    auto it = terms_.find(l);
    if (it == terms_.end()) {
      terms_.emplace(l, c);
      return;
    }
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
  HalfLaurent coefficient(const Label& l) const {
    auto it = terms_.find(l);
    return it == terms_.end() ? HalfLaurent() : it->second;
  }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  FormalSum& operator+=(const FormalSum& o) {
    for (const auto& [l, c] : o.terms_) add(l, c);
    return *this;
  }
  FormalSum& operator-=(const FormalSum& o) {
    for (const auto& [l, c] : o.terms_) add(l, -c);
    return *this;
  }
  friend FormalSum operator+(FormalSum a, const FormalSum& b) { return a += b; }
  friend FormalSum operator-(FormalSum a, const FormalSum& b) { return a -= b; }
  friend FormalSum operator*(const HalfLaurent& k, const FormalSum& a) {
    FormalSum r;
    for (const auto& [l, c] : a.terms_) r.add(l, k * c);
    return r;
  }
  friend bool operator==(const FormalSum&, const FormalSum&) = default;

 private:
  Terms terms_;
};

}  // namespace cyclotome
