#pragma once

#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace cyclotome {

using BigInt = boost::multiprecision::cpp_int;

// Polynomial in t with integer coefficients, lowest degree first, no trailing zeros.
class IntPoly {
 public:
  IntPoly() = default;
  IntPoly(long long c) {  // NOLINT(google-explicit-constructor)
    if (c != 0) c_.push_back(c);
  }
  explicit IntPoly(std::vector<BigInt> coeffs) : c_(std::move(coeffs)) { trim(); }
  static IntPoly t_power(int k, long long c = 1);

  bool is_zero() const { return c_.empty(); }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  const std::vector<BigInt>& coeffs() const { return c_; }

  friend IntPoly operator+(const IntPoly& a, const IntPoly& b);
  friend IntPoly operator-(const IntPoly& a, const IntPoly& b);
  friend IntPoly operator*(const IntPoly& a, const IntPoly& b);
  friend bool operator==(const IntPoly&, const IntPoly&) = default;

  // Exact quotient; throws std::domain_error if b does not divide a in Z[t].
  static IntPoly exact_div(const IntPoly& a, const IntPoly& b);

  std::string to_string() const;

 private:
  void trim();
  std::vector<BigInt> c_;
};

class IntPolyMatrix {
 public:
  IntPolyMatrix(int rows, int cols) : rows_(rows), cols_(cols), a_(static_cast<std::size_t>(rows) * cols) {}
  int rows() const { return rows_; }
  int cols() const { return cols_; }
  IntPoly& at(int i, int j) { return a_[static_cast<std::size_t>(i) * cols_ + j]; }
  const IntPoly& at(int i, int j) const { return a_[static_cast<std::size_t>(i) * cols_ + j]; }

  // Rank over Q(t) by fraction-free (Bareiss) elimination.
  int rank() const;

 private:
  int rows_;
  int cols_;
  std::vector<IntPoly> a_;
};

}  // namespace cyclotome
