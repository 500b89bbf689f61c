#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

namespace cyclotome {

// Vertices are 0-based internally. Text formats and printed names use 1-based labels.
struct Arrow {
  int source = 0;
  int target = 0;
  friend bool operator==(const Arrow&, const Arrow&) = default;
};

enum class Family { A, D, E };

struct DynkinType {
  Family family = Family::A;
  int rank = 1;

  static DynkinType parse(std::string_view text);
  std::string name() const;
  int coxeter_number() const;  // tabulated value
  friend bool operator==(const DynkinType&, const DynkinType&) = default;
};

// Integer vector indexed by the vertex set.
class DimensionVector {
 public:
  DimensionVector() = default;
  explicit DimensionVector(std::size_t n) : coords_(n, 0) {}
  DimensionVector(std::initializer_list<std::int64_t> values) : coords_(values) {}
  explicit DimensionVector(std::vector<std::int64_t> values) : coords_(std::move(values)) {}

  static DimensionVector unit(std::size_t n, int i);

  std::size_t size() const { return coords_.size(); }
  std::int64_t operator[](std::size_t i) const { return coords_[i]; }
  std::int64_t& operator[](std::size_t i) { return coords_[i]; }
  const std::vector<std::int64_t>& coords() const { return coords_; }

  std::int64_t total() const;
  bool is_zero() const;
  bool is_nonnegative() const;
  bool is_nonpositive() const;
  // componentwise comparison
  bool dominates(const DimensionVector& other) const;

  DimensionVector& operator+=(const DimensionVector& o);
  DimensionVector& operator-=(const DimensionVector& o);
  friend DimensionVector operator+(DimensionVector a, const DimensionVector& b) { return a += b; }
  friend DimensionVector operator-(DimensionVector a, const DimensionVector& b) { return a -= b; }
  friend DimensionVector operator-(DimensionVector a);
  friend DimensionVector operator*(std::int64_t k, DimensionVector a);

  friend bool operator==(const DimensionVector&, const DimensionVector&) = default;
  friend auto operator<=>(const DimensionVector&, const DimensionVector&) = default;

  std::string to_string() const;

 private:
  std::vector<std::int64_t> coords_;
};

struct IntMatrix {
  int n = 0;
  std::vector<std::int64_t> a;  // row-major

  IntMatrix() = default;
  explicit IntMatrix(int size) : n(size), a(static_cast<std::size_t>(size) * size, 0) {}
  static IntMatrix identity(int size);

  std::int64_t& at(int i, int j) { return a[static_cast<std::size_t>(i) * n + j]; }
  std::int64_t at(int i, int j) const { return a[static_cast<std::size_t>(i) * n + j]; }
  IntMatrix transpose() const;
  DimensionVector apply(const DimensionVector& x) const;

  friend IntMatrix operator*(const IntMatrix& x, const IntMatrix& y);
  friend IntMatrix operator-(IntMatrix x);
  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;
};

struct HeightFunction {
  std::vector<int> xi;
  int operator()(int i) const { return xi[static_cast<std::size_t>(i)]; }
};

class Quiver {
 public:
  // Validates the arrows and classifies the underlying diagram.
  static Quiver from_arrows(int n, std::vector<Arrow> arrows);
  // "vertices: n" followed by "arrow: s t" lines, 1-based labels, '#' comments.
  static Quiver parse(std::string_view text);
  static Quiver from_file(const std::string& path);
  // orientation: "linear", "alternating" or "file:<path>" (type ignored for files).
  static Quiver builtin(const DynkinType& type, std::string_view orientation);
  static Quiver load(std::string_view type, std::string_view orientation);
  static std::vector<Quiver> all_orientations(const DynkinType& type);

  int rank() const { return n_; }
  const std::vector<Arrow>& arrows() const { return arrows_; }
  const DynkinType& type() const { return type_; }
  int coxeter_number() const { return coxeter_number_; }
  const std::vector<int>& neighbours(int i) const { return neighbours_[static_cast<std::size_t>(i)]; }
  bool adjacent(int i, int j) const;
  // number of arrows i -> j (0 or 1)
  int arrow_count(int i, int j) const;

  std::int64_t euler_form(const DimensionVector& x, const DimensionVector& y) const;
  std::int64_t symmetric_form(const DimensionVector& x, const DimensionVector& y) const;
  int cartan_entry(int i, int j) const;
  IntMatrix euler_matrix() const;
  IntMatrix cartan_matrix() const;
  // Phi with dim(tau M) = Phi dim(M), and its inverse.
  IntMatrix coxeter_matrix() const;
  IntMatrix coxeter_inverse() const;
  HeightFunction height_function() const;

  DimensionVector simple_root(int i) const { return DimensionVector::unit(static_cast<std::size_t>(n_), i); }
  DimensionVector projective_dim(int i) const;
  DimensionVector injective_dim(int i) const;
  // Positive roots by closing the simple roots under simple reflections.
  std::vector<DimensionVector> positive_roots() const;

  std::string orientation_label() const;
  std::string to_text() const;

 private:
  Quiver() = default;
  void classify();

  int n_ = 0;
  std::vector<Arrow> arrows_;
  std::vector<std::vector<int>> neighbours_;
  std::vector<std::vector<bool>> reach_;  // reach_[i][j]: a path i -> j exists (i == j included)
  DynkinType type_;
  int coxeter_number_ = 0;
};

}  // namespace cyclotome
