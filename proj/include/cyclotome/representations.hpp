#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "cyclotome/derived.hpp"

namespace cyclotome {

using Rational = boost::multiprecision::cpp_rational;

struct RatMatrix {
  int rows = 0;
  int cols = 0;
  std::vector<Rational> a;

  RatMatrix() = default;
  RatMatrix(int r, int c) : rows(r), cols(c), a(static_cast<std::size_t>(r) * c) {}
  Rational& at(int i, int j) { return a[static_cast<std::size_t>(i) * cols + j]; }
  const Rational& at(int i, int j) const { return a[static_cast<std::size_t>(i) * cols + j]; }
};

int rank(RatMatrix m);
// Rows span the left null space {y : y m = 0}.
RatMatrix left_kernel(const RatMatrix& m);

// One linear map per arrow of the quiver, in arrow order, of shape dims[target] x dims[source].
struct Representation {
  std::vector<int> dims;
  std::vector<RatMatrix> maps;
};

// The indecomposable with the given positive root, built from a simple by
// reflection functors along an admissible sink sequence.
Representation build_indecomposable(const Quiver& q, const DimensionVector& root);

std::int64_t hom_space_dim(const Quiver& q, const Representation& m, const Representation& n);
std::int64_t ext1_space_dim(const Quiver& q, const Representation& m, const Representation& n);

// Hom in D^b(Q) from explicit matrices; caches the representations it builds.
class HomOracle {
 public:
  explicit HomOracle(const DerivedCategory& cat) : cat_(cat) {}
  std::int64_t hom_dim(const DerivedObject& x, const DerivedObject& y);
  const Representation& representation(const IndModule& m);

 private:
  const DerivedCategory& cat_;
  std::map<IndModule, Representation> cache_;
};

std::int64_t hom_dim_bruteforce(const DerivedCategory& cat, const DerivedObject& x, const DerivedObject& y);

}  // namespace cyclotome
