#include "doctest.h"

#include "cyclotome/laurent.hpp"
#include "cyclotome/poly.hpp"

using namespace cyclotome;

TEST_CASE("half integers") {
  CHECK(HalfInt::half(3).to_string() == "3/2");
  CHECK(HalfInt::half(-1).to_string() == "-1/2");
  CHECK(HalfInt(2).to_string() == "2");
  CHECK(HalfInt::half(1) + HalfInt::half(1) == HalfInt(1));
  CHECK(HalfInt::half(3).is_integer() == false);
  CHECK(HalfInt::half(-3) < HalfInt(-1));
  CHECK(3 * HalfInt::half(1) == HalfInt::half(3));
}

TEST_CASE("Laurent polynomials in t^(1/2)") {
  const HalfLaurent t = HalfLaurent::t_power(1);
  const HalfLaurent s = HalfLaurent::t_power(HalfInt::half(1));
  CHECK(s * s == t);
  CHECK(HalfLaurent::quantum_integer(2) == t + HalfLaurent::t_power(-1));
  CHECK(HalfLaurent::quantum_integer(3) == t * t + HalfLaurent(1) + HalfLaurent::t_power(-2));
  CHECK((t - t).is_zero());
  CHECK((t + HalfLaurent(1)).bar() == HalfLaurent::t_power(-1) + HalfLaurent(1));
  CHECK(s.bar().bar() == s);
  CHECK((t - HalfLaurent::t_power(-1)) * (t + HalfLaurent::t_power(-1)) == t * t - HalfLaurent::t_power(-2));
  CHECK(hl_mul(t, t) == t * t);
  CHECK(hl_add(t, -t).is_zero());
  CHECK(hl_bar(t) == HalfLaurent::t_power(-1));
  CHECK((HalfLaurent(2) * s - HalfLaurent::monomial(HalfInt::half(1), 2)).is_zero());
  CHECK((t - HalfLaurent(1)).coefficient(0) == -1);
  CHECK(HalfLaurent().to_string() == "0");
}

TEST_CASE("formal sums cancel exactly") {
  using S = FormalSum<int>;
  const HalfLaurent t = HalfLaurent::t_power(1);
  S a = S::term(1, t) + S::term(2);
  S b = S::term(1, t);
  CHECK(a - b == S::term(2));
  CHECK((a - a).is_zero());
  CHECK((t * S::term(2)).coefficient(2) == t);
  CHECK(S::term(3, HalfLaurent()).is_zero());
}

TEST_CASE("integer polynomials") {
  const IntPoly t = IntPoly::t_power(1);
  const IntPoly p = (t + 1) * (t - 1);
  CHECK(p == t * t - 1);
  CHECK(IntPoly::exact_div(p, t + 1) == t - 1);
  CHECK_THROWS_AS(IntPoly::exact_div(t * t + 1, t + 1), std::domain_error);
  CHECK_THROWS_AS(IntPoly::exact_div(t, IntPoly()), std::domain_error);
  IntPolyMatrix m(2, 3);
  m.at(0, 0) = t;
  m.at(0, 1) = 1;
  m.at(1, 0) = t * t;
  m.at(1, 1) = t;
  CHECK(m.rank() == 1);
  m.at(1, 2) = 1;
  CHECK(m.rank() == 2);
}
