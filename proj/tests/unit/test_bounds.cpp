#include <cmath>

#include "doctest.h"
#include "hypersat/bounds.hpp"

using namespace hypersat;

TEST_CASE("bound_values exponents") {
  const auto b3 = bound_values(3, 2, 100, 5000);
  CHECK(b3.f_r == Rational(1));
  CHECK(b3.weaker_exponent == Rational(1));
  CHECK(b3.coincide);
  CHECK(b3.conditional_exponent == Rational(1, 3));

  const auto b4 = bound_values(4, 2, 100, 5000);
  CHECK(b4.f_r == Rational(7, 12));
  CHECK(b4.f_r < b4.weaker_exponent);
  CHECK_FALSE(b4.coincide);
  REQUIRE(b4.f_prev);
  CHECK(*b4.f_prev == Rational(1));
  CHECK(*b4.a_edge_exponent == Rational(5, 12));
  CHECK(*b4.a_vertex_exponent == Rational(8, 12));
  CHECK(*b4.a_value == doctest::Approx(std::pow(5000.0, 5.0 / 12) * std::pow(100.0, -8.0 / 12)));
}

TEST_CASE("bound_values ordering and monotonicity") {
  for (unsigned ell = 2; ell <= 6; ++ell) {
    Rational prev = cycle_exponent(3, ell);
    for (unsigned r = 3; r <= 10; ++r) {
      const auto b = bound_values(r, ell, 50, 100);
      CHECK(b.conditional_exponent <= b.f_r);
      CHECK(b.f_r <= b.weaker_exponent);
      if (r > 3) CHECK(b.f_r < prev);
      prev = b.f_r;
    }
  }
}

TEST_CASE("bound_values finite-n values") {
  // e = n^(r - delta) with n = 16, e = 256 gives delta = 1.
  const auto b = bound_values(3, 2, 16, 256);
  CHECK(b.delta == doctest::Approx(1.0));
  CHECK(b.conditional_copy_exponent == doctest::Approx(10.0 - (5.0 + 1.0 / 3)));
  CHECK(b.weaker_copy_exponent == doctest::Approx(10.0 - 6.0));
  CHECK(b.log_copy_lower_bound == doctest::Approx(10 * std::log(16.0) + 6 * std::log(256.0 / 4096.0)));
  const auto s = bound_values(3, 2, 16, 256, 0.5);
  CHECK(s.log_copy_lower_bound == doctest::Approx(b.log_copy_lower_bound - 0.5 * std::log(16.0)));
}

TEST_CASE("bound_values preconditions") {
  CHECK_THROWS_AS(bound_values(2, 2, 10, 5), PreconditionError);
  CHECK_THROWS_AS(bound_values(3, 0, 10, 5), PreconditionError);
  CHECK_THROWS_AS(bound_values(3, 2, 1, 1), PreconditionError);
  CHECK_THROWS_AS(bound_values(3, 2, 10, 0), PreconditionError);
  CHECK_THROWS_AS(bound_values(3, 2, 10, 121), PreconditionError);
  CHECK_NOTHROW(bound_values(3, 2, 10, 120));
  CHECK_NOTHROW(bound_values(3, 1, 10, 5));
  CHECK_FALSE(bound_values(3, 1, 10, 5).f_prev);
}
