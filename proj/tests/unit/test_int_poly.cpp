#include <doctest.h>

#include "sternpoly/error.hpp"
#include "sternpoly/int_poly.hpp"
#include "sternpoly/mod_poly.hpp"

using namespace sternpoly;

TEST_CASE("canonical form drops trailing zeros") {
  IntPoly p{1, 2, 0, 0};
  CHECK(p.degree() == 1);
  CHECK(IntPoly{0, 0}.is_zero());
  CHECK(IntPoly{}.degree() == IntPoly::kZeroDegree);
  CHECK((IntPoly{1, 1} - IntPoly{1, 1}).is_zero());
}

TEST_CASE("arithmetic") {
  IntPoly a{1, 1};
  CHECK(a * a == IntPoly{1, 2, 1});
  CHECK(a + IntPoly{0, 0, 3} == IntPoly{1, 1, 3});
  CHECK(-a == IntPoly{-1, -1});
  CHECK(a.shifted(2) == IntPoly{0, 0, 1, 1});
  CHECK(IntPoly{1, 2, 3}.eval(2) == 17);
  CHECK(IntPoly{1, 2, 3}.derivative() == IntPoly{2, 6});
  CHECK(IntPoly{1, 2, 3}.reverse() == IntPoly{3, 2, 1});
  CHECK(IntPoly{0, 1, 2}.reverse() == IntPoly{2, 1});
  CHECK(geometric(3) == IntPoly{1, 1, 1});
  CHECK(geometric(0).is_zero());
}

TEST_CASE("content and primitive part") {
  IntPoly p{4, -6, 8};
  CHECK(p.content() == 2);
  CHECK(p.primitive_part() == IntPoly{2, -3, 4});
  CHECK(IntPoly{-4, -6}.primitive_part() == IntPoly{-2, -3});
  CHECK_THROWS_AS((IntPoly{1, 3}.divided_by(2)), Error);
}

TEST_CASE("exact division") {
  IntPoly num = IntPoly{1, 1} * IntPoly{2, 0, 1};
  CHECK(divide_exact(num, IntPoly{1, 1}) == IntPoly{2, 0, 1});
  try {
    (void)divide_exact(IntPoly{1, 0, 1}, IntPoly{1, 1});
    FAIL("expected NotDivisible");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotDivisible);
  }
  CHECK_THROWS_AS((void)divide_exact(num, IntPoly{}), Error);
}

TEST_CASE("gcd") {
  IntPoly f = IntPoly{1, 1} * IntPoly{1, 1} * IntPoly{3, 0, 1};
  IntPoly g = IntPoly{1, 1} * IntPoly{-2, 1};
  CHECK(primitive_gcd(f, g) == IntPoly{1, 1});
  CHECK(primitive_gcd(f, f.derivative()) == IntPoly{1, 1});
  CHECK(primitive_gcd(IntPoly{2, 2}, IntPoly{}) == IntPoly{1, 1});
}

TEST_CASE("string round trip") {
  IntPoly p{1, 2, 2};
  CHECK(p.to_string() == "1,2,2");
  CHECK(p.to_pretty() == "2t^2+2t+1");
  CHECK(IntPoly::parse("1,2,2") == p);
  CHECK(IntPoly::parse("2t^2+2t+1") == p);
  CHECK(IntPoly{}.to_string() == "0");
  CHECK(IntPoly::parse("-t^3 + 4") == IntPoly{4, 0, 0, -1});
  CHECK(IntPoly::parse("t") == IntPoly{0, 1});
  CHECK_THROWS_AS((IntPoly::parse("1,x")), Error);
  CHECK_THROWS_AS((IntPoly::parse("2tt")), Error);
}

TEST_CASE("eisenstein") {
  CHECK(eisenstein_irreducible(IntPoly{2, 2, 1}, 2));
  CHECK_FALSE(eisenstein_irreducible(IntPoly{4, 2, 1}, 2));
  CHECK_FALSE(eisenstein_irreducible(IntPoly{2, 2, 2}, 2));
  CHECK_THROWS_AS((eisenstein_irreducible(IntPoly{5}, 5)), Error);
}

TEST_CASE("modular polynomials") {
  CHECK_THROWS_AS(check_modulus(1), Error);
  CHECK_THROWS_AS(check_modulus(65536), Error);
  ModPoly a = reduce_mod(IntPoly{1, 5, -1}, 3, 4);
  CHECK(a.formal_degree() == 4);
  CHECK(a.coeff(1) == 2);
  CHECK(a.coeff(2) == 2);
  CHECK(a.coeff(4) == 0);
  CHECK_THROWS_AS((reduce_mod(IntPoly{1, 1, 1}, 3, 1)), Error);
  ModPoly b = reduce_mod(IntPoly{2, 1}, 3, 1);
  CHECK(a * b == reduce_mod(IntPoly{1, 5, -1} * IntPoly{2, 1}, 3, 5));
}
