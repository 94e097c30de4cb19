#include <doctest.h>

#include "sternpoly/error.hpp"
#include "sternpoly/stern.hpp"
#include "sternpoly/sturm.hpp"

using namespace sternpoly;

namespace {
IntPoly by_definition(long n) {
  if (n == 0) return {};
  if (n == 1) return {1};
  if (n % 2 == 0) return by_definition(n / 2).shifted(1);
  return by_definition(n / 2) + by_definition(n / 2 + 1);
}
}  // namespace

TEST_CASE("small Stern polynomials") {
  CHECK(stern_poly(0).is_zero());
  CHECK(stern_poly(1) == IntPoly{1});
  CHECK(stern_poly(2) == IntPoly{0, 1});
  CHECK(stern_poly(3) == IntPoly{1, 1});
  CHECK(stern_poly(13) == IntPoly{1, 2, 2});
  CHECK(stern_poly(19) == IntPoly{1, 3, 3});
  CHECK(stern_poly(29) == IntPoly{1, 2, 2, 2});
  CHECK(stern_poly(41) == IntPoly{1, 4, 4, 2});
  CHECK(stern_poly(85) == IntPoly{1, 6, 10, 4});
  CHECK_THROWS_AS(stern_poly(-1), Error);
}

TEST_CASE("pair scan agrees with the defining recursion") {
  for (long n = 0; n < 600; ++n) {
    CAPTURE(n);
    auto pr = stern_pair(n);
    CHECK(pr.lo == by_definition(n));
    CHECK(pr.hi == by_definition(n + 1));
  }
}

TEST_CASE("evaluation identities") {
  for (long n = 1; n < 2000; ++n) {
    CAPTURE(n);
    IntPoly b = stern_poly(n);
    CHECK(b.eval(2) == n);
    CHECK(b.eval(1) == stern_number(n));
    CHECK(stern_degree(n) == b.degree());
    CHECK(b.constant_term() == (n % 2));
  }
  CHECK(stern_number(0) == 0);
  CHECK_THROWS_AS(stern_degree(0), Error);
}

TEST_CASE("recursion invariants on large indices") {
  SternIndex n("123456789012345678901234567891");
  CHECK(stern_poly(n).eval(2) == n);
  CHECK(stern_poly(2 * n) == stern_poly(n).shifted(1));
  CHECK(stern_poly(2 * n + 1) == stern_poly(n) + stern_poly(n + 1));
}

TEST_CASE("hyperbinary and generating function agree") {
  auto gf = gf_prefix(300);
  REQUIRE(gf.size() == 301);
  for (long n = 0; n <= 300; ++n) {
    CAPTURE(n);
    CHECK(gf[n] == stern_poly(n));
    if (n >= 1) CHECK(hyperbinary_poly(n - 1) == stern_poly(n));
  }
  CHECK_THROWS_AS(gf_prefix(0), Error);
}

TEST_CASE("binary strings") {
  CHECK(binary_string(0) == "0");
  CHECK(binary_string(13) == "1101");
}

TEST_CASE("Sturm root counting") {
  CHECK(count_real_roots(IntPoly{-2, 0, 1}) == 2);
  CHECK(count_real_roots(IntPoly{1, 0, 1}) == 0);
  CHECK(count_real_roots(IntPoly{1, 2, 1}) == 1);
  IntPoly cubic = IntPoly{-1, 1} * IntPoly{-2, 1} * IntPoly{-3, 1};
  CHECK(count_real_roots(cubic) == 3);
  CHECK(count_real_roots(-cubic) == 3);
  CHECK(count_real_roots(IntPoly{5}) == 0);
  CHECK_THROWS_AS(count_real_roots(IntPoly{}), Error);
  CHECK(count_real_roots(stern_poly(13)) == 0);
  CHECK(count_real_roots(stern_poly(19)) == 0);
}

TEST_CASE("odd multiplicity and monotonicity") {
  IntPoly sq = IntPoly{-1, 1} * IntPoly{-1, 1};
  CHECK(count_odd_multiplicity_real_roots(sq) == 0);
  CHECK(count_odd_multiplicity_real_roots(sq * IntPoly{-1, 1}) == 1);
  CHECK(count_odd_multiplicity_real_roots(sq * IntPoly{2, 1}) == 1);
  CHECK(is_increasing(IntPoly{0, 0, 0, 1}));
  CHECK(is_increasing(IntPoly{0, 1}));
  CHECK_FALSE(is_increasing(IntPoly{0, 0, 1}));
  CHECK_FALSE(is_increasing(IntPoly{0, -1}));
  CHECK_FALSE(is_increasing(IntPoly{3}));
}
