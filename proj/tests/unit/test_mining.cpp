#include <doctest.h>

#include "sternpoly/error.hpp"
#include "sternpoly/mining.hpp"

using namespace sternpoly;

TEST_CASE("quadruple solving") {
  auto t = solve_quadruple({5, 41, 209, 929});
  REQUIRE(t);
  CHECK(t->p == 16);
  CHECK(t->q == -12);
  CHECK(t->u == 1);
  auto r = solve_quadruple({5, 29, 253, 1405});
  REQUIRE(r);
  CHECK(r->to_string() == "(88/3, -64, 119/3)");
  CHECK(r->value(4) == 6525);
  CHECK_FALSE(solve_quadruple({1, 3, 5, 7}));
}

TEST_CASE("too few solutions") {
  std::vector<std::uint64_t> three{3, 5, 7};
  try {
    (void)mine_affine_families(three, {0, 2}, 4);
    FAIL("expected TooFewSolutions");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::TooFewSolutions);
  }
}

TEST_CASE("mining the (0,2) solutions up to 4*10^4") {
  auto sols = enumerate_solutions(40000, {0, 2}).solutions;
  CHECK(sols.size() == 106);
  auto rep = mine_affine_families(sols, {0, 2}, 4);
  CHECK(rep.quadruples == 4967690);
  CHECK(rep.families.size() == 523);

  const MinedFamily* good = rep.find({16, -12, 1});
  REQUIRE(good);
  CHECK(good->validated);
  CHECK(good->quadruple == std::array<std::uint64_t, 4>{5, 41, 209, 929});

  const MinedFamily* bad = rep.find({mpq_class(88, 3), -64, mpq_class(119, 3)});
  REQUIRE(bad);
  CHECK_FALSE(bad->validated);
  CHECK(*bad->failed_at == 4);
  CHECK(*bad->failed_value == 6525);
  CHECK(bad->failure == "not a solution");

  // U_n = p_{k,n+1}, so the p_{k,n} families appear as (2^{k+2}, -3*2^k, 2^k - 3).
  for (unsigned k = 2; k <= 5; ++k) {
    mpq_class two_k = mpq_class(1) << k;
    const MinedFamily* f = rep.find({4 * two_k, -3 * two_k, two_k - 3});
    CAPTURE(k);
    REQUIRE(f);
    CHECK(f->validated);
  }
  for (std::size_t i = 1; i < rep.families.size(); ++i) {
    const auto& a = rep.families[i - 1].triple;
    const auto& b = rep.families[i].triple;
    CHECK(std::tie(a.p, a.q, a.u) < std::tie(b.p, b.q, b.u));
  }
}
