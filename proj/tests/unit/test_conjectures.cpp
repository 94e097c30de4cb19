#include <doctest.h>

#include "sternpoly/conjectures.hpp"
#include "sternpoly/error.hpp"
#include "sternpoly/family.hpp"
#include "sternpoly/stern.hpp"
#include "sternpoly/sturm.hpp"

using namespace sternpoly;

namespace {

std::int64_t int_obs(const ConjectureCell& c, const std::string& key) {
  for (const auto& [k, v] : c.observation) {
    if (k == key) return std::get<std::int64_t>(v);
  }
  FAIL("missing observation " << key);
  return -1;
}

bool bool_obs(const ConjectureCell& c, const std::string& key) {
  for (const auto& [k, v] : c.observation) {
    if (k == key) return std::get<bool>(v);
  }
  FAIL("missing observation " << key);
  return false;
}

const ConjectureCell& cell_at(const ConjectureReport& r, std::map<std::string, long> params) {
  for (const auto& c : r.cells) {
    if (c.params == params) return c;
  }
  throw std::runtime_error("no such cell");
}

}  // namespace

TEST_CASE("roots grid: published small claims") {
  const auto r = roots_grid({2, 10}, {1, 6});
  CHECK(int_obs(cell_at(r, {{"k", 2}, {"n", 1}}), "real_roots") == 1);
  CHECK(int_obs(cell_at(r, {{"k", 2}, {"n", 3}}), "real_roots") == 1);
  for (long k : {4, 6, 8, 10}) {
    CAPTURE(k);
    const auto& c = cell_at(r, {{"k", k}, {"n", 2}});
    CHECK(int_obs(c, "real_roots") == 2);
    CHECK(c.consistent == true);
  }
  CHECK(r.inconsistent_count() == 0);
  CHECK_FALSE(cell_at(r, {{"k", 3}, {"n", 4}}).consistent.has_value());
}

TEST_CASE("roots and monotonicity agree on odd-degree increasing polynomials") {
  const auto m = monotone_grid({2, 8}, {1, 12});
  for (const auto& c : m.cells) {
    if (bool_obs(c, "increasing") && int_obs(c, "derivative_degree") % 2 == 0) {
      CAPTURE(c.params.at("k"));
      CAPTURE(c.params.at("n"));
      CHECK(int_obs(c, "real_roots") == 1);
    }
  }
  CHECK(m.inconsistent_count() == 0);
  CHECK(observe_monotone(IntPoly{1, 2}).increasing);
}

TEST_CASE("reducibility identity for B_{p_{k,k-1}}") {
  const auto r = reducibility_identity({3, 8}, {1, 9});
  for (long k = 3; k <= 8; ++k) {
    CAPTURE(k);
    const auto& c = cell_at(r, {{"k", k}, {"n", k - 1}});
    CHECK(bool_obs(c, "identity_holds"));
    CHECK(bool_obs(c, "product_at_2_equals_index"));
  }
  const auto& k3 = cell_at(r, {{"k", 3}, {"n", 2}});
  CHECK(std::get<std::string>(k3.observation[3].second) == "1,4,2");
  CHECK(r.inconsistent_count() == 0);
  CHECK_THROWS_AS(reducibility_identity({2, 4}, {1, 3}), Error);
}

TEST_CASE("s1 factorizations: even holds, odd printed fails, alternate holds") {
  const auto r = s1_factorizations({1, 12});
  REQUIRE(r.cells.size() == 12);
  for (const auto& c : r.cells) {
    CHECK(bool_obs(c, "even_holds"));
    CHECK_FALSE(bool_obs(c, "odd_printed_holds"));
    CHECK(bool_obs(c, "odd_alternate_first_factor_holds"));
  }
  CHECK_THROWS_AS(s1_factorizations({0, 2}), Error);
}

TEST_CASE("s-family root counts and monotonicity observations") {
  const auto c21 = s_roots({0, 3}, {2, 14});
  CHECK(c21.inconsistent_count() == 0);
  CHECK(c21.cells.size() == 3 * 13);
  const auto c23 = s1_roots({1, 14});
  CHECK(int_obs(cell_at(c23, {{"n", 3}}), "real_roots") == 1);
  CHECK(cell_at(c23, {{"n", 3}}).consistent == false);
  for (long n = 4; n <= 14; ++n) CHECK(int_obs(cell_at(c23, {{"n", n}}), "real_roots") == 3);
  const auto c25 = s0_monotone({1, 10});
  CHECK(cell_at(c25, {{"n", 1}}).consistent == true);
  for (long n = 2; n <= 10; ++n) {
    CAPTURE(n);
    CHECK(int_obs(cell_at(c25, {{"n", n}}), "derivative_odd_multiplicity_roots") == 2);
  }
}

TEST_CASE("s quotients and factors") {
  const auto q = s_quotient_irreducibility({0, 3}, {1, 8});
  CHECK(q.inconsistent_count() == 0);
  for (const auto& c : q.cells) {
    CHECK(int_obs(c, "quotient_degree") ==
          stern_degree(family_index({FamilyKind::S, static_cast<unsigned>(c.params.at("i"))},
                                    static_cast<unsigned>(c.params.at("n")))) - 1);
  }
  const auto f = s1_factor_irreducibility({2, 10});
  for (const auto& c : f.cells) CHECK(bool_obs(c, "factorization_holds"));
}

TEST_CASE("B_n(-1) = 0 iff 3 | n") {
  const auto r = divisibility_by_t_plus_1(10000);
  REQUIRE(r.cells.size() == 3);
  CHECK(r.consistent_count() == 3);
  CHECK(int_obs(r.cells[0], "zeros_at_minus_one") == int_obs(r.cells[0], "checked"));
  CHECK(stern_poly(SternIndex(3)).eval(BigInt(-1)) == 0);
  CHECK(stern_poly(SternIndex(5)).eval(BigInt(-1)) == -1);
  for (long n = 0; n <= 300; ++n) {
    CHECK((stern_poly(SternIndex(n)).eval(BigInt(-1)) == 0) == (n % 3 == 0));
  }
  CHECK_THROWS_AS(divisibility_by_t_plus_1(2), Error);
}

TEST_CASE("B_{h_n} has no real roots") {
  const auto r = h_no_real_roots(6u);
  CHECK(r.cells.size() == 7);
  CHECK(r.consistent_count() == 7);
  CHECK(count_real_roots(IntPoly{1, 3, 3}) == 0);
}

TEST_CASE("conjecture dispatcher") {
  for (const auto& info : conjecture_catalog()) {
    CAPTURE(info.id);
    const auto a = run_conjecture(info.id);
    const auto b = run_conjecture(info.id, {}, 3);
    CHECK(a.id == b.id);
    REQUIRE(a.cells.size() == b.cells.size());
    for (std::size_t i = 0; i < a.cells.size(); ++i) {
      CHECK(a.cells[i].params == b.cells[i].params);
      CHECK(a.cells[i].observation == b.cells[i].observation);
      CHECK(a.cells[i].consistent == b.cells[i].consistent);
    }
  }
  CHECK(run_conjecture("C3", parse_param_grid("n=0..3")).cells.size() == 4);
  CHECK_THROWS_AS(run_conjecture("C9"), Error);
  CHECK_THROWS_AS(run_conjecture("C3", parse_param_grid("k=1")), Error);
}
