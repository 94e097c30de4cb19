#include <doctest.h>

#include <sstream>

#include "sternpoly/error.hpp"
#include "sternpoly/family.hpp"
#include "sternpoly/io.hpp"

using namespace sternpoly;

TEST_CASE("index literals") {
  CHECK(parse_index("19") == 19);
  CHECK(parse_index("2^5-1") == 31);
  CHECK(parse_index("2^20 + 3") == 1048579);
  CHECK(parse_index("5*2^7+1") == 641);
  CHECK(parse_index("2^2^3") == 256);
  CHECK(parse_index("(2^3-1)*3") == 21);
  CHECK(parse_index("123456789012345678901234567890") == BigInt("123456789012345678901234567890"));
  CHECK(parse_index("p[3,2]") == 85);
  CHECK(parse_index("p[2,1]") == 5);
  CHECK(parse_index("s[0,1]") == 27);
  CHECK(parse_index("h[1]") == 19);
  CHECK(parse_index("H[1]") == 19);
  CHECK(parse_index("alpha[5]") == 11);
  CHECK(parse_index("beta[4]") == 7);
  CHECK(parse_index("ones[3]") == 15);
  CHECK(parse_index("twos[1]") == 5);
}

TEST_CASE("malformed index literals") {
  for (const char* s : {"", "2^", "abc", "p[2]", "q[1,2]", "(3", "3)", "1,2", "2^-1", "p[1,1]"}) {
    CAPTURE(s);
    CHECK_THROWS_AS(parse_index(s), Error);
  }
  CHECK_THROWS_AS(parse_index("3-5"), Error);
}

TEST_CASE("solutions CSV round trip") {
  SearchReport r;
  r.spec = {0, 3};
  r.solutions = {19, 37, 73};
  std::ostringstream out;
  write_solutions_csv(out, r);
  CHECK(out.str() == "n,binary,r,m\n19,10011,0,3\n37,100101,0,3\n73,1001001,0,3\n");
  std::istringstream in(out.str());
  const auto f = read_solutions_csv(in);
  CHECK(f.spec == CongruenceSpec{0, 3});
  CHECK(f.solutions == std::vector<std::uint64_t>{19, 37, 73});

  std::istringstream bare("5\n41\n\n209\n");
  CHECK(read_solutions_csv(bare).solutions == std::vector<std::uint64_t>{5, 41, 209});
  std::istringstream broken("n,binary,r,m\n5,101,0,2\nx\n");
  CHECK_THROWS_AS(read_solutions_csv(broken), Error);
  std::istringstream mixed("5,101,0,2\n7,111,1,2\n");
  CHECK_THROWS_AS(read_solutions_csv(mixed), Error);
}

TEST_CASE("curve CSV and doubles") {
  std::ostringstream out;
  write_curve_csv(out, CurveSeries::Norm12, {{1048576, 0.645}, {4, 0.25}});
  CHECK(out.str() == "x,value,series\n1048576,0.645,norm12\n4,0.25,norm12\n");
  CHECK(format_double(453.0 / 258.0).substr(0, 5) == "1.755");
  CHECK(format_double(2.0) == "2");
}

TEST_CASE("JSON forms") {
  CHECK(poly_json(IntPoly{1, 3, 3}).dump() == R"(["1","3","3"])");
  IdentityReport r;
  r.identity = "x";
  r.range = "n=1";
  r.check(false, "d", "a", "b");
  const auto j = to_json(r);
  CHECK(j["pass"] == false);
  CHECK(j["counterexample"]["lhs"] == "a");
  ConjectureReport c;
  c.id = "C3";
  c.cells.push_back({{{"n", 1}}, {{"real_roots", std::int64_t{0}}, {"flag", true}, {"text", std::string("x")}}, true});
  c.cells.push_back({{{"n", 2}}, {}, std::nullopt});
  const auto cj = to_json(c);
  CHECK(cj["cells"][0]["observation"]["real_roots"] == 0);
  CHECK(cj["cells"][1]["consistent"].is_null());
  CHECK(cj["summary"]["inconclusive"] == 1);
}
