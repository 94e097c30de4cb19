#include <doctest.h>

#include <filesystem>

#include "sternpoly/checkpoint.hpp"
#include "sternpoly/error.hpp"
#include "sternpoly/search.hpp"

using namespace sternpoly;

namespace {
bool exact_solution(long n, const CongruenceSpec& spec) {
  IntPoly b = stern_poly(n);
  BigInt c0 = b.constant_term() % spec.m;
  if (c0 != 1 % spec.m) return false;
  for (long i = 1; i <= b.degree(); ++i) {
    BigInt c = b.coeff(i) % spec.m;
    if (c != spec.r) return false;
  }
  return true;
}
}  // namespace

TEST_CASE("spec validation") {
  CHECK_THROWS_AS((CongruenceSpec{0, 1}.validate()), Error);
  CHECK_THROWS_AS((CongruenceSpec{3, 3}.validate()), Error);
  CHECK_NOTHROW((CongruenceSpec{2, 65535}.validate()));
}

TEST_CASE("is_solution matches the exact polynomial test") {
  for (CongruenceSpec spec : {CongruenceSpec{0, 2}, CongruenceSpec{1, 2}, CongruenceSpec{0, 3},
                              CongruenceSpec{1, 3}, CongruenceSpec{2, 3}, CongruenceSpec{4, 5}}) {
    for (long n = 3; n < 3000; n += 2) {
      CAPTURE(n);
      CHECK(is_solution(static_cast<std::uint64_t>(n), spec) == exact_solution(n, spec));
    }
  }
  CHECK(is_solution(std::uint64_t{1}, {0, 2}));
  CHECK_THROWS_AS((is_solution(std::uint64_t{4}, {0, 2})), Error);
}

TEST_CASE("big-index path agrees with the 64-bit path") {
  SternIndex big = (SternIndex(1) << 70) + 1;
  IntPoly b = stern_poly(big);
  bool expect = true;
  for (long i = 1; i <= b.degree(); ++i) expect = expect && (b.coeff(i) % 2 == 0);
  CHECK(is_solution(big, {0, 2}) == expect);
  SternIndex h = h_index(40);
  CHECK(is_solution(h, {0, 3}));
}

TEST_CASE("enumeration matches brute force and is worker independent") {
  const CongruenceSpec spec{0, 3};
  std::vector<std::uint64_t> brute;
  for (std::uint64_t n = 3; n <= 50000; n += 2) {
    if (is_solution(n, spec)) brute.push_back(n);
  }
  for (unsigned depth : {1U, 4U, 10U}) {
    for (unsigned workers : {1U, 3U}) {
      SearchOptions o;
      o.split_depth = depth;
      o.workers = workers;
      auto rep = enumerate_solutions(50000, spec, {}, o);
      CHECK(rep.solutions == brute);
      CHECK(rep.count == brute.size());
    }
  }
}

TEST_CASE("bounds and small ranges") {
  CHECK(enumerate_solutions(1, {0, 2}).count == 0);
  CHECK(enumerate_solutions(13, {0, 3}).count == 0);
  CHECK(enumerate_solutions(19, {0, 3}).solutions == std::vector<std::uint64_t>{19});
  SearchOptions o;
  o.cap = 100;
  try {
    (void)enumerate_solutions(101, {0, 2}, {}, o);
    FAIL("expected BoundTooLarge");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::BoundTooLarge);
  }
}

TEST_CASE("published counts at 2^15") {
  CHECK(pi({0, 2}, 1U << 15) == 97);
  CHECK(pi({1, 2}, 1U << 15) == 82);
}

TEST_CASE("exclusions remove family members") {
  auto all = enumerate_solutions(1U << 14, {1, 2});
  auto rest = enumerate_solutions(1U << 14, {1, 2}, {FamilyId{FamilyKind::TrivialAllOnes, 0}});
  for (auto n : rest.solutions) CHECK_FALSE(family_contains({FamilyKind::TrivialAllOnes, 0}, n));
  CHECK(all.count - rest.count == 13);  // 7, 15, ..., 2^14 - 1
}

TEST_CASE("checkpoint round trip and resume") {
  auto dir = std::filesystem::temp_directory_path() / "sternpoly_ckpt_test";
  std::filesystem::create_directories(dir);
  auto path = dir / "ck.json";
  std::filesystem::remove(path);

  CheckpointState st;
  st.spec = {1, 3};
  st.bound = 1000;
  st.depth = 3;
  st.completed_subtrees = {8, 9};
  st.partial_solutions = {157};
  auto back = checkpoint_from_json_text(to_json_text(st));
  CHECK(back.spec == st.spec);
  CHECK(back.completed_subtrees == st.completed_subtrees);
  CHECK_THROWS_AS(checkpoint_from_json_text("{"), Error);

  SearchOptions o;
  o.checkpoint = path;
  o.split_depth = 4;
  o.checkpoint_every = 1;
  auto first = enumerate_solutions(200000, {1, 3}, {}, o);
  REQUIRE(std::filesystem::exists(path));
  auto resumed = enumerate_solutions(200000, {1, 3}, {}, o);
  CHECK(resumed.resumed_subtrees == 16);
  CHECK(resumed.solutions == first.solutions);
  CHECK(resumed.solutions == enumerate_solutions(200000, {1, 3}).solutions);

  // A partial checkpoint resumes to the same answer.
  auto partial = *load_checkpoint(path);
  partial.completed_subtrees = {16, 17, 18};
  std::vector<std::uint64_t> keep;
  for (auto n : partial.partial_solutions) {
    auto top = n;
    while (top >= 32) top >>= 1;
    if (top <= 18) keep.push_back(n);
  }
  partial.partial_solutions = keep;
  save_checkpoint(path, partial);
  auto again = enumerate_solutions(200000, {1, 3}, {}, o);
  CHECK(again.resumed_subtrees == 3);
  CHECK(again.solutions == first.solutions);

  try {
    (void)enumerate_solutions(200000, {0, 3}, {}, o);
    FAIL("expected CheckpointMismatch");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::CheckpointMismatch);
  }
  std::filesystem::remove_all(dir);
}

TEST_CASE("curves") {
  auto xs = sample_points(2, 10, 5);
  CHECK(xs == std::vector<std::uint64_t>{2, 4, 6, 8, 10});
  CHECK(sample_points(2, 3, 10) == std::vector<std::uint64_t>{2, 3});
  CHECK_THROWS_AS((sample_points(2, 10, 1)), Error);
  auto c = pi_curve({0, 2}, 1U << 15, 3);
  CHECK(c.back().first == (1U << 15));
  CHECK(c.back().second == 97);
  auto r = series_curve(CurveSeries::Ratio, 1U << 15, 4);
  CHECK(r.front().x == 5);
  CHECK(r.back().value == doctest::Approx(97.0 / 82.0).epsilon(1e-12));
  CHECK(parse_series("norm12") == CurveSeries::Norm12);
  CHECK_THROWS_AS(parse_series("bogus"), Error);
}
