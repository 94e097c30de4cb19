// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.
//
// Optional long runs:
//   STERN_ACCEPT_K24=1  extends criterion 1 to k = 21..24
//   STERN_ACCEPT_H3=1   adds H_3 to the Theorem 3 check of criterion 5

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "sternpoly/conjectures.hpp"
#include "sternpoly/error.hpp"
#include "sternpoly/family.hpp"
#include "sternpoly/identities.hpp"
#include "sternpoly/io.hpp"
#include "sternpoly/mining.hpp"
#include "sternpoly/reference.hpp"
#include "sternpoly/search.hpp"
#include "sternpoly/stern.hpp"
#include "sternpoly/sturm.hpp"

namespace {

using namespace sternpoly;
using Clock = std::chrono::steady_clock;

constexpr double kTable1BudgetSeconds = 60.0;
constexpr std::uint64_t kTwo20 = std::uint64_t{1} << 20;

struct Outcome {
  bool pass = true;
  std::vector<std::string> details;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      details.push_back(what);
    }
  }
};

bool env_flag(const char* name) {
  const char* v = std::getenv(name);
  return v != nullptr && *v != '\0' && std::string(v) != "0";
}

SternIndex idx(std::uint64_t n) { return SternIndex(static_cast<unsigned long>(n)); }

SearchOptions with_workers(unsigned w) {
  SearchOptions o;
  o.workers = w;
  return o;
}

std::set<FamilyId> exclusions_of(const nlohmann::json& table) {
  std::set<FamilyId> ex;
  for (const auto& e : table.at("exclude")) ex.insert(parse_family(e.get<std::string>()));
  return ex;
}

// ---- criterion 1 -----------------------------------------------------------

std::string table1_text(unsigned kmax, unsigned workers) {
  std::ostringstream s;
  for (std::uint32_t r : {0u, 1u}) {
    const auto rep = enumerate_solutions(std::uint64_t{1} << kmax, {r, 2}, {}, with_workers(workers));
    s << "r=" << r;
    for (unsigned k = 15; k <= kmax; ++k) {
      const auto x = std::uint64_t{1} << k;
      s << ' ' << (std::upper_bound(rep.solutions.begin(), rep.solutions.end(), x) - rep.solutions.begin());
    }
    s << '\n';
  }
  return s.str();
}

std::string table1_expected(unsigned kmax) {
  const auto& t = reference_tables().at("table1");
  std::ostringstream s;
  for (const char* key : {"pi_0_2", "pi_1_2"}) {
    s << "r=" << (key[3] == '0' ? 0 : 1);
    for (std::size_t i = 0; i < t.at("k").size(); ++i) {
      if (t.at("k")[i].get<unsigned>() <= kmax) s << ' ' << t.at(key)[i].get<std::uint64_t>();
    }
    s << '\n';
  }
  return s.str();
}

Outcome criterion1() {
  Outcome o;
  const auto start = Clock::now();
  const std::string got = table1_text(20, 1);
  const double secs = std::chrono::duration<double>(Clock::now() - start).count();
  o.require(got == table1_expected(20), "k=15..20 counts differ:\n" + got);
  o.require(secs <= kTable1BudgetSeconds, "k=15..20 took " + std::to_string(secs) + " s");
  o.details.push_back("k=15..20 in " + std::to_string(secs) + " s");
  if (env_flag("STERN_ACCEPT_K24")) {
    const std::string big = table1_text(24, 1);
    o.require(big == table1_expected(24), "k=15..24 counts differ:\n" + big);
    o.details.push_back("k=21..24 checked");
  }
  return o;
}

// ---- criterion 2 -----------------------------------------------------------

std::string tables234_text(unsigned workers) {
  std::ostringstream s;
  const auto& ref = reference_tables();
  for (const char* name : {"table2", "table3", "table4"}) {
    const auto& t = ref.at(name);
    const auto rep = enumerate_solutions(kTwo20, {t.at("r").get<std::uint32_t>(), t.at("m").get<std::uint32_t>()},
                                         exclusions_of(t), with_workers(workers));
    s << name << '\n';
    write_solutions_csv(s, rep);
  }
  return s.str();
}

Outcome criterion2() {
  Outcome o;
  const auto& ref = reference_tables();
  const std::size_t expected_sizes[] = {9, 7, 9};
  int which = 2;
  for (const char* name : {"table2", "table3", "table4"}) {
    const auto& t = ref.at(name);
    const auto rep = enumerate_solutions(kTwo20, {t.at("r").get<std::uint32_t>(), t.at("m").get<std::uint32_t>()},
                                         exclusions_of(t));
    const auto rows = reference_solutions(which, kTwo20);
    o.require(rows.size() == expected_sizes[which - 2], std::string(name) + ": reference has " +
                                                            std::to_string(rows.size()) + " entries <= 2^20");
    o.require(rep.solutions.size() == rows.size(), std::string(name) + ": found " +
                                                       std::to_string(rep.solutions.size()) + " solutions");
    for (std::size_t i = 0; i < std::min(rows.size(), rep.solutions.size()); ++i) {
      const std::string b = binary_string(idx(rep.solutions[i]));
      o.require(rep.solutions[i] == rows[i].n && b == rows[i].binary,
                std::string(name) + ": " + std::to_string(rep.solutions[i]) + " " + b + " vs " +
                    std::to_string(rows[i].n) + " " + rows[i].binary);
    }
    ++which;
  }
  return o;
}

// ---- criterion 3 -----------------------------------------------------------

Outcome criterion3() {
  Outcome o;
  for (const auto& row : reference_tables().at("table5")) {
    const auto n = row.at("n").get<std::uint64_t>();
    std::vector<BigInt> printed;
    for (const auto& c : row.at("coefficients")) printed.emplace_back(c.get<long>());
    const IntPoly p = stern_poly(idx(n));
    o.require(p == IntPoly(printed), "B_" + std::to_string(n) + " = " + p.to_pretty() + ", printed " +
                                         row.at("printed").get<std::string>());
    const auto r = row.at("r").get<std::uint32_t>();
    for (auto m = row.at("m_min").get<std::uint32_t>(); m <= row.at("m_max").get<std::uint32_t>(); ++m) {
      o.require(is_solution(n, {r, m}),
                std::to_string(n) + " does not solve (" + std::to_string(r) + "," + std::to_string(m) + ")");
    }
  }
  return o;
}

// ---- criterion 4 -----------------------------------------------------------

Outcome criterion4() {
  Outcome o;
  for (std::uint64_t n = 1; n <= 4096; ++n) {
    if (stern_poly(idx(n)) != hyperbinary_poly(idx(n - 1))) {
      o.require(false, "hyperbinary mismatch at n=" + std::to_string(n));
      break;
    }
  }
  const auto gf = gf_prefix(1024);
  for (std::size_t n = 0; n <= 1024; ++n) {
    if (stern_poly(idx(n)) != gf.at(n)) {
      o.require(false, "generating function mismatch at n=" + std::to_string(n));
      break;
    }
  }
  const auto& listed = reference_tables().at("stern_numbers");
  for (std::size_t n = 0; n < listed.size(); ++n) {
    o.require(stern_number(idx(n)) == BigInt(listed[n].get<long>()), "s_" + std::to_string(n) + " differs");
  }
  constexpr std::size_t kN = 100000;
  std::vector<std::uint64_t> s(kN + 1);
  s[1] = 1;
  for (std::size_t n = 2; n <= kN; ++n) s[n] = n % 2 == 0 ? s[n / 2] : s[n / 2] + s[n / 2 + 1];
  for (std::size_t n = 0; n <= kN; ++n) {
    const IntPoly p = stern_poly(idx(n));
    if (p.eval(1) != BigInt(static_cast<unsigned long>(s[n])) || p.eval(2) != BigInt(static_cast<unsigned long>(n))) {
      o.require(false, "B_n(1) or B_n(2) mismatch at n=" + std::to_string(n));
      break;
    }
  }
  return o;
}

// ---- criterion 5 -----------------------------------------------------------

Outcome criterion5() {
  Outcome o;
  struct Suite {
    const char* name;
    ParamGrid grid;
  };
  std::vector<Suite> suites = {
      {"lemma1-random", {{"trial", {1, 1000}}, {"seed", {1, 1}}}},
      {"lemma2", {{"n", {1, 30}}}},
      {"dkt", {{"k", {1, 1023}}, {"d", {0, 7}}}},
      {"V-recurrence", {{"k", {3, 8}}, {"n", {1, 20}}}},
      {"c-machinery", {{"k", {4, 8}}, {"n", {3, 20}}}},
      {"p-theorem", {{"k", {2, 10}}, {"n", {1, 40}}}},
      {"s-theorem", {{"i", {0, 3}}, {"n", {1, 40}}}},
      {"alpha", {{"n", {2, 60}}}},
      {"h-machinery", {{"n", {0, 12}}}},
      {"theorem3", {{"n", {0, env_flag("STERN_ACCEPT_H3") ? 3 : 2}}}},
  };
  for (const auto& s : suites) {
    const auto rep = run_identity(s.name, s.grid);
    std::string what = std::string(s.name) + " " + to_string(s.grid) + ": " + std::to_string(rep.cases) + " cases";
    if (rep.counterexample) what += ", fails: " + rep.counterexample->description;
    o.require(rep.pass && rep.cases > 0, what);
    if (rep.pass) o.details.push_back(what);
  }
  return o;
}

// ---- criterion 6 -----------------------------------------------------------

Outcome criterion6() {
  Outcome o;
  const auto ledger = typo_ledger();
  for (const char* id : {"abstract-recurrence", "W-initial-values", "V3-index-collision"}) {
    auto it = std::find_if(ledger.begin(), ledger.end(), [&](const TypoEntry& e) { return e.id == id; });
    o.require(it != ledger.end(), std::string(id) + " missing");
    if (it == ledger.end()) continue;
    o.require(it->flagged, std::string(id) + " not flagged");
    o.require(!it->evidence.empty(), std::string(id) + " has no evidence");
  }
  return o;
}

// ---- criterion 7 -----------------------------------------------------------

double bound02(std::uint64_t x) {
  const double L = std::floor(std::log2(static_cast<double>(x)));
  return 0.5 * L * L - 1.5 * L + 2.0;
}
double bound12(std::uint64_t x) { return std::log2(static_cast<double>(x)); }
double bound03(std::uint64_t x) {
  const double xd = static_cast<double>(x);
  return std::log(std::log2((1.0 + std::sqrt(3.0 * (3.0 + 4.0 * xd))) / 2.0)) / std::log(3.0);
}

Outcome criterion7() {
  Outcome o;
  auto xs = sample_points(std::uint64_t{1} << 15, kTwo20, 1024);
  for (unsigned k = 15; k <= 20; ++k) xs.push_back(std::uint64_t{1} << k);
  std::sort(xs.begin(), xs.end());
  xs.erase(std::unique(xs.begin(), xs.end()), xs.end());

  struct Bound {
    CongruenceSpec spec;
    std::function<double(std::uint64_t)> f;
  };
  const Bound bounds[] = {{{0, 2}, bound02}, {{1, 2}, bound12}, {{0, 3}, bound03}};
  for (const auto& b : bounds) {
    const auto sols = enumerate_solutions(kTwo20, b.spec).solutions;
    for (auto x : xs) {
      const auto count = static_cast<double>(std::upper_bound(sols.begin(), sols.end(), x) - sols.begin());
      if (count < b.f(x)) {
        o.require(false, "Pi_{" + std::to_string(b.spec.r) + "," + std::to_string(b.spec.m) + "}(" +
                             std::to_string(x) + ") = " + format_double(count) + " < " + format_double(b.f(x)));
        break;
      }
    }
  }
  o.details.push_back(std::to_string(xs.size()) + " sample points");
  const auto inj = verify_p_injectivity(20, 20);
  o.require(inj.pass, "p-injectivity fails");
  const auto below = count_p_values_below(BigInt(1) << 26);
  o.require(below == 145, "p values below 2^26: " + std::to_string(below));
  return o;
}

// ---- criterion 8 -----------------------------------------------------------

Outcome criterion8() {
  Outcome o;
  const CongruenceSpec spec{0, 2};
  const auto sols = enumerate_solutions(40000, spec).solutions;
  const auto rep = mine_affine_families(sols, spec, 4);
  const auto* good = rep.find({16, -12, 1});
  o.require(good != nullptr && good->validated, "(16, -12, 1) not validated");
  const auto* bad = rep.find({mpq_class(88, 3), -64, mpq_class(119, 3)});
  o.require(bad != nullptr && !bad->validated && bad->failed_at == 4u && bad->failed_value == mpq_class(6525),
            "(88/3, -64, 119/3) not rejected at U_4 = 6525");
  return o;
}

// ---- criterion 9 -----------------------------------------------------------

Outcome criterion9() {
  Outcome o;
  o.require(count_real_roots(stern_poly(idx(5))) == 1, "B_5 real roots != 1");
  for (unsigned i = 2; i <= 5; ++i) {
    const auto n = family_index({FamilyKind::P, 2 * i}, 2);
    const auto roots = count_real_roots(stern_poly(n));
    o.require(roots == 2, "B_{p_{" + std::to_string(2 * i) + ",2}} has " + std::to_string(roots) + " real roots");
  }
  const auto neg = divisibility_by_t_plus_1(10000);
  o.require(neg.inconsistent_count() == 0 && neg.consistent_count() > 0, "B_n(-1) = 0 <=> 3|n fails");
  const auto h = h_no_real_roots(6);
  o.require(h.inconsistent_count() == 0 && h.consistent_count() == 7, "B_{h_n} has real roots for some n <= 6");
  return o;
}

// ---- criterion 10 ----------------------------------------------------------

Outcome criterion10() {
  Outcome o;
  const std::string base = table1_text(20, 1) + tables234_text(1);
  for (unsigned w : {2u, 8u}) {
    o.require(table1_text(20, w) + tables234_text(w) == base, std::to_string(w) + " workers differ from 1");
  }
  return o;
}

}  // namespace

int main() {
  struct Criterion {
    int number;
    const char* title;
    Outcome (*run)();
  };
  const Criterion criteria[] = {
      {1, "Table 1 reproduction", criterion1},
      {2, "Tables 2-4 prefixes up to 2^20", criterion2},
      {3, "Table 5 polynomials and congruences", criterion3},
      {4, "oracle equivalence", criterion4},
      {5, "identity suites", criterion5},
      {6, "typo ledger", criterion6},
      {7, "lower bounds, p-injectivity, p-value count", criterion7},
      {8, "mining reproduction", criterion8},
      {9, "conjecture observations", criterion9},
      {10, "determinism across 1/2/8 workers", criterion10},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    Outcome out;
    try {
      out = c.run();
    } catch (const std::exception& e) {
      out.pass = false;
      out.details.push_back(std::string("exception: ") + e.what());
    }
    std::cout << (out.pass ? "PASS" : "FAIL") << "  " << c.number << "  " << c.title << '\n';
    for (const auto& d : out.details) std::cout << "        " << d << '\n';
    std::cout.flush();
    if (!out.pass) ++failed;
  }
  std::cout << (std::size(criteria) - failed) << "/" << std::size(criteria) << " criteria passed\n";
  return failed == 0 ? 0 : 1;
}
