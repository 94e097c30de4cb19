#include <string>
#include <vector>

#include "displays.hpp"
#include "sternpoly/family.hpp"
#include "sternpoly/identities.hpp"
#include "sternpoly/search.hpp"
#include "sternpoly/stern.hpp"

namespace sternpoly {
namespace {

using displays::t_pow;

IntPoly B(const BigInt& n) { return stern_poly(n); }
IntPoly B(long n) { return stern_poly(SternIndex(n)); }

std::string eq(const IntPoly& a, const IntPoly& b) { return a == b ? " = " : " != "; }

// A_0 = 0, A_1 = 1, A_{2n} = t A_n, A_{2n+1} = A_n + A_{n-1}.
std::vector<IntPoly> abstract_sequence(std::size_t N) {
  std::vector<IntPoly> a(N + 1);
  if (N >= 1) a[1] = IntPoly{1};
  for (std::size_t n = 2; n <= N; ++n) {
    a[n] = n % 2 == 0 ? a[n / 2].shifted(1) : a[n / 2] + a[n / 2 - 1];
  }
  return a;
}

TypoEntry abstract_recurrence() {
  TypoEntry e{"abstract-recurrence",
              "Abstract states B_{2n+1} = B_n + B_{n-1}; section 1 and all tables use B_{2n+1} = B_n + B_{n+1}", false, {}};
  constexpr std::size_t kN = 1024;
  const auto a = abstract_sequence(kN);
  e.evidence.push_back("abstract reading: A_3 = " + a[3].to_pretty() + ", section 1 reading: B_3 = " + B(3).to_pretty());
  long first_bad = -1;
  for (std::size_t n = 1; n <= kN && first_bad < 0; ++n) {
    if (a[n].eval(2) != BigInt(n)) first_bad = static_cast<long>(n);
  }
  bool b_ok = true;
  for (long n = 0; n <= static_cast<long>(kN); ++n) b_ok = b_ok && B(n).eval(2) == BigInt(n);
  e.evidence.push_back(std::string("B_n(2) = n for 0 <= n <= 1024 under the section 1 recurrence: ") + (b_ok ? "holds" : "fails"));
  if (first_bad > 0) {
    e.evidence.push_back("abstract reading breaks A_n(2) = n first at n = " + std::to_string(first_bad) + " (A(2) = " +
                         a[first_bad].eval(2).get_str() + ")");
  }
  const IntPoly b5 = B(5);
  e.evidence.push_back("section 1 value list: B_5 = " + b5.to_pretty() + "; abstract reading A_5 = " + a[5].to_pretty());
  e.flagged = b_ok && first_bad > 0;
  return e;
}

TypoEntry w_initial_values() {
  TypoEntry e{"W-initial-values",
              "displayed W_1 = 3t^2+t+1 and W_2 = 7t^4+17t^3+7t^2+7t+1 disagree with B_{h_1} = B_19 and B_{h_2} = B_331",
              false, {}};
  const IntPoly w0 = B(h_index(0));
  const IntPoly w1 = B(h_index(1));
  const IntPoly w2 = B(h_index(2));
  const IntPoly w3 = B(h_index(3));
  e.evidence.push_back("h_1 = " + h_index(1).get_str() + ", h_2 = " + h_index(2).get_str());
  e.evidence.push_back("W_1 displayed " + displays::W1_printed().to_pretty() + eq(displays::W1_printed(), w1) +
                       "B_19 " + w1.to_pretty());
  e.evidence.push_back("W_2 displayed " + displays::W2_printed().to_pretty() + eq(displays::W2_printed(), w2) +
                       "B_331 " + w2.to_pretty());
  const IntPoly c{1, 4, 3};
  auto step = [&](const IntPoly& a, const IntPoly& b, const IntPoly& d) {
    return c * a - t_pow(2) * c * b + d.shifted(6);
  };
  const IntPoly from_printed = step(displays::W2_printed(), displays::W1_printed(), w0);
  const IntPoly from_computed = step(w2, w1, w0);
  e.evidence.push_back("recurrence from displayed initials gives W_3 " + from_printed.to_pretty() +
                       eq(from_printed, w3) + "B_{h_3}");
  e.evidence.push_back("recurrence from computed initials gives W_3" + eq(from_computed, w3) + "B_{h_3}");
  e.flagged = displays::W1_printed() != w1 && displays::W2_printed() != w2 && from_printed != w3 && from_computed == w3;
  return e;
}

TypoEntry v3_index_collision() {
  TypoEntry e{"V3-index-collision",
              "V_{3,n} expansion has the inner sum 2t^n sum_{n=2}^{n-1} (3n-3i-2) t^i, whose summation variable collides with n",
              false, {}};
  e.evidence.push_back("the printed sum binds n inside its own bound n-1 and leaves i free, so it has no literal value");
  const IdentityReport r = run_identity("V-explicit", {{"k", {3, 3}}, {"n", {2, 30}}});
  e.evidence.push_back("reading the summation variable as i: B_{p_{3,n}} matches for 2 <= n <= 30 (" +
                       std::to_string(r.cases) + " cases, " + (r.pass ? "pass" : "fail") + ")");
  e.flagged = r.pass;
  return e;
}

TypoEntry f_quadratic_form() {
  TypoEntry e{"F-quadratic-form",
              "printed F(X,Y) = (t^2+t+1)X^2 - (t+1)XY + Y^2 in X = B_{alpha_{2n}}, Y = B_{alpha_{2n+2}} does not give B_{h_n}",
              false, {}};
  long first_bad = -1;
  bool corrected_ok = true;
  for (unsigned n = 0; n <= 12; ++n) {
    const IntPoly X = B(jacobsthal(2 * n));
    const IntPoly Y = B(jacobsthal(2 * n + 2));
    const IntPoly W = B(h_index(n));
    const IntPoly printed = IntPoly{1, 1, 1} * X * X - IntPoly{1, 1} * X * Y + Y * Y;
    const IntPoly corrected = t_pow(2) * X * X - t_pow(1) * X * Y + Y * Y;
    if (printed != W && first_bad < 0) {
      first_bad = n;
      e.evidence.push_back("n = " + std::to_string(n) + ": printed F gives " + printed.to_pretty() + ", B_{h_n} = " +
                           W.to_pretty());
    }
    corrected_ok = corrected_ok && corrected == W;
  }
  e.evidence.push_back("the derivation line in X, B_{alpha_{2n}+1} holds; substituting B_{alpha_{2n}+1} = Y - (t+1)X gives "
                       "t^2X^2 - tXY + Y^2, which equals B_{h_n} for 0 <= n <= 12: " +
                       std::string(corrected_ok ? "holds" : "fails"));
  e.flagged = first_bad >= 0 && corrected_ok;
  return e;
}

TypoEntry s0_explicit_expansion() {
  TypoEntry e{"s0-explicit-expansion",
              "explicit expansion of B_{s_{0,n}} prints the coefficient of t^i (2 <= i <= n-1) as 4i-3; the computed value is 4i+3",
              false, {}};
  long printed_fail = 0, corrected_fail = 0;
  for (long n = 2; n <= 40; ++n) {
    const IntPoly v = B(family_index({FamilyKind::S, 0}, static_cast<unsigned>(n)));
    const IntPoly printed = displays::s0_expansion(n, [](long i) { return 4 * i - 3; });
    if (printed != v) {
      if (printed_fail == 0) {
        e.evidence.push_back("n = " + std::to_string(n) + ": printed " + printed.to_string() + ", B_{s_{0,n}} " +
                             v.to_string());
      }
      ++printed_fail;
    }
    if (displays::s0_expansion(n, [](long i) { return 4 * i + 3; }) != v) ++corrected_fail;
  }
  e.evidence.push_back("printed form fails for " + std::to_string(printed_fail) + " of 39 values 2 <= n <= 40 (n = 2 has an empty sum)");
  e.evidence.push_back("4i+3 reading fails for " + std::to_string(corrected_fail) + " of 39");
  e.flagged = printed_fail == 38 && corrected_fail == 0;
  return e;
}

TypoEntry s1_odd_first_factor() {
  TypoEntry e{"s1-odd-first-factor",
              "first factor of the printed factorization of B_{s_{1,2n+1}} is wrong; the second factor and the even case hold",
              false, {}};
  long printed_fail = 0, alternate_fail = 0, even_fail = 0;
  constexpr long kN = 12;
  for (long n = 1; n <= kN; ++n) {
    const IntPoly odd = B(family_index({FamilyKind::S, 1}, static_cast<unsigned>(2 * n + 1)));
    const IntPoly even = B(family_index({FamilyKind::S, 1}, static_cast<unsigned>(2 * n)));
    const IntPoly printed = IntPoly{1, 1} * displays::s1_odd_first_printed(n) * displays::s1_odd_second(n);
    const IntPoly alternate = IntPoly{1, 1} * displays::s1_odd_first_alternate(n) * displays::s1_odd_second(n);
    if (printed != odd) {
      if (printed_fail == 0) {
        e.evidence.push_back("n = " + std::to_string(n) + ": printed product " + printed.to_pretty() +
                             ", B_{s_{1,2n+1}} " + odd.to_pretty());
      }
      ++printed_fail;
    }
    if (alternate != odd) ++alternate_fail;
    if (IntPoly{1, 1} * displays::s1_even_first(n) * displays::s1_even_second(n) != even) ++even_fail;
  }
  e.evidence.push_back("printed odd factorization fails for " + std::to_string(printed_fail) + " of " +
                       std::to_string(kN) + " values of n");
  e.evidence.push_back("first factor 1+2t^2+4t(t^{2n}-1)/(t-1)+t^{2n+1}(t+2) with the printed second factor fails for " +
                       std::to_string(alternate_fail));
  e.evidence.push_back("even factorization fails for " + std::to_string(even_fail));
  e.flagged = printed_fail == kN && alternate_fail == 0 && even_fail == 0;
  return e;
}

TypoEntry table5_205() {
  TypoEntry e{"table5-205", "Table 5 lists 205 = (11001101)_2 under (r,m) = (4,5)", false, {}};
  const IntPoly v = B(205);
  const IntPoly printed{1, 4, 9, 10, 5};
  e.evidence.push_back("binary " + binary_string(SternIndex(205)) + ", B_205 = " + v.to_pretty() + eq(v, printed) +
                       "printed polynomial");
  std::string mod5;
  for (long i = 1; i <= v.degree(); ++i) {
    if (!mod5.empty()) mod5 += ',';
    mod5 += BigInt(v.coeff(i) % 5).get_str();
  }
  e.evidence.push_back("coefficients of t^1..t^4 mod 5: " + mod5);
  std::string solves;
  for (std::uint32_t m = 2; m <= 10; ++m) {
    for (std::uint32_t r = 0; r < m; ++r) {
      if (is_solution(std::uint64_t{205}, CongruenceSpec{r, m})) solves += " (" + std::to_string(r) + "," + std::to_string(m) + ")";
    }
  }
  e.evidence.push_back("(r,m) with m <= 10 solved by 205:" + (solves.empty() ? std::string(" none") : solves));
  e.flagged = !is_solution(std::uint64_t{205}, CongruenceSpec{4, 5});
  return e;
}

}  // namespace

std::vector<TypoEntry> typo_ledger() {
  return {abstract_recurrence(), w_initial_values(),  v3_index_collision(), f_quadratic_form(),
          s0_explicit_expansion(), s1_odd_first_factor(), table5_205()};
}

}  // namespace sternpoly
