#include "sternpoly/stern.hpp"

#include <algorithm>
#include <map>
#include <string>

#include "sternpoly/error.hpp"

namespace sternpoly {
namespace {

void check_nonnegative(const SternIndex& n) {
  if (sgn(n) < 0) throw Error(ErrorKind::OutOfDomain, "negative Stern index " + n.get_str());
}

}  // namespace

SternPair stern_pair(const SternIndex& n) {
  check_nonnegative(n);
  IntPoly lo;
  IntPoly hi{1};
  for (std::size_t bit = mpz_sizeinbase(n.get_mpz_t(), 2); bit-- > 0;) {
    IntPoly sum = lo + hi;
    if (mpz_tstbit(n.get_mpz_t(), bit)) {
      lo = std::move(sum);
      hi = hi.shifted(1);
    } else {
      hi = std::move(sum);
      lo = lo.shifted(1);
    }
  }
  return SternPair{std::move(lo), std::move(hi), n};
}

IntPoly stern_poly(const SternIndex& n) { return stern_pair(n).lo; }

BigInt stern_number(const SternIndex& n) {
  check_nonnegative(n);
  BigInt lo = 0;
  BigInt hi = 1;
  if (sgn(n) == 0) return lo;
  for (std::size_t bit = mpz_sizeinbase(n.get_mpz_t(), 2); bit-- > 0;) {
    if (mpz_tstbit(n.get_mpz_t(), bit)) {
      lo += hi;
    } else {
      hi += lo;
    }
  }
  return lo;
}

long stern_degree(const SternIndex& n) {
  check_nonnegative(n);
  if (sgn(n) == 0) throw Error(ErrorKind::UndefinedDegree, "B_0 = 0 has no degree");
  // kZeroDegree stands for deg B_0 = -inf; it only ever sits in `lo` before
  // the first (leading) bit is consumed.
  long lo = IntPoly::kZeroDegree;
  long hi = 0;
  for (std::size_t bit = mpz_sizeinbase(n.get_mpz_t(), 2); bit-- > 0;) {
    const long sum = std::max(lo, hi);
    if (mpz_tstbit(n.get_mpz_t(), bit)) {
      lo = sum;
      hi = hi + 1;
    } else {
      hi = sum;
      lo = lo == IntPoly::kZeroDegree ? lo : lo + 1;
    }
  }
  return lo;
}

IntPoly hyperbinary_poly(const SternIndex& n) {
  check_nonnegative(n);
  // Only floor(n/2^k) and floor(n/2^k) - 1 are ever reached, so the memo
  // holds at most two entries per bit level.
  std::map<SternIndex, IntPoly> memo;
  memo.emplace(BigInt(0), IntPoly{1});

  auto solve = [&memo](auto&& self, const SternIndex& v) -> IntPoly {
    if (auto it = memo.find(v); it != memo.end()) return it->second;
    IntPoly result;
    if (mpz_odd_p(v.get_mpz_t())) {
      // last digit 1
      result = self(self, SternIndex((v - 1) / 2)).shifted(1);
    } else {
      // last digit 0 or 2
      SternIndex half = v / 2;
      result = self(self, half) + self(self, SternIndex(half - 1));
    }
    memo.emplace(v, result);
    return result;
  };
  return solve(solve, n);
}

std::vector<IntPoly> gf_prefix(std::size_t N) {
  if (N < 1) throw Error(ErrorKind::PreconditionViolated, "gf_prefix needs N >= 1");
  // series[d] = coefficient of x^d in the product, truncated at x^{N-1};
  // B_n is the coefficient of x^{n-1}.
  std::vector<IntPoly> series(N);
  series[0] = IntPoly{1};
  for (std::size_t step = 1; step <= N; step *= 2) {
    for (std::size_t d = N; d-- > 0;) {
      IntPoly acc = series[d];
      if (d >= step) acc += series[d - step].shifted(1);
      if (d >= 2 * step) acc += series[d - 2 * step];
      series[d] = std::move(acc);
    }
  }
  std::vector<IntPoly> out;
  out.reserve(N + 1);
  out.emplace_back();
  for (auto& p : series) out.push_back(std::move(p));
  return out;
}

std::string binary_string(const SternIndex& n) {
  check_nonnegative(n);
  return n.get_str(2);
}

}  // namespace sternpoly
