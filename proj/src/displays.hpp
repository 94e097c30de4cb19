#pragma once

// Polynomials exactly as displayed in the printed formulas, shared by the
// typo ledger and the conjecture experiments.

#include "sternpoly/int_poly.hpp"

namespace sternpoly::displays {

/// (t^{2k} - 1)/(t^2 - 1) = 1 + t^2 + ... + t^{2(k-1)}, zero for k <= 0.
inline IntPoly even_geometric(long k) {
  IntPoly r;
  for (long j = 0; j < k; ++j) r += IntPoly::monomial(1, static_cast<std::size_t>(2 * j));
  return r;
}

/// (t^k - 1)/(t - 1), zero for k <= 0.
inline IntPoly geo(long k) { return k <= 0 ? IntPoly{} : geometric(static_cast<std::size_t>(k)); }

inline IntPoly t_pow(long k) { return IntPoly::monomial(1, static_cast<std::size_t>(k)); }

/// Factors of B_{s_{1,2n}}: (t+1), first, second.
inline IntPoly s1_even_first(long n) {
  return IntPoly{1} + BigInt(3) * (t_pow(1) * geo(2 * n)) - BigInt(2) * t_pow(2 * n);
}
inline IntPoly s1_even_second(long n) {
  return IntPoly{1} + BigInt(3) * (t_pow(1) * geo(2 * n - 1)) - BigInt(2) * (t_pow(3) * even_geometric(n - 1)) +
         t_pow(2 * n);
}

/// Factors of B_{s_{1,2n+1}} as printed.
inline IntPoly s1_odd_first_printed(long n) {
  return IntPoly{1, 0, 2} + t_pow(1) * geo(2 * (n + 1)) - t_pow(2 * n + 1) * IntPoly{2, 3};
}
inline IntPoly s1_odd_second(long n) {
  return IntPoly{1} + BigInt(2) * (t_pow(1) * geo(2 * n - 1)) - t_pow(2) * even_geometric(n - 1) + t_pow(2 * n);
}
/// First factor that does reproduce B_{s_{1,2n+1}}.
inline IntPoly s1_odd_first_alternate(long n) {
  return IntPoly{1, 0, 2} + BigInt(4) * (t_pow(1) * geo(2 * n)) + t_pow(2 * n + 1) * IntPoly{2, 1};
}

/// Displayed initial values W_1, W_2 of the W recurrence.
inline IntPoly W1_printed() { return IntPoly{1, 1, 3}; }
inline IntPoly W2_printed() { return IntPoly{1, 7, 7, 17, 7}; }

/// Printed explicit expansion of B_{s_{0,n}}, n >= 2, with the middle
/// coefficient c(i) for 2 <= i <= n - 1.
template <typename Middle>
IntPoly s0_expansion(long n, Middle middle) {
  IntPoly r{1, 5};
  for (long i = 2; i <= n - 1; ++i) r += IntPoly::monomial(middle(i), static_cast<std::size_t>(i));
  r += IntPoly::monomial(4 * n + 1, static_cast<std::size_t>(n));
  r += IntPoly::monomial(4 * n - 1, static_cast<std::size_t>(n + 1));
  for (long i = n + 2; i <= 2 * n; ++i) r += IntPoly::monomial(4 * (2 * n - i) + 3, static_cast<std::size_t>(i));
  r += IntPoly::monomial(1, static_cast<std::size_t>(2 * n + 1));
  return r;
}

}  // namespace sternpoly::displays
