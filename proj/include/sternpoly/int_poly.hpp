#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace sternpoly {

using BigInt = mpz_class;

/// Dense univariate polynomial over Z. Coefficient i is the coefficient of
/// t^i. The stored sequence is always canonical: no trailing zeros, and the
/// zero polynomial is the empty sequence.
class IntPoly {
 public:
  /// Degree reported for the zero polynomial (stands in for minus infinity).
  static constexpr long kZeroDegree = -1;

  IntPoly() = default;
  explicit IntPoly(std::vector<BigInt> coeffs);
  IntPoly(std::initializer_list<long> coeffs);

  static IntPoly constant(const BigInt& c);
  /// c * t^k
  static IntPoly monomial(const BigInt& c, std::size_t k);

  bool is_zero() const noexcept { return coeffs_.empty(); }
  long degree() const noexcept { return static_cast<long>(coeffs_.size()) - 1; }
  std::size_t size() const noexcept { return coeffs_.size(); }

  std::span<const BigInt> coeffs() const noexcept { return coeffs_; }
  /// Coefficient of t^i; zero outside the stored range (including i < 0).
  BigInt coeff(long i) const;
  const BigInt& leading() const;
  BigInt constant_term() const { return coeff(0); }

  IntPoly& operator+=(const IntPoly& rhs);
  IntPoly& operator-=(const IntPoly& rhs);
  IntPoly& operator*=(const IntPoly& rhs);
  IntPoly& operator*=(const BigInt& c);

  friend IntPoly operator+(IntPoly a, const IntPoly& b) { return a += b; }
  friend IntPoly operator-(IntPoly a, const IntPoly& b) { return a -= b; }
  friend IntPoly operator*(const IntPoly& a, const IntPoly& b);
  friend IntPoly operator*(IntPoly a, const BigInt& c) { return a *= c; }
  friend IntPoly operator*(const BigInt& c, IntPoly a) { return a *= c; }
  IntPoly operator-() const;

  friend bool operator==(const IntPoly& a, const IntPoly& b) { return a.coeffs_ == b.coeffs_; }

  /// Multiplication by t^k.
  IntPoly shifted(std::size_t k) const;

  BigInt eval(const BigInt& x) const;
  IntPoly derivative() const;
  /// Coefficient sequence reversed, canonicalized: t^deg * p(1/t).
  IntPoly reverse() const;

  /// Nonnegative gcd of the coefficients (0 for the zero polynomial).
  BigInt content() const;
  /// p / content(p), sign preserved.
  IntPoly primitive_part() const;

  /// Exact division of every coefficient by c; throws NotDivisible otherwise.
  IntPoly divided_by(const BigInt& c) const;

  /// Ascending comma-separated text form, e.g. "1,2" for 1+2t; "0" for zero.
  std::string to_string() const;
  /// Human readable descending form, e.g. "2t^2+2t+1".
  std::string to_pretty() const;

  static IntPoly parse(std::string_view text);

 private:
  void canonicalize();

  std::vector<BigInt> coeffs_;
};

IntPoly add(const IntPoly& a, const IntPoly& b);
IntPoly mul(const IntPoly& a, const IntPoly& b);

/// 1 + t + ... + t^{n-1}; the zero polynomial when n == 0.
IntPoly geometric(std::size_t n);

/// q with num == den * q over Z; throws NotDivisible on any remainder or
/// non-integral quotient coefficient, PreconditionViolated if den == 0.
IntPoly divide_exact(const IntPoly& num, const IntPoly& den);

/// Pseudo-remainder: lc(b)^{deg a - deg b + 1} * a mod b (a when deg a < deg b).
IntPoly pseudo_remainder(const IntPoly& a, const IntPoly& b);

/// Primitive gcd over Z[t] with positive leading coefficient (content ignored).
IntPoly primitive_gcd(const IntPoly& a, const IntPoly& b);

/// Eisenstein criterion at prime q. Requires degree(p) >= 1.
bool eisenstein_irreducible(const IntPoly& p, const BigInt& q);

}  // namespace sternpoly
