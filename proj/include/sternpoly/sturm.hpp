#pragma once

#include <cstddef>
#include <vector>

#include "sternpoly/int_poly.hpp"

namespace sternpoly {

/// Sturm sequence over Z built from primitive pseudo-remainders. The first
/// entry is pp(p), the second pp(p'), and each further entry is the negated
/// pseudo-remainder of its two predecessors, sign-corrected so that it has
/// the sign of the true (rational) remainder, then made primitive.
class SturmChain {
 public:
  explicit SturmChain(const IntPoly& p);

  const std::vector<IntPoly>& chain() const noexcept { return chain_; }

  /// Sign variations of the chain at -inf / +inf.
  std::size_t variations_at_neg_inf() const;
  std::size_t variations_at_pos_inf() const;

  /// Number of distinct real roots of the input.
  std::size_t distinct_real_roots() const { return variations_at_neg_inf() - variations_at_pos_inf(); }

 private:
  std::vector<IntPoly> chain_;
};

/// Number of distinct real roots, via Sturm's theorem. Throws ZeroPolynomial.
std::size_t count_real_roots(const IntPoly& p);

/// Number of distinct real roots whose multiplicity is odd, i.e. the points
/// where p changes sign. Computed from the iterated gcd chain
/// p, gcd(p,p'), gcd(gcd(p,p'), ...), whose real-root counts drop by one for
/// each root at every multiplicity level.
std::size_t count_odd_multiplicity_real_roots(const IntPoly& p);

/// True iff p is strictly increasing on R: degree >= 1, positive leading
/// coefficient, and p' has no real root of odd multiplicity (so p' >= 0 with
/// isolated zeros).
bool is_increasing(const IntPoly& p);

}  // namespace sternpoly
