#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

#include "sternpoly/stern.hpp"

namespace sternpoly {

enum class FamilyKind {
  TrivialAllOnes,  // 2^{n+1} - 1
  TrivialTwos,     // 2^{n+2} - 3
  P,               // p_{k,n} = 2^{2n+k} - 3*2^{n+k-1} + 2^k - 3, param k >= 2
  S,               // s_{i,n}, param i in 0..3
  H,               // h_n = 2/3 (2^{2n} - 1)(2^{2n+1} + 1) + 1
  BigH,            // H_n = h_{(3^n - 1)/2}
  Alpha,           // Jacobsthal alpha_n = (2^n - (-1)^n)/3
  Beta,            // beta_n = (5*2^{n-2} + (-1)^n)/3
};

/// A closed-form index sequence. `param` is k for P and i for S, 0 otherwise.
struct FamilyId {
  FamilyKind kind = FamilyKind::TrivialAllOnes;
  unsigned param = 0;

  friend auto operator<=>(const FamilyId&, const FamilyId&) = default;
};

/// Canonical names: trivial-all-ones, trivial-twos, p<k>, s<i>, h, H, alpha, beta.
std::string to_string(const FamilyId& f);
FamilyId parse_family(std::string_view name);

/// Smallest n accepted by family_index for this family.
unsigned family_base(const FamilyId& f);

/// Exact closed-form value. Throws OutOfDomain when n < family_base(f) or the
/// family parameter is invalid.
SternIndex family_index(const FamilyId& f, unsigned n);

/// Whether value occurs in the family (all families are strictly increasing
/// over their domain, so this walks n upward until the values pass it).
bool family_contains(const FamilyId& f, const SternIndex& value);

/// Jacobsthal number for any n >= 0 (alpha_0 = 0, alpha_1 = alpha_2 = 1).
SternIndex jacobsthal(unsigned n);

/// h_n for n >= 0.
SternIndex h_index(const SternIndex& n);

}  // namespace sternpoly
