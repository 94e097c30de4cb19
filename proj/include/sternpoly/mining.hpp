#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "sternpoly/search.hpp"

namespace sternpoly {

/// Candidate family U_n = p*4^n + q*2^n + u.
struct AffineTriple {
  mpq_class p;
  mpq_class q;
  mpq_class u;

  /// U_n exactly (a rational in general).
  mpq_class value(unsigned n) const;
  std::string to_string() const;  // "(p, q, u)", rationals as a/b
  friend bool operator==(const AffineTriple&, const AffineTriple&) = default;
};

struct MinedFamily {
  AffineTriple triple;
  /// Lexicographically first quadruple from the input producing the triple.
  std::array<std::uint64_t, 4> quadruple{};
  bool validated = true;
  /// First failing n (>= 4) and U_n, when not validated.
  std::optional<unsigned> failed_at;
  std::optional<mpq_class> failed_value;
  std::string failure;  // "non-integer", "even", "non-positive", "not a solution"
};

struct MiningReport {
  CongruenceSpec spec;
  std::size_t input_size = 0;
  std::uint64_t quadruples = 0;
  /// Consistent triples before the p > 0 filter.
  std::size_t consistent_triples = 0;
  unsigned depth = 0;
  /// Distinct triples with p > 0, ordered by (p, q, u).
  std::vector<MinedFamily> families;

  std::size_t validated_count() const;
  const MinedFamily* find(const AffineTriple& t) const;
};

/// Solves p*4^i + q*2^i + u = v_i over Q for i = 0, 1, 2 and returns the
/// triple if v_3 agrees. Degenerate inputs simply yield nullopt.
std::optional<AffineTriple> solve_quadruple(const std::array<std::uint64_t, 4>& v);

/// Every increasing quadruple of `solutions` is solved for (p, q, u); triples
/// with p > 0 are kept once each and validated by checking that U_4 ..
/// U_{3+depth} are odd positive integers solving `spec`. Throws
/// TooFewSolutions for fewer than four inputs.
MiningReport mine_affine_families(std::span<const std::uint64_t> solutions, const CongruenceSpec& spec,
                                  unsigned depth);

}  // namespace sternpoly
