#pragma once

#include <cstddef>
#include <vector>

#include "sternpoly/int_poly.hpp"

namespace sternpoly {

/// Index n of a Stern polynomial; arbitrary precision, never negative.
using SternIndex = BigInt;

/// (B_k, B_{k+1}) together with k.
struct SternPair {
  IntPoly lo;
  IntPoly hi;
  SternIndex index;
};

/// Bit-scan pair recursion from (B_0, B_1) = (0, 1), most significant bit
/// first: bit 0 maps (B_k, B_{k+1}) to (t B_k, B_k + B_{k+1}), bit 1 maps it
/// to (B_k + B_{k+1}, t B_{k+1}).
SternPair stern_pair(const SternIndex& n);

/// B_n(t).
IntPoly stern_poly(const SternIndex& n);

/// s_n = B_n(1), by the same pair scan over integers.
BigInt stern_number(const SternIndex& n);

/// e(n) = deg B_n, by the degree-only pair recursion. Throws UndefinedDegree
/// for n = 0.
long stern_degree(const SternIndex& n);

/// Sum over hyperbinary representations of n of t^(number of digits 1).
/// Equals B_{n+1}.
IntPoly hyperbinary_poly(const SternIndex& n);

/// (B_0, ..., B_N) read off the truncated product
/// x * prod_j (1 + t x^{2^j} + x^{2^{j+1}}).
std::vector<IntPoly> gf_prefix(std::size_t N);

/// MSB-first binary expansion, "0" for zero.
std::string binary_string(const SternIndex& n);

}  // namespace sternpoly
