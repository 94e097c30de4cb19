#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "sternpoly/int_poly.hpp"

namespace sternpoly {

inline constexpr std::uint32_t kMaxModulus = 65535;

/// Throws BadModulus unless 2 <= m <= kMaxModulus.
void check_modulus(std::uint64_t m);

/// Dense polynomial over Z/m. The coefficient vector always has
/// formal_degree + 1 entries; trailing zeros are allowed because reduction
/// can kill the true leading coefficient while the exact degree still
/// matters to the caller.
class ModPoly {
 public:
  ModPoly(std::uint32_t modulus, std::size_t formal_degree);
  ModPoly(std::uint32_t modulus, std::vector<std::uint32_t> coeffs);

  std::uint32_t modulus() const noexcept { return modulus_; }
  std::size_t formal_degree() const noexcept { return coeffs_.size() - 1; }
  std::span<const std::uint32_t> coeffs() const noexcept { return coeffs_; }
  std::uint32_t coeff(std::size_t i) const noexcept { return i < coeffs_.size() ? coeffs_[i] : 0; }

  /// Formal degree is the max of the operands.
  friend ModPoly operator+(const ModPoly& a, const ModPoly& b);
  /// Formal degree is the sum of the operands'.
  friend ModPoly operator*(const ModPoly& a, const ModPoly& b);
  ModPoly shifted(std::size_t k) const;

  /// Equal modulus and equal coefficients once both are padded to the same
  /// length (formal degree is bookkeeping, not value).
  friend bool operator==(const ModPoly& a, const ModPoly& b);

  std::string to_string() const;

 private:
  std::uint32_t modulus_;
  std::vector<std::uint32_t> coeffs_;
};

/// Reduce each coefficient into [0, m), padded to formal_degree + 1 entries.
/// Requires formal_degree >= degree(p).
ModPoly reduce_mod(const IntPoly& p, std::uint64_t m, std::size_t formal_degree);

}  // namespace sternpoly
