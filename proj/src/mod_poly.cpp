#include "sternpoly/mod_poly.hpp"

#include <algorithm>
#include <utility>

#include "sternpoly/error.hpp"

namespace sternpoly {

void check_modulus(std::uint64_t m) {
  if (m < 2 || m > kMaxModulus) {
    throw Error(ErrorKind::BadModulus, "modulus " + std::to_string(m) + " outside 2.." + std::to_string(kMaxModulus));
  }
}

ModPoly::ModPoly(std::uint32_t modulus, std::size_t formal_degree)
    : modulus_(modulus), coeffs_(formal_degree + 1, 0) {
  check_modulus(modulus);
}

ModPoly::ModPoly(std::uint32_t modulus, std::vector<std::uint32_t> coeffs)
    : modulus_(modulus), coeffs_(std::move(coeffs)) {
  check_modulus(modulus);
  if (coeffs_.empty()) coeffs_.push_back(0);
  for (auto& c : coeffs_) c %= modulus_;
}

ModPoly operator+(const ModPoly& a, const ModPoly& b) {
  if (a.modulus_ != b.modulus_) throw Error(ErrorKind::BadModulus, "mismatched moduli");
  ModPoly r(a.modulus_, std::max(a.formal_degree(), b.formal_degree()));
  for (std::size_t i = 0; i < r.coeffs_.size(); ++i) {
    std::uint32_t s = a.coeff(i) + b.coeff(i);
    r.coeffs_[i] = s >= a.modulus_ ? s - a.modulus_ : s;
  }
  return r;
}

ModPoly operator*(const ModPoly& a, const ModPoly& b) {
  if (a.modulus_ != b.modulus_) throw Error(ErrorKind::BadModulus, "mismatched moduli");
  std::vector<std::uint64_t> acc(a.coeffs_.size() + b.coeffs_.size() - 1, 0);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
      acc[i + j] = (acc[i + j] + std::uint64_t{a.coeffs_[i]} * b.coeffs_[j]) % a.modulus_;
    }
  }
  std::vector<std::uint32_t> out(acc.begin(), acc.end());
  return ModPoly(a.modulus_, std::move(out));
}

ModPoly ModPoly::shifted(std::size_t k) const {
  std::vector<std::uint32_t> v(coeffs_.size() + k, 0);
  std::copy(coeffs_.begin(), coeffs_.end(), v.begin() + static_cast<std::ptrdiff_t>(k));
  return ModPoly(modulus_, std::move(v));
}

bool operator==(const ModPoly& a, const ModPoly& b) {
  if (a.modulus_ != b.modulus_) return false;
  const std::size_t n = std::max(a.coeffs_.size(), b.coeffs_.size());
  for (std::size_t i = 0; i < n; ++i) {
    if (a.coeff(i) != b.coeff(i)) return false;
  }
  return true;
}

std::string ModPoly::to_string() const {
  std::string s;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(coeffs_[i]);
  }
  return s;
}

ModPoly reduce_mod(const IntPoly& p, std::uint64_t m, std::size_t formal_degree) {
  check_modulus(m);
  if (p.degree() > static_cast<long>(formal_degree)) {
    throw Error(ErrorKind::PreconditionViolated, "formal degree below polynomial degree");
  }
  std::vector<std::uint32_t> v(formal_degree + 1, 0);
  for (std::size_t i = 0; i < p.size(); ++i) {
    // mpz_fdiv_ui gives the canonical nonnegative residue for negative input.
    v[i] = static_cast<std::uint32_t>(mpz_fdiv_ui(p.coeffs()[i].get_mpz_t(), static_cast<unsigned long>(m)));
  }
  return ModPoly(static_cast<std::uint32_t>(m), std::move(v));
}

}  // namespace sternpoly
