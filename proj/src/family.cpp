#include "sternpoly/family.hpp"

#include <charconv>

#include "sternpoly/error.hpp"

namespace sternpoly {
namespace {

BigInt pow2(unsigned long e) {
  BigInt r;
  mpz_ui_pow_ui(r.get_mpz_t(), 2, e);
  return r;
}

unsigned parse_uint(std::string_view s, std::string_view what) {
  unsigned v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size() || s.empty()) {
    throw Error(ErrorKind::ParseError, "bad " + std::string(what) + " '" + std::string(s) + "'");
  }
  return v;
}

}  // namespace

std::string to_string(const FamilyId& f) {
  switch (f.kind) {
    case FamilyKind::TrivialAllOnes: return "trivial-all-ones";
    case FamilyKind::TrivialTwos: return "trivial-twos";
    case FamilyKind::P: return "p" + std::to_string(f.param);
    case FamilyKind::S: return "s" + std::to_string(f.param);
    case FamilyKind::H: return "h";
    case FamilyKind::BigH: return "H";
    case FamilyKind::Alpha: return "alpha";
    case FamilyKind::Beta: return "beta";
  }
  return "?";
}

FamilyId parse_family(std::string_view name) {
  if (name == "trivial-all-ones") return {FamilyKind::TrivialAllOnes, 0};
  if (name == "trivial-twos") return {FamilyKind::TrivialTwos, 0};
  if (name == "h") return {FamilyKind::H, 0};
  if (name == "H") return {FamilyKind::BigH, 0};
  if (name == "alpha") return {FamilyKind::Alpha, 0};
  if (name == "beta") return {FamilyKind::Beta, 0};
  if (name.size() >= 2 && name[0] == 'p') {
    FamilyId f{FamilyKind::P, parse_uint(name.substr(1), "family parameter")};
    if (f.param < 2) throw Error(ErrorKind::OutOfDomain, "p family needs k >= 2");
    return f;
  }
  if (name.size() >= 2 && name[0] == 's') {
    FamilyId f{FamilyKind::S, parse_uint(name.substr(1), "family parameter")};
    if (f.param > 3) throw Error(ErrorKind::OutOfDomain, "s family needs i in 0..3");
    return f;
  }
  throw Error(ErrorKind::ParseError, "unknown family '" + std::string(name) + "'");
}

unsigned family_base(const FamilyId& f) {
  switch (f.kind) {
    case FamilyKind::P:
    case FamilyKind::S: return 1;
    case FamilyKind::Alpha:
    case FamilyKind::Beta: return 2;
    default: return 0;
  }
}

SternIndex jacobsthal(unsigned n) {
  BigInt r = pow2(n);
  if (n % 2 == 0) r -= 1; else r += 1;
  return r / 3;
}

SternIndex h_index(const SternIndex& n) {
  if (sgn(n) < 0 || !n.fits_ulong_p()) throw Error(ErrorKind::OutOfDomain, "h index out of range");
  const unsigned long k = n.get_ui();
  // (2/3)(2^{2k} - 1)(2^{2k+1} + 1) + 1; 2^{2k} - 1 is divisible by 3.
  BigInt a = pow2(2 * k) - 1;
  BigInt b = pow2(2 * k + 1) + 1;
  return BigInt(2 * (a / 3) * b + 1);
}

SternIndex family_index(const FamilyId& f, unsigned n) {
  if (n < family_base(f)) {
    throw Error(ErrorKind::OutOfDomain, to_string(f) + " is defined for n >= " + std::to_string(family_base(f)));
  }
  switch (f.kind) {
    case FamilyKind::TrivialAllOnes: return pow2(n + 1) - 1;
    case FamilyKind::TrivialTwos: return pow2(n + 2) - 3;
    case FamilyKind::P: {
      const unsigned k = f.param;
      if (k < 2) throw Error(ErrorKind::OutOfDomain, "p family needs k >= 2");
      return pow2(2 * n + k) - 3 * pow2(n + k - 1) + pow2(k) - 3;
    }
    case FamilyKind::S:
      switch (f.param) {
        case 0: return pow2(2 * n + 4) - 9 * pow2(n + 1) - 1;
        case 1: return pow2(2 * n + 5) - 9 * pow2(n + 2) - 5;
        case 2: return pow2(2 * n + 8) - 9 * pow2(n + 4) - 13;
        case 3: return pow2(2 * n + 8) - 51 * pow2(n + 2) - 1;
        default: throw Error(ErrorKind::OutOfDomain, "s family needs i in 0..3");
      }
    case FamilyKind::H: return h_index(n);
    case FamilyKind::BigH: {
      BigInt e;
      mpz_ui_pow_ui(e.get_mpz_t(), 3, n);
      return h_index((e - 1) / 2);
    }
    case FamilyKind::Alpha: return jacobsthal(n);
    case FamilyKind::Beta: {
      BigInt r = 5 * pow2(n - 2);
      if (n % 2 == 0) r += 1; else r -= 1;
      return r / 3;
    }
  }
  throw Error(ErrorKind::OutOfDomain, "unknown family");
}

bool family_contains(const FamilyId& f, const SternIndex& value) {
  switch (f.kind) {
    case FamilyKind::TrivialAllOnes: {
      // value + 1 = 2^{n+1}, n >= 0
      BigInt v = value + 1;
      return v >= 2 && mpz_popcount(v.get_mpz_t()) == 1;
    }
    case FamilyKind::TrivialTwos: {
      BigInt v = value + 3;
      return v >= 4 && mpz_popcount(v.get_mpz_t()) == 1;
    }
    default: break;
  }
  const std::size_t limit = mpz_sizeinbase(value.get_mpz_t(), 2) + 2;
  for (unsigned n = family_base(f);; ++n) {
    SternIndex v = family_index(f, n);
    if (v == value) return true;
    if (v > value || n > limit) return false;
  }
}

}  // namespace sternpoly
