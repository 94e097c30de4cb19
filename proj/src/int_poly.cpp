#include "sternpoly/int_poly.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <utility>

#include "sternpoly/error.hpp"

namespace sternpoly {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::NotDivisible: return "NotDivisible";
    case ErrorKind::BadModulus: return "BadModulus";
    case ErrorKind::ZeroPolynomial: return "ZeroPolynomial";
    case ErrorKind::UndefinedDegree: return "UndefinedDegree";
    case ErrorKind::EvenIndex: return "EvenIndex";
    case ErrorKind::BoundTooLarge: return "BoundTooLarge";
    case ErrorKind::TooFewSolutions: return "TooFewSolutions";
    case ErrorKind::PreconditionViolated: return "PreconditionViolated";
    case ErrorKind::OutOfDomain: return "OutOfDomain";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::CheckpointMismatch: return "CheckpointMismatch";
    case ErrorKind::IoError: return "IoError";
  }
  return "Unknown";
}

IntPoly::IntPoly(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) { canonicalize(); }

IntPoly::IntPoly(std::initializer_list<long> coeffs) {
  coeffs_.reserve(coeffs.size());
  for (long c : coeffs) coeffs_.emplace_back(c);
  canonicalize();
}

IntPoly IntPoly::constant(const BigInt& c) { return IntPoly(std::vector<BigInt>{c}); }

IntPoly IntPoly::monomial(const BigInt& c, std::size_t k) {
  std::vector<BigInt> v(k + 1);
  v[k] = c;
  return IntPoly(std::move(v));
}

void IntPoly::canonicalize() {
  while (!coeffs_.empty() && sgn(coeffs_.back()) == 0) coeffs_.pop_back();
}

BigInt IntPoly::coeff(long i) const {
  if (i < 0 || i >= static_cast<long>(coeffs_.size())) return 0;
  return coeffs_[static_cast<std::size_t>(i)];
}

const BigInt& IntPoly::leading() const {
  if (coeffs_.empty()) throw Error(ErrorKind::ZeroPolynomial, "leading coefficient of zero");
  return coeffs_.back();
}

IntPoly& IntPoly::operator+=(const IntPoly& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
  canonicalize();
  return *this;
}

IntPoly& IntPoly::operator-=(const IntPoly& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
  canonicalize();
  return *this;
}

IntPoly operator*(const IntPoly& a, const IntPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<BigInt> out(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (sgn(a.coeffs_[i]) == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
      mpz_addmul(out[i + j].get_mpz_t(), a.coeffs_[i].get_mpz_t(), b.coeffs_[j].get_mpz_t());
    }
  }
  return IntPoly(std::move(out));
}

IntPoly& IntPoly::operator*=(const IntPoly& rhs) { return *this = *this * rhs; }

IntPoly& IntPoly::operator*=(const BigInt& c) {
  if (sgn(c) == 0) {
    coeffs_.clear();
    return *this;
  }
  for (auto& x : coeffs_) x *= c;
  return *this;
}

IntPoly IntPoly::operator-() const {
  IntPoly r = *this;
  for (auto& x : r.coeffs_) x = -x;
  return r;
}

IntPoly IntPoly::shifted(std::size_t k) const {
  if (is_zero() || k == 0) return *this;
  std::vector<BigInt> v(coeffs_.size() + k);
  std::copy(coeffs_.begin(), coeffs_.end(), v.begin() + static_cast<std::ptrdiff_t>(k));
  IntPoly r;
  r.coeffs_ = std::move(v);
  return r;
}

BigInt IntPoly::eval(const BigInt& x) const {
  BigInt acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc *= x;
    acc += *it;
  }
  return acc;
}

IntPoly IntPoly::derivative() const {
  if (coeffs_.size() <= 1) return {};
  std::vector<BigInt> v(coeffs_.size() - 1);
  for (std::size_t i = 1; i < coeffs_.size(); ++i) v[i - 1] = coeffs_[i] * static_cast<unsigned long>(i);
  return IntPoly(std::move(v));
}

IntPoly IntPoly::reverse() const {
  std::vector<BigInt> v(coeffs_.rbegin(), coeffs_.rend());
  return IntPoly(std::move(v));
}

BigInt IntPoly::content() const {
  BigInt g = 0;
  for (const auto& c : coeffs_) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

IntPoly IntPoly::primitive_part() const {
  if (is_zero()) return {};
  BigInt g = content();
  if (g == 1) return *this;
  IntPoly r = *this;
  for (auto& c : r.coeffs_) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
  return r;
}

IntPoly IntPoly::divided_by(const BigInt& c) const {
  if (sgn(c) == 0) throw Error(ErrorKind::PreconditionViolated, "division by zero scalar");
  IntPoly r = *this;
  for (auto& x : r.coeffs_) {
    if (!mpz_divisible_p(x.get_mpz_t(), c.get_mpz_t())) {
      throw Error(ErrorKind::NotDivisible, "coefficient " + x.get_str() + " not divisible by " + c.get_str());
    }
    mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), c.get_mpz_t());
  }
  return r;
}

std::string IntPoly::to_string() const {
  if (coeffs_.empty()) return "0";
  std::string s;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (i) s += ',';
    s += coeffs_[i].get_str();
  }
  return s;
}

std::string IntPoly::to_pretty() const {
  if (coeffs_.empty()) return "0";
  std::string s;
  for (std::size_t k = coeffs_.size(); k-- > 0;) {
    const BigInt& c = coeffs_[k];
    if (sgn(c) == 0) continue;
    BigInt mag = abs(c);
    if (s.empty()) {
      if (sgn(c) < 0) s += '-';
    } else {
      s += sgn(c) < 0 ? '-' : '+';
    }
    if (k == 0 || mag != 1) s += mag.get_str();
    if (k >= 1) s += 't';
    if (k >= 2) s += '^' + std::to_string(k);
  }
  return s;
}

namespace {

// Terms like "3t^2", "-t", "+7", with optional spaces.
IntPoly parse_pretty(std::string_view text) {
  std::string s;
  for (char ch : text) {
    if (ch != ' ') s.push_back(ch);
  }
  auto fail = [&] { return Error(ErrorKind::ParseError, "bad polynomial '" + std::string(text) + "'"); };
  if (s.empty()) throw fail();
  std::vector<BigInt> v;
  std::size_t i = 0;
  while (i < s.size()) {
    int sign = 1;
    if (s[i] == '+' || s[i] == '-') {
      sign = s[i] == '-' ? -1 : 1;
      ++i;
    } else if (i != 0) {
      throw fail();
    }
    std::size_t j = i;
    while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
    BigInt c = 1;
    if (j > i) c = BigInt(s.substr(i, j - i));
    std::size_t power = 0;
    if (j < s.size() && s[j] == 't') {
      ++j;
      power = 1;
      if (j < s.size() && s[j] == '^') {
        std::size_t k = ++j;
        while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
        if (j == k) throw fail();
        power = std::stoul(s.substr(k, j - k));
      }
    } else if (j == i) {
      throw fail();
    }
    if (v.size() <= power) v.resize(power + 1);
    v[power] += sign * c;
    i = j;
  }
  return IntPoly(std::move(v));
}

}  // namespace

IntPoly IntPoly::parse(std::string_view text) {
  if (text.find('t') != std::string_view::npos) return parse_pretty(text);
  std::vector<BigInt> v;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t comma = text.find(',', pos);
    std::string_view tok = text.substr(pos, comma == std::string_view::npos ? std::string_view::npos : comma - pos);
    while (!tok.empty() && tok.front() == ' ') tok.remove_prefix(1);
    while (!tok.empty() && tok.back() == ' ') tok.remove_suffix(1);
    BigInt c;
    if (tok.empty() || c.set_str(std::string(tok), 10) != 0) {
      throw Error(ErrorKind::ParseError, "bad polynomial coefficient '" + std::string(tok) + "'");
    }
    v.push_back(std::move(c));
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return IntPoly(std::move(v));
}

IntPoly add(const IntPoly& a, const IntPoly& b) { return a + b; }
IntPoly mul(const IntPoly& a, const IntPoly& b) { return a * b; }

IntPoly geometric(std::size_t n) { return IntPoly(std::vector<BigInt>(n, BigInt(1))); }

IntPoly divide_exact(const IntPoly& num, const IntPoly& den) {
  if (den.is_zero()) throw Error(ErrorKind::PreconditionViolated, "divide_exact by zero polynomial");
  if (num.is_zero()) return {};
  if (num.degree() < den.degree()) {
    throw Error(ErrorKind::NotDivisible, num.to_string() + " / " + den.to_string());
  }
  std::vector<BigInt> rem(num.coeffs().begin(), num.coeffs().end());
  const std::size_t dn = den.size();
  const BigInt& lc = den.leading();
  std::vector<BigInt> q(rem.size() - dn + 1);
  for (std::size_t k = q.size(); k-- > 0;) {
    BigInt& top = rem[k + dn - 1];
    if (sgn(top) == 0) continue;
    if (!mpz_divisible_p(top.get_mpz_t(), lc.get_mpz_t())) {
      throw Error(ErrorKind::NotDivisible, num.to_string() + " / " + den.to_string());
    }
    mpz_divexact(q[k].get_mpz_t(), top.get_mpz_t(), lc.get_mpz_t());
    for (std::size_t j = 0; j < dn; ++j) {
      mpz_submul(rem[k + j].get_mpz_t(), q[k].get_mpz_t(), den.coeffs()[j].get_mpz_t());
    }
  }
  for (const auto& r : rem) {
    if (sgn(r) != 0) throw Error(ErrorKind::NotDivisible, num.to_string() + " / " + den.to_string());
  }
  return IntPoly(std::move(q));
}

IntPoly pseudo_remainder(const IntPoly& a, const IntPoly& b) {
  if (b.is_zero()) throw Error(ErrorKind::PreconditionViolated, "pseudo_remainder by zero polynomial");
  if (a.degree() < b.degree()) return a;
  std::vector<BigInt> r(a.coeffs().begin(), a.coeffs().end());
  const std::size_t bn = b.size();
  const BigInt& lc = b.leading();
  const long steps = a.degree() - b.degree() + 1;
  // Each step scales the whole remainder by lc(b) then cancels the top term,
  // which yields exactly lc(b)^steps * a mod b.
  for (long s = 0; s < steps; ++s) {
    const std::size_t top = r.size() - 1 - static_cast<std::size_t>(s);
    BigInt factor = r[top];
    for (auto& x : r) x *= lc;
    if (sgn(factor) != 0) {
      const std::size_t off = top + 1 - bn;
      for (std::size_t j = 0; j < bn; ++j) {
        mpz_submul(r[off + j].get_mpz_t(), factor.get_mpz_t(), b.coeffs()[j].get_mpz_t());
      }
    }
  }
  return IntPoly(std::move(r));
}

IntPoly primitive_gcd(const IntPoly& a, const IntPoly& b) {
  IntPoly x = a.primitive_part();
  IntPoly y = b.primitive_part();
  if (x.degree() < y.degree()) std::swap(x, y);
  while (!y.is_zero()) {
    IntPoly r = pseudo_remainder(x, y).primitive_part();
    x = std::move(y);
    y = std::move(r);
  }
  if (!x.is_zero() && sgn(x.leading()) < 0) x = -x;
  return x;
}

bool eisenstein_irreducible(const IntPoly& p, const BigInt& q) {
  if (p.degree() < 1) throw Error(ErrorKind::PreconditionViolated, "Eisenstein test needs degree >= 1");
  if (mpz_divisible_p(p.leading().get_mpz_t(), q.get_mpz_t())) return false;
  for (long i = 0; i < p.degree(); ++i) {
    if (!mpz_divisible_p(p.coeffs()[static_cast<std::size_t>(i)].get_mpz_t(), q.get_mpz_t())) return false;
  }
  BigInt q2 = q * q;
  return !mpz_divisible_p(p.coeffs()[0].get_mpz_t(), q2.get_mpz_t());
}

}  // namespace sternpoly
