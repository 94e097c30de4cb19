#include "sternpoly/sturm.hpp"

#include "sternpoly/error.hpp"

namespace sternpoly {
namespace {

int sign_at_pos_inf(const IntPoly& p) { return sgn(p.leading()); }

int sign_at_neg_inf(const IntPoly& p) {
  int s = sgn(p.leading());
  return (p.degree() % 2 == 0) ? s : -s;
}

template <typename SignFn>
std::size_t variations(const std::vector<IntPoly>& chain, SignFn sign) {
  std::size_t v = 0;
  int prev = 0;
  for (const auto& q : chain) {
    int s = sign(q);
    if (s == 0) continue;
    if (prev != 0 && s != prev) ++v;
    prev = s;
  }
  return v;
}

}  // namespace

SturmChain::SturmChain(const IntPoly& p) {
  if (p.is_zero()) throw Error(ErrorKind::ZeroPolynomial, "Sturm chain of zero polynomial");
  chain_.push_back(p.primitive_part());
  IntPoly d = p.derivative();
  if (d.is_zero()) return;
  chain_.push_back(d.primitive_part());
  for (;;) {
    const IntPoly& a = chain_[chain_.size() - 2];
    const IntPoly& b = chain_.back();
    IntPoly r = pseudo_remainder(a, b);
    if (r.is_zero()) break;
    // prem = lc(b)^(delta+1) * rem; undo a negative scale factor so the
    // entry keeps the sign of -rem(a, b).
    const long delta = a.degree() - b.degree();
    const bool negative_scale = sgn(b.leading()) < 0 && (delta + 1) % 2 == 1;
    if (!negative_scale) r = -r;
    chain_.push_back(r.primitive_part());
  }
}

std::size_t SturmChain::variations_at_neg_inf() const { return variations(chain_, sign_at_neg_inf); }

std::size_t SturmChain::variations_at_pos_inf() const { return variations(chain_, sign_at_pos_inf); }

std::size_t count_real_roots(const IntPoly& p) { return SturmChain(p).distinct_real_roots(); }

std::size_t count_odd_multiplicity_real_roots(const IntPoly& p) {
  if (p.is_zero()) throw Error(ErrorKind::ZeroPolynomial, "root count of zero polynomial");
  // levels[j] holds roots of multiplicity > j; roots of multiplicity exactly
  // j number levels[j-1] - levels[j].
  std::vector<std::size_t> levels;
  IntPoly g = p;
  while (g.degree() >= 1) {
    levels.push_back(count_real_roots(g));
    g = primitive_gcd(g, g.derivative());
  }
  levels.push_back(0);
  std::size_t odd = 0;
  for (std::size_t j = 1; j < levels.size(); j += 2) odd += levels[j - 1] - levels[j];
  return odd;
}

bool is_increasing(const IntPoly& p) {
  if (p.degree() < 1 || sgn(p.leading()) <= 0) return false;
  IntPoly d = p.derivative();
  if (d.degree() < 1) return true;
  return count_odd_multiplicity_real_roots(d) == 0;
}

}  // namespace sternpoly
