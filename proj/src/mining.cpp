#include "sternpoly/mining.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <tuple>

#include "sternpoly/error.hpp"

namespace sternpoly {

namespace {

using Wide = __int128;

// Triples scaled by 6: (P, Q, U) = 6 * (p, q, u) is always integral.
using Key = std::tuple<Wide, Wide, Wide>;

mpz_class to_mpz(Wide v) {
  const bool neg = v < 0;
  unsigned __int128 a = neg ? -static_cast<unsigned __int128>(v) : static_cast<unsigned __int128>(v);
  mpz_class hi(static_cast<unsigned long>(a >> 64));
  mpz_class lo(static_cast<unsigned long>(a & 0xFFFFFFFFFFFFFFFFULL));
  mpz_class r = (hi << 64) + lo;
  return neg ? mpz_class(-r) : r;
}

std::optional<Key> solve_scaled(std::uint64_t a, std::uint64_t b, std::uint64_t c, std::uint64_t d) {
  const Wide d1 = Wide(b) - Wide(a);
  const Wide d2 = Wide(c) - Wide(b);
  const Wide P = d2 - 2 * d1;
  const Wide Q = 6 * d1 - 3 * P;
  const Wide U = 6 * Wide(a) - P - Q;
  if (6 * Wide(d) != 64 * P + 8 * Q + U) return std::nullopt;
  return Key{P, Q, U};
}

AffineTriple from_key(const Key& k) {
  AffineTriple t{mpq_class(to_mpz(std::get<0>(k)), 6), mpq_class(to_mpz(std::get<1>(k)), 6),
                 mpq_class(to_mpz(std::get<2>(k)), 6)};
  t.p.canonicalize();
  t.q.canonicalize();
  t.u.canonicalize();
  return t;
}

void validate(MinedFamily& fam, const CongruenceSpec& spec, unsigned depth) {
  for (unsigned n = 4; n < 4 + depth; ++n) {
    const mpq_class v = fam.triple.value(n);
    std::string why;
    if (v.get_den() != 1) {
      why = "non-integer";
    } else if (sgn(v) <= 0) {
      why = "non-positive";
    } else if (mpz_even_p(v.get_num_mpz_t())) {
      why = "even";
    } else if (!is_solution(SternIndex(v.get_num()), spec)) {
      why = "not a solution";
    }
    if (!why.empty()) {
      fam.validated = false;
      fam.failed_at = n;
      fam.failed_value = v;
      fam.failure = why;
      return;
    }
  }
}

}  // namespace

mpq_class AffineTriple::value(unsigned n) const {
  mpz_class two_n = mpz_class(1) << n;
  mpq_class r = p * mpq_class(two_n * two_n) + q * mpq_class(two_n) + u;
  r.canonicalize();
  return r;
}

std::string AffineTriple::to_string() const {
  return "(" + p.get_str() + ", " + q.get_str() + ", " + u.get_str() + ")";
}

std::optional<AffineTriple> solve_quadruple(const std::array<std::uint64_t, 4>& v) {
  auto k = solve_scaled(v[0], v[1], v[2], v[3]);
  if (!k) return std::nullopt;
  return from_key(*k);
}

std::size_t MiningReport::validated_count() const {
  return static_cast<std::size_t>(
      std::count_if(families.begin(), families.end(), [](const MinedFamily& f) { return f.validated; }));
}

const MinedFamily* MiningReport::find(const AffineTriple& t) const {
  for (const auto& f : families) {
    if (f.triple == t) return &f;
  }
  return nullptr;
}

MiningReport mine_affine_families(std::span<const std::uint64_t> solutions, const CongruenceSpec& spec,
                                  unsigned depth) {
  spec.validate();
  std::vector<std::uint64_t> v(solutions.begin(), solutions.end());
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  if (v.size() < 4) {
    throw Error(ErrorKind::TooFewSolutions,
                "mining needs at least 4 distinct solutions, got " + std::to_string(v.size()));
  }

  MiningReport report;
  report.spec = spec;
  report.input_size = v.size();
  report.depth = depth;

  std::map<Key, std::array<std::uint64_t, 4>> kept;
  std::set<Key> all;
  const std::size_t n = v.size();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      for (std::size_t k = j + 1; k < n; ++k) {
        for (std::size_t l = k + 1; l < n; ++l) {
          ++report.quadruples;
          auto key = solve_scaled(v[i], v[j], v[k], v[l]);
          if (!key) continue;
          all.insert(*key);
          if (std::get<0>(*key) > 0) kept.emplace(*key, std::array<std::uint64_t, 4>{v[i], v[j], v[k], v[l]});
        }
      }
    }
  }
  report.consistent_triples = all.size();
  for (const auto& [key, quad] : kept) {
    MinedFamily fam;
    fam.triple = from_key(key);
    fam.quadruple = quad;
    validate(fam, spec, depth);
    report.families.push_back(std::move(fam));
  }
  return report;
}

}  // namespace sternpoly
