#include "sternpoly/conjectures.hpp"

#include <algorithm>
#include <functional>

#include "displays.hpp"
#include "sternpoly/error.hpp"
#include "sternpoly/family.hpp"
#include "sternpoly/parallel.hpp"
#include "sternpoly/stern.hpp"
#include "sternpoly/sturm.hpp"

namespace sternpoly {
namespace {

using Cell = std::map<std::string, long>;
using CellFn = std::function<std::optional<ConjectureCell>(const Cell&)>;

IntPoly B(const BigInt& n) { return stern_poly(n); }

IntPoly p_poly(long k, long n) {
  return B(family_index({FamilyKind::P, static_cast<unsigned>(k)}, static_cast<unsigned>(n)));
}
IntPoly s_poly(long i, long n) {
  return B(family_index({FamilyKind::S, static_cast<unsigned>(i)}, static_cast<unsigned>(n)));
}

std::int64_t count(std::size_t v) { return static_cast<std::int64_t>(v); }

// Cartesian product over the named ranges, evaluated in parallel, cells kept
// in lexicographic parameter order. Cells mapped to nullopt are skipped.
ConjectureReport run_grid(std::string id, const ParamGrid& grid, unsigned workers, const CellFn& fn) {
  std::vector<Cell> cells{{}};
  for (const auto& [k, r] : grid) {
    std::vector<Cell> next;
    for (const auto& c : cells) {
      for (long x = r.lo; x <= r.hi; ++x) {
        Cell d = c;
        d[k] = x;
        next.push_back(std::move(d));
      }
    }
    cells = std::move(next);
  }
  auto results =
      parallel_map<std::optional<ConjectureCell>>(cells.size(), workers, [&](std::size_t i) { return fn(cells[i]); });
  ConjectureReport rep;
  rep.id = std::move(id);
  rep.grid = grid;
  std::size_t skipped = 0;
  for (std::size_t i = 0; i < results.size(); ++i) {
    if (!results[i]) {
      ++skipped;
      continue;
    }
    results[i]->params = cells[i];
    rep.cells.push_back(std::move(*results[i]));
  }
  if (skipped) rep.notes.push_back(std::to_string(skipped) + " grid cells outside the conjecture's domain skipped");
  return rep;
}

// Claimed c_k from Conjecture 1(1).
std::optional<long> claimed_threshold(long k) {
  if (k == 2) return 1;
  if (k % 2 == 0 && k >= 4 && k <= 32) return 3;
  if (k == 34) return 6;
  return std::nullopt;
}

void add_monotone(ConjectureCell& cell, const MonotoneObservation& m) {
  cell.observation.emplace_back("derivative_degree", std::int64_t{m.derivative_degree});
  cell.observation.emplace_back("derivative_odd_multiplicity_roots", count(m.derivative_odd_roots));
  cell.observation.emplace_back("leading_positive", m.leading_positive);
  cell.observation.emplace_back("increasing", m.increasing);
}

bool inconclusive(const std::string& verdict) { return verdict == "inconclusive"; }

}  // namespace

std::size_t ConjectureReport::consistent_count() const {
  return std::count_if(cells.begin(), cells.end(), [](const auto& c) { return c.consistent == true; });
}
std::size_t ConjectureReport::inconsistent_count() const {
  return std::count_if(cells.begin(), cells.end(), [](const auto& c) { return c.consistent == false; });
}
std::size_t ConjectureReport::inconclusive_count() const {
  return std::count_if(cells.begin(), cells.end(), [](const auto& c) { return !c.consistent.has_value(); });
}

MonotoneObservation observe_monotone(const IntPoly& p) {
  MonotoneObservation m;
  const IntPoly d = p.derivative();
  m.derivative_degree = d.degree();
  m.leading_positive = !p.is_zero() && sgn(p.leading()) > 0;
  m.derivative_odd_roots = d.is_zero() ? 0 : count_odd_multiplicity_real_roots(d);
  m.increasing = is_increasing(p);
  return m;
}

EisensteinVerdict eisenstein_either_way(const IntPoly& p, const BigInt& q) {
  if (eisenstein_irreducible(p, q)) return EisensteinVerdict::Direct;
  if (eisenstein_irreducible(p.reverse(), q)) return EisensteinVerdict::Reversed;
  return EisensteinVerdict::Inconclusive;
}

std::string to_string(EisensteinVerdict v) {
  switch (v) {
    case EisensteinVerdict::Direct: return "direct";
    case EisensteinVerdict::Reversed: return "reversed";
    case EisensteinVerdict::Inconclusive: return "inconclusive";
  }
  return "?";
}

std::string eisenstein_search(const IntPoly& p) {
  if (p.degree() == 1) return "linear";
  if (p.degree() < 1) return "inconclusive";
  for (long q : {2, 3, 5, 7}) {
    const auto v = eisenstein_either_way(p, BigInt(q));
    if (v != EisensteinVerdict::Inconclusive) return "q=" + std::to_string(q) + " " + to_string(v);
  }
  return "inconclusive";
}

ConjectureReport roots_grid(ParamRange k, ParamRange n, unsigned workers) {
  return run_grid("C1.1", {{"k", k}, {"n", n}}, workers, [](const Cell& c) -> std::optional<ConjectureCell> {
    const long K = c.at("k"), N = c.at("n");
    if (K < 2 || N < 1) return std::nullopt;
    const IntPoly v = p_poly(K, N);
    ConjectureCell cell;
    const auto roots = count_real_roots(v);
    cell.observation.emplace_back("degree", std::int64_t{v.degree()});
    cell.observation.emplace_back("real_roots", count(roots));
    if (auto ck = claimed_threshold(K)) {
      if (N >= *ck) cell.consistent = roots == 1;
      else if (K >= 4 && K <= 32 && N == 2) cell.consistent = roots == 2;
    }
    return cell;
  });
}

ConjectureReport monotone_grid(ParamRange k, ParamRange n, unsigned workers) {
  auto rep = run_grid("C1.1-monotone", {{"k", k}, {"n", n}}, workers, [](const Cell& c) -> std::optional<ConjectureCell> {
    const long K = c.at("k"), N = c.at("n");
    if (K < 2 || N < 1) return std::nullopt;
    const IntPoly v = p_poly(K, N);
    ConjectureCell cell;
    const auto m = observe_monotone(v);
    add_monotone(cell, m);
    const auto roots = count_real_roots(v);
    cell.observation.emplace_back("real_roots", count(roots));
    if (auto ck = claimed_threshold(K); ck && N >= *ck) cell.consistent = m.increasing;
    return cell;
  });
  return rep;
}

ConjectureReport bounded_roots(ParamRange k, ParamRange n, unsigned workers) {
  auto rep = run_grid("C1.2", {{"k", k}, {"n", n}}, workers, [](const Cell& c) -> std::optional<ConjectureCell> {
    const long K = c.at("k"), N = c.at("n");
    if (K < 3 || K % 2 == 0 || N < 1) return std::nullopt;
    ConjectureCell cell;
    cell.observation.emplace_back("real_roots", count(count_real_roots(p_poly(K, N))));
    return cell;
  });
  std::map<long, std::int64_t> running;
  for (auto& cell : rep.cells) {
    auto& mx = running[cell.params.at("k")];
    mx = std::max(mx, std::get<std::int64_t>(cell.observation.front().second));
    cell.observation.emplace_back("running_max", mx);
  }
  rep.notes.push_back("a uniform bound C_k cannot be observed on a finite grid; cells carry no verdict");
  return rep;
}

ConjectureReport reducibility_identity(ParamRange k, ParamRange n, unsigned workers) {
  if (k.lo < 3) throw Error(ErrorKind::PreconditionViolated, "reducibility identity needs k >= 3");
  auto rep = run_grid("C1.3", {{"k", k}, {"n", n}}, workers, [](const Cell& c) -> std::optional<ConjectureCell> {
    const long K = c.at("k"), N = c.at("n");
    if (N < 1) return std::nullopt;
    ConjectureCell cell;
    const IntPoly v = p_poly(K, N);
    if (N != K - 1) {
      const std::string verdict = eisenstein_search(v);
      cell.observation.emplace_back("eisenstein", verdict);
      if (!inconclusive(verdict)) cell.consistent = true;
      return cell;
    }
    const IntPoly f1 = IntPoly{1} + BigInt(2) * (displays::t_pow(1) * displays::geo(K - 2));
    const IntPoly f2 = p_poly(2, K - 2) + BigInt(2) * (displays::t_pow(K - 2) * IntPoly{1, 1});
    const IntPoly product = f1 * f2;
    const bool holds = product == v;
    const BigInt index = family_index({FamilyKind::P, static_cast<unsigned>(K)}, static_cast<unsigned>(N));
    const auto e1 = eisenstein_either_way(f1, BigInt(2));
    const auto e2 = eisenstein_either_way(f2, BigInt(2));
    cell.observation.emplace_back("identity_holds", holds);
    cell.observation.emplace_back("product_at_2_equals_index", product.eval(BigInt(2)) == index);
    cell.observation.emplace_back("factor1", f1.to_string());
    cell.observation.emplace_back("factor2", f2.to_string());
    cell.observation.emplace_back("factor1_eisenstein_q2", to_string(e1));
    cell.observation.emplace_back("factor2_eisenstein_q2", to_string(e2));
    if (!holds) cell.consistent = false;
    else if (e1 != EisensteinVerdict::Inconclusive && e2 != EisensteinVerdict::Inconclusive) cell.consistent = true;
    return cell;
  });
  rep.notes.push_back("B_{2,k-2} read as V_{2,k-2} = B_{p_{2,k-2}}");
  rep.notes.push_back("irreducibility beyond Eisenstein is not tested; such cells are inconclusive");
  return rep;
}

ConjectureReport s1_factorizations(ParamRange n, unsigned workers) {
  if (n.lo < 1) throw Error(ErrorKind::PreconditionViolated, "s1 factorizations need n >= 1");
  auto rep = run_grid("S1F", {{"n", n}}, workers, [](const Cell& c) -> std::optional<ConjectureCell> {
    const long N = c.at("n");
    const IntPoly t1{1, 1};
    const IntPoly even = s_poly(1, 2 * N);
    const IntPoly odd = s_poly(1, 2 * N + 1);
    const bool even_ok = t1 * displays::s1_even_first(N) * displays::s1_even_second(N) == even;
    const bool odd_ok = t1 * displays::s1_odd_first_printed(N) * displays::s1_odd_second(N) == odd;
    const bool alt_ok = t1 * displays::s1_odd_first_alternate(N) * displays::s1_odd_second(N) == odd;
    ConjectureCell cell;
    cell.observation.emplace_back("even_holds", even_ok);
    cell.observation.emplace_back("odd_printed_holds", odd_ok);
    cell.observation.emplace_back("odd_alternate_first_factor_holds", alt_ok);
    cell.consistent = even_ok && odd_ok;
    return cell;
  });
  rep.notes.push_back("(t^{2(n-1)}-1)/(t^2-1) expanded as the even-power geometric sum");
  return rep;
}

ConjectureReport s_roots(ParamRange i, ParamRange n, unsigned workers) {
  return run_grid("C2.1", {{"i", i}, {"n", n}}, workers, [](const Cell& c) -> std::optional<ConjectureCell> {
    const long I = c.at("i"), N = c.at("n");
    if (I < 0 || I > 3 || I == 1 || N < 1) return std::nullopt;
    ConjectureCell cell;
    const auto roots = count_real_roots(s_poly(I, N));
    cell.observation.emplace_back("real_roots", count(roots));
    if (N >= 2) cell.consistent = roots == 1;
    return cell;
  });
}

ConjectureReport s1_roots(ParamRange n, unsigned workers) {
  return run_grid("C2.3", {{"n", n}}, workers, [](const Cell& c) -> std::optional<ConjectureCell> {
    const long N = c.at("n");
    if (N < 1) return std::nullopt;
    ConjectureCell cell;
    const auto roots = count_real_roots(s_poly(1, N));
    cell.observation.emplace_back("real_roots", count(roots));
    if (N >= 3) cell.consistent = roots == 3;
    return cell;
  });
}

ConjectureReport s_quotient_irreducibility(ParamRange i, ParamRange n, unsigned workers) {
  return run_grid("C2.2", {{"i", i}, {"n", n}}, workers, [](const Cell& c) -> std::optional<ConjectureCell> {
    const long I = c.at("i"), N = c.at("n");
    if (I < 0 || I > 3 || I == 1 || N < 1) return std::nullopt;
    ConjectureCell cell;
    const IntPoly q = divide_exact(s_poly(I, N), IntPoly{1, 1});
    const std::string verdict = eisenstein_search(q);
    cell.observation.emplace_back("quotient_degree", std::int64_t{q.degree()});
    cell.observation.emplace_back("eisenstein", verdict);
    if (!inconclusive(verdict)) cell.consistent = true;
    return cell;
  });
}

ConjectureReport s1_factor_irreducibility(ParamRange n, unsigned workers) {
  auto rep = run_grid("C2.4", {{"n", n}}, workers, [](const Cell& c) -> std::optional<ConjectureCell> {
    const long N = c.at("n");
    if (N < 2) return std::nullopt;
    const long h = N / 2;
    IntPoly f1, f2;
    if (N % 2 == 0) {
      f1 = displays::s1_even_first(h);
      f2 = displays::s1_even_second(h);
    } else {
      f1 = displays::s1_odd_first_alternate(h);
      f2 = displays::s1_odd_second(h);
    }
    ConjectureCell cell;
    const bool holds = IntPoly{1, 1} * f1 * f2 == s_poly(1, N);
    const std::string v1 = eisenstein_search(f1);
    const std::string v2 = eisenstein_search(f2);
    cell.observation.emplace_back("factorization_holds", holds);
    cell.observation.emplace_back("factor1_eisenstein", v1);
    cell.observation.emplace_back("factor2_eisenstein", v2);
    if (holds && !inconclusive(v1) && !inconclusive(v2)) cell.consistent = true;
    return cell;
  });
  rep.notes.push_back("odd n use the alternate first factor; the printed one does not reproduce B_{s_{1,2m+1}}");
  rep.notes.push_back("irreducibility beyond Eisenstein is not tested; such cells are inconclusive");
  return rep;
}

ConjectureReport s0_monotone(ParamRange n, unsigned workers) {
  return run_grid("C2.5", {{"n", n}}, workers, [](const Cell& c) -> std::optional<ConjectureCell> {
    const long N = c.at("n");
    if (N < 1) return std::nullopt;
    ConjectureCell cell;
    const auto m = observe_monotone(s_poly(0, N));
    add_monotone(cell, m);
    cell.consistent = m.increasing;
    return cell;
  });
}

ConjectureReport divisibility_by_t_plus_1(std::uint64_t bound) {
  if (bound < 3) throw Error(ErrorKind::PreconditionViolated, "NEG1 needs bound >= 3");
  std::vector<std::int64_t> b(bound + 2);
  b[1] = 1;
  for (std::uint64_t n = 2; n <= bound; ++n) {
    b[n] = n % 2 == 0 ? -b[n / 2] : b[n / 2] + b[n / 2 + 1];
  }
  ConjectureReport rep;
  rep.id = "NEG1";
  rep.grid = {{"bound", {static_cast<long>(bound), static_cast<long>(bound)}}};
  for (long residue = 0; residue < 3; ++residue) {
    std::int64_t checked = 0, zeros = 0;
    std::optional<std::uint64_t> first_bad;
    for (std::uint64_t n = static_cast<std::uint64_t>(residue); n <= bound; n += 3) {
      ++checked;
      const bool zero = b[n] == 0;
      zeros += zero;
      if (zero != (residue == 0) && !first_bad) first_bad = n;
    }
    ConjectureCell cell;
    cell.params = {{"residue", residue}};
    cell.observation.emplace_back("checked", checked);
    cell.observation.emplace_back("zeros_at_minus_one", zeros);
    if (first_bad) cell.observation.emplace_back("first_counterexample", static_cast<std::int64_t>(*first_bad));
    cell.consistent = !first_bad.has_value();
    rep.cells.push_back(std::move(cell));
  }
  return rep;
}

ConjectureReport h_no_real_roots(ParamRange n, unsigned workers) {
  return run_grid("C3", {{"n", n}}, workers, [](const Cell& c) -> std::optional<ConjectureCell> {
    const long N = c.at("n");
    if (N < 0) return std::nullopt;
    ConjectureCell cell;
    const IntPoly v = B(h_index(BigInt(N)));
    const auto roots = count_real_roots(v);
    cell.observation.emplace_back("degree", std::int64_t{v.degree()});
    cell.observation.emplace_back("real_roots", count(roots));
    cell.consistent = roots == 0;
    return cell;
  });
}

ConjectureReport h_no_real_roots(unsigned n_max, unsigned workers) {
  return h_no_real_roots(ParamRange{0, static_cast<long>(n_max)}, workers);
}

namespace {

using Runner = std::function<ConjectureReport(const ParamGrid&, unsigned)>;

struct RegisteredConjecture {
  ConjectureInfo info;
  Runner run;
};

const std::vector<RegisteredConjecture>& conjecture_registry() {
  static const std::vector<RegisteredConjecture> reg = [] {
    std::vector<RegisteredConjecture> v;
    auto add = [&](std::string id, std::string summary, ParamGrid defaults, Runner fn) {
      v.push_back({{std::move(id), std::move(summary), std::move(defaults)}, std::move(fn)});
    };
    add("C1.1", "real roots of B_{p_{k,n}}; one root for even k, n >= c_k", {{"k", {2, 10}}, {"n", {1, 20}}},
        [](const ParamGrid& g, unsigned w) { return roots_grid(g.at("k"), g.at("n"), w); });
    add("C1.1-monotone", "B_{p_{k,n}} increasing for even k, n >= c_k", {{"k", {2, 10}}, {"n", {1, 20}}},
        [](const ParamGrid& g, unsigned w) { return monotone_grid(g.at("k"), g.at("n"), w); });
    add("C1.2", "real roots of B_{p_{k,n}} bounded for odd k", {{"k", {3, 9}}, {"n", {1, 20}}},
        [](const ParamGrid& g, unsigned w) { return bounded_roots(g.at("k"), g.at("n"), w); });
    add("C1.3", "B_{p_{k,n}} reducible iff n = k-1; factor identity", {{"k", {3, 10}}, {"n", {1, 12}}},
        [](const ParamGrid& g, unsigned w) { return reducibility_identity(g.at("k"), g.at("n"), w); });
    add("C2.1", "B_{s_{i,n}} has one real root, i = 0,2,3, n >= 2", {{"i", {0, 3}}, {"n", {1, 20}}},
        [](const ParamGrid& g, unsigned w) { return s_roots(g.at("i"), g.at("n"), w); });
    add("C2.2", "B_{s_{i,n}}/(t+1) irreducible, i = 0,2,3", {{"i", {0, 3}}, {"n", {1, 20}}},
        [](const ParamGrid& g, unsigned w) { return s_quotient_irreducibility(g.at("i"), g.at("n"), w); });
    add("C2.3", "B_{s_{1,n}} has three real roots, n >= 3", {{"n", {1, 20}}},
        [](const ParamGrid& g, unsigned w) { return s1_roots(g.at("n"), w); });
    add("C2.4", "factors of B_{s_{1,n}} irreducible", {{"n", {2, 20}}},
        [](const ParamGrid& g, unsigned w) { return s1_factor_irreducibility(g.at("n"), w); });
    add("C2.5", "B_{s_{0,n}} increasing", {{"n", {1, 20}}},
        [](const ParamGrid& g, unsigned w) { return s0_monotone(g.at("n"), w); });
    add("C3", "B_{h_n} has no real roots", {{"n", {0, 10}}},
        [](const ParamGrid& g, unsigned w) { return h_no_real_roots(g.at("n"), w); });
    add("NEG1", "B_n(-1) = 0 iff 3 | n", {{"bound", {10000, 10000}}}, [](const ParamGrid& g, unsigned) {
      const long b = g.at("bound").hi;
      if (b < 0) throw Error(ErrorKind::PreconditionViolated, "NEG1 needs bound >= 3");
      return divisibility_by_t_plus_1(static_cast<std::uint64_t>(b));
    });
    add("S1F", "displayed factorizations of B_{s_{1,2n}}, B_{s_{1,2n+1}}", {{"n", {1, 12}}},
        [](const ParamGrid& g, unsigned w) { return s1_factorizations(g.at("n"), w); });
    return v;
  }();
  return reg;
}

}  // namespace

const std::vector<ConjectureInfo>& conjecture_catalog() {
  static const std::vector<ConjectureInfo> cat = [] {
    std::vector<ConjectureInfo> v;
    for (const auto& r : conjecture_registry()) v.push_back(r.info);
    return v;
  }();
  return cat;
}

ConjectureReport run_conjecture(std::string_view id, const ParamGrid& grid, unsigned workers) {
  for (const auto& r : conjecture_registry()) {
    if (r.info.id != id) continue;
    ParamGrid full = r.info.defaults;
    for (const auto& [k, range] : grid) {
      if (!full.count(k)) throw Error(ErrorKind::ParseError, "conjecture '" + std::string(id) + "' has no parameter '" + k + "'");
      full[k] = range;
    }
    return r.run(full, workers);
  }
  throw Error(ErrorKind::ParseError, "unknown conjecture '" + std::string(id) + "'");
}

}  // namespace sternpoly
