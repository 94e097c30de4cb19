#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "sternpoly/family.hpp"
#include "sternpoly/int_poly.hpp"

namespace sternpoly {

struct Counterexample {
  std::string description;
  std::string lhs;
  std::string rhs;
};

/// Outcome of checking one identity over a parameter range. A failing report
/// always carries the first counterexample found.
struct IdentityReport {
  std::string identity;
  std::string range;
  bool pass = true;
  std::uint64_t cases = 0;
  std::optional<Counterexample> counterexample;
  std::vector<std::string> notes;

  /// Records one checked case; the first failure becomes the counterexample.
  void check(bool ok, std::string_view description, std::string_view lhs, std::string_view rhs);
  void check_equal(std::string_view description, const IntPoly& lhs, const IntPoly& rhs);
  void check_equal(std::string_view description, const BigInt& lhs, const BigInt& rhs);
  /// Appends another report's cases; keeps the earliest counterexample.
  void merge(const IdentityReport& other);
};

// Single-cell verifiers. Each throws PreconditionViolated outside its domain.

/// Both Schinzel identities for B_{m 2^a + r} and B_{m 2^a - r} (0 <= r <= 2^a;
/// the second needs m >= 1).
IdentityReport verify_lemma1(unsigned a, unsigned m, unsigned r);
/// Closed forms of B_{2^n - 1}, B_{2^n - 3}, B_{2^n - 5}, B_{2^n - 9}, each for
/// the n where it is defined (n >= 1, 2, 3, 4).
IdentityReport verify_lemma2(unsigned n);
/// B_{2^n - k} = B_k (t^{n-m} - 1)/(t - 1) - B_l t^{n-m}, k = 2^m + l odd.
IdentityReport verify_dkt(unsigned n, unsigned k);
/// p_{k,n} solves (0,2); the proof's two product decompositions; the degree law.
IdentityReport verify_p_theorem(unsigned k, unsigned n);
/// Displayed expansions of V_{2,n} and V_{3,n} (the latter with the inner sum
/// read as 2 t^n sum_{i=2}^{n-1} (3n - 3i - 2) t^i).
IdentityReport verify_V_explicit(unsigned k, unsigned n);
/// V_{k+1,n} = (t+1) V_{k,n} - t V_{k-1,n}.
IdentityReport verify_V_recurrence(unsigned k, unsigned n);
/// Coefficient recurrence, its closed form, the c_{j,3} - c_{j,2} table and
/// the degree formula e_{k,n}.
IdentityReport verify_c_machinery(unsigned k, unsigned n);
/// s_{i,n} solves (1,2); for i = 0 also the rational closed form, the Lemma 1
/// decomposition, the degree, the explicit expansion (middle coefficients
/// 4i+3), the base case and the link to B_{p_{2,n}}. For every i, 3 | s_{i,n}.
IdentityReport verify_s_theorem(unsigned i, unsigned n);
/// p_{k,n} pairwise distinct for 2 <= k <= K, 1 <= n <= N.
IdentityReport verify_p_injectivity(unsigned K, unsigned N);
/// Number of distinct p_{k,n} (k >= 2, n >= 1) strictly below `bound`.
std::uint64_t count_p_values_below(const BigInt& bound);
/// Jacobsthal recurrences, the binomial closed form and s_{alpha_n} = F_n.
IdentityReport verify_alpha(unsigned n);
/// B_{h_n} as a quadratic form in B_{alpha_{2n}}, B_{alpha_{2n}+1} and, after
/// substituting B_{alpha_{2n}+1} = B_{alpha_{2n+2}} - (t+1)B_{alpha_{2n}}, in
/// B_{alpha_{2n}}, B_{alpha_{2n+2}}; for n >= 3 the W recurrence from computed
/// initials.
IdentityReport verify_h_machinery(unsigned n);
/// B_{H_n} = 1 (mod 3t(t+1)).
IdentityReport verify_theorem3(unsigned n);
/// B_{2^{n+1}-1} and B_{2^{n+2}-3} closed forms and their congruences mod m.
IdentityReport verify_trivial_families(unsigned n, unsigned m);
/// max{s_j : 0 <= j <= 2^{n-1}} is attained at alpha_n and beta_n.
IdentityReport verify_beta_max(unsigned n);

/// Inclusive integer range for one named parameter.
struct ParamRange {
  long lo = 0;
  long hi = 0;
};
using ParamGrid = std::map<std::string, ParamRange>;

/// Parses "k=2..10,n=1..40" (a single value "n=5" is the range 5..5).
ParamGrid parse_param_grid(std::string_view text);
std::string to_string(const ParamGrid& grid);

struct IdentityInfo {
  std::string name;
  std::string summary;
  /// Parameters with the default sweep used when a range is not given.
  ParamGrid defaults;
};

/// Registered identities: lemma1, lemma1-random, lemma2, dkt, p-theorem,
/// V-explicit, V-recurrence, c-machinery, s-theorem, p-injectivity, alpha,
/// h-machinery, theorem3, trivial-families, beta-max.
const std::vector<IdentityInfo>& identity_catalog();

/// Runs an identity over the grid (missing parameters take their defaults),
/// cells in parallel, merged in parameter order. Unknown names or parameters
/// throw ParseError; cells outside an identity's domain are skipped and
/// counted in the notes.
IdentityReport run_identity(std::string_view name, const ParamGrid& grid = {}, unsigned workers = 1);

/// A discrepancy in the printed formulas, with machine-checked evidence.
struct TypoEntry {
  std::string id;
  std::string description;
  bool flagged = false;
  std::vector<std::string> evidence;
};

/// Entries: abstract-recurrence, W-initial-values, V3-index-collision,
/// F-quadratic-form, s0-explicit-expansion, s1-odd-first-factor, table5-205.
std::vector<TypoEntry> typo_ledger();

}  // namespace sternpoly
