#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "sternpoly/identities.hpp"

namespace sternpoly {

/// Raw observed datum: a count, a flag or a polynomial/text.
using ObservedValue = std::variant<std::int64_t, bool, std::string>;

struct ConjectureCell {
  std::map<std::string, long> params;
  /// Ordered (name, value) pairs.
  std::vector<std::pair<std::string, ObservedValue>> observation;
  /// true/false when the conjecture makes a claim about this cell and the
  /// observation agrees/disagrees; empty when it makes none or the available
  /// test is inconclusive.
  std::optional<bool> consistent;
};

struct ConjectureReport {
  std::string id;
  ParamGrid grid;
  std::vector<ConjectureCell> cells;
  std::vector<std::string> notes;

  std::size_t consistent_count() const;
  std::size_t inconsistent_count() const;
  std::size_t inconclusive_count() const;
};

/// Observation helpers on a single polynomial.
struct MonotoneObservation {
  long derivative_degree = 0;
  std::size_t derivative_odd_roots = 0;
  bool leading_positive = false;
  bool increasing = false;
};
MonotoneObservation observe_monotone(const IntPoly& p);

/// Eisenstein at q on p, then on its reverse.
enum class EisensteinVerdict { Direct, Reversed, Inconclusive };
EisensteinVerdict eisenstein_either_way(const IntPoly& p, const BigInt& q);
std::string to_string(EisensteinVerdict v);

/// First prime q in 2, 3, 5, 7 for which eisenstein_either_way succeeds, as
/// "q=3 reversed"; "inconclusive" if none. Degree-1 polynomials are reported
/// "linear".
std::string eisenstein_search(const IntPoly& p);

/// C1.1: N_k(n) = number of real roots of B_{p_{k,n}}, with the claimed
/// thresholds c_2 = 1, c_{2i} = 3 (2 <= i <= 16, two roots at n = 2),
/// c_34 = 6. Odd k cells are recorded without a claim.
ConjectureReport roots_grid(ParamRange k, ParamRange n, unsigned workers = 1);
/// C1.1 monotonicity of B_{p_{k,n}} under the same thresholds.
ConjectureReport monotone_grid(ParamRange k, ParamRange n, unsigned workers = 1);
/// C1.2: N_k(n) for odd k with the running maximum over n.
ConjectureReport bounded_roots(ParamRange k, ParamRange n, unsigned workers = 1);
/// C1.3: the product identity for B_{p_{k,k-1}} (B_{2,k-2} read as
/// V_{2,k-2} = B_{p_{2,k-2}}), Eisenstein at 2 on both factors, and
/// Eisenstein on B_{p_{k,n}} for n != k - 1. Throws PreconditionViolated
/// for k < 3.
ConjectureReport reducibility_identity(ParamRange k, ParamRange n, unsigned workers = 1);
/// Both displayed B_{s_{1,*}} factorizations at parameter n (indices 2n and
/// 2n+1); the odd one also with the alternate first factor
/// 1 + 2t^2 + 4t(t^{2n}-1)/(t-1) + t^{2n+1}(t+2). Throws PreconditionViolated
/// for n = 0.
ConjectureReport s1_factorizations(ParamRange n, unsigned workers = 1);
/// C2.1: real roots of B_{s_{i,n}}, i = 0,2,3 (one claimed for n >= 2);
/// i = 1 cells are skipped.
ConjectureReport s_roots(ParamRange i, ParamRange n, unsigned workers = 1);
/// C2.3: real roots of B_{s_{1,n}} (three claimed for n >= 3).
ConjectureReport s1_roots(ParamRange n, unsigned workers = 1);
/// C2.2: Eisenstein (q in 2, 3, 5, 7, either direction) on B_{s_{i,n}}/(t+1),
/// i = 0,2,3.
ConjectureReport s_quotient_irreducibility(ParamRange i, ParamRange n, unsigned workers = 1);
/// C2.4: the same test on the two non-linear factors of B_{s_{1,n}}, n >= 2
/// (odd n with the alternate first factor, see s1_factorizations).
ConjectureReport s1_factor_irreducibility(ParamRange n, unsigned workers = 1);
/// C2.5: B_{s_{0,n}} increasing.
ConjectureReport s0_monotone(ParamRange n, unsigned workers = 1);
/// NEG1: B_n(-1) = 0 iff 3 | n for 0 <= n <= bound, one cell per residue
/// class mod 3. B_n(-1) comes from the integer recurrence b_{2n} = -b_n,
/// b_{2n+1} = b_n + b_{n+1}. Throws PreconditionViolated for bound < 3.
ConjectureReport divisibility_by_t_plus_1(std::uint64_t bound);
/// C3: number of real roots of B_{h_n}, 0 <= n <= n_max.
ConjectureReport h_no_real_roots(unsigned n_max, unsigned workers = 1);
ConjectureReport h_no_real_roots(ParamRange n, unsigned workers = 1);

struct ConjectureInfo {
  std::string id;
  std::string summary;
  ParamGrid defaults;
};

/// C1.1, C1.1-monotone, C1.2, C1.3, C2.1, C2.2, C2.3, C2.4, C2.5, C3, NEG1, S1F.
const std::vector<ConjectureInfo>& conjecture_catalog();

/// Dispatches by id; missing grid parameters take their defaults. Unknown ids
/// or parameters throw ParseError.
ConjectureReport run_conjecture(std::string_view id, const ParamGrid& grid = {}, unsigned workers = 1);

}  // namespace sternpoly
