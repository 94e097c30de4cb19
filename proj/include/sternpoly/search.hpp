#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "sternpoly/family.hpp"
#include "sternpoly/stern.hpp"

namespace sternpoly {

/// Target congruence B_n(t) = 1 + r(t + ... + t^{e(n)}) (mod m).
struct CongruenceSpec {
  std::uint32_t r = 0;
  std::uint32_t m = 2;

  /// Throws BadModulus / PreconditionViolated unless 2 <= m <= 65535, r < m.
  void validate() const;
  friend bool operator==(const CongruenceSpec&, const CongruenceSpec&) = default;
};

inline constexpr std::uint64_t kDefaultSearchCap = std::uint64_t{1} << 34;
inline constexpr unsigned kDefaultSplitDepth = 10;

/// Smallest index counted by enumerate_solutions and pi. n = 1 satisfies the
/// congruence vacuously (e(1) = 0) but is not counted: published counts of
/// Pi_{0,2}(2^15) = 97 and Pi_{1,2}(2^15) = 82 hold only without it.
inline constexpr std::uint64_t kFirstCountedIndex = 3;

struct SearchOptions {
  std::uint64_t cap = kDefaultSearchCap;
  unsigned workers = 1;
  /// Index tree is cut at this depth into 2^depth independent subtrees.
  unsigned split_depth = kDefaultSplitDepth;
  /// When set, progress is persisted here and an existing file is resumed.
  std::optional<std::filesystem::path> checkpoint;
  /// Minimum number of visited nodes between checkpoint writes.
  std::uint64_t checkpoint_every = std::uint64_t{1} << 22;
};

struct SearchReport {
  CongruenceSpec spec;
  std::uint64_t bound = 0;
  std::vector<std::uint64_t> solutions;  // odd, strictly increasing, <= bound
  std::uint64_t count = 0;
  std::set<FamilyId> exclusions;
  /// Calibration metadata: whether n = 1 is part of the counted range.
  bool counts_index_one = false;
  /// Subtrees restored from a checkpoint rather than searched in this run.
  std::size_t resumed_subtrees = 0;
};

/// Exact test of the congruence for odd n >= 1 using modular pair arithmetic
/// and the exact degree recursion. n = 1 is a (vacuous) solution. Throws
/// EvenIndex for even n.
bool is_solution(const SternIndex& n, const CongruenceSpec& spec);
bool is_solution(std::uint64_t n, const CongruenceSpec& spec);

/// All counted odd solutions n <= bound that are not members of any excluded
/// family, in increasing order. Depth-first over the index tree carrying
/// (B_k mod m, B_{k+1} mod m) and their exact degrees, one polynomial
/// operation per edge. Results do not depend on options.workers.
SearchReport enumerate_solutions(std::uint64_t bound, const CongruenceSpec& spec,
                                 const std::set<FamilyId>& exclusions = {}, const SearchOptions& options = {});

/// Pi_{r,m}(x): counted solutions <= x, no exclusions.
std::uint64_t pi(const CongruenceSpec& spec, std::uint64_t x, const SearchOptions& options = {});

/// Evenly spaced sample points from x_min to x_max inclusive (deduplicated).
std::vector<std::uint64_t> sample_points(std::uint64_t x_min, std::uint64_t x_max, std::size_t samples);

/// (x, Pi(x)) at each sample point in [2, x_max], from a single sweep.
std::vector<std::pair<std::uint64_t, std::uint64_t>> pi_curve(const CongruenceSpec& spec, std::uint64_t x_max,
                                                              std::size_t samples, const SearchOptions& options = {});

enum class CurveSeries { Pi02, Pi12, Ratio, Norm02, Norm12 };

std::string to_string(CurveSeries s);
CurveSeries parse_series(std::string_view name);

struct CurvePoint {
  std::uint64_t x;
  double value;
};

/// Pi_{0,2}, Pi_{1,2}, their ratio (x >= 5) or Pi_{r,2}/(log2 x)^2 (x >= 2).
std::vector<CurvePoint> series_curve(CurveSeries series, std::uint64_t x_max, std::size_t samples,
                                     const SearchOptions& options = {});

}  // namespace sternpoly
