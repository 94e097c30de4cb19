#include "sternpoly/search.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <mutex>

#include "sternpoly/checkpoint.hpp"
#include "sternpoly/error.hpp"
#include "sternpoly/mod_poly.hpp"
#include "sternpoly/parallel.hpp"

namespace sternpoly {

void CongruenceSpec::validate() const {
  check_modulus(m);
  if (r >= m) {
    throw Error(ErrorKind::PreconditionViolated,
                "residue r=" + std::to_string(r) + " must be below m=" + std::to_string(m));
  }
}

namespace {

// 64-bit fast path. B_k has degree < 64 for every k < 2^64, so a fixed array
// of residues covers every index the search can reach. Entries above the
// exact degree are unspecified and never read.
constexpr int kMaxCoeffs = 64;

struct ResiduePoly {
  std::array<std::uint16_t, kMaxCoeffs> c{};
  int degree = -1;  // exact degree over Z; -1 for B_0
};

struct NodeState {
  ResiduePoly lo;
  ResiduePoly hi;
};

inline void add_into(ResiduePoly& out, const ResiduePoly& a, const ResiduePoly& b, std::uint32_t m) {
  out.degree = std::max(a.degree, b.degree);
  for (int i = 0; i <= out.degree; ++i) {
    std::uint32_t s = std::uint32_t{a.c[i]} + b.c[i];
    out.c[i] = static_cast<std::uint16_t>(s >= m ? s - m : s);
  }
}

inline void shift_into(ResiduePoly& out, const ResiduePoly& a) {
  if (a.degree < 0) {
    out = a;
    return;
  }
  out.degree = a.degree + 1;
  out.c[0] = 0;
  for (int i = 1; i <= out.degree; ++i) out.c[i] = a.c[i - 1];
}

NodeState root_state(std::uint64_t k, std::uint32_t m) {
  NodeState s;
  s.hi.c[0] = 1 % m;
  s.hi.degree = 0;
  if (k == 0) return s;
  const int bits = 64 - __builtin_clzll(k);
  for (int b = bits - 1; b >= 0; --b) {
    NodeState next;
    ResiduePoly sum;
    add_into(sum, s.lo, s.hi, m);
    if ((k >> b) & 1U) {
      next.lo = sum;
      shift_into(next.hi, s.hi);
    } else {
      shift_into(next.lo, s.lo);
      next.hi = sum;
    }
    s = next;
  }
  return s;
}

inline bool matches(const ResiduePoly& p, const CongruenceSpec& spec) {
  if (p.c[0] != 1 % spec.m) return false;
  for (int i = 1; i <= p.degree; ++i) {
    if (p.c[i] != spec.r) return false;
  }
  return true;
}

class TreeWalker {
 public:
  TreeWalker(const CongruenceSpec& spec, std::uint64_t bound, std::uint64_t child_limit,
             std::vector<std::uint64_t>& out)
      : spec_(spec), bound_(bound), child_limit_(child_limit), out_(out) {}

  void visit(std::uint64_t k, const NodeState& s) {
    ++nodes_;
    if ((k & 1U) && k >= kFirstCountedIndex && matches(s.lo, spec_)) out_.push_back(k);
    if (k > bound_ / 2) return;
    const std::uint64_t left = 2 * k;
    if (left >= child_limit_) return;
    NodeState child;
    ResiduePoly sum;
    add_into(sum, s.lo, s.hi, spec_.m);
    shift_into(child.lo, s.lo);
    child.hi = sum;
    visit(left, child);
    if (left + 1 <= bound_ && left + 1 < child_limit_) {
      child.lo = sum;
      shift_into(child.hi, s.hi);
      visit(left + 1, child);
    }
  }

  std::uint64_t nodes() const noexcept { return nodes_; }

 private:
  CongruenceSpec spec_;
  std::uint64_t bound_;
  std::uint64_t child_limit_;
  std::vector<std::uint64_t>& out_;
  std::uint64_t nodes_ = 0;
};

}  // namespace

bool is_solution(std::uint64_t n, const CongruenceSpec& spec) {
  spec.validate();
  if (n % 2 == 0) throw Error(ErrorKind::EvenIndex, "index " + std::to_string(n) + " is even");
  if (n == 1) return true;
  return matches(root_state(n, spec.m).lo, spec);
}

bool is_solution(const SternIndex& n, const CongruenceSpec& spec) {
  spec.validate();
  if (sgn(n) < 0) throw Error(ErrorKind::OutOfDomain, "negative index");
  if (mpz_even_p(n.get_mpz_t())) throw Error(ErrorKind::EvenIndex, "index " + n.get_str() + " is even");
  if (n.fits_ulong_p()) return is_solution(static_cast<std::uint64_t>(n.get_ui()), spec);
  // General path: modular pair scan with exact degree tracking.
  const std::uint32_t m = spec.m;
  ModPoly lo(m, std::vector<std::uint32_t>{0});
  ModPoly hi(m, std::vector<std::uint32_t>{1});
  long dlo = IntPoly::kZeroDegree;
  long dhi = 0;
  for (std::size_t bit = mpz_sizeinbase(n.get_mpz_t(), 2); bit-- > 0;) {
    ModPoly sum = lo + hi;
    const long dsum = std::max(dlo, dhi);
    if (mpz_tstbit(n.get_mpz_t(), bit)) {
      lo = std::move(sum);
      hi = hi.shifted(1);
      dlo = dsum;
      dhi += 1;
    } else {
      hi = std::move(sum);
      lo = lo.shifted(1);
      dhi = dsum;
      dlo = dlo == IntPoly::kZeroDegree ? dlo : dlo + 1;
    }
  }
  if (lo.coeff(0) != 1 % m) return false;
  for (long i = 1; i <= dlo; ++i) {
    if (lo.coeff(static_cast<std::size_t>(i)) != spec.r) return false;
  }
  return true;
}

SearchReport enumerate_solutions(std::uint64_t bound, const CongruenceSpec& spec,
                                 const std::set<FamilyId>& exclusions, const SearchOptions& options) {
  spec.validate();
  if (bound < 1) throw Error(ErrorKind::PreconditionViolated, "search bound must be >= 1");
  if (bound > options.cap) {
    throw Error(ErrorKind::BoundTooLarge,
                "bound " + std::to_string(bound) + " exceeds cap " + std::to_string(options.cap));
  }
  if (options.split_depth < 1 || options.split_depth > 24) {
    throw Error(ErrorKind::PreconditionViolated, "split depth must be in 1..24");
  }

  SearchReport report;
  report.spec = spec;
  report.bound = bound;
  report.exclusions = exclusions;
  report.counts_index_one = false;

  const unsigned depth = options.split_depth;
  const std::uint64_t first_root = std::uint64_t{1} << depth;

  // Nodes above the cut are walked directly.
  std::vector<std::uint64_t> found;
  {
    TreeWalker prefix(spec, bound, first_root, found);
    prefix.visit(1, root_state(1, spec.m));
  }

  std::vector<std::uint64_t> roots;
  for (std::uint64_t k = first_root; k < 2 * first_root && k <= bound; ++k) roots.push_back(k);

  std::vector<std::vector<std::uint64_t>> per_root(roots.size());
  std::vector<char> done(roots.size(), 0);

  CheckpointState state;
  state.spec = spec;
  state.bound = bound;
  state.depth = depth;
  if (options.checkpoint) {
    if (auto loaded = load_checkpoint(*options.checkpoint)) {
      if (!(loaded->spec == spec) || loaded->bound != bound || loaded->depth != depth) {
        throw Error(ErrorKind::CheckpointMismatch, "checkpoint " + options.checkpoint->string() +
                                                       " was written for a different spec, bound or depth");
      }
      for (std::uint64_t root : loaded->completed_subtrees) {
        if (root < first_root || root >= 2 * first_root || root > bound) {
          throw Error(ErrorKind::CheckpointMismatch, "checkpoint names unknown subtree " + std::to_string(root));
        }
        done[root - first_root] = 1;
        ++report.resumed_subtrees;
      }
      for (std::uint64_t n : loaded->partial_solutions) {
        const int bits = n == 0 ? 0 : 64 - __builtin_clzll(n);
        const std::uint64_t anc = bits > static_cast<int>(depth) ? n >> (bits - 1 - depth) : 0;
        if (anc < first_root || !done[anc - first_root]) {
          throw Error(ErrorKind::CheckpointMismatch, "checkpoint solution outside completed subtrees");
        }
        per_root[anc - first_root].push_back(n);
      }
    }
  }

  std::vector<std::size_t> pending;
  for (std::size_t i = 0; i < roots.size(); ++i) {
    if (!done[i]) pending.push_back(i);
  }

  std::mutex progress_mutex;
  std::uint64_t nodes_since_save = 0;
  auto write_checkpoint = [&] {
    // caller holds progress_mutex
    state.completed_subtrees.clear();
    state.partial_solutions.clear();
    for (std::size_t i = 0; i < roots.size(); ++i) {
      if (!done[i]) continue;
      state.completed_subtrees.push_back(roots[i]);
      state.partial_solutions.insert(state.partial_solutions.end(), per_root[i].begin(), per_root[i].end());
    }
    std::sort(state.partial_solutions.begin(), state.partial_solutions.end());
    save_checkpoint(*options.checkpoint, state);
  };

  parallel_for(pending.size(), std::max(1U, options.workers), [&](std::size_t j) {
    const std::size_t i = pending[j];
    std::vector<std::uint64_t> local;
    TreeWalker walker(spec, bound, UINT64_MAX, local);
    walker.visit(roots[i], root_state(roots[i], spec.m));
    std::lock_guard lock(progress_mutex);
    per_root[i] = std::move(local);
    done[i] = 1;
    nodes_since_save += walker.nodes();
    if (options.checkpoint && nodes_since_save >= options.checkpoint_every) {
      write_checkpoint();
      nodes_since_save = 0;
    }
  });
  if (options.checkpoint) write_checkpoint();

  for (auto& v : per_root) found.insert(found.end(), v.begin(), v.end());
  std::sort(found.begin(), found.end());

  for (std::uint64_t n : found) {
    bool excluded = false;
    for (const auto& f : exclusions) {
      if (family_contains(f, SternIndex(static_cast<unsigned long>(n)))) {
        excluded = true;
        break;
      }
    }
    if (!excluded) report.solutions.push_back(n);
  }
  report.count = report.solutions.size();
  return report;
}

std::uint64_t pi(const CongruenceSpec& spec, std::uint64_t x, const SearchOptions& options) {
  return enumerate_solutions(x, spec, {}, options).count;
}

std::vector<std::uint64_t> sample_points(std::uint64_t x_min, std::uint64_t x_max, std::size_t samples) {
  if (samples < 2) throw Error(ErrorKind::PreconditionViolated, "need at least 2 samples");
  if (x_max < x_min) throw Error(ErrorKind::PreconditionViolated, "x_max below the series start");
  std::vector<std::uint64_t> xs;
  xs.reserve(samples);
  const long double span = static_cast<long double>(x_max - x_min);
  for (std::size_t j = 0; j < samples; ++j) {
    auto x = x_min + static_cast<std::uint64_t>(std::llround(span * j / (samples - 1)));
    if (j + 1 == samples) x = x_max;
    if (xs.empty() || x > xs.back()) xs.push_back(x);
  }
  return xs;
}

std::vector<std::pair<std::uint64_t, std::uint64_t>> pi_curve(const CongruenceSpec& spec, std::uint64_t x_max,
                                                              std::size_t samples, const SearchOptions& options) {
  const auto xs = sample_points(2, x_max, samples);
  const auto sols = enumerate_solutions(x_max, spec, {}, options).solutions;
  std::vector<std::pair<std::uint64_t, std::uint64_t>> out;
  out.reserve(xs.size());
  for (std::uint64_t x : xs) {
    auto cnt = static_cast<std::uint64_t>(std::upper_bound(sols.begin(), sols.end(), x) - sols.begin());
    out.emplace_back(x, cnt);
  }
  return out;
}

std::string to_string(CurveSeries s) {
  switch (s) {
    case CurveSeries::Pi02: return "pi02";
    case CurveSeries::Pi12: return "pi12";
    case CurveSeries::Ratio: return "ratio";
    case CurveSeries::Norm02: return "norm02";
    case CurveSeries::Norm12: return "norm12";
  }
  return "?";
}

CurveSeries parse_series(std::string_view name) {
  for (auto s : {CurveSeries::Pi02, CurveSeries::Pi12, CurveSeries::Ratio, CurveSeries::Norm02, CurveSeries::Norm12}) {
    if (to_string(s) == name) return s;
  }
  throw Error(ErrorKind::ParseError, "unknown series '" + std::string(name) + "'");
}

std::vector<CurvePoint> series_curve(CurveSeries series, std::uint64_t x_max, std::size_t samples,
                                     const SearchOptions& options) {
  const std::uint64_t x_min = series == CurveSeries::Ratio ? 5 : 2;
  const auto xs = sample_points(x_min, x_max, samples);
  auto counts = [&](const CongruenceSpec& spec) {
    const auto sols = enumerate_solutions(x_max, spec, {}, options).solutions;
    std::vector<double> c;
    for (std::uint64_t x : xs) {
      c.push_back(static_cast<double>(std::upper_bound(sols.begin(), sols.end(), x) - sols.begin()));
    }
    return c;
  };
  std::vector<double> values;
  switch (series) {
    case CurveSeries::Pi02: values = counts({0, 2}); break;
    case CurveSeries::Pi12: values = counts({1, 2}); break;
    case CurveSeries::Ratio: {
      auto a = counts({0, 2});
      auto b = counts({1, 2});
      for (std::size_t i = 0; i < a.size(); ++i) values.push_back(a[i] / b[i]);
      break;
    }
    case CurveSeries::Norm02:
    case CurveSeries::Norm12: {
      values = counts({series == CurveSeries::Norm02 ? 0U : 1U, 2});
      for (std::size_t i = 0; i < xs.size(); ++i) {
        const double l = std::log2(static_cast<double>(xs[i]));
        values[i] /= l * l;
      }
      break;
    }
  }
  std::vector<CurvePoint> out;
  for (std::size_t i = 0; i < xs.size(); ++i) out.push_back({xs[i], values[i]});
  return out;
}

}  // namespace sternpoly
