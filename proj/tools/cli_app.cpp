#include "cli_app.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "sternpoly/conjectures.hpp"
#include "sternpoly/error.hpp"
#include "sternpoly/family.hpp"
#include "sternpoly/identities.hpp"
#include "sternpoly/io.hpp"
#include "sternpoly/mining.hpp"
#include "sternpoly/mod_poly.hpp"
#include "sternpoly/reference.hpp"
#include "sternpoly/search.hpp"
#include "sternpoly/stern.hpp"

namespace sternpoly::cli {
namespace {

using nlohmann::json;

struct Global {
  std::string format = "text";
  unsigned workers = 1;
  std::string cap_text;
  std::uint64_t cap = kDefaultSearchCap;
};

std::uint64_t to_u64(const SternIndex& v, const std::string& what) {
  if (!v.fits_ulong_p()) throw Error(ErrorKind::BoundTooLarge, what + " does not fit in 64 bits");
  return v.get_ui();
}

std::string join(std::span<const BigInt> coeffs) {
  std::string s;
  for (const auto& c : coeffs) {
    if (!s.empty()) s += ',';
    s += c.get_str();
  }
  return s.empty() ? "0" : s;
}

std::string join_u32(std::span<const std::uint32_t> coeffs) {
  std::string s;
  for (auto c : coeffs) {
    if (!s.empty()) s += ',';
    s += std::to_string(c);
  }
  return s;
}

std::ofstream open_out(const std::string& path) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw Error(ErrorKind::IoError, "cannot write '" + path + "'");
  return f;
}

SearchOptions search_options(const Global& g) {
  SearchOptions o;
  o.cap = g.cap;
  o.workers = g.workers;
  return o;
}

BigInt parse_signed(const std::string& text) {
  if (!text.empty() && text[0] == '-') return -parse_index(text.substr(1));
  return parse_index(text);
}

void print_json(std::ostream& out, const json& j) { out << j.dump(2) << '\n'; }

// ---- poly ------------------------------------------------------------------

struct PolyArgs {
  std::string index;
  std::optional<std::uint64_t> mod;
  std::optional<std::string> eval;
  bool degree = false;
  bool pretty = false;
};

int cmd_poly(const Global& g, const PolyArgs& a, std::ostream& out) {
  const SternIndex n = parse_index(a.index);
  const IntPoly p = stern_poly(n);
  std::optional<ModPoly> reduced;
  if (a.mod) reduced = reduce_mod(p, *a.mod, p.is_zero() ? 0 : static_cast<std::size_t>(p.degree()));
  std::optional<BigInt> value;
  if (a.eval) value = p.eval(parse_signed(*a.eval));
  std::optional<long> deg;
  if (a.degree) deg = stern_degree(n);

  if (g.format == "json") {
    json j{{"index", n.get_str()}, {"binary", binary_string(n)}, {"coefficients", poly_json(p)}};
    if (reduced) j["mod"] = {{"m", *a.mod}, {"coefficients", reduced->coeffs()}};
    if (value) j["eval"] = {{"t", *a.eval}, {"value", value->get_str()}};
    if (deg) j["degree"] = *deg;
    print_json(out, j);
    return kOk;
  }
  if (!value && !deg) {
    if (reduced) out << join_u32(reduced->coeffs()) << '\n';
    else out << (a.pretty ? p.to_pretty() : join(p.coeffs())) << '\n';
    return kOk;
  }
  if (value) out << value->get_str() << '\n';
  if (deg) out << *deg << '\n';
  return kOk;
}

// ---- search ----------------------------------------------------------------

struct SearchArgs {
  std::uint32_t r = 0;
  std::uint32_t m = 2;
  std::string max;
  bool count = false;
  std::vector<std::string> exclude;
  std::string out;
  std::string checkpoint;
  unsigned depth = kDefaultSplitDepth;
};

int cmd_search(const Global& g, const SearchArgs& a, std::ostream& out) {
  std::set<FamilyId> ex;
  for (const auto& e : a.exclude) ex.insert(parse_family(e));
  SearchOptions o = search_options(g);
  o.split_depth = a.depth;
  if (!a.checkpoint.empty()) o.checkpoint = a.checkpoint;
  const auto report = enumerate_solutions(to_u64(parse_index(a.max), "bound"), {a.r, a.m}, ex, o);
  if (!a.out.empty()) {
    auto f = open_out(a.out);
    write_solutions_csv(f, report);
  }
  if (g.format == "json") {
    print_json(out, to_json(report));
  } else if (a.count || !a.out.empty()) {
    out << report.count << '\n';
  } else {
    write_solutions_csv(out, report);
  }
  return kOk;
}

// ---- table -----------------------------------------------------------------

struct TableArgs {
  int which = 1;
  unsigned kmin = 15;
  unsigned kmax = 20;
  std::string max = "2^20";
  bool check = false;
};

int cmd_table(const Global& g, const TableArgs& a, std::ostream& out) {
  const json& ref = reference_tables();
  json rows = json::array();
  bool all_match = true;
  std::ostringstream csv;

  if (a.which == 1) {
    if (a.kmin < 2 || a.kmax < a.kmin || a.kmax > 63) throw Error(ErrorKind::PreconditionViolated, "need 2 <= kmin <= kmax <= 63");
    const std::uint64_t bound = std::uint64_t{1} << a.kmax;
    const auto s02 = enumerate_solutions(bound, {0, 2}, {}, search_options(g)).solutions;
    const auto s12 = enumerate_solutions(bound, {1, 2}, {}, search_options(g)).solutions;
    const auto& t1 = ref.at("table1");
    std::map<unsigned, std::pair<std::uint64_t, std::uint64_t>> reference;
    for (std::size_t i = 0; i < t1.at("k").size(); ++i) {
      reference[t1["k"][i].get<unsigned>()] = {t1["pi_0_2"][i].get<std::uint64_t>(), t1["pi_1_2"][i].get<std::uint64_t>()};
    }
    csv << "k,pi02,pi12,ref_pi02,ref_pi12,match\n";
    for (unsigned k = a.kmin; k <= a.kmax; ++k) {
      const std::uint64_t x = std::uint64_t{1} << k;
      auto upto = [x](const std::vector<std::uint64_t>& v) {
        return static_cast<std::uint64_t>(std::upper_bound(v.begin(), v.end(), x) - v.begin());
      };
      const std::uint64_t a02 = upto(s02), a12 = upto(s12);
      json row{{"k", k}, {"pi02", a02}, {"pi12", a12}};
      csv << k << ',' << a02 << ',' << a12;
      if (auto it = reference.find(k); it != reference.end()) {
        const bool ok = it->second.first == a02 && it->second.second == a12;
        all_match = all_match && ok;
        row["ref_pi02"] = it->second.first;
        row["ref_pi12"] = it->second.second;
        row["match"] = ok;
        csv << ',' << it->second.first << ',' << it->second.second << ',' << (ok ? "yes" : "no");
      } else {
        csv << ",,,";
      }
      csv << '\n';
      rows.push_back(row);
    }
  } else if (a.which >= 2 && a.which <= 4) {
    const auto& t = ref.at("table" + std::to_string(a.which));
    std::set<FamilyId> ex;
    for (const auto& e : t.at("exclude")) ex.insert(parse_family(e.get<std::string>()));
    const std::uint64_t bound = to_u64(parse_index(a.max), "bound");
    const auto found = enumerate_solutions(bound, {t.at("r").get<std::uint32_t>(), t.at("m").get<std::uint32_t>()}, ex,
                                           search_options(g));
    std::map<std::uint64_t, std::string> reference;
    for (const auto& r : reference_solutions(a.which, bound)) reference[r.n] = r.binary;
    std::map<std::uint64_t, std::pair<std::string, std::string>> merged;
    for (auto n : found.solutions) {
      const std::string b = binary_string(SternIndex(static_cast<unsigned long>(n)));
      auto it = reference.find(n);
      merged[n] = {b, it == reference.end() ? "extra" : (it->second == b ? "match" : "binary-mismatch")};
    }
    for (const auto& [n, b] : reference) {
      if (!merged.count(n)) merged[n] = {b, "missing"};
    }
    csv << "n,binary,status\n";
    for (const auto& [n, v] : merged) {
      all_match = all_match && v.second == "match";
      csv << n << ',' << v.first << ',' << v.second << '\n';
      rows.push_back({{"n", n}, {"binary", v.first}, {"status", v.second}});
    }
  } else if (a.which == 5) {
    csv << "n,binary,r,m,computed,printed,poly_match,solution\n";
    for (const auto& t : ref.at("table5")) {
      const auto n = t.at("n").get<std::uint64_t>();
      const auto r = t.at("r").get<std::uint32_t>();
      const auto mlo = t.at("m_min").get<std::uint32_t>(), mhi = t.at("m_max").get<std::uint32_t>();
      std::vector<BigInt> printed;
      for (const auto& c : t.at("coefficients")) printed.emplace_back(c.get<long>());
      const IntPoly p = stern_poly(SternIndex(static_cast<unsigned long>(n)));
      const bool poly_ok = p == IntPoly(printed);
      bool sol = true;
      for (std::uint32_t m = mlo; m <= mhi; ++m) sol = sol && is_solution(n, CongruenceSpec{r, m});
      const bool bin_ok = binary_string(SternIndex(static_cast<unsigned long>(n))) == t.at("binary").get<std::string>();
      all_match = all_match && poly_ok && sol && bin_ok;
      const std::string mtext = mlo == mhi ? std::to_string(mlo) : std::to_string(mlo) + ".." + std::to_string(mhi);
      csv << n << ',' << t.at("binary").get<std::string>() << ',' << r << ',' << mtext << ',' << p.to_pretty() << ','
          << t.at("printed").get<std::string>() << ',' << (poly_ok ? "yes" : "no") << ',' << (sol ? "yes" : "no")
          << '\n';
      rows.push_back({{"n", n},
                      {"binary", t.at("binary")},
                      {"r", r},
                      {"m", mtext},
                      {"computed", poly_json(p)},
                      {"printed", t.at("printed")},
                      {"poly_match", poly_ok},
                      {"solution", sol}});
    }
  } else {
    throw Error(ErrorKind::OutOfDomain, "tables are numbered 1..5");
  }

  if (g.format == "json") print_json(out, {{"table", a.which}, {"rows", rows}, {"all_match", all_match}});
  else out << csv.str();
  return a.check && !all_match ? kVerificationFailed : kOk;
}

// ---- plotdata --------------------------------------------------------------

struct PlotArgs {
  std::string series = "pi02";
  std::string xmax = "2^20";
  std::size_t samples = 1024;
  std::string out;
};

int cmd_plotdata(const Global& g, const PlotArgs& a, std::ostream& out) {
  const CurveSeries s = parse_series(a.series);
  const auto pts = series_curve(s, to_u64(parse_index(a.xmax), "xmax"), a.samples, search_options(g));
  std::ostringstream body;
  if (g.format == "json") {
    json arr = json::array();
    for (const auto& p : pts) arr.push_back({{"x", p.x}, {"value", p.value}});
    body << json{{"series", to_string(s)}, {"points", arr}}.dump(2) << '\n';
  } else {
    write_curve_csv(body, s, pts);
  }
  if (!a.out.empty()) {
    auto f = open_out(a.out);
    f << body.str();
  } else {
    out << body.str();
  }
  return kOk;
}

// ---- verify ----------------------------------------------------------------

struct VerifyArgs {
  std::string identity;
  std::string range;
  bool list = false;
  bool typos = false;
};

void print_identity(std::ostream& out, const IdentityReport& r) {
  out << r.identity << ' ' << r.range << ": " << (r.pass ? "PASS" : "FAIL") << " (" << r.cases << " cases)\n";
  if (r.counterexample) {
    out << "  counterexample: " << r.counterexample->description << "\n    lhs: " << r.counterexample->lhs
        << "\n    rhs: " << r.counterexample->rhs << '\n';
  }
  for (const auto& n : r.notes) out << "  note: " << n << '\n';
}

int cmd_verify(const Global& g, const VerifyArgs& a, std::ostream& out) {
  if (a.list) {
    json arr = json::array();
    for (const auto& i : identity_catalog()) {
      if (g.format == "json") arr.push_back({{"name", i.name}, {"summary", i.summary}, {"defaults", to_json(i.defaults)}});
      else out << i.name << "  " << to_string(i.defaults) << "  " << i.summary << '\n';
    }
    if (g.format == "json") print_json(out, arr);
    return kOk;
  }
  if (a.typos) {
    const auto ledger = typo_ledger();
    bool all = true;
    json arr = json::array();
    for (const auto& e : ledger) {
      all = all && e.flagged;
      if (g.format == "json") {
        arr.push_back(to_json(e));
        continue;
      }
      out << e.id << ": " << (e.flagged ? "FLAGGED" : "NOT CONFIRMED") << "\n  " << e.description << '\n';
      for (const auto& ev : e.evidence) out << "  - " << ev << '\n';
    }
    if (g.format == "json") print_json(out, arr);
    return all ? kOk : kVerificationFailed;
  }
  if (a.identity.empty()) throw Error(ErrorKind::ParseError, "--identity is required");
  const ParamGrid grid = a.range.empty() ? ParamGrid{} : parse_param_grid(a.range);
  const auto r = run_identity(a.identity, grid, g.workers);
  if (g.format == "json") print_json(out, to_json(r));
  else print_identity(out, r);
  return r.pass ? kOk : kVerificationFailed;
}

// ---- conjecture ------------------------------------------------------------

struct ConjectureArgs {
  std::string id;
  std::string grid;
  bool list = false;
};

std::string value_text(const ObservedValue& v) {
  return std::visit(
      [](const auto& x) -> std::string {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, bool>) return x ? "true" : "false";
        else if constexpr (std::is_same_v<T, std::string>) return x;
        else return std::to_string(x);
      },
      v);
}

int cmd_conjecture(const Global& g, const ConjectureArgs& a, std::ostream& out) {
  if (a.list) {
    json arr = json::array();
    for (const auto& i : conjecture_catalog()) {
      if (g.format == "json") arr.push_back({{"id", i.id}, {"summary", i.summary}, {"defaults", to_json(i.defaults)}});
      else out << i.id << "  " << to_string(i.defaults) << "  " << i.summary << '\n';
    }
    if (g.format == "json") print_json(out, arr);
    return kOk;
  }
  if (a.id.empty()) throw Error(ErrorKind::ParseError, "conjecture id is required");
  const ParamGrid grid = a.grid.empty() ? ParamGrid{} : parse_param_grid(a.grid);
  const auto r = run_conjecture(a.id, grid, g.workers);
  if (g.format == "json") {
    print_json(out, to_json(r));
    return kOk;
  }
  out << r.id << ' ' << to_string(r.grid) << ": " << r.consistent_count() << " consistent, " << r.inconsistent_count()
      << " inconsistent, " << r.inconclusive_count() << " without claim or inconclusive\n";
  for (const auto& c : r.cells) {
    std::string p;
    for (const auto& [k, v] : c.params) p += (p.empty() ? "" : ",") + k + "=" + std::to_string(v);
    out << "  " << p << ':';
    for (const auto& [k, v] : c.observation) out << ' ' << k << '=' << value_text(v);
    out << "  [" << (c.consistent ? (*c.consistent ? "consistent" : "INCONSISTENT") : "-") << "]\n";
  }
  for (const auto& n : r.notes) out << "  note: " << n << '\n';
  return kOk;
}

// ---- mine ------------------------------------------------------------------

struct MineArgs {
  std::string input;
  unsigned depth = 4;
  std::optional<std::uint32_t> r;
  std::optional<std::uint32_t> m;
  bool validated_only = false;
};

int cmd_mine(const Global& g, const MineArgs& a, std::ostream& out) {
  std::ifstream in(a.input, std::ios::binary);
  if (!in) throw Error(ErrorKind::IoError, "cannot read '" + a.input + "'");
  SolutionsFile f = read_solutions_csv(in);
  if (a.r) f.spec.r = *a.r;
  if (a.m) f.spec.m = *a.m;
  const auto rep = mine_affine_families(f.solutions, f.spec, a.depth);
  if (g.format == "json") {
    json j = to_json(rep);
    if (a.validated_only) {
      json keep = json::array();
      for (const auto& fam : j["families"]) {
        if (fam["validated"].get<bool>()) keep.push_back(fam);
      }
      j["families"] = keep;
    }
    print_json(out, j);
    return kOk;
  }
  out << "spec (" << rep.spec.r << ',' << rep.spec.m << "), " << rep.input_size << " solutions, " << rep.quadruples
      << " quadruples, " << rep.consistent_triples << " consistent triples, " << rep.families.size()
      << " with p > 0, " << rep.validated_count() << " validated to depth " << rep.depth << '\n';
  for (const auto& fam : rep.families) {
    if (a.validated_only && !fam.validated) continue;
    out << fam.triple.to_string() << ' ';
    if (fam.validated) {
      out << "validated";
    } else {
      out << "rejected at U_" << *fam.failed_at << " = " << fam.failed_value->get_str() << ": " << fam.failure;
    }
    out << "  from " << fam.quadruple[0] << ',' << fam.quadruple[1] << ',' << fam.quadruple[2] << ','
        << fam.quadruple[3] << '\n';
  }
  return kOk;
}

int exit_code_for(ErrorKind k) {
  switch (k) {
    case ErrorKind::BoundTooLarge: return kResourceCap;
    default: return kUsage;
  }
}

std::optional<std::string> env(const char* name) {
  const char* v = std::getenv(name);
  if (!v || !*v) return std::nullopt;
  return std::string(v);
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Stern polynomials: exact computation, congruence search, identity and conjecture checks", "stern"};
  app.require_subcommand(1);
  Global g;
  if (auto w = env("STERN_WORKERS")) {
    try {
      g.workers = static_cast<unsigned>(std::stoul(*w));
    } catch (const std::exception&) {
      err << "error: STERN_WORKERS must be a positive integer\n";
      return kUsage;
    }
  }
  if (auto c = env("STERN_CAP")) g.cap_text = *c;
  app.add_option("--format", g.format, "Output format")->check(CLI::IsMember({"text", "csv", "json"}));
  app.add_option("--workers", g.workers, "Worker threads (default STERN_WORKERS or 1)")->check(CLI::PositiveNumber);
  app.add_option("--cap", g.cap_text, "Hard search cap (default STERN_CAP or 2^34)");

  PolyArgs pa;
  auto* poly = app.add_subcommand("poly", "Print B_n(t) as ascending coefficients");
  poly->add_option("index", pa.index, "Index: decimal, expression such as 2^20-3, or p[k,n], s[i,n], h[n], H[n], ...")
      ->required();
  poly->add_option("--mod", pa.mod, "Reduce coefficients mod m")->check(CLI::Range(std::uint64_t{2}, std::uint64_t{65535}));
  poly->add_option("--eval", pa.eval, "Evaluate at an integer t");
  poly->add_flag("--degree", pa.degree, "Print e(n)");
  poly->add_flag("--pretty", pa.pretty, "Print as a sum of monomials");

  SearchArgs sa;
  auto* search = app.add_subcommand("search", "Enumerate odd solutions n <= max of the congruence");
  search->add_option("--r", sa.r, "Residue r")->required();
  search->add_option("--m", sa.m, "Modulus m")->required();
  search->add_option("--max", sa.max, "Bound (index expression)")->required();
  search->add_flag("--count", sa.count, "Print only Pi_{r,m}(max)");
  search->add_option("--exclude", sa.exclude, "Families to exclude (comma separated)")->delimiter(',');
  search->add_option("--out", sa.out, "Write the solutions CSV here");
  search->add_option("--checkpoint,--resume", sa.checkpoint, "Checkpoint file (resumed when present)");
  search->add_option("--depth", sa.depth, "Split depth")->check(CLI::Range(1, 24));

  TableArgs ta;
  auto* table = app.add_subcommand("table", "Reproduce Table 1..5 with a comparison column");
  table->add_option("which", ta.which, "Table number")->required()->check(CLI::Range(1, 5));
  table->add_option("--kmin", ta.kmin, "Table 1: first k");
  table->add_option("--kmax", ta.kmax, "Table 1: last k");
  table->add_option("--max", ta.max, "Tables 2-4: bound");
  table->add_flag("--check", ta.check, "Exit 1 unless every compared row matches");

  PlotArgs pl;
  auto* plot = app.add_subcommand("plotdata", "Curve data behind Figures 1-4");
  plot->add_option("--series", pl.series, "pi02, pi12, ratio, norm02 or norm12");
  plot->add_option("--xmax", pl.xmax, "Largest x");
  plot->add_option("--samples", pl.samples, "Number of sample points")->check(CLI::PositiveNumber);
  plot->add_option("--out", pl.out, "Write the CSV here");

  VerifyArgs va;
  auto* verify = app.add_subcommand("verify", "Check an identity over a parameter range");
  verify->add_option("--identity", va.identity, "Identity name (see --list)");
  verify->add_option("--range", va.range, "Grid such as k=2..10,n=1..40");
  verify->add_flag("--list", va.list, "List identities and default ranges");
  verify->add_flag("--typos", va.typos, "Print the ledger of printed-formula discrepancies");

  ConjectureArgs ca;
  auto* conj = app.add_subcommand("conjecture", "Observe a conjecture on a grid");
  conj->add_option("id", ca.id, "Conjecture id (see --list)");
  conj->add_option("--grid", ca.grid, "Grid such as k=2..8,n=1..20");
  conj->add_flag("--list", ca.list, "List conjecture ids and default grids");

  MineArgs ma;
  auto* mine = app.add_subcommand("mine", "Mine affine families p*4^n + q*2^n + u from a solutions file");
  mine->add_option("--input", ma.input, "Solutions CSV (or one integer per line)")->required();
  mine->add_option("--depth", ma.depth, "Validation depth beyond the quadruple");
  mine->add_option("--r", ma.r, "Override r");
  mine->add_option("--m", ma.m, "Override m");
  mine->add_flag("--validated-only", ma.validated_only, "List only validated families");

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }

  try {
    if (!g.cap_text.empty()) g.cap = to_u64(parse_index(g.cap_text), "cap");
    if (g.workers == 0) throw Error(ErrorKind::PreconditionViolated, "workers must be >= 1");
    if (*poly) return cmd_poly(g, pa, out);
    if (*search) return cmd_search(g, sa, out);
    if (*table) return cmd_table(g, ta, out);
    if (*plot) return cmd_plotdata(g, pl, out);
    if (*verify) return cmd_verify(g, va, out);
    if (*conj) return cmd_conjecture(g, ca, out);
    if (*mine) return cmd_mine(g, ma, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return exit_code_for(e.kind());
  }
  return kUsage;
}

}  // namespace sternpoly::cli
