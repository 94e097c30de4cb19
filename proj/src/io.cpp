#include "sternpoly/io.hpp"

#include <cctype>
#include <charconv>
#include <istream>
#include <ostream>
#include <sstream>

#include "sternpoly/error.hpp"
#include "sternpoly/family.hpp"

namespace sternpoly {
namespace {

using nlohmann::json;

[[noreturn]] void bad(std::string_view text, const std::string& why) {
  throw Error(ErrorKind::ParseError, "index '" + std::string(text) + "': " + why);
}

// Recursive descent over: expr = term (('+'|'-') term)*, term = power ('*' power)*,
// power = unary ('^' power)?, unary = '-' unary | atom,
// atom = number | '(' expr ')' | name '[' args ']'.
class IndexParser {
 public:
  explicit IndexParser(std::string_view text) : text_(text) {
    for (char c : text) {
      if (!std::isspace(static_cast<unsigned char>(c))) s_ += c;
    }
  }

  BigInt parse() {
    if (s_.empty()) bad(text_, "empty");
    BigInt v = expr();
    if (pos_ != s_.size()) bad(text_, "unexpected '" + std::string(1, s_[pos_]) + "'");
    return v;
  }

 private:
  bool eat(char c) {
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  BigInt expr() {
    BigInt v = term();
    for (;;) {
      if (eat('+')) v += term();
      else if (eat('-')) v -= term();
      else return v;
    }
  }

  BigInt term() {
    BigInt v = power();
    while (eat('*')) v *= power();
    return v;
  }

  BigInt power() {
    BigInt base = unary();
    if (!eat('^')) return base;
    BigInt e = power();
    if (sgn(e) < 0 || e > 1 << 24) bad(text_, "exponent out of range");
    BigInt r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e.get_ui());
    return r;
  }

  BigInt unary() {
    if (eat('-')) return -unary();
    return atom();
  }

  BigInt atom() {
    if (eat('(')) {
      BigInt v = expr();
      if (!eat(')')) bad(text_, "missing ')'");
      return v;
    }
    if (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
      const std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      return BigInt(s_.substr(start, pos_ - start));
    }
    if (pos_ < s_.size() && std::isalpha(static_cast<unsigned char>(s_[pos_]))) {
      const std::size_t start = pos_;
      while (pos_ < s_.size() && std::isalpha(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      const std::string name = s_.substr(start, pos_ - start);
      if (!eat('[')) bad(text_, "expected '[' after " + name);
      std::vector<unsigned> args;
      do {
        BigInt a = expr();
        if (sgn(a) < 0 || !a.fits_uint_p()) bad(text_, "family argument out of range");
        args.push_back(static_cast<unsigned>(a.get_ui()));
      } while (eat(','));
      if (!eat(']')) bad(text_, "missing ']'");
      return family(name, args);
    }
    bad(text_, pos_ < s_.size() ? "unexpected '" + std::string(1, s_[pos_]) + "'" : "unexpected end");
  }

  BigInt family(const std::string& name, const std::vector<unsigned>& a) {
    auto need = [&](std::size_t n) {
      if (a.size() != n) bad(text_, name + " takes " + std::to_string(n) + " argument(s)");
    };
    if (name == "p" || name == "s") {
      need(2);
      return family_index({name == "p" ? FamilyKind::P : FamilyKind::S, a[0]}, a[1]);
    }
    need(1);
    if (name == "h") return family_index({FamilyKind::H, 0}, a[0]);
    if (name == "H") return family_index({FamilyKind::BigH, 0}, a[0]);
    if (name == "alpha") return family_index({FamilyKind::Alpha, 0}, a[0]);
    if (name == "beta") return family_index({FamilyKind::Beta, 0}, a[0]);
    if (name == "ones") return family_index({FamilyKind::TrivialAllOnes, 0}, a[0]);
    if (name == "twos") return family_index({FamilyKind::TrivialTwos, 0}, a[0]);
    bad(text_, "unknown family '" + name + "'");
  }

  std::string_view text_;
  std::string s_;
  std::size_t pos_ = 0;
};

std::vector<std::string> split(const std::string& line, char sep) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream ss(line);
  while (std::getline(ss, cur, sep)) out.push_back(cur);
  return out;
}

std::uint64_t parse_u64(const std::string& s, std::size_t line) {
  std::uint64_t v = 0;
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || p != s.data() + s.size() || s.empty()) {
    throw Error(ErrorKind::ParseError, "line " + std::to_string(line) + ": bad integer '" + s + "'");
  }
  return v;
}

std::string mpq_text(const mpq_class& q) { return q.get_str(); }

json value_json(const ObservedValue& v) {
  return std::visit([](const auto& x) { return json(x); }, v);
}

}  // namespace

SternIndex parse_index(std::string_view text) {
  BigInt v = IndexParser(text).parse();
  if (sgn(v) < 0) throw Error(ErrorKind::OutOfDomain, "index '" + std::string(text) + "' is negative");
  return v;
}

void write_solutions_csv(std::ostream& out, const SearchReport& report) {
  out << "n,binary,r,m\n";
  for (auto n : report.solutions) {
    out << n << ',' << binary_string(SternIndex(static_cast<unsigned long>(n))) << ',' << report.spec.r << ','
        << report.spec.m << '\n';
  }
}

SolutionsFile read_solutions_csv(std::istream& in) {
  SolutionsFile f;
  std::string line;
  std::size_t lineno = 0;
  bool spec_seen = false;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    if (line.rfind("n,", 0) == 0 || line == "n") continue;
    const auto cols = split(line, ',');
    f.solutions.push_back(parse_u64(cols.at(0), lineno));
    if (cols.size() >= 4) {
      CongruenceSpec s{static_cast<std::uint32_t>(parse_u64(cols[2], lineno)),
                       static_cast<std::uint32_t>(parse_u64(cols[3], lineno))};
      if (spec_seen && !(s == f.spec)) {
        throw Error(ErrorKind::ParseError, "line " + std::to_string(lineno) + ": mixed (r,m) in solutions file");
      }
      f.spec = s;
      spec_seen = true;
    } else if (cols.size() != 1) {
      throw Error(ErrorKind::ParseError, "line " + std::to_string(lineno) + ": expected n or n,binary,r,m");
    }
  }
  return f;
}

std::string format_double(double v) {
  char buf[64];
  auto [p, ec] = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, p);
}

void write_curve_csv(std::ostream& out, CurveSeries series, const std::vector<CurvePoint>& points) {
  out << "x,value,series\n";
  const std::string name = to_string(series);
  for (const auto& pt : points) out << pt.x << ',' << format_double(pt.value) << ',' << name << '\n';
}

json poly_json(const IntPoly& p) {
  json a = json::array();
  for (const auto& c : p.coeffs()) a.push_back(c.get_str());
  return a;
}

json to_json(const CongruenceSpec& spec) { return {{"r", spec.r}, {"m", spec.m}}; }

json to_json(const ParamGrid& grid) {
  json g = json::object();
  for (const auto& [k, r] : grid) g[k] = {{"lo", r.lo}, {"hi", r.hi}};
  return g;
}

json to_json(const SearchReport& r) {
  json ex = json::array();
  for (const auto& f : r.exclusions) ex.push_back(to_string(f));
  return {{"spec", to_json(r.spec)},
          {"bound", r.bound},
          {"count", r.count},
          {"solutions", r.solutions},
          {"exclusions", ex},
          {"counts_index_one", r.counts_index_one},
          {"resumed_subtrees", r.resumed_subtrees}};
}

json to_json(const IdentityReport& r) {
  json j{{"identity", r.identity}, {"params", r.range}, {"pass", r.pass}, {"cases", r.cases}, {"notes", r.notes}};
  if (r.counterexample) {
    j["counterexample"] = {{"description", r.counterexample->description},
                           {"lhs", r.counterexample->lhs},
                           {"rhs", r.counterexample->rhs}};
  }
  return j;
}

json to_json(const ConjectureReport& r) {
  json cells = json::array();
  for (const auto& c : r.cells) {
    json obs = json::object();
    for (const auto& [k, v] : c.observation) obs[k] = value_json(v);
    json cell{{"params", c.params}, {"observation", obs}};
    cell["consistent"] = c.consistent ? json(*c.consistent) : json(nullptr);
    cells.push_back(std::move(cell));
  }
  return {{"id", r.id},
          {"grid", to_json(r.grid)},
          {"cells", cells},
          {"summary",
           {{"consistent", r.consistent_count()},
            {"inconsistent", r.inconsistent_count()},
            {"inconclusive", r.inconclusive_count()}}},
          {"notes", r.notes}};
}

json to_json(const MiningReport& r) {
  json fams = json::array();
  for (const auto& f : r.families) {
    json j{{"p", mpq_text(f.triple.p)},
           {"q", mpq_text(f.triple.q)},
           {"u", mpq_text(f.triple.u)},
           {"triple", f.triple.to_string()},
           {"quadruple", f.quadruple},
           {"validated", f.validated}};
    if (f.failed_at) j["failed_at"] = *f.failed_at;
    if (f.failed_value) j["failed_value"] = mpq_text(*f.failed_value);
    if (!f.failure.empty()) j["failure"] = f.failure;
    fams.push_back(std::move(j));
  }
  return {{"spec", to_json(r.spec)},
          {"input_size", r.input_size},
          {"quadruples", r.quadruples},
          {"consistent_triples", r.consistent_triples},
          {"depth", r.depth},
          {"validated", r.validated_count()},
          {"families", fams}};
}

json to_json(const TypoEntry& e) {
  return {{"id", e.id}, {"description", e.description}, {"flagged", e.flagged}, {"evidence", e.evidence}};
}

}  // namespace sternpoly
