#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "sternpoly/conjectures.hpp"
#include "sternpoly/identities.hpp"
#include "sternpoly/mining.hpp"
#include "sternpoly/search.hpp"

namespace sternpoly {

/// Parses an index literal: a decimal number, an integer expression over
/// + - * ^ and parentheses such as "2^20-3" or "5*2^7+1", or a family
/// reference p[k,n], s[i,n], h[n], H[n], alpha[n], beta[n], ones[n] (2^{n+1}-1),
/// twos[n] (2^{n+2}-3). Spaces are ignored. Throws ParseError on malformed
/// text and OutOfDomain for negative results or invalid family parameters.
SternIndex parse_index(std::string_view text);

/// Solutions file: header "n,binary,r,m", one row per solution.
void write_solutions_csv(std::ostream& out, const SearchReport& report);
struct SolutionsFile {
  CongruenceSpec spec;
  std::vector<std::uint64_t> solutions;
};
/// Reads a solutions file; also accepts a bare list of integers, one per line
/// (then spec is left at its default). Throws ParseError.
SolutionsFile read_solutions_csv(std::istream& in);

/// Curve file: header "x,value,series".
void write_curve_csv(std::ostream& out, CurveSeries series, const std::vector<CurvePoint>& points);

/// Shortest round-trip decimal form of a double, locale independent.
std::string format_double(double v);

/// Polynomial as an array of decimal strings (ascending).
nlohmann::json poly_json(const IntPoly& p);
nlohmann::json to_json(const CongruenceSpec& spec);
nlohmann::json to_json(const SearchReport& report);
nlohmann::json to_json(const IdentityReport& report);
nlohmann::json to_json(const ConjectureReport& report);
nlohmann::json to_json(const MiningReport& report);
nlohmann::json to_json(const TypoEntry& entry);
nlohmann::json to_json(const ParamGrid& grid);

}  // namespace sternpoly
