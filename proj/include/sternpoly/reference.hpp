#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

namespace sternpoly {

/// Embedded copy of fixtures/reference_tables.json.
const nlohmann::json& reference_tables();

struct ReferenceRow {
  std::uint64_t n;
  std::string binary;
};

/// Rows of Table 2, 3 or 4 (which = 2..4), optionally only those <= bound.
std::vector<ReferenceRow> reference_solutions(int which, std::uint64_t bound = UINT64_MAX);

}  // namespace sternpoly
