#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <vector>

#include "sternpoly/search.hpp"

namespace sternpoly {

/// Resumable state of a subtree-partitioned sweep. Serialized as
/// {"spec": {"r", "m"}, "bound", "depth", "completed_subtrees": [...],
///  "partial_solutions": [...]}; subtree ids are the subtree root indices.
struct CheckpointState {
  CongruenceSpec spec;
  std::uint64_t bound = 0;
  unsigned depth = 0;
  std::vector<std::uint64_t> completed_subtrees;  // sorted
  std::vector<std::uint64_t> partial_solutions;   // sorted, from completed subtrees only
};

std::string to_json_text(const CheckpointState& state);
CheckpointState checkpoint_from_json_text(const std::string& text);

/// Write via a temporary file and rename so an interrupted write never
/// leaves a truncated checkpoint behind.
void save_checkpoint(const std::filesystem::path& path, const CheckpointState& state);
std::optional<CheckpointState> load_checkpoint(const std::filesystem::path& path);

}  // namespace sternpoly
