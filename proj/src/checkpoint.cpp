#include "sternpoly/checkpoint.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "sternpoly/error.hpp"

namespace sternpoly {

using nlohmann::json;

std::string to_json_text(const CheckpointState& state) {
  json j;
  j["spec"] = {{"r", state.spec.r}, {"m", state.spec.m}};
  j["bound"] = state.bound;
  j["depth"] = state.depth;
  j["completed_subtrees"] = state.completed_subtrees;
  j["partial_solutions"] = state.partial_solutions;
  return j.dump(1);
}

CheckpointState checkpoint_from_json_text(const std::string& text) {
  try {
    json j = json::parse(text);
    CheckpointState s;
    s.spec.r = j.at("spec").at("r").get<std::uint32_t>();
    s.spec.m = j.at("spec").at("m").get<std::uint32_t>();
    s.bound = j.at("bound").get<std::uint64_t>();
    s.depth = j.at("depth").get<unsigned>();
    s.completed_subtrees = j.at("completed_subtrees").get<std::vector<std::uint64_t>>();
    s.partial_solutions = j.at("partial_solutions").get<std::vector<std::uint64_t>>();
    return s;
  } catch (const json::exception& e) {
    throw Error(ErrorKind::ParseError, std::string("malformed checkpoint: ") + e.what());
  }
}

void save_checkpoint(const std::filesystem::path& path, const CheckpointState& state) {
  std::filesystem::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::trunc);
    if (!out) throw Error(ErrorKind::IoError, "cannot write " + tmp.string());
    out << to_json_text(state) << '\n';
    if (!out) throw Error(ErrorKind::IoError, "short write to " + tmp.string());
  }
  std::filesystem::rename(tmp, path);
}

std::optional<CheckpointState> load_checkpoint(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) return std::nullopt;
  std::stringstream ss;
  ss << in.rdbuf();
  return checkpoint_from_json_text(ss.str());
}

}  // namespace sternpoly
