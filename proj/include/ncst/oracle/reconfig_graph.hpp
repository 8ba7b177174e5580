#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "ncst/oracle/tree_code.hpp"

namespace ncst::oracle {

enum class FlipRule { Exchange, Slide };

const char* to_string(FlipRule rule);
/// Throws InvalidInput.
FlipRule parse_flip_rule(const std::string& name);

/// Immutable flip graph in CSR form; node ids index the sorted code list.
struct ReconfigGraph {
  int n = 0;
  FlipRule rule = FlipRule::Exchange;
  std::vector<TreeCode> nodes;
  std::vector<std::uint64_t> offsets;  // size nodes.size() + 1
  std::vector<std::uint32_t> targets;

  std::size_t node_count() const { return nodes.size(); }
  std::size_t edge_count() const { return targets.size() / 2; }
  std::span<const std::uint32_t> neighbors(std::size_t v) const {
    return {targets.data() + offsets[v], targets.data() + offsets[v + 1]};
  }
  /// Node id of `code`, or -1.
  std::int64_t find(TreeCode code) const;
  /// Node id of `code`; throws NotFound.
  std::uint32_t id(TreeCode code) const;
};

/// Trees one exchange flip away: add a non-tree edge crossing at most one
/// tree edge, remove a cycle edge (the crossed one, if any).
std::vector<TreeCode> exchange_neighbors(TreeCode t, const EdgeUniverse& u, std::span<const TreeCode> cross);

/// Trees one edge slide away: replace uv by uw for a tree edge vw, when uw
/// crosses nothing and triangle uvw holds no point.
std::vector<TreeCode> slide_neighbors(TreeCode t, const EdgeUniverse& u, std::span<const TreeCode> cross,
                                      const PointSet& ps);

ReconfigGraph build_graph(std::vector<TreeCode> trees, const PointSet& ps, FlipRule rule);

/// FNV-1a over the coordinates.
std::uint64_t point_set_hash(const PointSet& ps);

std::filesystem::path cache_path(const std::filesystem::path& dir, const PointSet& ps, FlipRule rule);
void save_graph(const std::filesystem::path& file, const ReconfigGraph& g, std::uint64_t hash);
/// nullopt when the file is missing or was written for other parameters;
/// throws InvalidInput on a corrupt file.
std::optional<ReconfigGraph> load_graph(const std::filesystem::path& file, int n, FlipRule rule, std::uint64_t hash);

}  // namespace ncst::oracle
