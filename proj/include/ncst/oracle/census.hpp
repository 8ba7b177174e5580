#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>

#include "ncst/oracle/reconfig_graph.hpp"
#include "ncst/oracle/symmetry.hpp"

namespace ncst::oracle {

constexpr int kDiameterLimit = 10;

struct CensusOptions {
  bool paths = false;
  bool use_symmetry = true;
  FlipRule rule = FlipRule::Exchange;
  int threads = 0;  // 0: NCST_THREADS
  std::optional<std::filesystem::path> cache_dir;
  bool force = false;
};

struct PathStats {
  std::uint64_t count = 0;
  int diameter = 0;             // max distance between two paths
  int radius_all_centers = 0;   // min over all trees of the max distance to a path
  int radius_path_centers = 0;  // min over paths of the max distance to a path
};

struct CensusRow {
  int n = 0;
  std::uint64_t trees = 0;
  std::uint64_t flip_edges = 0;
  int diameter = 0;
  int radius = 0;
  std::optional<PathStats> paths;
};

/// Loads the graph from the cache directory when present, otherwise
/// enumerates, builds, and stores it there.
ReconfigGraph load_or_build(const PointSet& ps, FlipRule rule, const std::optional<std::filesystem::path>& cache_dir,
                            bool force = false);

/// 1 for nodes whose tree is a spanning path.
std::vector<char> path_mask(const ReconfigGraph& g);

struct DiameterRadius {
  int diameter = 0;
  int radius = 0;
};

/// One BFS per orbit representative.
DiameterRadius diameter_radius(const ReconfigGraph& g, const Orbits& orbits, int threads = 0);
PathStats path_stats(const ReconfigGraph& g, const Orbits& orbits, int threads = 0);

/// Throws TooLarge when n exceeds kDiameterLimit without `force`.
CensusRow census(const PointSet& ps, const CensusOptions& options);

/// "trees flip_edges diameter radius[ paths path_diameter path_radius]".
std::string format_row(const CensusRow& row);

}  // namespace ncst::oracle
