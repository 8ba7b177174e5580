#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "ncst/oracle/reconfig_graph.hpp"

namespace ncst::oracle {

/// Thread count from NCST_THREADS; 1 when unset or invalid.
int thread_count_from_env();

/// Distances from `source` to every node. Throws Unreachable if the graph is
/// disconnected.
std::vector<int> bfs_levels(const ReconfigGraph& g, std::uint32_t source);

/// BFS tree parents (parent of the source is itself) alongside distances.
std::vector<std::uint32_t> bfs_parents(const ReconfigGraph& g, std::uint32_t source, std::vector<int>& dist);

int bfs_distance(const ReconfigGraph& g, std::uint32_t a, std::uint32_t b);

/// Per source: the largest distance to any node and to any marked node.
struct Eccentricities {
  std::vector<int> all;
  std::vector<int> marked;
};

/// `marked` may be empty, in which case Eccentricities::marked stays empty.
Eccentricities eccentricities_serial(const ReconfigGraph& g, std::span<const std::uint32_t> sources,
                                     std::span<const char> marked = {});
Eccentricities eccentricities_parallel(const ReconfigGraph& g, std::span<const std::uint32_t> sources,
                                       std::span<const char> marked = {}, int threads = 0);

}  // namespace ncst::oracle
