#pragma once

#include <cstdint>
#include <vector>

#include "ncst/oracle/reconfig_graph.hpp"

namespace ncst::oracle {

/// Rotations and reflections of the hull cycle acting on tree codes. Map 0
/// is the identity, 1..n-1 rotations, n..2n-1 reflections.
class SymmetryGroup {
 public:
  /// Throws NotConvex.
  SymmetryGroup(const PointSet& ps, const EdgeUniverse& u);

  int size() const { return static_cast<int>(point_maps_.size()); }
  const std::vector<int>& point_map(int k) const { return point_maps_[k]; }
  TreeCode apply(int k, TreeCode code) const;

 private:
  std::vector<std::vector<int>> point_maps_;
  std::vector<std::vector<int>> edge_maps_;
};

struct Orbits {
  std::vector<std::uint32_t> orbit_of;         // per node: index into representatives
  std::vector<std::uint32_t> representatives;  // smallest node id of each orbit
};

/// Orbits of the group on the graph's nodes.
Orbits symmetry_orbits(const ReconfigGraph& g, const SymmetryGroup& sym);

/// Every node as its own orbit.
Orbits trivial_orbits(const ReconfigGraph& g);

}  // namespace ncst::oracle
