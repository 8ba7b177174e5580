#include "ncst/oracle/symmetry.hpp"

#include <numeric>

namespace ncst::oracle {

SymmetryGroup::SymmetryGroup(const PointSet& ps, const EdgeUniverse& u) {
  if (!ps.is_convex()) throw Error(ErrorKind::NotConvex, "symmetry reduction needs convex position");
  const int n = ps.size();
  const auto hull = ps.hull_cycle();
  for (int mirror = 0; mirror < 2; ++mirror)
    for (int shift = 0; shift < n; ++shift) {
      std::vector<int> map(n);
      for (int p = 0; p < n; ++p) {
        const int q = mirror ? (shift - p + n) % n : (p + shift) % n;
        map[hull[p]] = hull[q];
      }
      std::vector<int> edges(u.size());
      for (int i = 0; i < u.size(); ++i) {
        const Edge e = u.edge(i);
        edges[i] = u.index(Edge(map[e.a], map[e.b]));
      }
      point_maps_.push_back(std::move(map));
      edge_maps_.push_back(std::move(edges));
    }
}

TreeCode SymmetryGroup::apply(int k, TreeCode code) const {
  TreeCode out = 0;
  const auto& em = edge_maps_[k];
  for_each_bit(code, [&](int i) { out |= bit(em[i]); });
  return out;
}

Orbits symmetry_orbits(const ReconfigGraph& g, const SymmetryGroup& sym) {
  const std::size_t m = g.node_count();
  std::vector<std::uint32_t> parent(m);
  std::iota(parent.begin(), parent.end(), 0u);
  auto find = [&](std::uint32_t v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  // One rotation and one reflection generate the group.
  const int n = sym.size() / 2;
  for (std::uint32_t v = 0; v < m; ++v)
    for (int k : {1 % n, n}) {
      const std::uint32_t w = g.id(sym.apply(k, g.nodes[v]));
      const auto a = find(v), b = find(w);
      if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
  Orbits out;
  out.orbit_of.resize(m);
  std::vector<std::int64_t> slot(m, -1);
  for (std::uint32_t v = 0; v < m; ++v) {
    const auto r = find(v);
    if (slot[r] < 0) {
      slot[r] = static_cast<std::int64_t>(out.representatives.size());
      out.representatives.push_back(r);
    }
    out.orbit_of[v] = static_cast<std::uint32_t>(slot[r]);
  }
  return out;
}

Orbits trivial_orbits(const ReconfigGraph& g) {
  Orbits out;
  out.orbit_of.resize(g.node_count());
  std::iota(out.orbit_of.begin(), out.orbit_of.end(), 0u);
  out.representatives = out.orbit_of;
  return out;
}

}  // namespace ncst::oracle
