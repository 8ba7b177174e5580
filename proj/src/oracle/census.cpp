#include "ncst/oracle/census.hpp"

#include <algorithm>
#include <array>

#include "ncst/oracle/eccentricity.hpp"
#include "ncst/oracle/enumerate.hpp"

namespace ncst::oracle {

namespace {

Orbits orbits_for(const PointSet& ps, const ReconfigGraph& g, bool use_symmetry) {
  if (!use_symmetry || !ps.is_convex()) return trivial_orbits(g);
  return symmetry_orbits(g, SymmetryGroup(ps, EdgeUniverse(ps.size())));
}

Eccentricities run(const ReconfigGraph& g, const Orbits& orbits, std::span<const char> marked, int threads) {
  if (threads <= 0) threads = thread_count_from_env();
  if (threads == 1) return eccentricities_serial(g, orbits.representatives, marked);
  return eccentricities_parallel(g, orbits.representatives, marked, threads);
}

PathStats summarize_paths(const std::vector<char>& mask, const Orbits& orbits, const Eccentricities& ecc, int n) {
  PathStats s;
  s.count = static_cast<std::uint64_t>(std::count(mask.begin(), mask.end(), 1));
  s.radius_all_centers = *std::min_element(ecc.marked.begin(), ecc.marked.end());
  s.radius_path_centers = n * n;
  for (std::size_t i = 0; i < orbits.representatives.size(); ++i) {
    if (!mask[orbits.representatives[i]]) continue;
    s.diameter = std::max(s.diameter, ecc.marked[i]);
    s.radius_path_centers = std::min(s.radius_path_centers, ecc.marked[i]);
  }
  return s;
}

}  // namespace

ReconfigGraph load_or_build(const PointSet& ps, FlipRule rule, const std::optional<std::filesystem::path>& cache_dir,
                            bool force) {
  const auto hash = point_set_hash(ps);
  std::filesystem::path file;
  if (cache_dir) {
    file = cache_path(*cache_dir, ps, rule);
    if (auto g = load_graph(file, ps.size(), rule, hash)) return std::move(*g);
  }
  const EdgeUniverse u(ps.size());
  auto g = build_graph(enumerate_trees(ps, u, force), ps, rule);
  if (cache_dir) {
    std::filesystem::create_directories(*cache_dir);
    save_graph(file, g, hash);
  }
  return g;
}

std::vector<char> path_mask(const ReconfigGraph& g) {
  const EdgeUniverse u(g.n);
  std::vector<char> mask(g.node_count(), 0);
  for (std::size_t v = 0; v < g.node_count(); ++v) {
    std::array<int, kMaxCodePoints> deg{};
    bool ok = true;
    for_each_bit(g.nodes[v], [&](int i) {
      const Edge e = u.edge(i);
      ok &= ++deg[e.a] <= 2;
      ok &= ++deg[e.b] <= 2;
    });
    mask[v] = ok;
  }
  return mask;
}

DiameterRadius diameter_radius(const ReconfigGraph& g, const Orbits& orbits, int threads) {
  const auto ecc = run(g, orbits, {}, threads);
  return {*std::max_element(ecc.all.begin(), ecc.all.end()), *std::min_element(ecc.all.begin(), ecc.all.end())};
}

PathStats path_stats(const ReconfigGraph& g, const Orbits& orbits, int threads) {
  const auto mask = path_mask(g);
  return summarize_paths(mask, orbits, run(g, orbits, mask, threads), g.n);
}

CensusRow census(const PointSet& ps, const CensusOptions& options) {
  if (ps.size() > kDiameterLimit && !options.force)
    throw Error(ErrorKind::TooLarge, "diameter runs are limited to n <= " + std::to_string(kDiameterLimit));
  const auto g = load_or_build(ps, options.rule, options.cache_dir, options.force);
  const auto orbits = orbits_for(ps, g, options.use_symmetry);
  const auto mask = options.paths ? path_mask(g) : std::vector<char>{};
  const auto ecc = run(g, orbits, mask, options.threads);

  CensusRow row;
  row.n = ps.size();
  row.trees = g.node_count();
  row.flip_edges = g.edge_count();
  row.diameter = *std::max_element(ecc.all.begin(), ecc.all.end());
  row.radius = *std::min_element(ecc.all.begin(), ecc.all.end());
  if (options.paths) row.paths = summarize_paths(mask, orbits, ecc, row.n);
  return row;
}

std::string format_row(const CensusRow& row) {
  std::string s = std::to_string(row.trees) + " " + std::to_string(row.flip_edges) + " " +
                  std::to_string(row.diameter) + " " + std::to_string(row.radius);
  if (row.paths)
    s += " " + std::to_string(row.paths->count) + " " + std::to_string(row.paths->diameter) + " " +
         std::to_string(row.paths->radius_all_centers);
  return s;
}

}  // namespace ncst::oracle
