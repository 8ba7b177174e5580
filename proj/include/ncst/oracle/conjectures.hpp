#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <span>
#include <vector>

#include "ncst/oracle/reconfig_graph.hpp"
#include "ncst/oracle/symmetry.hpp"

namespace ncst::oracle {

using NodePredicate = std::function<bool(TreeCode)>;

/// Whether some shortest a-b path stays inside `allowed`, given distances to
/// b for every node. Endpoints are always allowed.
bool geodesic_within(const ReconfigGraph& g, std::uint32_t a, std::uint32_t b, std::span<const int> dist_to_b,
                     const NodePredicate& allowed);

/// BFS distance inside the subgraph induced by `allowed` (endpoints always
/// allowed); -1 when b is unreachable there.
int restricted_distance(const ReconfigGraph& g, std::uint32_t a, std::uint32_t b, const NodePredicate& allowed,
                        std::vector<std::uint32_t>* path = nullptr);

/// Shortest path restricted to trees containing every edge shared by a and b
/// is as short as the unrestricted one.
bool happy_edge_check(const ReconfigGraph& g, std::uint32_t a, std::uint32_t b);

/// Shortest path restricted to trees using only edges of a, b, and the hull
/// is as short as the unrestricted one.
bool hull_parking_check(const ReconfigGraph& g, const PointSet& ps, std::uint32_t a, std::uint32_t b);

enum class PairCheck { Happy, Parking };

struct SweepResult {
  std::uint64_t pairs = 0;
  std::uint64_t passed = 0;
  std::optional<std::pair<std::uint32_t, std::uint32_t>> counterexample;  // (a, b)
};

/// All ordered pairs. Targets are taken per symmetry orbit and each result
/// is weighted by the orbit size, so `pairs` is always m^2.
SweepResult sweep_pairs(const ReconfigGraph& g, const PointSet& ps, PairCheck check, const Orbits& orbits);

/// `targets` random targets, each against every source.
SweepResult sample_pairs(const ReconfigGraph& g, const PointSet& ps, PairCheck check, int targets, std::uint64_t seed);

/// The tree sequence along a node path as flips.
FlipSequence sequence_from_nodes(const ReconfigGraph& g, const PointSetPtr& ps, std::span<const std::uint32_t> path);

/// A uniformly stepped shortest path from a to b.
std::vector<std::uint32_t> random_geodesic(const ReconfigGraph& g, std::uint32_t a, std::uint32_t b,
                                           std::span<const int> dist_to_b, std::mt19937_64& rng);

constexpr int kPerfectSearchLimit = 20;

/// A sequence of exactly |a \ b| flips if one exists. Throws TooLarge when
/// the difference exceeds kPerfectSearchLimit.
std::optional<FlipSequence> perfect_sequence(const Tree& a, const Tree& b);

struct GreedyOutcome {
  bool completed = false;
  FlipSequence steps;
};

/// Repeatedly applies the lexicographically first valid perfect flip.
GreedyOutcome greedy_perfect(const Tree& a, const Tree& b);

/// Perfect flips from a leading to a tree other than b that admits no
/// further perfect flip.
std::optional<FlipSequence> perfect_dead_end(const Tree& a, const Tree& b);

struct GreedyFailure {
  Tree a;
  Tree b;
  FlipSequence perfect;
  FlipSequence dead_end;
};

/// First pair (in node order) with a perfect sequence and a reachable dead
/// end.
std::optional<GreedyFailure> find_greedy_failure(const ReconfigGraph& g, const PointSetPtr& ps);

struct PerfectStats {
  std::uint64_t pairs = 0;
  std::uint64_t perfect = 0;
};

/// Ordered pairs a != b whose distance equals |a \ b|.
PerfectStats perfect_statistics(const ReconfigGraph& g);

/// Every edge slide available in t.
std::vector<Flip> slide_adjacent(const Tree& t);

struct SlideGap {
  Tree a;
  Tree b;
  int slide_distance = 0;
  int happy_distance = 0;
  FlipSequence shortest;
  FlipSequence happy_shortest;
};

/// First pair whose happy-restricted slide distance exceeds the slide
/// distance; with `distance`, only pairs at that slide distance qualify.
/// `g` must be a slide graph.
std::optional<SlideGap> slide_happy_gap(const ReconfigGraph& g, const PointSetPtr& ps,
                                        std::optional<int> distance = std::nullopt);

}  // namespace ncst::oracle
