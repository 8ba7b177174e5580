#include "ncst/oracle/conjectures.hpp"

#include <omp.h>

#include <algorithm>
#include <unordered_set>

#include "ncst/oracle/eccentricity.hpp"

namespace ncst::oracle {

namespace {

// Generation-stamped visit marks reused across calls on one thread.
struct VisitMarks {
  std::vector<std::uint32_t> stamp;
  std::uint32_t generation = 0;

  void reset(std::size_t m) {
    if (stamp.size() != m || ++generation == 0) {
      stamp.assign(m, 0);
      generation = 1;
    }
  }
  bool visit(std::uint32_t v) {
    if (stamp[v] == generation) return false;
    stamp[v] = generation;
    return true;
  }
};

thread_local VisitMarks marks;

NodePredicate happy_predicate(TreeCode a, TreeCode b) {
  const TreeCode common = a & b;
  return [common](TreeCode c) { return (c & common) == common; };
}

NodePredicate parking_predicate(TreeCode a, TreeCode b, TreeCode hull) {
  const TreeCode allowed = a | b | hull;
  return [allowed](TreeCode c) { return (c & ~allowed) == 0; };
}

// Perfect flip r -> x is valid when x closes a cycle through r and crosses
// nothing else.
bool perfect_flip_ok(const Tree& t, Edge r, Edge x) {
  if (!t.contains(r) || t.contains(x)) return false;
  for (const Edge& e : t.edges())
    if (e != r && segments_cross(e, x, t.points())) return false;
  const auto cycle = fundamental_cycle(t, x);
  return std::find(cycle.edges.begin(), cycle.edges.end(), r) != cycle.edges.end();
}

struct PerfectSearch {
  std::vector<Edge> removable;
  std::vector<Edge> addable;
  std::uint32_t full = 0;
  std::unordered_set<std::uint64_t> seen;
  std::vector<Flip> path;

  static std::uint64_t key(std::uint32_t removed, std::uint32_t added) {
    return (static_cast<std::uint64_t>(removed) << 32) | added;
  }

  PerfectSearch(const Tree& a, const Tree& b) {
    const auto s = diff(a, b);
    if (s.d > kPerfectSearchLimit)
      throw Error(ErrorKind::TooLarge, "perfect search is limited to d <= " + std::to_string(kPerfectSearchLimit));
    removable = s.only_initial;
    addable = s.only_final;
    full = (1u << s.d) - 1;
  }

  template <class F>
  void for_each_flip(const Tree& t, std::uint32_t removed, std::uint32_t added, F&& f) {
    for (std::size_t i = 0; i < removable.size(); ++i) {
      if (removed >> i & 1) continue;
      for (std::size_t j = 0; j < addable.size(); ++j) {
        if (added >> j & 1) continue;
        if (perfect_flip_ok(t, removable[i], addable[j]) && f(i, j)) return;
      }
    }
  }

  bool complete(const Tree& t, std::uint32_t removed, std::uint32_t added) {
    if (added == full) return true;
    if (!seen.insert(key(removed, added)).second) return false;
    bool found = false;
    for_each_flip(t, removed, added, [&](std::size_t i, std::size_t j) {
      const Flip f{removable[i], addable[j]};
      path.push_back(f);
      if (complete(apply_flip(t, f), removed | 1u << i, added | 1u << j)) return found = true;
      path.pop_back();
      return false;
    });
    return found;
  }

  bool dead_end(const Tree& t, std::uint32_t removed, std::uint32_t added) {
    if (added == full) return false;
    if (!seen.insert(key(removed, added)).second) return false;
    bool any = false, found = false;
    for_each_flip(t, removed, added, [&](std::size_t i, std::size_t j) {
      any = true;
      const Flip f{removable[i], addable[j]};
      path.push_back(f);
      if (dead_end(apply_flip(t, f), removed | 1u << i, added | 1u << j)) return found = true;
      path.pop_back();
      return false;
    });
    return found || !any;
  }
};

}  // namespace

bool geodesic_within(const ReconfigGraph& g, std::uint32_t a, std::uint32_t b, std::span<const int> dist_to_b,
                     const NodePredicate& allowed) {
  if (a == b) return true;
  marks.reset(g.node_count());
  std::vector<std::uint32_t> frontier{a}, next;
  for (int level = dist_to_b[a]; level > 0; --level) {
    next.clear();
    for (const std::uint32_t x : frontier)
      for (const std::uint32_t y : g.neighbors(x)) {
        if (dist_to_b[y] != level - 1) continue;
        if (y == b) return true;
        if (allowed(g.nodes[y]) && marks.visit(y)) next.push_back(y);
      }
    if (next.empty()) return false;
    frontier.swap(next);
  }
  return false;
}

int restricted_distance(const ReconfigGraph& g, std::uint32_t a, std::uint32_t b, const NodePredicate& allowed,
                        std::vector<std::uint32_t>* path) {
  const std::size_t m = g.node_count();
  std::vector<int> dist(m, -1);
  std::vector<std::uint32_t> parent(m, a), queue{a};
  dist[a] = 0;
  for (std::size_t head = 0; head < queue.size() && dist[b] < 0; ++head) {
    const std::uint32_t v = queue[head];
    for (const std::uint32_t w : g.neighbors(v))
      if (dist[w] < 0 && (w == b || allowed(g.nodes[w]))) {
        dist[w] = dist[v] + 1;
        parent[w] = v;
        queue.push_back(w);
      }
  }
  if (path && dist[b] >= 0) {
    path->clear();
    for (std::uint32_t v = b; v != a; v = parent[v]) path->push_back(v);
    path->push_back(a);
    std::reverse(path->begin(), path->end());
  }
  return dist[b];
}

bool happy_edge_check(const ReconfigGraph& g, std::uint32_t a, std::uint32_t b) {
  const auto dist = bfs_levels(g, b);
  return geodesic_within(g, a, b, dist, happy_predicate(g.nodes[a], g.nodes[b]));
}

bool hull_parking_check(const ReconfigGraph& g, const PointSet& ps, std::uint32_t a, std::uint32_t b) {
  const auto dist = bfs_levels(g, b);
  const TreeCode hull = EdgeUniverse(g.n).hull_mask(ps);
  return geodesic_within(g, a, b, dist, parking_predicate(g.nodes[a], g.nodes[b], hull));
}

namespace {

SweepResult sweep_targets(const ReconfigGraph& g, const PointSet& ps, PairCheck check,
                          std::span<const std::uint32_t> targets, std::span<const std::uint64_t> weights) {
  const TreeCode hull = EdgeUniverse(g.n).hull_mask(ps);
  SweepResult out;
  std::uint64_t pairs = 0, passed = 0;
  const auto count = static_cast<std::int64_t>(targets.size());
#pragma omp parallel for schedule(dynamic, 1) reduction(+ : pairs, passed) num_threads(thread_count_from_env())
  for (std::int64_t t = 0; t < count; ++t) {
    const std::uint32_t b = targets[t];
    const auto dist = bfs_levels(g, b);
    for (std::uint32_t a = 0; a < g.node_count(); ++a) {
      const auto allowed = check == PairCheck::Happy ? happy_predicate(g.nodes[a], g.nodes[b])
                                                     : parking_predicate(g.nodes[a], g.nodes[b], hull);
      const bool ok = geodesic_within(g, a, b, dist, allowed);
      pairs += weights[t];
      if (ok) {
        passed += weights[t];
      } else {
#pragma omp critical
        if (!out.counterexample) out.counterexample = std::pair{a, b};
      }
    }
  }
  out.pairs = pairs;
  out.passed = passed;
  return out;
}

}  // namespace

SweepResult sweep_pairs(const ReconfigGraph& g, const PointSet& ps, PairCheck check, const Orbits& orbits) {
  std::vector<std::uint64_t> weights(orbits.representatives.size(), 0);
  for (const auto o : orbits.orbit_of) ++weights[o];
  return sweep_targets(g, ps, check, orbits.representatives, weights);
}

SweepResult sample_pairs(const ReconfigGraph& g, const PointSet& ps, PairCheck check, int targets, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::uint32_t> pick(0, static_cast<std::uint32_t>(g.node_count() - 1));
  std::vector<std::uint32_t> chosen;
  for (int i = 0; i < targets; ++i) chosen.push_back(pick(rng));
  const std::vector<std::uint64_t> weights(chosen.size(), 1);
  return sweep_targets(g, ps, check, chosen, weights);
}

FlipSequence sequence_from_nodes(const ReconfigGraph& g, const PointSetPtr& ps, std::span<const std::uint32_t> path) {
  const EdgeUniverse u(g.n);
  FlipSequence seq{u.to_tree(ps, g.nodes[path.front()]), {}};
  for (std::size_t k = 0; k + 1 < path.size(); ++k) {
    const TreeCode x = g.nodes[path[k]], y = g.nodes[path[k + 1]];
    const auto removed = u.decode(x & ~y), added = u.decode(y & ~x);
    if (removed.size() != 1 || added.size() != 1)
      throw Error(ErrorKind::InvariantViolation, "consecutive nodes are not one flip apart");
    seq.steps.push_back(Flip{removed[0], added[0]});
  }
  return seq;
}

std::vector<std::uint32_t> random_geodesic(const ReconfigGraph& g, std::uint32_t a, std::uint32_t b,
                                           std::span<const int> dist_to_b, std::mt19937_64& rng) {
  std::vector<std::uint32_t> path{a};
  std::vector<std::uint32_t> options;
  for (std::uint32_t v = a; v != b;) {
    options.clear();
    for (const std::uint32_t w : g.neighbors(v))
      if (dist_to_b[w] == dist_to_b[v] - 1) options.push_back(w);
    v = options[std::uniform_int_distribution<std::size_t>(0, options.size() - 1)(rng)];
    path.push_back(v);
  }
  return path;
}

std::optional<FlipSequence> perfect_sequence(const Tree& a, const Tree& b) {
  PerfectSearch search(a, b);
  if (!search.complete(a, 0, 0)) return std::nullopt;
  return FlipSequence{a, search.path};
}

GreedyOutcome greedy_perfect(const Tree& a, const Tree& b) {
  PerfectSearch search(a, b);
  GreedyOutcome out{false, FlipSequence{a, {}}};
  Tree cur = a;
  std::uint32_t removed = 0, added = 0;
  while (added != search.full) {
    std::optional<std::pair<std::size_t, std::size_t>> pick;
    search.for_each_flip(cur, removed, added, [&](std::size_t i, std::size_t j) {
      pick = std::pair{i, j};
      return true;
    });
    if (!pick) return out;
    const Flip f{search.removable[pick->first], search.addable[pick->second]};
    cur = apply_flip(cur, f);
    out.steps.steps.push_back(f);
    removed |= 1u << pick->first;
    added |= 1u << pick->second;
  }
  out.completed = true;
  return out;
}

std::optional<FlipSequence> perfect_dead_end(const Tree& a, const Tree& b) {
  PerfectSearch search(a, b);
  if (!search.dead_end(a, 0, 0)) return std::nullopt;
  return FlipSequence{a, search.path};
}

std::optional<GreedyFailure> find_greedy_failure(const ReconfigGraph& g, const PointSetPtr& ps) {
  const EdgeUniverse u(g.n);
  for (std::uint32_t b = 0; b < g.node_count(); ++b) {
    const auto dist = bfs_levels(g, b);
    for (std::uint32_t a = 0; a < g.node_count(); ++a) {
      const int d = popcount(g.nodes[a] & ~g.nodes[b]);
      if (d < 2 || dist[a] != d) continue;
      const Tree ta = u.to_tree(ps, g.nodes[a]), tb = u.to_tree(ps, g.nodes[b]);
      auto stuck = perfect_dead_end(ta, tb);
      if (!stuck) continue;
      auto perfect = perfect_sequence(ta, tb);
      if (!perfect) throw Error(ErrorKind::InvariantViolation, "distance equals d but no perfect sequence found");
      return GreedyFailure{ta, tb, std::move(*perfect), std::move(*stuck)};
    }
  }
  return std::nullopt;
}

PerfectStats perfect_statistics(const ReconfigGraph& g) {
  PerfectStats out;
  for (std::uint32_t b = 0; b < g.node_count(); ++b) {
    const auto dist = bfs_levels(g, b);
    for (std::uint32_t a = 0; a < g.node_count(); ++a) {
      if (a == b) continue;
      ++out.pairs;
      out.perfect += dist[a] == popcount(g.nodes[a] & ~g.nodes[b]);
    }
  }
  return out;
}

std::vector<Flip> slide_adjacent(const Tree& t) {
  if (t.edges().empty()) throw Error(ErrorKind::Precondition, "slides need a tree with edges");
  const PointSet& ps = t.points();
  const auto adj = t.adjacency();
  std::vector<Flip> out;
  for (const Edge& uv : t.edges())
    for (const int u : {uv.a, uv.b}) {
      const int v = uv.other(u);
      for (const int w : adj[v]) {
        if (w == u) continue;
        const Edge uw(u, w);
        if (t.contains(uw)) continue;
        const bool crossing = std::any_of(t.edges().begin(), t.edges().end(),
                                          [&](const Edge& e) { return e != uv && segments_cross(e, uw, ps); });
        if (crossing || !triangle_empty(u, v, w, ps)) continue;
        out.push_back(Flip{uv, uw});
      }
    }
  return out;
}

std::optional<SlideGap> slide_happy_gap(const ReconfigGraph& g, const PointSetPtr& ps, std::optional<int> distance) {
  if (g.rule != FlipRule::Slide) throw Error(ErrorKind::Precondition, "slide gap search needs a slide graph");
  const auto orbits = ps->is_convex() ? symmetry_orbits(g, SymmetryGroup(*ps, EdgeUniverse(g.n))) : trivial_orbits(g);
  const EdgeUniverse u(g.n);
  std::optional<SlideGap> fallback;
  for (const std::uint32_t b : orbits.representatives) {
    std::vector<int> dist;
    const auto parent = bfs_parents(g, b, dist);
    for (std::uint32_t a = 0; a < g.node_count(); ++a) {
      if (dist[a] == 0 || (distance && dist[a] != *distance)) continue;
      const auto happy = happy_predicate(g.nodes[a], g.nodes[b]);
      if (geodesic_within(g, a, b, dist, happy)) continue;
      std::vector<std::uint32_t> restricted;
      const int rd = restricted_distance(g, a, b, happy, &restricted);
      std::vector<std::uint32_t> shortest{a};
      for (std::uint32_t v = a; v != b; v = parent[v]) shortest.push_back(parent[v]);
      SlideGap gap{u.to_tree(ps, g.nodes[a]), u.to_tree(ps, g.nodes[b]), dist[a], rd,
                   sequence_from_nodes(g, ps, shortest), FlipSequence{u.to_tree(ps, g.nodes[a]), {}}};
      if (rd >= 0) gap.happy_shortest = sequence_from_nodes(g, ps, restricted);
      if (!distance || rd == dist[a] + 1) return gap;
      if (!fallback) fallback = std::move(gap);
    }
  }
  return fallback;
}

}  // namespace ncst::oracle
