#include "ncst/two_phase.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace ncst {

namespace {

std::string edge_str(Edge e) { return "[" + std::to_string(e.a) + ", " + std::to_string(e.b) + "]"; }

Tree end_of(const FlipSequence& seq) {
  Tree t = seq.start;
  for (const Flip& f : seq.steps) t = apply_flip(t, f);
  return t;
}

// The sequence computed on a reordered copy, restated on `start`'s point set.
FlipSequence restate(const Tree& start, const FlipSequence& seq) { return FlipSequence{start, seq.steps}; }

PointSetPtr reversed_points(const Tree& t) { return std::make_shared<const PointSet>(t.points().reversed()); }

bool consecutive_ranks(const PointSet& ps, Edge e) { return std::abs(ps.rank(e.a) - ps.rank(e.b)) == 1; }

// Bottom endpoint rank first, then top endpoint rank.
std::pair<int, int> rank_key(const PointSet& ps, Edge e) {
  const int ra = ps.rank(e.a), rb = ps.rank(e.b);
  return {std::min(ra, rb), std::max(ra, rb)};
}

// The target edge joining v to a lower vertex; nullopt for the bottom vertex.
std::optional<Edge> down_edge(const Tree& target, int v) {
  const PointSet& ps = target.points();
  std::optional<Edge> found;
  for (const Edge& e : target.edges()) {
    if (!e.has(v) || ps.rank(e.other(v)) > ps.rank(v)) continue;
    if (found) throw Error(ErrorKind::Precondition, "vertex " + std::to_string(v) + " has two lower target edges");
    found = e;
  }
  return found;
}

// Structure of T_{i-1} before phase-2 processes rank r: the b-edges below r
// form a connected subtree, every component of the part at ranks >= r has
// exactly one connector, and connectors are happy whenever that part is
// disconnected.
void check_phase2_state(const Tree& current, const Tree& t_down, const Tree& t_up, int r) {
  const PointSet& ps = current.points();
  const int n = ps.size();
  std::vector<int> comp(n);
  std::iota(comp.begin(), comp.end(), 0);
  auto find = [&](int v) {
    while (comp[v] != v) v = comp[v] = comp[comp[v]];
    return v;
  };
  std::vector<Edge> connectors;
  int below_edges = 0;
  for (const Edge& e : current.edges()) {
    const bool a_low = ps.rank(e.a) < r, b_low = ps.rank(e.b) < r;
    if (a_low && b_low) {
      ++below_edges;
      const bool is_b = t_up.contains(e) && down_edge(t_up, ps.rank(e.a) > ps.rank(e.b) ? e.a : e.b) == e;
      if (!is_b) throw Error(ErrorKind::InvariantViolation, "edge " + edge_str(e) + " below the frontier is not a b-edge");
    } else if (a_low != b_low) {
      connectors.push_back(e);
    } else {
      comp[find(e.a)] = find(e.b);
    }
  }
  if (below_edges != r - 1)
    throw Error(ErrorKind::InvariantViolation, "b-subtree below rank " + std::to_string(r) + " is not connected");
  std::vector<int> connector_count(n, 0);
  for (const Edge& e : connectors) ++connector_count[find(ps.rank(e.a) >= r ? e.a : e.b)];
  int components = 0;
  for (int q = r; q < n; ++q) {
    const int v = ps.at_rank(q);
    if (find(v) != v) continue;
    ++components;
    if (connector_count[v] != 1)
      throw Error(ErrorKind::InvariantViolation, "component at rank " + std::to_string(q) + " has " +
                                                     std::to_string(connector_count[v]) + " connectors");
  }
  if (components > 1) {
    for (const Edge& e : connectors)
      if (!(t_down.contains(e) && t_up.contains(e)))
        throw Error(ErrorKind::InvariantViolation, "unhappy connector " + edge_str(e) + " while the upper part is disconnected");
  }
}

}  // namespace

OrientationProfile orientation_profile(const Tree& t) {
  const PointSet& ps = t.points();
  const int n = ps.size();
  std::vector<char> has_up(n, 0), has_down(n, 0);
  for (const Edge& e : t.edges()) {
    const bool a_low = ps.rank(e.a) < ps.rank(e.b);
    has_up[a_low ? e.a : e.b] = 1;
    has_down[a_low ? e.b : e.a] = 1;
  }
  OrientationProfile p;
  for (int r = 0; r < n; ++r) {
    const int v = ps.at_rank(r);
    if (!has_up[v]) p.sinks.push_back(v);
    if (!has_down[v]) p.sources.push_back(v);
  }
  p.s = static_cast<int>(p.sources.size());
  p.t = static_cast<int>(p.sinks.size());
  return p;
}

int visible_above(const Tree& t, int i) {
  const PointSet& ps = t.points();
  const int n = ps.size();
  if (ps.rank(i) == n - 1) throw Error(ErrorKind::Precondition, "the top vertex has nothing above it");
  for (const Edge& e : t.edges())
    if (e.has(i) && ps.rank(e.other(i)) > ps.rank(i))
      throw Error(ErrorKind::Precondition, "vertex " + std::to_string(i) + " is not a sink");
  for (int r = ps.rank(i) + 1; r < n; ++r) {
    const int j = ps.at_rank(r);
    const Edge probe(i, j);
    const bool blocked = std::any_of(t.edges().begin(), t.edges().end(),
                                     [&](const Edge& e) { return segments_cross(e, probe, ps); });
    if (!blocked) return j;
  }
  throw Error(ErrorKind::InvariantViolation, "sink " + std::to_string(i) + " sees no higher vertex");
}

Flip reduce_sink(const Tree& t, int i) {
  const PointSet& ps = t.points();
  const int j = visible_above(t, i);
  const Edge added(i, j);
  const auto cycle = fundamental_cycle(t, added);
  const int lowest = *std::min_element(cycle.vertices.begin(), cycle.vertices.end(),
                                       [&](int a, int b) { return ps.rank(a) < ps.rank(b); });
  std::optional<Edge> removed;
  for (const Edge& e : cycle.edges) {
    if (!e.has(lowest) || e == added) continue;
    if (!removed || ps.rank(e.other(lowest)) > ps.rank(removed->other(lowest))) removed = e;
  }
  if (!removed) throw Error(ErrorKind::InvariantViolation, "lowest cycle vertex has no tree edge");
  return Flip{*removed, added};
}

FlipSequence to_downward(const Tree& t) {
  const PointSet& ps = t.points();
  FlipSequence seq{t, {}};
  Tree current = t;
  for (;;) {
    const auto profile = orientation_profile(current);
    if (profile.t <= 1) break;
    // Sinks are listed by rank; the last one is the top vertex.
    const Flip f = reduce_sink(current, profile.sinks.front());
    if (consecutive_ranks(ps, f.remove))
      throw Error(ErrorKind::InvariantViolation, "sink reduction removed consecutive edge " + edge_str(f.remove));
    current = apply_flip(current, f);
    seq.steps.push_back(f);
  }
  return seq;
}

FlipSequence to_upward(const Tree& t) { return restate(t, to_downward(t.rebased(reversed_points(t)))); }

OppositeTrees choose_opposite(const Tree& t1, const Tree& t2) {
  const int n = t1.vertex_count();
  const auto p1 = orientation_profile(t1);
  const auto p2 = orientation_profile(t2);
  OppositeTrees out{false, FlipSequence{t1, {}}, FlipSequence{t2, {}}};
  if (p1.s + p2.t <= n) {
    out.first_upward = true;
    out.first = to_upward(t1);
    out.second = to_downward(t2);
  } else {
    out.first = to_downward(t1);
    out.second = to_upward(t2);
  }
  return out;
}

FlipSequence perfect_sweep(const Tree& start, const Tree& target, std::span<const int> vertices) {
  const PointSet& ps = start.points();
  FlipSequence seq{start, {}};
  Tree current = start;
  for (int v : vertices) {
    const auto b = down_edge(target, v);
    if (!b || current.contains(*b)) continue;
    const auto cycle = fundamental_cycle(current, *b);
    std::optional<Edge> removed;
    for (const Edge& e : cycle.edges) {
      if (e == *b || !start.contains(e) || target.contains(e)) continue;
      if (!removed || rank_key(ps, e) < rank_key(ps, *removed)) removed = e;
    }
    if (!removed)
      throw Error(ErrorKind::InvariantViolation, "cycle of " + edge_str(*b) + " has no unhappy start edge");
    const Flip f{*removed, *b};
    try {
      current = apply_flip(current, f);
    } catch (const Error& err) {
      throw Error(ErrorKind::InvariantViolation, std::string("perfect sweep step failed: ") + err.detail());
    }
    seq.steps.push_back(f);
  }
  return seq;
}

FlipSequence phase2(const Tree& t_down, const Tree& t_up, bool check_invariants) {
  if (!orientation_profile(t_down).downward())
    throw Error(ErrorKind::Precondition, "phase 2 start tree is not downward");
  if (!orientation_profile(t_up).upward()) throw Error(ErrorKind::Precondition, "phase 2 target tree is not upward");
  const PointSet& ps = t_down.points();
  const int n = ps.size();
  FlipSequence seq{t_down, {}};
  Tree current = t_down;
  for (int r = 1; r < n; ++r) {
    if (check_invariants) check_phase2_state(current, t_down, t_up, r);
    const int v = ps.at_rank(r);
    const auto step = perfect_sweep(current, t_up, std::span<const int>(&v, 1));
    for (const Flip& f : step.steps) {
      // Perfect with respect to the original pair, not just the current tree.
      if (!t_down.contains(f.remove) || t_up.contains(f.remove))
        throw Error(ErrorKind::InvariantViolation, "phase 2 removed a non-initial edge");
      current = apply_flip(current, f);
      seq.steps.push_back(f);
    }
  }
  if (!(current == t_up)) throw Error(ErrorKind::InvariantViolation, "phase 2 did not reach the upward tree");
  return seq;
}

FlipSequence two_phase_reconfigure(const Tree& ti, const Tree& tf) {
  if (ti == tf) return FlipSequence{ti, {}};
  const auto opposite = choose_opposite(ti, tf);
  const Tree mid_i = end_of(opposite.first);
  const Tree mid_f = end_of(opposite.second);
  FlipSequence middle{mid_i, {}};
  if (!opposite.first_upward) {
    middle = phase2(mid_i, mid_f);
  } else {
    const auto rev = reversed_points(mid_i);
    middle = restate(mid_i, phase2(mid_i.rebased(rev), mid_f.rebased(rev)));
  }
  auto out = concatenate(opposite.first, middle);
  out = concatenate(out, reverse_sequence(opposite.second, mid_f));
  return out;
}

std::vector<int> path_order(const Tree& path) {
  const int n = path.vertex_count();
  if (n < 3) throw Error(ErrorKind::NotAPath, "paths need at least three points");
  const auto adj = path.adjacency();
  std::vector<int> ends;
  for (int v = 0; v < n; ++v) {
    if (adj[v].size() > 2) throw Error(ErrorKind::NotAPath, "vertex " + std::to_string(v) + " has degree > 2");
    if (adj[v].size() == 1) ends.push_back(v);
  }
  if (ends.size() != 2) throw Error(ErrorKind::NotAPath, "tree is not a path");
  const PointSet& ps = path.points();
  int v = ps.rank(ends[0]) < ps.rank(ends[1]) ? ends[0] : ends[1];
  std::vector<int> order{v};
  int prev = -1;
  while (static_cast<int>(order.size()) < n) {
    const int next = adj[v][0] != prev ? adj[v][0] : adj[v][1];
    prev = v;
    v = next;
    order.push_back(v);
  }
  return order;
}

std::optional<Vec> monotone_direction(const Tree& path) {
  const auto order = path_order(path);
  const PointSet& ps = path.points();
  std::vector<Vec> steps;
  for (std::size_t k = 0; k + 1 < order.size(); ++k) steps.push_back(ps.point(order[k + 1]) - ps.point(order[k]));
  std::vector<Vec> rays;
  for (const Vec& s : steps) {
    rays.push_back({-s.y, s.x});
    rays.push_back({s.y, -s.x});
  }
  auto feasible = [&](Vec d) {
    return std::all_of(steps.begin(), steps.end(), [&](const Vec& s) { return dot(d, s) > 0; });
  };
  for (const Vec& s : steps)
    if (feasible(s)) return s;
  // The open feasible cone is bounded by two of the rays; their sum is interior.
  for (std::size_t i = 0; i < rays.size(); ++i)
    for (std::size_t j = i + 1; j < rays.size(); ++j) {
      const Vec d = rays[i] + rays[j];
      if ((d.x != 0 || d.y != 0) && feasible(d)) return d;
    }
  return std::nullopt;
}

namespace {

// ti and a path tf whose vertex order is the height order of `ordered`.
FlipSequence reconfigure_along_order(const Tree& ti, const Tree& tf, const PointSetPtr& ordered) {
  const Tree a = ti.rebased(ordered);
  const Tree b = tf.rebased(ordered);
  for (const Edge& e : b.edges())
    if (!consecutive_ranks(*ordered, e))
      throw Error(ErrorKind::NotMonotonePath, "target path is not monotone in the chosen order");
  if (a == b) return FlipSequence{ti, {}};
  const auto profile = orientation_profile(a);
  FlipSequence out{ti, {}};
  if (profile.t <= profile.s) {
    const auto first = to_downward(a);
    const auto second = phase2(end_of(first), b);
    out.steps = first.steps;
    out.steps.insert(out.steps.end(), second.steps.begin(), second.steps.end());
  } else {
    const auto first = to_upward(a);
    const auto rev = std::make_shared<const PointSet>(ordered->reversed());
    const auto second = phase2(end_of(first).rebased(rev), b.rebased(rev));
    out.steps = first.steps;
    out.steps.insert(out.steps.end(), second.steps.begin(), second.steps.end());
  }
  return out;
}

}  // namespace

FlipSequence reconfigure_to_monotone_path(const Tree& ti, const Tree& tf) {
  std::optional<Vec> dir;
  try {
    dir = monotone_direction(tf);
  } catch (const Error& err) {
    throw Error(ErrorKind::NotMonotonePath, err.detail());
  }
  if (!dir) throw Error(ErrorKind::NotMonotonePath, "no direction makes the target path monotone");
  const auto ordered = std::make_shared<const PointSet>(reorder_by_direction(tf.points(), *dir));
  return reconfigure_along_order(ti, tf, ordered);
}

PointSet convex_path_relabel(const PointSet& ps, const Tree& path) {
  if (!ps.is_convex()) throw Error(ErrorKind::NotConvex, "relabeling needs convex position");
  const auto order = path_order(path.rebased(std::make_shared<const PointSet>(ps)));
  const int n = ps.size();
  std::vector<int> pos(n);
  for (int k = 0; k < n; ++k) pos[order[k]] = k;
  // Both hull chains from the first to the last path vertex must be visited in order.
  const auto hull = ps.hull_cycle();
  const int first = ps.hull_position(order.front());
  for (int step : {1, n - 1}) {
    int last_pos = 0;
    for (int p = (first + step) % n;; p = (p + step) % n) {
      if (pos[hull[p]] <= last_pos)
        throw Error(ErrorKind::InvariantViolation, "path does not visit a hull chain in order");
      last_pos = pos[hull[p]];
      if (hull[p] == order.back()) break;
    }
  }
  return ps.with_order(order);
}

FlipSequence reconfigure_convex_to_path(const Tree& ti, const Tree& path) {
  const auto relabeled = std::make_shared<const PointSet>(convex_path_relabel(ti.points(), path));
  return reconfigure_along_order(ti, path, relabeled);
}

}  // namespace ncst
