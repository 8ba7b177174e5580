#include "ncst/tree.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace ncst {

namespace {

std::string edge_str(Edge e) { return "[" + std::to_string(e.a) + ", " + std::to_string(e.b) + "]"; }

struct DisjointSets {
  explicit DisjointSets(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  }
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent[a] = b;
    return true;
  }
  std::vector<int> parent;
};

// Labels each vertex with 0 or 1 depending on which side of `cut` it lies in
// the tree given by `edges`.
std::vector<char> side_of_cut(std::span<const Edge> edges, int n, Edge cut) {
  std::vector<std::vector<int>> adj(n);
  for (const Edge& e : edges) {
    if (e == cut) continue;
    adj[e.a].push_back(e.b);
    adj[e.b].push_back(e.a);
  }
  std::vector<char> side(n, 1);
  std::vector<int> stack{cut.a};
  side[cut.a] = 0;
  while (!stack.empty()) {
    const int v = stack.back();
    stack.pop_back();
    for (int w : adj[v])
      if (side[w]) {
        side[w] = 0;
        stack.push_back(w);
      }
  }
  return side;
}

}  // namespace

std::optional<std::string> tree_defect(std::span<const Edge> edges, const PointSet& ps) {
  const int n = ps.size();
  if (static_cast<int>(edges.size()) != n - 1)
    return "expected " + std::to_string(n - 1) + " edges, got " + std::to_string(edges.size());
  for (const Edge& e : edges) {
    if (e.a < 0 || e.b >= n || e.a == e.b) return "edge " + edge_str(e) + " is not a valid index pair";
  }
  DisjointSets sets(n);
  for (const Edge& e : edges) {
    if (!sets.unite(e.a, e.b)) return "edge " + edge_str(e) + " closes a cycle";
  }
  for (std::size_t i = 0; i < edges.size(); ++i)
    for (std::size_t j = i + 1; j < edges.size(); ++j)
      if (segments_cross(edges[i], edges[j], ps))
        return "edges " + edge_str(edges[i]) + " and " + edge_str(edges[j]) + " cross";
  return std::nullopt;
}

bool is_noncrossing_tree(std::span<const Edge> edges, const PointSet& ps) {
  return !tree_defect(edges, ps).has_value();
}

Tree::Tree(PointSetPtr ps, std::vector<Edge> edges) : ps_(std::move(ps)), edges_(std::move(edges)) {
  std::sort(edges_.begin(), edges_.end());
  if (auto defect = tree_defect(edges_, *ps_)) {
    const bool crossing = defect->find("cross") != std::string::npos;
    throw Error(crossing ? ErrorKind::CrossingViolation : ErrorKind::NotSpanning, *defect);
  }
}

Tree::Tree(PointSetPtr ps, std::vector<Edge> edges, Unchecked)
    : ps_(std::move(ps)), edges_(std::move(edges)) {}

bool Tree::contains(Edge e) const { return std::binary_search(edges_.begin(), edges_.end(), e); }

std::vector<std::vector<int>> Tree::adjacency() const {
  std::vector<std::vector<int>> adj(vertex_count());
  for (const Edge& e : edges_) {
    adj[e.a].push_back(e.b);
    adj[e.b].push_back(e.a);
  }
  return adj;
}

int Tree::degree(int v) const {
  return static_cast<int>(std::count_if(edges_.begin(), edges_.end(), [v](const Edge& e) { return e.has(v); }));
}

Tree Tree::rebased(PointSetPtr ps) const {
  if (!ps->same_points(*ps_))
    throw Error(ErrorKind::MismatchedPointSets, "rebasing onto different coordinates");
  return Tree(std::move(ps), edges_, Unchecked{});
}

Tree apply_flip(const Tree& t, const Flip& f) {
  const int n = t.vertex_count();
  if (f.add.a < 0 || f.add.b >= n || f.add.a == f.add.b)
    throw Error(ErrorKind::InvalidInput, "edge " + edge_str(f.add) + " is not a valid index pair");
  if (!t.contains(f.remove)) throw Error(ErrorKind::NotInTree, "edge " + edge_str(f.remove) + " is not in the tree");
  if (t.contains(f.add)) throw Error(ErrorKind::AlreadyPresent, "edge " + edge_str(f.add) + " is already in the tree");
  const auto side = side_of_cut(t.edges(), n, f.remove);
  if (side[f.add.a] == side[f.add.b])
    throw Error(ErrorKind::NotSpanning, "adding " + edge_str(f.add) + " after removing " + edge_str(f.remove) +
                                            " does not reconnect the tree");
  for (const Edge& e : t.edges()) {
    if (e == f.remove) continue;
    if (segments_cross(e, f.add, t.points()))
      throw Error(ErrorKind::CrossingViolation, "edge " + edge_str(f.add) + " crosses " + edge_str(e));
  }
  std::vector<Edge> edges;
  edges.reserve(t.edges().size());
  for (const Edge& e : t.edges())
    if (e != f.remove) edges.push_back(e);
  edges.insert(std::upper_bound(edges.begin(), edges.end(), f.add), f.add);
  return Tree(t.point_set(), std::move(edges), Tree::Unchecked{});
}

CyclePath fundamental_cycle(const Tree& t, Edge probe) {
  if (t.contains(probe)) throw Error(ErrorKind::AlreadyPresent, "probe " + edge_str(probe) + " is a tree edge");
  const int n = t.vertex_count();
  const auto adj = t.adjacency();
  std::vector<int> parent(n, -1);
  std::vector<int> stack{probe.b};
  parent[probe.b] = probe.b;
  while (!stack.empty()) {
    const int v = stack.back();
    stack.pop_back();
    for (int w : adj[v])
      if (parent[w] < 0) {
        parent[w] = v;
        stack.push_back(w);
      }
  }
  CyclePath cycle;
  for (int v = probe.a; v != probe.b; v = parent[v]) {
    cycle.vertices.push_back(v);
    cycle.edges.emplace_back(v, parent[v]);
  }
  cycle.vertices.push_back(probe.b);
  cycle.edges.push_back(probe);
  return cycle;
}

DiffSummary diff(const Tree& ti, const Tree& tf) {
  if (ti.point_set() != tf.point_set() && !ti.points().same_points(tf.points()))
    throw Error(ErrorKind::MismatchedPointSets, "trees live on different point sets");
  DiffSummary out;
  std::set_difference(ti.edges().begin(), ti.edges().end(), tf.edges().begin(), tf.edges().end(),
                      std::back_inserter(out.only_initial));
  std::set_difference(tf.edges().begin(), tf.edges().end(), ti.edges().begin(), ti.edges().end(),
                      std::back_inserter(out.only_final));
  std::set_intersection(ti.edges().begin(), ti.edges().end(), tf.edges().begin(), tf.edges().end(),
                        std::back_inserter(out.happy));
  out.d = static_cast<int>(out.only_initial.size());
  return out;
}

ValidationReport validate_sequence(const FlipSequence& seq, const Tree& target) {
  ValidationReport report;
  report.length = seq.steps.size();
  const auto summary = diff(seq.start, target);
  auto in = [](const std::vector<Edge>& v, Edge e) { return std::binary_search(v.begin(), v.end(), e); };
  auto note = [](std::vector<Edge>& v, Edge e) {
    auto it = std::lower_bound(v.begin(), v.end(), e);
    if (it == v.end() || *it != e) v.insert(it, e);
  };

  Tree current = seq.start;
  for (std::size_t i = 0; i < seq.steps.size(); ++i) {
    const Flip& f = seq.steps[i];
    try {
      current = apply_flip(current, f);
    } catch (const Error& err) {
      report.valid = false;
      report.first_invalid_step = i;
      report.error = err.what();
      break;
    }
    if (in(summary.only_initial, f.remove) && in(summary.only_final, f.add)) ++report.perfect_flips;
    if (in(summary.happy, f.remove)) note(report.happy_removed, f.remove);
    if (!seq.start.contains(f.add) && !target.contains(f.add)) note(report.parking_edges, f.add);
  }
  report.reaches_target = report.valid && current == target;
  report.end = std::move(current);
  return report;
}

std::vector<Tree> trees_along(const FlipSequence& seq) {
  std::vector<Tree> trees{seq.start};
  trees.reserve(seq.steps.size() + 1);
  for (const Flip& f : seq.steps) trees.push_back(apply_flip(trees.back(), f));
  return trees;
}

FlipSequence reverse_sequence(const FlipSequence& seq, const Tree& end) {
  FlipSequence out{end, {}};
  out.steps.reserve(seq.steps.size());
  for (auto it = seq.steps.rbegin(); it != seq.steps.rend(); ++it) out.steps.push_back(it->inverse());
  return out;
}

FlipSequence concatenate(const FlipSequence& first, const FlipSequence& second) {
  FlipSequence out = first;
  out.steps.insert(out.steps.end(), second.steps.begin(), second.steps.end());
  return out;
}

std::optional<RemoveAddPair> find_shortenable_pair(const FlipSequence& seq) {
  const PointSet& ps = seq.start.points();
  const auto& steps = seq.steps;
  for (std::size_t i = 0; i < steps.size(); ++i) {
    const Edge e = steps[i].remove;
    for (std::size_t j = i; j < steps.size(); ++j) {
      if (steps[j].add == e) {
        if (j > i) return RemoveAddPair{e, i, j};
        break;
      }
      if (segments_cross(steps[j].add, e, ps)) break;
    }
  }
  return std::nullopt;
}

FlipSequence shorten_pair(const FlipSequence& seq, const RemoveAddPair& pair) {
  const auto trees = trees_along(seq);
  const Edge e = pair.edge;
  const std::size_t i0 = pair.remove_step;
  const std::size_t k = pair.add_step - pair.remove_step + 1;
  // Local trees T_0..T_k of the subsequence are trees[i0 + m].
  std::vector<Tree> normalized{trees[i0]};
  for (std::size_t m = 1; m < k; ++m) {
    const Tree& tm = trees[i0 + m];
    const auto cycle = fundamental_cycle(tm, e);
    std::optional<Edge> first_removed;
    for (std::size_t s = i0 + m; s <= pair.add_step && !first_removed; ++s) {
      const Edge r = seq.steps[s].remove;
      if (std::find(cycle.edges.begin(), cycle.edges.end() - 1, r) != cycle.edges.end() - 1) first_removed = r;
    }
    if (!first_removed)
      throw Error(ErrorKind::InvariantViolation, "no cycle edge removed before " + edge_str(e) + " returns");
    normalized.push_back(apply_flip(tm, Flip{*first_removed, e}));
  }
  if (!(normalized.back() == trees[pair.add_step + 1]))
    throw Error(ErrorKind::InvariantViolation, "normalized run does not end at the re-add tree");

  FlipSequence out{seq.start, {}};
  out.steps.assign(seq.steps.begin(), seq.steps.begin() + static_cast<std::ptrdiff_t>(i0));
  for (std::size_t m = 0; m + 1 < normalized.size(); ++m) {
    const auto delta = diff(normalized[m], normalized[m + 1]);
    if (delta.d == 0) continue;
    if (delta.d != 1)
      throw Error(ErrorKind::InvariantViolation, "consecutive normalized trees differ by more than one flip");
    out.steps.push_back(Flip{delta.only_initial.front(), delta.only_final.front()});
  }
  out.steps.insert(out.steps.end(), seq.steps.begin() + static_cast<std::ptrdiff_t>(pair.add_step + 1),
                   seq.steps.end());
  return out;
}

FlipSequence normalize_sequence(const FlipSequence& seq) {
  const auto trees_or_error = [&]() -> std::optional<std::string> {
    try {
      trees_along(seq);
    } catch (const Error& err) {
      return err.what();
    }
    return std::nullopt;
  }();
  if (trees_or_error) throw Error(ErrorKind::InvalidInputSequence, *trees_or_error);

  FlipSequence current = seq;
  while (auto pair = find_shortenable_pair(current)) current = shorten_pair(current, *pair);
  return current;
}

}  // namespace ncst
