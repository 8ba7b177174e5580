#include "ncst/convex_opt.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <optional>
#include <string>

namespace ncst {

namespace {

std::string edge_str(Edge e) { return "[" + std::to_string(e.a) + ", " + std::to_string(e.b) + "]"; }

std::vector<char> membership(const std::vector<int>& side, int n) {
  std::vector<char> in(n, 0);
  for (int v : side) in[v] = 1;
  return in;
}

bool inside(const std::vector<char>& in, Edge e) { return in[e.a] && in[e.b]; }

// Component labels of the forest formed by `edges` restricted to `in`.
std::vector<int> components(std::span<const Edge> edges, const std::vector<char>& in, std::optional<Edge> skip = {}) {
  const int n = static_cast<int>(in.size());
  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  for (const Edge& e : edges)
    if (inside(in, e) && e != skip) parent[find(e.a)] = find(e.b);
  for (int v = 0; v < n; ++v) parent[v] = find(v);
  return parent;
}

std::pair<int, int> rank_key(const PointSet& ps, Edge e) {
  const int ra = ps.rank(e.a), rb = ps.rank(e.b);
  return {std::min(ra, rb), std::max(ra, rb)};
}

bool lower_edge(const PointSet& ps, Edge x, Edge y) {
  return std::pair{rank_key(ps, x), x} < std::pair{rank_key(ps, y), y};
}

}  // namespace

std::vector<MinimalEdgeReport> minimal_edges(const Tree& ti, const Tree& tf) {
  const PointSet& ps = ti.points();
  if (!ps.is_convex()) throw Error(ErrorKind::NotConvex, "minimal edges need convex position");
  const auto summary = diff(ti, tf);
  if (summary.d == 0) throw Error(ErrorKind::EmptyDifference, "trees are equal");
  const int n = ps.size();
  std::vector<Edge> all_diff = summary.only_initial;
  all_diff.insert(all_diff.end(), summary.only_final.begin(), summary.only_final.end());

  std::vector<MinimalEdgeReport> out;
  for (const Edge& e : all_diff) {
    const bool in_initial = ti.contains(e);
    auto sides = sides_of(e, ps);
    auto empty_side = [&](const std::vector<int>& side) {
      const auto in = membership(side, n);
      return std::none_of(all_diff.begin(), all_diff.end(), [&](const Edge& x) { return x != e && inside(in, x); });
    };
    if (!empty_side(sides.q)) {
      if (!empty_side(sides.q_bar)) continue;
      std::swap(sides.q, sides.q_bar);
    }
    MinimalEdgeReport r;
    r.edge = e;
    r.owner = in_initial ? TreeSide::Initial : TreeSide::Final;
    r.side = std::move(sides);
    const Tree& other = in_initial ? tf : ti;
    for (const Edge& f : other.edges())
      if (convex_cross(e, f, ps)) r.crossings.push_back(f);
    r.k = static_cast<int>(r.crossings.size());
    out.push_back(std::move(r));
  }
  if (out.empty()) throw Error(ErrorKind::InvariantViolation, "nonempty difference without a minimal edge");
  return out;
}

MinimalEdgeReport find_minimal_edge(const Tree& ti, const Tree& tf) {
  auto all = minimal_edges(ti, tf);
  auto best = std::min_element(all.begin(), all.end(), [](const MinimalEdgeReport& x, const MinimalEdgeReport& y) {
    return std::pair{x.k, x.edge} < std::pair{y.k, y.edge};
  });
  const int d = diff(ti, tf).d;
  if (best->k > (d + 3) / 2)
    throw Error(ErrorKind::InvariantViolation, "best minimal edge has " + std::to_string(best->k) +
                                                   " crossings, above floor((d+3)/2) for d=" + std::to_string(d));
  return std::move(*best);
}

bool check_two_components(const Tree& other, const MinimalEdgeReport& m) {
  const int n = other.vertex_count();
  const auto in = membership(m.side.q, n);
  const auto comp = components(other.edges(), in);
  int count = 0;
  for (int v : m.side.q) count += comp[v] == v;
  if (count != 2 || comp[m.edge.a] == comp[m.edge.b])
    throw Error(ErrorKind::InvariantViolation, "non-owner tree on the minimal side of " + edge_str(m.edge) + " has " +
                                                   std::to_string(count) + " components");
  return true;
}

bool check_uv_disconnected(const Tree& other, const MinimalEdgeReport& m) {
  const int n = other.vertex_count();
  const auto comp = components(other.edges(), membership(m.side.q_bar, n));
  if (comp[m.edge.a] == comp[m.edge.b]) {
    std::string dump;
    for (const Edge& e : other.edges()) dump += " " + edge_str(e);
    throw Error(ErrorKind::InvariantViolation,
                "endpoints of " + edge_str(m.edge) + " connected on the far side; tree:" + dump);
  }
  return true;
}

int convex_opt_bound(int d) { return 2 * d - (std::bit_width(static_cast<unsigned>(d + 3)) - 1) + 1; }

FlipSequence convex_reconfigure(const Tree& ti, const Tree& tf, bool check_invariants) {
  const PointSet& ps = ti.points();
  if (!ps.is_convex()) throw Error(ErrorKind::NotConvex, "convex reconfiguration needs convex position");
  diff(ti, tf);  // point-set check
  const int n = ps.size();
  const auto hull = ps.hull_cycle();

  Tree a = ti, b = tf;
  std::vector<Flip> front, back;
  while (!(a == b)) {
    const auto m = find_minimal_edge(a, b);
    const Edge e = m.edge;
    const bool owner_final = m.owner == TreeSide::Final;
    Tree& own = owner_final ? b : a;
    Tree& oth = owner_final ? a : b;
    auto& oth_log = owner_final ? front : back;
    auto& own_log = owner_final ? back : front;

    if (m.k == 0) {
      const auto cycle = fundamental_cycle(oth, e);
      std::optional<Edge> f;
      for (const Edge& c : cycle.edges)
        if (c != e && !own.contains(c) && (!f || lower_edge(ps, c, *f))) f = c;
      if (!f) throw Error(ErrorKind::InvariantViolation, "cycle of " + edge_str(e) + " has no difference edge");
      oth = apply_flip(oth, Flip{*f, e});
      oth_log.push_back(Flip{*f, e});
      continue;
    }

    if (check_invariants) {
      check_two_components(oth, m);
      check_uv_disconnected(oth, m);
    }
    const auto far = membership(m.side.q_bar, n);
    for (int i = 0; i + 1 < m.k; ++i) {
      const Edge f = m.crossings[i];
      const auto comp = components(oth.edges(), std::vector<char>(n, 1), f);
      std::optional<Edge> g;
      for (int p = 0; p < n; ++p) {
        const Edge h(hull[p], hull[(p + 1) % n]);
        if (comp[h.a] != comp[h.b] && inside(far, h) && (!g || h < *g)) g = h;
      }
      if (!g) throw Error(ErrorKind::InvariantViolation, "no far-side hull edge reconnects after removing " + edge_str(f));
      oth = apply_flip(oth, Flip{f, *g});
      oth_log.push_back(Flip{f, *g});
      if (!own.contains(*g)) {
        const auto cycle = fundamental_cycle(own, *g);
        std::optional<Edge> h;
        for (const Edge& c : cycle.edges)
          if (c != *g && c != e && !oth.contains(c) && inside(far, c) && (!h || lower_edge(ps, c, *h))) h = c;
        if (!h) throw Error(ErrorKind::InvariantViolation, "no removable edge on the cycle of hull edge " + edge_str(*g));
        own = apply_flip(own, Flip{*h, *g});
        own_log.push_back(Flip{*h, *g});
      }
      if (check_invariants) check_uv_disconnected(oth, m);
    }
    const Flip last{m.crossings.back(), e};
    oth = apply_flip(oth, last);
    oth_log.push_back(last);
  }

  FlipSequence seq{ti, std::move(front)};
  for (auto it = back.rbegin(); it != back.rend(); ++it) seq.steps.push_back(it->inverse());
  return seq;
}

}  // namespace ncst
