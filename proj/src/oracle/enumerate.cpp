#include "ncst/oracle/enumerate.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <string>

namespace ncst::oracle {

namespace {

// Trees on the hull interval [i..j] are split by the last neighbour m of i:
// a tree on [i..m] through edge im, and a tree on [m..j].
class IntervalEnumerator {
 public:
  IntervalEnumerator(const PointSet& ps, const EdgeUniverse& u) : hull_(ps.hull_cycle()), u_(u) {}

  void trees(int i, int j, const std::function<void()>& emit) {
    if (i == j) {
      emit();
      return;
    }
    for (int m = i + 1; m <= j; ++m) through_edge(i, m, [&] { trees(m, j, emit); });
  }

  TreeCode code = 0;

 private:
  void through_edge(int i, int m, const std::function<void()>& emit) {
    const TreeCode b = bit(u_.index(Edge(hull_[i], hull_[m])));
    code |= b;
    for (int k = i; k < m; ++k) trees(i, k, [&] { trees(k + 1, m, emit); });
    code &= ~b;
  }

  std::span<const int> hull_;
  const EdgeUniverse& u_;
};

struct Search {
  int n;
  int m;
  std::vector<Edge> edges;
  std::vector<TreeCode> cross;
  std::vector<TreeCode> out;

  void run(int next, int chosen, TreeCode code, TreeCode forbidden, std::array<int, kMaxCodePoints> comp) {
    if (chosen == n - 1) {
      out.push_back(code);
      return;
    }
    for (int i = next; i <= m - (n - 1 - chosen); ++i) {
      if (forbidden & bit(i)) continue;
      const Edge e = edges[i];
      const int ca = comp[e.a], cb = comp[e.b];
      if (ca == cb) continue;
      auto merged = comp;
      for (int v = 0; v < n; ++v)
        if (merged[v] == cb) merged[v] = ca;
      run(i + 1, chosen + 1, code | bit(i), forbidden | cross[i], merged);
    }
  }
};

}  // namespace

std::vector<TreeCode> enumerate_convex(const PointSet& ps, const EdgeUniverse& u) {
  if (!ps.is_convex()) throw Error(ErrorKind::NotConvex, "interval enumeration needs convex position");
  IntervalEnumerator en(ps, u);
  std::vector<TreeCode> out;
  en.trees(0, ps.size() - 1, [&] { out.push_back(en.code); });
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<TreeCode> enumerate_general(const PointSet& ps, const EdgeUniverse& u) {
  Search s{ps.size(), u.size(), {}, u.crossing_masks(ps), {}};
  for (int i = 0; i < u.size(); ++i) s.edges.push_back(u.edge(i));
  std::array<int, kMaxCodePoints> comp{};
  for (int v = 0; v < kMaxCodePoints; ++v) comp[v] = v;
  s.run(0, 0, 0, 0, comp);
  std::sort(s.out.begin(), s.out.end());
  return s.out;
}

std::vector<TreeCode> enumerate_trees(const PointSet& ps, const EdgeUniverse& u, bool force) {
  const int n = ps.size();
  const int limit = ps.is_convex() ? kConvexEnumerationLimit : kGeneralEnumerationLimit;
  if (n > limit && !force)
    throw Error(ErrorKind::TooLarge, "enumeration guard is n <= " + std::to_string(limit) + ", got " + std::to_string(n));
  return ps.is_convex() ? enumerate_convex(ps, u) : enumerate_general(ps, u);
}

}  // namespace ncst::oracle
