#pragma once

#include <initializer_list>
#include <utility>

#include "ncst/tree.hpp"

namespace ncst::testing {

// v1=(0,0) v2=(4,1) v3=(5,4) v4=(1,5); indices follow the height order.
inline PointSetPtr quad() {
  static const auto ps = std::make_shared<const PointSet>(std::vector<Point>{{0, 0}, {4, 1}, {5, 4}, {1, 5}});
  return ps;
}

// Edges given with 1-based labels v1..vn.
inline Edge E(int a, int b) { return Edge(a - 1, b - 1); }

inline Tree T(const PointSetPtr& ps, std::initializer_list<std::pair<int, int>> edges) {
  std::vector<Edge> out;
  for (auto [a, b] : edges) out.push_back(E(a, b));
  return Tree(ps, std::move(out));
}

inline Tree apply_all(const FlipSequence& seq) {
  Tree t = seq.start;
  for (const Flip& f : seq.steps) t = apply_flip(t, f);
  return t;
}

}  // namespace ncst::testing
