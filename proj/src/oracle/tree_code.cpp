#include "ncst/oracle/tree_code.hpp"

#include <string>

namespace ncst::oracle {

EdgeUniverse::EdgeUniverse(int n) : n_(n), index_(n * n, -1) {
  if (n < 2 || n > kMaxCodePoints)
    throw Error(ErrorKind::TooLarge, "tree codes support 2.." + std::to_string(kMaxCodePoints) + " points");
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) {
      index_[a * n + b] = static_cast<int>(edges_.size());
      edges_.emplace_back(a, b);
    }
}

TreeCode EdgeUniverse::encode(std::span<const Edge> edges) const {
  TreeCode c = 0;
  for (const Edge& e : edges) c |= bit(index(e));
  return c;
}

std::vector<Edge> EdgeUniverse::decode(TreeCode code) const {
  std::vector<Edge> out;
  for_each_bit(code, [&](int i) { out.push_back(edges_[i]); });
  return out;
}

Tree EdgeUniverse::to_tree(const PointSetPtr& ps, TreeCode code) const { return Tree(ps, decode(code)); }

std::vector<TreeCode> EdgeUniverse::crossing_masks(const PointSet& ps) const {
  std::vector<TreeCode> masks(edges_.size(), 0);
  for (int i = 0; i < size(); ++i)
    for (int j = i + 1; j < size(); ++j)
      if (segments_cross(edges_[i], edges_[j], ps)) {
        masks[i] |= bit(j);
        masks[j] |= bit(i);
      }
  return masks;
}

TreeCode EdgeUniverse::hull_mask(const PointSet& ps) const {
  TreeCode c = 0;
  for (int i = 0; i < size(); ++i)
    if (ps.is_hull_edge(edges_[i])) c |= bit(i);
  return c;
}

}  // namespace ncst::oracle
