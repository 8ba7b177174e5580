#pragma once

#include <bit>
#include <cstdint>
#include <vector>

#include "ncst/tree.hpp"

namespace ncst::oracle {

/// Bitset over the n(n-1)/2 possible edges; bit edge_index(a, b) is set when
/// the tree contains ab. Ordering follows the integer value.
using TreeCode = unsigned __int128;

constexpr int kMaxCodePoints = 16;

inline int popcount(TreeCode c) {
  return std::popcount(static_cast<std::uint64_t>(c)) + std::popcount(static_cast<std::uint64_t>(c >> 64));
}

inline TreeCode bit(int i) { return TreeCode{1} << i; }

/// Lexicographic numbering of the edges of the complete graph on n points.
class EdgeUniverse {
 public:
  explicit EdgeUniverse(int n);

  int n() const { return n_; }
  int size() const { return static_cast<int>(edges_.size()); }
  int index(Edge e) const { return index_[e.a * n_ + e.b]; }
  Edge edge(int i) const { return edges_[i]; }

  TreeCode encode(std::span<const Edge> edges) const;
  std::vector<Edge> decode(TreeCode code) const;
  Tree to_tree(const PointSetPtr& ps, TreeCode code) const;

  /// crossing_mask(i): edges whose segments cross edge i.
  std::vector<TreeCode> crossing_masks(const PointSet& ps) const;
  TreeCode hull_mask(const PointSet& ps) const;

 private:
  int n_;
  std::vector<Edge> edges_;
  std::vector<int> index_;
};

/// Calls f(i) for every set bit i in increasing order.
template <class F>
void for_each_bit(TreeCode c, F&& f) {
  for (int half = 0; half < 2; ++half) {
    auto word = static_cast<std::uint64_t>(c >> (64 * half));
    while (word) {
      f(64 * half + std::countr_zero(word));
      word &= word - 1;
    }
  }
}

}  // namespace ncst::oracle
