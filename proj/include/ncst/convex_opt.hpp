#pragma once

#include <vector>

#include "ncst/tree.hpp"

namespace ncst {

enum class TreeSide { Initial, Final };

/// A difference edge one of whose hull sides holds no other difference edge.
struct MinimalEdgeReport {
  Edge edge;
  TreeSide owner = TreeSide::Initial;
  SidePair side;               // side.q is the minimal side
  std::vector<Edge> crossings;  // edges of the other tree crossing `edge`, sorted
  int k = 0;
};

/// Every minimal edge of the symmetric difference. Throws NotConvex or
/// EmptyDifference.
std::vector<MinimalEdgeReport> minimal_edges(const Tree& ti, const Tree& tf);

/// Minimal edge with the fewest crossings, ties broken by the smaller edge.
/// Throws InvariantViolation if k exceeds floor((d+3)/2).
MinimalEdgeReport find_minimal_edge(const Tree& ti, const Tree& tf);

/// Asserts that the non-owner tree restricted to the minimal side splits into
/// exactly two components, one per endpoint of the edge.
bool check_two_components(const Tree& other, const MinimalEdgeReport& m);

/// Asserts that the endpoints of the minimal edge are disconnected in the
/// non-owner tree restricted to the far side. Throws InvariantViolation.
bool check_uv_disconnected(const Tree& other, const MinimalEdgeReport& m);

/// 2d - floor(log2(d+3)) + 1.
int convex_opt_bound(int d);

/// Minimal-edge reconfiguration for convex point sets; at most
/// convex_opt_bound(d) flips. Throws NotConvex.
FlipSequence convex_reconfigure(const Tree& ti, const Tree& tf, bool check_invariants = true);

}  // namespace ncst
