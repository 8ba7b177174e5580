#pragma once

#include <optional>
#include <span>
#include <vector>

#include "ncst/tree.hpp"

namespace ncst {

/// Sinks have no tree edge to a higher vertex, sources none to a lower one,
/// with "higher" taken from the tree's point-set height order.
struct OrientationProfile {
  std::vector<int> sinks;
  std::vector<int> sources;
  int s = 0;
  int t = 0;

  bool downward() const { return t == 1; }
  bool upward() const { return s == 1; }
};

OrientationProfile orientation_profile(const Tree& t);

/// Lowest-ranked vertex above sink `i` whose segment to `i` crosses no tree
/// edge. Throws Precondition if `i` is not a non-top sink and
/// InvariantViolation if nothing is visible.
int visible_above(const Tree& t, int i);

/// The flip that turns sink `i` into a non-sink: add i->visible_above(i),
/// drop the higher of the two cycle edges at the cycle's lowest vertex.
Flip reduce_sink(const Tree& t, int i);

/// Exactly t-1 (resp. s-1) flips; never removes an edge between
/// consecutive ranks.
FlipSequence to_downward(const Tree& t);
FlipSequence to_upward(const Tree& t);

struct OppositeTrees {
  bool first_upward = false;  // true: first -> upward, second -> downward
  FlipSequence first;
  FlipSequence second;
};

/// Flips two trees into one upward and one downward tree with at most n-2
/// flips in total.
OppositeTrees choose_opposite(const Tree& t1, const Tree& t2);

/// The rule used by phase 2, applied to an explicit list of vertices: for
/// each v, add the target edge joining v to its lower neighbour (if absent)
/// and remove the unhappy start-tree edge of the created cycle with the
/// lowest bottom endpoint (ties: lowest top endpoint).
FlipSequence perfect_sweep(const Tree& start, const Tree& target, std::span<const int> vertices);

/// Downward tree to upward tree using |t_down \ t_up| perfect flips. With
/// `check_invariants` each step asserts the B/R/connector structure.
FlipSequence phase2(const Tree& t_down, const Tree& t_up, bool check_invariants = true);

/// At most 2n-3 flips between any two trees on the same point set.
FlipSequence two_phase_reconfigure(const Tree& ti, const Tree& tf);

/// Vertices of a spanning path in order, starting at the endpoint with the
/// lower height rank. Throws NotAPath.
std::vector<int> path_order(const Tree& path);

/// Direction d with d . step > 0 for every step of the path, if one exists.
/// Throws NotAPath (including n < 3).
std::optional<Vec> monotone_direction(const Tree& path);

/// At most 1.5n-2-h flips when tf is a path monotone in some direction.
/// Throws NotMonotonePath.
FlipSequence reconfigure_to_monotone_path(const Tree& ti, const Tree& tf);

/// Height order equal to the path order, valid for convex point sets because
/// the path visits both hull chains in order. Throws NotConvex or NotAPath.
PointSet convex_path_relabel(const PointSet& ps, const Tree& path);

/// At most 1.5n-2-h flips to any spanning path on a convex point set.
FlipSequence reconfigure_convex_to_path(const Tree& ti, const Tree& path);

}  // namespace ncst
