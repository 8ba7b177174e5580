#pragma once

#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "ncst/geometry.hpp"

namespace ncst {

using PointSetPtr = std::shared_ptr<const PointSet>;

struct Flip;
class Tree;
Tree apply_flip(const Tree& t, const Flip& f);

/// A non-crossing spanning tree over a shared point set. Edges are kept in
/// canonical sorted order; construction validates the tree.
class Tree {
 public:
  /// Throws Error(NotSpanning) or Error(CrossingViolation) on invalid input.
  Tree(PointSetPtr ps, std::vector<Edge> edges);

  const PointSet& points() const { return *ps_; }
  const PointSetPtr& point_set() const { return ps_; }
  int vertex_count() const { return ps_->size(); }
  std::span<const Edge> edges() const { return edges_; }
  bool contains(Edge e) const;

  std::vector<std::vector<int>> adjacency() const;
  int degree(int v) const;

  /// Same edges over a point set with identical coordinates (e.g. a reordered copy).
  Tree rebased(PointSetPtr ps) const;

  friend bool operator==(const Tree& a, const Tree& b) {
    return a.edges_ == b.edges_ && (a.ps_ == b.ps_ || a.ps_->same_points(*b.ps_));
  }

 private:
  struct Unchecked {};
  Tree(PointSetPtr ps, std::vector<Edge> edges, Unchecked);
  friend Tree apply_flip(const Tree&, const Flip&);

  PointSetPtr ps_;
  std::vector<Edge> edges_;
};

struct Flip {
  Edge remove;
  Edge add;

  Flip inverse() const { return {add, remove}; }
  friend bool operator==(const Flip&, const Flip&) = default;
};

struct FlipSequence {
  Tree start;
  std::vector<Flip> steps;

  std::size_t size() const { return steps.size(); }
};

struct DiffSummary {
  std::vector<Edge> only_initial;
  std::vector<Edge> only_final;
  std::vector<Edge> happy;
  int d = 0;
};

/// The unique cycle of tree + probe: the tree path from probe.a to probe.b
/// followed by the probe itself.
struct CyclePath {
  std::vector<Edge> edges;
  std::vector<int> vertices;  // probe.a ... probe.b along the tree path
};

struct ValidationReport {
  bool valid = true;
  std::optional<std::size_t> first_invalid_step;
  std::string error;
  std::size_t length = 0;
  std::optional<Tree> end;  // last tree reached (the start if step 0 fails)
  bool reaches_target = false;
  int perfect_flips = 0;
  std::vector<Edge> happy_removed;
  std::vector<Edge> parking_edges;
};

/// Describes why `edges` is not a non-crossing spanning tree of `ps`, or
/// nullopt when it is one.
std::optional<std::string> tree_defect(std::span<const Edge> edges, const PointSet& ps);
bool is_noncrossing_tree(std::span<const Edge> edges, const PointSet& ps);

/// Throws NotInTree, AlreadyPresent, NotSpanning or CrossingViolation.
/// The added edge may cross the removed one.
Tree apply_flip(const Tree& t, const Flip& f);

/// Throws AlreadyPresent when the probe is a tree edge.
CyclePath fundamental_cycle(const Tree& t, Edge probe);

/// Throws MismatchedPointSets.
DiffSummary diff(const Tree& ti, const Tree& tf);

/// Runs the sequence and collects all diagnostics in one pass; never throws
/// on an invalid step.
ValidationReport validate_sequence(const FlipSequence& seq, const Tree& target);

/// Trees T_0..T_k visited by a valid sequence. Throws on invalid steps.
std::vector<Tree> trees_along(const FlipSequence& seq);

/// Sequence from `end` back to seq.start.
FlipSequence reverse_sequence(const FlipSequence& seq, const Tree& end);

FlipSequence concatenate(const FlipSequence& first, const FlipSequence& second);

/// A removal of `edge` at step `remove_step` that is undone at `add_step`
/// without any step in between adding an edge that crosses it.
struct RemoveAddPair {
  Edge edge;
  std::size_t remove_step = 0;
  std::size_t add_step = 0;
};

/// First remove-add pair (scanning removals left to right) to which the
/// shortening construction applies.
std::optional<RemoveAddPair> find_shortenable_pair(const FlipSequence& seq);

/// Replaces the steps of one remove-add pair by the strictly shorter run
/// T_0 = N_0, N_1, ..., N_{k-1} = T_k with N_i = T_i + e - f_i.
FlipSequence shorten_pair(const FlipSequence& seq, const RemoveAddPair& pair);

/// Applies shorten_pair until no shortenable pair remains. Throws
/// InvalidInputSequence when the input is not valid.
FlipSequence normalize_sequence(const FlipSequence& seq);

}  // namespace ncst
