#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <vector>

#include "ncst/error.hpp"

namespace ncst {

/// Integer grid point. Coordinates are bounded so that every 3-point
/// orientation determinant fits in a signed 64-bit integer.
struct Point {
  std::int64_t x = 0;
  std::int64_t y = 0;

  friend bool operator==(const Point&, const Point&) = default;
};

/// A direction or displacement in the plane.
struct Vec {
  std::int64_t x = 0;
  std::int64_t y = 0;

  friend bool operator==(const Vec&, const Vec&) = default;
};

inline std::int64_t dot(Vec a, Vec b) { return a.x * b.x + a.y * b.y; }
inline std::int64_t cross(Vec a, Vec b) { return a.x * b.y - a.y * b.x; }
inline Vec operator-(Point a, Point b) { return {a.x - b.x, a.y - b.y}; }
inline Vec operator+(Vec a, Vec b) { return {a.x + b.x, a.y + b.y}; }

enum class Orientation { Clockwise = -1, Collinear = 0, CounterClockwise = 1 };

/// Sign of (q - p) x (r - p), computed exactly.
Orientation orientation(Point p, Point q, Point r);

/// Index pair with a < b.
struct Edge {
  int a = 0;
  int b = 0;

  Edge() = default;
  Edge(int u, int v) : a(u < v ? u : v), b(u < v ? v : u) {}

  bool has(int v) const { return a == v || b == v; }
  bool shares_endpoint(const Edge& o) const { return has(o.a) || has(o.b); }
  int other(int v) const { return v == a ? b : a; }

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// The two hull arcs cut off by a chord of a convex point set. Both include
/// the chord's endpoints.
struct SidePair {
  Edge edge;
  std::vector<int> q;      // hull arc from edge.a to edge.b following hull_cycle
  std::vector<int> q_bar;  // hull arc from edge.b back to edge.a
};

/// Planar point set in general position together with a height order.
///
/// The canonical height order sorts points by (y, x); `with_order` and
/// `reorder_by_direction` produce copies whose order treats some other
/// direction (or an explicit permutation) as "up". Indices into `points()`
/// never change between these copies, so edges and trees carry over.
class PointSet {
 public:
  static constexpr std::int64_t kMaxCoordinate = 1'000'000;

  PointSet() = default;
  /// Throws Error(InvalidInput) on out-of-range coordinates, duplicates, or
  /// collinear triples.
  explicit PointSet(std::vector<Point> points);

  int size() const { return static_cast<int>(points_.size()); }
  const Point& point(int i) const { return points_[i]; }
  std::span<const Point> points() const { return points_; }

  /// height_order()[r] is the index of the point with rank r (v_{r+1}).
  std::span<const int> height_order() const { return order_; }
  int rank(int index) const { return rank_[index]; }
  int at_rank(int r) const { return order_[r]; }

  bool is_convex() const { return convex_; }
  /// Counterclockwise hull cycle starting at the lowest point; empty unless convex.
  std::span<const int> hull_cycle() const { return hull_; }
  /// Position of a point on hull_cycle(); throws NotConvex.
  int hull_position(int index) const;
  bool is_hull_edge(Edge e) const;

  /// Copy with an explicit height order (a permutation of 0..n-1).
  PointSet with_order(std::vector<int> order) const;
  /// Copy whose height order is reversed.
  PointSet reversed() const;

  bool same_points(const PointSet& other) const { return points_ == other.points_; }

 private:
  std::vector<Point> points_;
  std::vector<int> order_;
  std::vector<int> rank_;
  std::vector<int> hull_;
  std::vector<int> hull_pos_;
  bool convex_ = false;
};

/// Closed-segment intersection between edges that share no endpoint.
bool segments_cross(Edge e1, Edge e2, const PointSet& ps);

/// Combinatorial crossing test for convex point sets: endpoints alternate
/// around the hull. Throws NotConvex otherwise.
bool convex_cross(Edge e1, Edge e2, const PointSet& ps);

/// Throws NotConvex on non-convex input.
SidePair sides_of(Edge edge, const PointSet& ps);

/// Height order by projection onto `dir`, ties broken by the component along
/// dir rotated a quarter turn clockwise. dir = (0, 1) gives the canonical order.
PointSet reorder_by_direction(const PointSet& ps, Vec dir);

/// True when no point of `ps` lies strictly inside triangle (a, b, c).
bool triangle_empty(int a, int b, int c, const PointSet& ps);

}  // namespace ncst
