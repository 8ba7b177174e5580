#include "ncst/geometry.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace ncst {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidInput: return "InvalidInput";
    case ErrorKind::NotInTree: return "NotInTree";
    case ErrorKind::AlreadyPresent: return "AlreadyPresent";
    case ErrorKind::NotSpanning: return "NotSpanning";
    case ErrorKind::CrossingViolation: return "CrossingViolation";
    case ErrorKind::MismatchedPointSets: return "MismatchedPointSets";
    case ErrorKind::NotConvex: return "NotConvex";
    case ErrorKind::NotAPath: return "NotAPath";
    case ErrorKind::NotMonotonePath: return "NotMonotonePath";
    case ErrorKind::Precondition: return "Precondition";
    case ErrorKind::InvariantViolation: return "InvariantViolation";
    case ErrorKind::EmptyDifference: return "EmptyDifference";
    case ErrorKind::InvalidInputSequence: return "InvalidInputSequence";
    case ErrorKind::TooLarge: return "TooLarge";
    case ErrorKind::BadParity: return "BadParity";
    case ErrorKind::TooSmall: return "TooSmall";
    case ErrorKind::SeedExhausted: return "SeedExhausted";
    case ErrorKind::NotFound: return "NotFound";
    case ErrorKind::Unreachable: return "Unreachable";
  }
  return "Unknown";
}

Orientation orientation(Point p, Point q, Point r) {
  const std::int64_t det = cross(q - p, r - p);
  if (det > 0) return Orientation::CounterClockwise;
  if (det < 0) return Orientation::Clockwise;
  return Orientation::Collinear;
}

namespace {

std::string describe(const Point& p) {
  return "(" + std::to_string(p.x) + ", " + std::to_string(p.y) + ")";
}

// Andrew's monotone chain; returns the hull counterclockwise, collinear points dropped.
std::vector<int> convex_hull(std::span<const Point> pts, std::span<const int> by_xy) {
  const int n = static_cast<int>(pts.size());
  if (n < 3) return {by_xy.begin(), by_xy.end()};
  std::vector<int> hull(2 * n);
  int k = 0;
  for (int i = 0; i < n; ++i) {
    while (k >= 2 && orientation(pts[hull[k - 2]], pts[hull[k - 1]], pts[by_xy[i]]) !=
                         Orientation::CounterClockwise)
      --k;
    hull[k++] = by_xy[i];
  }
  for (int i = n - 2, lower = k + 1; i >= 0; --i) {
    while (k >= lower && orientation(pts[hull[k - 2]], pts[hull[k - 1]], pts[by_xy[i]]) !=
                             Orientation::CounterClockwise)
      --k;
    hull[k++] = by_xy[i];
  }
  hull.resize(k - 1);
  return hull;
}

}  // namespace

PointSet::PointSet(std::vector<Point> points) : points_(std::move(points)) {
  const int n = size();
  for (int i = 0; i < n; ++i) {
    const auto& p = points_[i];
    if (p.x < -kMaxCoordinate || p.x > kMaxCoordinate || p.y < -kMaxCoordinate ||
        p.y > kMaxCoordinate)
      throw Error(ErrorKind::InvalidInput,
                  "point " + std::to_string(i) + " " + describe(p) + " exceeds coordinate bound");
  }

  order_.resize(n);
  std::iota(order_.begin(), order_.end(), 0);
  std::sort(order_.begin(), order_.end(), [&](int i, int j) {
    const auto& p = points_[i];
    const auto& q = points_[j];
    return p.y != q.y ? p.y < q.y : p.x < q.x;
  });
  for (int r = 0; r + 1 < n; ++r) {
    if (points_[order_[r]] == points_[order_[r + 1]])
      throw Error(ErrorKind::InvalidInput, "duplicate points " + std::to_string(order_[r]) +
                                               " and " + std::to_string(order_[r + 1]));
  }
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      for (int k = j + 1; k < n; ++k)
        if (orientation(points_[i], points_[j], points_[k]) == Orientation::Collinear)
          throw Error(ErrorKind::InvalidInput, "collinear points " + std::to_string(i) + ", " +
                                                   std::to_string(j) + ", " + std::to_string(k));
  rank_.resize(n);
  for (int r = 0; r < n; ++r) rank_[order_[r]] = r;

  std::vector<int> by_xy(n);
  std::iota(by_xy.begin(), by_xy.end(), 0);
  std::sort(by_xy.begin(), by_xy.end(), [&](int i, int j) {
    const auto& p = points_[i];
    const auto& q = points_[j];
    return p.x != q.x ? p.x < q.x : p.y < q.y;
  });
  auto hull = convex_hull(points_, by_xy);
  convex_ = static_cast<int>(hull.size()) == n;
  if (convex_) {
    // Start the cycle at the lowest point.
    auto start = std::find(hull.begin(), hull.end(), order_.empty() ? 0 : order_[0]);
    std::rotate(hull.begin(), start, hull.end());
    hull_ = std::move(hull);
    hull_pos_.assign(n, 0);
    for (int p = 0; p < n; ++p) hull_pos_[hull_[p]] = p;
  }
}

int PointSet::hull_position(int index) const {
  if (!convex_) throw Error(ErrorKind::NotConvex, "point set is not in convex position");
  return hull_pos_[index];
}

bool PointSet::is_hull_edge(Edge e) const {
  if (convex_) {
    const int d = std::abs(hull_pos_[e.a] - hull_pos_[e.b]);
    return d == 1 || d == size() - 1;
  }
  // General position: all other points strictly on one side.
  const Point& p = points_[e.a];
  const Point& q = points_[e.b];
  int left = 0, right = 0;
  for (int i = 0; i < size(); ++i) {
    if (e.has(i)) continue;
    (orientation(p, q, points_[i]) == Orientation::CounterClockwise ? left : right)++;
  }
  return left == 0 || right == 0;
}

PointSet PointSet::with_order(std::vector<int> order) const {
  const int n = size();
  if (static_cast<int>(order.size()) != n)
    throw Error(ErrorKind::InvalidInput, "order has wrong length");
  std::vector<int> seen(n, 0);
  for (int v : order) {
    if (v < 0 || v >= n || seen[v]++) throw Error(ErrorKind::InvalidInput, "order is not a permutation");
  }
  PointSet copy = *this;
  copy.order_ = std::move(order);
  for (int r = 0; r < n; ++r) copy.rank_[copy.order_[r]] = r;
  return copy;
}

PointSet PointSet::reversed() const {
  std::vector<int> order(order_.rbegin(), order_.rend());
  return with_order(std::move(order));
}

namespace {

bool on_segment(Point p, Point q, Point r) {
  // r collinear with pq; inside the bounding box means on the closed segment.
  return std::min(p.x, q.x) <= r.x && r.x <= std::max(p.x, q.x) && std::min(p.y, q.y) <= r.y &&
         r.y <= std::max(p.y, q.y);
}

}  // namespace

bool segments_cross(Edge e1, Edge e2, const PointSet& ps) {
  if (e1.shares_endpoint(e2)) return false;
  const Point p1 = ps.point(e1.a), p2 = ps.point(e1.b);
  const Point q1 = ps.point(e2.a), q2 = ps.point(e2.b);
  const auto o1 = orientation(p1, p2, q1);
  const auto o2 = orientation(p1, p2, q2);
  const auto o3 = orientation(q1, q2, p1);
  const auto o4 = orientation(q1, q2, p2);
  if (o1 != o2 && o3 != o4 && o1 != Orientation::Collinear && o2 != Orientation::Collinear &&
      o3 != Orientation::Collinear && o4 != Orientation::Collinear)
    return true;
  if (o1 == Orientation::Collinear && on_segment(p1, p2, q1)) return true;
  if (o2 == Orientation::Collinear && on_segment(p1, p2, q2)) return true;
  if (o3 == Orientation::Collinear && on_segment(q1, q2, p1)) return true;
  if (o4 == Orientation::Collinear && on_segment(q1, q2, p2)) return true;
  return false;
}

bool convex_cross(Edge e1, Edge e2, const PointSet& ps) {
  if (!ps.is_convex()) throw Error(ErrorKind::NotConvex, "convex_cross on non-convex point set");
  if (e1.shares_endpoint(e2)) return false;
  int a = ps.hull_position(e1.a), b = ps.hull_position(e1.b);
  if (a > b) std::swap(a, b);
  const int c = ps.hull_position(e2.a), d = ps.hull_position(e2.b);
  const bool c_in = a < c && c < b;
  const bool d_in = a < d && d < b;
  return c_in != d_in;
}

SidePair sides_of(Edge edge, const PointSet& ps) {
  if (!ps.is_convex()) throw Error(ErrorKind::NotConvex, "sides_of on non-convex point set");
  const int n = ps.size();
  const auto hull = ps.hull_cycle();
  SidePair sp{edge, {}, {}};
  for (int p = ps.hull_position(edge.a);; p = (p + 1) % n) {
    sp.q.push_back(hull[p]);
    if (hull[p] == edge.b) break;
  }
  for (int p = ps.hull_position(edge.b);; p = (p + 1) % n) {
    sp.q_bar.push_back(hull[p]);
    if (hull[p] == edge.a) break;
  }
  return sp;
}

PointSet reorder_by_direction(const PointSet& ps, Vec dir) {
  if (dir.x == 0 && dir.y == 0) throw Error(ErrorKind::InvalidInput, "zero direction");
  const Vec perp{dir.y, -dir.x};
  std::vector<int> order(ps.size());
  std::iota(order.begin(), order.end(), 0);
  auto key = [&](int i) {
    const Vec p{ps.point(i).x, ps.point(i).y};
    return std::pair{dot(p, dir), dot(p, perp)};
  };
  std::sort(order.begin(), order.end(), [&](int i, int j) { return key(i) < key(j); });
  return ps.with_order(std::move(order));
}

bool triangle_empty(int a, int b, int c, const PointSet& ps) {
  const Point pa = ps.point(a), pb = ps.point(b), pc = ps.point(c);
  const auto turn = orientation(pa, pb, pc);
  for (int i = 0; i < ps.size(); ++i) {
    if (i == a || i == b || i == c) continue;
    const Point p = ps.point(i);
    if (orientation(pa, pb, p) == turn && orientation(pb, pc, p) == turn &&
        orientation(pc, pa, p) == turn)
      return false;
  }
  return true;
}

}  // namespace ncst
