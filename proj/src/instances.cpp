#include "ncst/instances.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <set>

#include "ncst/two_phase.hpp"

namespace ncst {

namespace {

constexpr double kRadius = 1'000'000.0;
constexpr int kMaxAttempts = 1000;

PointSetPtr by_height(std::vector<Point> pts) {
  std::sort(pts.begin(), pts.end(), [](const Point& p, const Point& q) { return std::pair{p.y, p.x} < std::pair{q.y, q.x}; });
  return std::make_shared<const PointSet>(std::move(pts));
}

Point on_circle(double angle) {
  return {std::llround(kRadius * std::cos(angle)), std::llround(kRadius * std::sin(angle))};
}

bool general_position(const std::vector<Point>& pts) {
  for (std::size_t i = 0; i < pts.size(); ++i)
    for (std::size_t j = i + 1; j < pts.size(); ++j) {
      if (pts[i] == pts[j]) return false;
      for (std::size_t k = j + 1; k < pts.size(); ++k)
        if (orientation(pts[i], pts[j], pts[k]) == Orientation::Collinear) return false;
    }
  return true;
}

Tree path_through(const PointSetPtr& ps, const std::vector<int>& order) {
  std::vector<Edge> edges;
  for (std::size_t k = 0; k + 1 < order.size(); ++k) edges.emplace_back(order[k], order[k + 1]);
  return Tree(ps, std::move(edges));
}

}  // namespace

const Tree& Instance::tree(const std::string& name) const {
  auto it = trees.find(name);
  if (it == trees.end()) throw Error(ErrorKind::InvalidInput, "no tree named '" + name + "'");
  return it->second;
}

InstanceKind parse_instance_kind(const std::string& name) {
  std::string key = name;
  std::replace(key.begin(), key.end(), '_', '-');
  if (key == "double-broom") return InstanceKind::DoubleBroom;
  if (key == "star") return InstanceKind::Star;
  if (key == "monotone-path") return InstanceKind::MonotonePath;
  if (key == "convex-random") return InstanceKind::ConvexRandom;
  if (key == "general-random") return InstanceKind::GeneralRandom;
  if (key == "regular-polygon") return InstanceKind::RegularPolygon;
  throw Error(ErrorKind::InvalidInput, "unknown instance kind '" + name + "'");
}

const char* to_string(InstanceKind kind) {
  switch (kind) {
    case InstanceKind::DoubleBroom: return "double-broom";
    case InstanceKind::Star: return "star";
    case InstanceKind::MonotonePath: return "monotone-path";
    case InstanceKind::ConvexRandom: return "convex-random";
    case InstanceKind::GeneralRandom: return "general-random";
    case InstanceKind::RegularPolygon: return "regular-polygon";
  }
  return "unknown";
}

PointSetPtr regular_polygon(int n) {
  if (n < 3) throw Error(ErrorKind::TooSmall, "need at least three points");
  std::vector<Point> pts;
  for (int k = 0; k < n; ++k) pts.push_back(on_circle(0.1 + 2 * std::numbers::pi * k / n));
  auto ps = by_height(std::move(pts));
  if (!ps->is_convex()) throw Error(ErrorKind::InvariantViolation, "rounded polygon lost convexity");
  return ps;
}

Instance double_broom(int n) {
  if (n % 2 != 0) throw Error(ErrorKind::BadParity, "double broom needs even n, got " + std::to_string(n));
  if (n < 4) throw Error(ErrorKind::TooSmall, "double broom needs n >= 4");
  // Tall ellipse, y increasing with the index; v3, v5, ... on the left.
  std::vector<Point> pts;
  for (int i = 0; i < n; ++i) {
    const double y = -kRadius + 2 * kRadius * i / (n - 1);
    const double half_width = 0.5 * kRadius * std::sqrt(std::max(0.0, 1 - (y / kRadius) * (y / kRadius)));
    const std::int64_t x = (i == 0 || i == n - 1) ? 0 : std::llround(i % 2 == 0 ? -half_width : half_width);
    pts.push_back({x, std::llround(y)});
  }
  auto ps = std::make_shared<const PointSet>(std::move(pts));
  if (!ps->is_convex()) throw Error(ErrorKind::InvariantViolation, "double broom points are not convex");
  std::vector<Edge> ti{{0, n - 1}};
  for (int v = 2; v < n - 1; v += 2) ti.emplace_back(0, v);
  for (int v = 1; v < n - 1; v += 2) ti.emplace_back(n - 1, v);
  Instance inst{ps, {}};
  inst.trees.emplace("initial", Tree(ps, std::move(ti)));
  inst.trees.emplace("final", height_path(ps));
  return inst;
}

FlipSequence double_broom_witness(int n) {
  if (n % 2 != 0) throw Error(ErrorKind::BadParity, "double broom needs even n, got " + std::to_string(n));
  if (n < 6) throw Error(ErrorKind::TooSmall, "witness recipe needs n >= 6");
  const auto inst = double_broom(n);
  const Tree& ti = inst.tree("initial");
  const Tree& tf = inst.tree("final");
  const int top = n - 1;  // v_n
  // 0-based index of v_i
  auto v = [](int i) { return i - 1; };

  FlipSequence seq{ti, {}};
  Tree cur = ti;
  auto flip = [&](Edge remove, Edge add) {
    const Flip f{remove, add};
    cur = apply_flip(cur, f);
    seq.steps.push_back(f);
  };
  flip(Edge(v(2), top), Edge(v(1), v(2)));
  for (int i = n - 1; i >= 7; i -= 2) flip(Edge(v(1), v(i)), Edge(top, v(i)));
  flip(Edge(v(1), top), Edge(v(4), v(5)));

  // The upper part v5..vn hangs below v_n: sweep it bottom-up.
  std::vector<int> upper;
  for (int i = 6; i <= n; ++i) upper.push_back(v(i));
  const auto up = perfect_sweep(cur, tf, upper);
  for (const Flip& f : up.steps) flip(f.remove, f.add);

  // The lower part v1..v4 hangs above v_1: sweep it top-down.
  const auto rev = std::make_shared<const PointSet>(cur.points().reversed());
  const std::vector<int> lower{v(3), v(2)};
  const auto down = perfect_sweep(cur.rebased(rev), tf.rebased(rev), lower);
  for (const Flip& f : down.steps) flip(f.remove, f.add);

  if (!(cur == tf)) throw Error(ErrorKind::InvariantViolation, "double broom witness does not reach the path");
  return seq;
}

Tree star(const PointSetPtr& ps, int center) {
  if (center < 0 || center >= ps->size()) throw Error(ErrorKind::InvalidInput, "star center out of range");
  std::vector<Edge> edges;
  for (int u = 0; u < ps->size(); ++u)
    if (u != center) edges.emplace_back(center, u);
  return Tree(ps, std::move(edges));
}

Tree height_path(const PointSetPtr& ps) {
  const auto order = ps->height_order();
  return path_through(ps, std::vector<int>(order.begin(), order.end()));
}

PointSetPtr convex_random(int n, std::uint64_t seed) {
  if (n < 3) throw Error(ErrorKind::TooSmall, "need at least three points");
  constexpr int kGrid = 1 << 16;
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> slot(0, kGrid - 1);
  for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
    std::set<int> slots;
    while (static_cast<int>(slots.size()) < n) slots.insert(slot(rng));
    std::vector<Point> pts;
    for (int s : slots) pts.push_back(on_circle(2 * std::numbers::pi * s / kGrid));
    if (!general_position(pts)) continue;
    auto ps = by_height(std::move(pts));
    if (ps->is_convex()) return ps;
  }
  throw Error(ErrorKind::SeedExhausted, "no convex sample after " + std::to_string(kMaxAttempts) + " attempts");
}

PointSetPtr general_random(int n, std::uint64_t seed) {
  if (n < 3) throw Error(ErrorKind::TooSmall, "need at least three points");
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::int64_t> coord(-10'000, 10'000);
  std::vector<Point> pts;
  int attempts = 0;
  while (static_cast<int>(pts.size()) < n) {
    if (++attempts > kMaxAttempts * n) throw Error(ErrorKind::SeedExhausted, "could not place points in general position");
    pts.push_back({coord(rng), coord(rng)});
    if (!general_position(pts)) pts.pop_back();
  }
  return by_height(std::move(pts));
}

Tree random_tree(const PointSetPtr& ps, std::mt19937_64& rng) {
  const int n = ps->size();
  std::vector<Edge> candidates;
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) candidates.emplace_back(a, b);
  std::shuffle(candidates.begin(), candidates.end(), rng);
  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  std::vector<Edge> edges;
  for (const Edge& e : candidates) {
    if (find(e.a) == find(e.b)) continue;
    if (std::any_of(edges.begin(), edges.end(), [&](const Edge& f) { return segments_cross(e, f, *ps); })) continue;
    parent[find(e.a)] = find(e.b);
    edges.push_back(e);
  }
  return Tree(ps, std::move(edges));
}

Tree random_monotone_path(const PointSetPtr& ps, std::mt19937_64& rng) {
  std::uniform_int_distribution<std::int64_t> comp(-1000, 1000);
  Vec dir{0, 0};
  while (dir.x == 0 && dir.y == 0) dir = {comp(rng), comp(rng)};
  const auto ordered = reorder_by_direction(*ps, dir);
  const auto order = ordered.height_order();
  return path_through(ps, std::vector<int>(order.begin(), order.end()));
}

Instance make_instance(const InstanceSpec& spec) {
  if (spec.n < 3) throw Error(ErrorKind::TooSmall, "n must be at least 3");
  std::mt19937_64 rng(spec.seed);
  switch (spec.kind) {
    case InstanceKind::DoubleBroom: return double_broom(spec.n);
    case InstanceKind::Star: {
      auto ps = regular_polygon(spec.n);
      return Instance{ps, {{"star", star(ps, 0)}}};
    }
    case InstanceKind::MonotonePath: {
      auto ps = regular_polygon(spec.n);
      return Instance{ps, {{"path", height_path(ps)}}};
    }
    case InstanceKind::RegularPolygon: {
      auto ps = regular_polygon(spec.n);
      return Instance{ps, {{"initial", star(ps, 0)}, {"final", height_path(ps)}}};
    }
    case InstanceKind::ConvexRandom:
    case InstanceKind::GeneralRandom: {
      auto ps = spec.kind == InstanceKind::ConvexRandom ? convex_random(spec.n, spec.seed) : general_random(spec.n, spec.seed);
      Tree a = random_tree(ps, rng);
      Tree b = random_tree(ps, rng);
      return Instance{ps, {{"initial", a}, {"final", b}}};
    }
  }
  throw Error(ErrorKind::InvalidInput, "unknown instance kind");
}

}  // namespace ncst
