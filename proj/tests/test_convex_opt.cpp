#include <doctest.h>

#include "ncst/convex_opt.hpp"
#include "ncst/instances.hpp"
#include "ncst/oracle/enumerate.hpp"
#include "support.hpp"

using namespace ncst;
using ncst::testing::E;
using ncst::testing::quad;
using ncst::testing::T;

TEST_SUITE("convex_opt") {
  TEST_CASE("bound values") {
    CHECK(convex_opt_bound(1) == 1);
    CHECK(convex_opt_bound(2) == 3);
    CHECK(convex_opt_bound(5) == 8);
    CHECK(convex_opt_bound(13) == 23);
  }

  TEST_CASE("minimal edges on the quad") {
    const auto ps = quad();
    const Tree ti = T(ps, {{1, 2}, {1, 4}, {1, 3}});
    const Tree tf = T(ps, {{1, 2}, {3, 4}, {2, 4}});
    const auto all = minimal_edges(ti, tf);
    auto it = std::find_if(all.begin(), all.end(), [](const MinimalEdgeReport& m) { return m.edge == E(3, 4); });
    REQUIRE(it != all.end());
    CHECK(it->k == 0);
    CHECK(it->owner == TreeSide::Final);
    CHECK(it->side.q == std::vector<int>{2, 3});
    CHECK(find_minimal_edge(ti, tf).k == 0);
    CHECK_THROWS_AS(minimal_edges(ti, ti), Error);
    const auto inner = std::make_shared<const PointSet>(std::vector<Point>{{0, 0}, {10, 0}, {5, 10}, {5, 3}});
    CHECK_THROWS_AS(minimal_edges(star(inner, 3), star(inner, 0)), Error);
  }

  TEST_CASE("crossing diagonals give k = 1") {
    const auto ps = quad();
    const auto m = find_minimal_edge(T(ps, {{1, 2}, {1, 3}, {3, 4}}), T(ps, {{1, 2}, {2, 4}, {3, 4}}));
    CHECK(m.k == 1);
    CHECK(m.k <= (1 + 3) / 2);
  }

  TEST_CASE("worked example") {
    const auto ps = quad();
    const Tree ti = T(ps, {{1, 2}, {1, 4}, {1, 3}});
    const Tree tf = T(ps, {{1, 2}, {3, 4}, {2, 4}});
    const auto seq = convex_reconfigure(ti, tf);
    REQUIRE(seq.size() == 2);
    CHECK(seq.steps[0] == Flip{E(1, 3), E(3, 4)});
    CHECK(seq.steps[1] == Flip{E(1, 4), E(2, 4)});
    const auto r = validate_sequence(seq, tf);
    CHECK(r.reaches_target);
    CHECK(r.perfect_flips == 2);
    CHECK(convex_reconfigure(ti, ti).size() == 0);
  }

  TEST_CASE("corrupted state is caught") {
    const auto ps = regular_polygon(6);
    const auto hull = ps->hull_cycle();
    MinimalEdgeReport m;
    m.edge = Edge(hull[0], hull[3]);
    m.owner = TreeSide::Final;
    m.side = sides_of(m.edge, *ps);
    // Hull cycle minus one hull edge: a path that joins the endpoints on
    // whichever side keeps all of its arc.
    auto hull_path_without = [&](int p) {
      std::vector<Edge> edges;
      for (int k = 0; k < 6; ++k)
        if (k != p) edges.emplace_back(hull[k], hull[(k + 1) % 6]);
      return Tree(ps, std::move(edges));
    };
    // One of the two cuts lies on the far arc, the other on the near arc.
    int caught = 0;
    for (int p : {1, 4}) {
      try {
        check_uv_disconnected(hull_path_without(p), m);
      } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::InvariantViolation);
        CHECK(e.detail().find("tree:") != std::string::npos);
        ++caught;
      }
    }
    CHECK(caught == 1);
  }

  TEST_CASE("exhaustive convex n = 6") {
    const auto ps = regular_polygon(6);
    const oracle::EdgeUniverse u(6);
    std::vector<Tree> trees;
    for (auto code : oracle::enumerate_trees(*ps, u)) trees.push_back(u.to_tree(ps, code));
    for (const Tree& a : trees)
      for (const Tree& b : trees) {
        const auto seq = convex_reconfigure(a, b);
        const int d = diff(a, b).d;
        const auto r = validate_sequence(seq, b);
        REQUIRE(r.reaches_target);
        REQUIRE(static_cast<int>(seq.size()) >= d);
        REQUIRE(static_cast<int>(seq.size()) <= (d == 0 ? 0 : convex_opt_bound(d)));
        for (const Edge& p : r.parking_edges) REQUIRE(ps->is_hull_edge(p));
      }
  }
}
