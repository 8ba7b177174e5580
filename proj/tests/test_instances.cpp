#include <doctest.h>

#include <random>

#include "ncst/instances.hpp"
#include "ncst/two_phase.hpp"
#include "support.hpp"

using namespace ncst;
using ncst::testing::quad;

TEST_SUITE("instances") {
  TEST_CASE("kind names") {
    CHECK(parse_instance_kind("double_broom") == InstanceKind::DoubleBroom);
    CHECK(parse_instance_kind("monotone-path") == InstanceKind::MonotonePath);
    CHECK(std::string(to_string(InstanceKind::GeneralRandom)) == "general-random");
    CHECK_THROWS_AS(parse_instance_kind("spiral"), Error);
  }

  TEST_CASE("double broom n = 4") {
    const auto inst = double_broom(4);
    CHECK(inst.tree("initial").edges().size() == 3);
    CHECK(inst.tree("initial") == Tree(inst.points, {Edge(0, 2), Edge(1, 3), Edge(0, 3)}));
    CHECK(inst.tree("final") == height_path(inst.points));
    CHECK_THROWS_AS(double_broom(7), Error);
    CHECK_THROWS_AS(double_broom_witness(4), Error);
  }

  TEST_CASE("double broom structure") {
    for (int n = 4; n <= 16; n += 2) {
      const auto inst = double_broom(n);
      const auto& ps = *inst.points;
      CHECK(ps.is_convex());
      for (int i = 1; i < n; ++i) CHECK(ps.point(i).y > ps.point(i - 1).y);
      const Tree& ti = inst.tree("initial");
      CHECK(ti.degree(0) == n / 2);
      CHECK(ti.degree(n - 1) == n / 2);
      for (const Edge& e : inst.tree("final").edges()) {
        if (ps.is_hull_edge(e)) continue;
        int crossings = 0;
        for (const Edge& f : ti.edges()) crossings += segments_cross(e, f, ps);
        CHECK(crossings >= n / 2 - 1);
      }
    }
  }

  TEST_CASE("double broom witness") {
    for (int n : {8, 10, 12}) {
      const auto seq = double_broom_witness(n);
      const auto inst = double_broom(n);
      CHECK(2 * static_cast<int>(seq.size()) == 3 * n - 10);
      CHECK(validate_sequence(seq, inst.tree("final")).reaches_target);
    }
    const auto six = double_broom_witness(6);
    CHECK(validate_sequence(six, double_broom(6).tree("final")).reaches_target);
    CHECK(six.size() == 5);
  }

  TEST_CASE("generators") {
    const auto ps = quad();
    const auto p = orientation_profile(star(ps, 0));
    CHECK(p.s == 1);
    CHECK(p.t == 3);
    CHECK(regular_polygon(8)->is_convex());
    CHECK(convex_random(12, 3)->is_convex());
    const auto g = general_random(9, 7);
    CHECK_NOTHROW(PointSet(std::vector<Point>(g->points().begin(), g->points().end())));
    CHECK(*general_random(9, 7)->points().data() == *g->points().data());
    std::mt19937_64 rng(1);
    for (int trial = 0; trial < 30; ++trial) {
      const auto q = general_random(10, trial);
      CHECK(is_noncrossing_tree(random_tree(q, rng).edges(), *q));
      CHECK(monotone_direction(random_monotone_path(q, rng)).has_value());
    }
    CHECK_THROWS_AS(star(ps, 4), Error);
    CHECK_THROWS_AS(regular_polygon(2), Error);
  }

  TEST_CASE("make_instance names") {
    CHECK(make_instance({InstanceKind::Star, 6, 0}).trees.count("star") == 1);
    CHECK(make_instance({InstanceKind::MonotonePath, 6, 0}).trees.count("path") == 1);
    const auto inst = make_instance({InstanceKind::ConvexRandom, 9, 4});
    CHECK(inst.trees.count("initial") == 1);
    CHECK(inst.trees.count("final") == 1);
    CHECK_THROWS_AS(make_instance({InstanceKind::Star, 2, 0}), Error);
  }
}
