#include <doctest.h>

#include <filesystem>
#include <random>

#include "ncst/convex_opt.hpp"
#include "ncst/instances.hpp"
#include "ncst/oracle/census.hpp"
#include "ncst/oracle/conjectures.hpp"
#include "ncst/oracle/eccentricity.hpp"
#include "ncst/oracle/enumerate.hpp"
#include "ncst/oracle/reconfig_graph.hpp"
#include "ncst/oracle/symmetry.hpp"
#include "ncst/two_phase.hpp"
#include "support.hpp"

using namespace ncst;
using namespace ncst::oracle;
using ncst::testing::quad;
using ncst::testing::T;

namespace {

ReconfigGraph convex_graph(int n, FlipRule rule = FlipRule::Exchange) {
  const auto ps = regular_polygon(n);
  return build_graph(enumerate_trees(*ps, EdgeUniverse(n)), *ps, rule);
}

std::uint32_t node_of(const ReconfigGraph& g, const Tree& t) { return g.id(EdgeUniverse(g.n).encode(t.edges())); }

}  // namespace

TEST_SUITE("oracle") {
  TEST_CASE("edge universe round trip") {
    const EdgeUniverse u(5);
    CHECK(u.size() == 10);
    for (int i = 0; i < u.size(); ++i) CHECK(u.index(u.edge(i)) == i);
    const auto ps = regular_polygon(5);
    const Tree t = star(ps, 2);
    CHECK(u.to_tree(ps, u.encode(t.edges())) == t);
    CHECK(popcount(u.hull_mask(*ps)) == 5);
    CHECK_THROWS_AS(EdgeUniverse(17), Error);
  }

  TEST_CASE("tree and flip-edge counts") {
    const std::uint64_t trees[] = {3, 12, 55, 273, 1428, 7752};
    const std::uint64_t edges[] = {3, 32, 260, 1920, 13566, 93632};
    for (int n = 3; n <= 8; ++n) {
      const auto g = convex_graph(n);
      CHECK(g.node_count() == trees[n - 3]);
      CHECK(g.edge_count() == edges[n - 3]);
    }
    CHECK_THROWS_AS(enumerate_trees(*regular_polygon(13), EdgeUniverse(13)), Error);
  }

  TEST_CASE("convex and general enumeration agree") {
    for (int n = 3; n <= 7; ++n) {
      const auto ps = convex_random(n, 40 + n);
      const EdgeUniverse u(n);
      CHECK(enumerate_convex(*ps, u) == enumerate_general(*ps, u));
    }
    // Every enumerated tree on a general set is valid and distinct.
    const auto ps = general_random(7, 3);
    const EdgeUniverse u(7);
    const auto codes = enumerate_trees(*ps, u);
    CHECK(std::adjacent_find(codes.begin(), codes.end()) == codes.end());
    for (auto c : codes) CHECK(is_noncrossing_tree(u.decode(c), *ps));
  }

  TEST_CASE("adjacency is symmetric and matches apply_flip") {
    const auto ps = regular_polygon(6);
    const auto g = convex_graph(6);
    const EdgeUniverse u(6);
    for (std::uint32_t v = 0; v < g.node_count(); ++v)
      for (auto w : g.neighbors(v)) {
        const auto back = g.neighbors(w);
        REQUIRE(std::find(back.begin(), back.end(), v) != back.end());
        REQUIRE(popcount(g.nodes[v] & g.nodes[w]) == 4);
      }
    CHECK(parse_flip_rule("slide") == FlipRule::Slide);
    CHECK_THROWS_AS(parse_flip_rule("rotate"), Error);
  }

  TEST_CASE("symmetry maps are automorphisms") {
    for (int n = 4; n <= 7; ++n) {
      const auto ps = regular_polygon(n);
      const EdgeUniverse u(n);
      const SymmetryGroup sym(*ps, u);
      const auto g = build_graph(enumerate_trees(*ps, u), *ps, FlipRule::Exchange);
      CHECK(sym.size() == 2 * n);
      for (int k = 0; k < sym.size(); ++k)
        for (std::uint32_t v = 0; v < g.node_count(); ++v) {
          const auto image = g.id(sym.apply(k, g.nodes[v]));
          for (auto w : g.neighbors(v)) {
            const auto wi = g.id(sym.apply(k, g.nodes[w]));
            const auto nb = g.neighbors(image);
            REQUIRE(std::find(nb.begin(), nb.end(), wi) != nb.end());
          }
        }
      const auto orbits = symmetry_orbits(g, sym);
      CHECK(orbits.representatives.size() < g.node_count());
      CHECK(trivial_orbits(g).representatives.size() == g.node_count());
    }
  }

  TEST_CASE("eccentricity is constant on orbits, serial equals parallel") {
    const auto ps = regular_polygon(7);
    const EdgeUniverse u(7);
    const auto g = build_graph(enumerate_trees(*ps, u), *ps, FlipRule::Exchange);
    std::vector<std::uint32_t> all(g.node_count());
    std::iota(all.begin(), all.end(), 0u);
    const auto marks = path_mask(g);
    const auto serial = eccentricities_serial(g, all, marks);
    const auto parallel = eccentricities_parallel(g, all, marks, 4);
    CHECK(serial.all == parallel.all);
    CHECK(serial.marked == parallel.marked);
    const auto orbits = symmetry_orbits(g, SymmetryGroup(*ps, u));
    for (std::uint32_t v = 0; v < g.node_count(); ++v)
      REQUIRE(serial.all[v] == serial.all[orbits.representatives[orbits.orbit_of[v]]]);
  }

  TEST_CASE("census rows") {
    CensusOptions opt;
    opt.paths = true;
    auto row = census(*regular_polygon(6), opt);
    CHECK(format_row(row) == "273 1920 5 4 48 5 4");
    opt.use_symmetry = false;
    row = census(*regular_polygon(5), opt);
    CHECK(format_row(row) == "55 260 4 3 20 4 3");
    CHECK(row.paths->radius_path_centers == 3);
    CHECK_THROWS_AS(census(*regular_polygon(11), opt), Error);
  }

  TEST_CASE("graph cache round trip") {
    const auto dir = std::filesystem::temp_directory_path() / "ncst_cache_test";
    std::filesystem::remove_all(dir);
    const auto ps = regular_polygon(6);
    const auto built = load_or_build(*ps, FlipRule::Exchange, dir);
    const auto file = cache_path(dir, *ps, FlipRule::Exchange);
    REQUIRE(std::filesystem::exists(file));
    const auto loaded = load_graph(file, 6, FlipRule::Exchange, point_set_hash(*ps));
    REQUIRE(loaded);
    CHECK(loaded->nodes == built.nodes);
    CHECK(loaded->offsets == built.offsets);
    CHECK(loaded->targets == built.targets);
    CHECK_FALSE(load_graph(file, 6, FlipRule::Exchange, point_set_hash(*ps) + 1));
    CHECK_FALSE(load_graph(file, 6, FlipRule::Slide, point_set_hash(*ps)));
    CHECK(point_set_hash(*ps) != point_set_hash(*regular_polygon(7)));
    std::filesystem::remove_all(dir);
  }

  TEST_CASE("bfs distances") {
    const auto ps = quad();
    const EdgeUniverse u(4);
    const auto g = build_graph(enumerate_trees(*ps, u), *ps, FlipRule::Exchange);
    const auto s3 = node_of(g, T(ps, {{1, 3}, {2, 3}, {3, 4}}));
    const auto path = node_of(g, T(ps, {{1, 2}, {2, 3}, {3, 4}}));
    CHECK(bfs_distance(g, s3, s3) == 0);
    CHECK(bfs_distance(g, s3, path) == 1);
    CHECK(bfs_distance(g, node_of(g, star(ps, 0)), node_of(g, star(ps, 3))) == 2);

    const auto inst = double_broom(8);
    const EdgeUniverse u8(8);
    const auto g8 = build_graph(enumerate_trees(*inst.points, u8), *inst.points, FlipRule::Exchange);
    CHECK(bfs_distance(g8, node_of(g8, inst.tree("initial")), node_of(g8, inst.tree("final"))) == 7);
  }

  TEST_CASE("distance sandwich on convex n = 6") {
    const auto ps = regular_polygon(6);
    const EdgeUniverse u(6);
    const auto g = build_graph(enumerate_trees(*ps, u), *ps, FlipRule::Exchange);
    for (std::uint32_t b = 0; b < g.node_count(); b += 7) {
      const auto dist = bfs_levels(g, b);
      const Tree tb = u.to_tree(ps, g.nodes[b]);
      for (std::uint32_t a = 0; a < g.node_count(); ++a) {
        const Tree ta = u.to_tree(ps, g.nodes[a]);
        REQUIRE(dist[a] >= diff(ta, tb).d);
        REQUIRE(dist[a] <= static_cast<int>(convex_reconfigure(ta, tb).size()));
        REQUIRE(dist[a] <= static_cast<int>(two_phase_reconfigure(ta, tb).size()));
      }
    }
  }

  TEST_CASE("happy and parking checks") {
    const auto ps = quad();
    const EdgeUniverse u(4);
    const auto g = build_graph(enumerate_trees(*ps, u), *ps, FlipRule::Exchange);
    const auto s3 = node_of(g, T(ps, {{1, 3}, {2, 3}, {3, 4}}));
    const auto path = node_of(g, T(ps, {{1, 2}, {2, 3}, {3, 4}}));
    CHECK(happy_edge_check(g, s3, path));
    CHECK(happy_edge_check(g, path, s3));
    CHECK(hull_parking_check(g, *ps, s3, s3));
    const auto g6 = convex_graph(6);
    const auto ps6 = regular_polygon(6);
    const auto res = sweep_pairs(g6, *ps6, PairCheck::Happy, symmetry_orbits(g6, SymmetryGroup(*ps6, EdgeUniverse(6))));
    CHECK(res.pairs == 273u * 273u);
    CHECK(res.passed == res.pairs);

    const auto broom = double_broom(6);
    const EdgeUniverse u6(6);
    const auto gb = build_graph(enumerate_trees(*broom.points, u6), *broom.points, FlipRule::Exchange);
    CHECK(hull_parking_check(gb, *broom.points, node_of(gb, broom.tree("initial")), node_of(gb, broom.tree("final"))));
  }

  TEST_CASE("perfect sequences") {
    const auto ps = quad();
    const Tree ti = T(ps, {{1, 2}, {1, 4}, {1, 3}});
    const Tree tf = T(ps, {{1, 2}, {3, 4}, {2, 4}});
    const auto seq = perfect_sequence(ti, tf);
    REQUIRE(seq);
    CHECK(seq->size() == 2);
    CHECK(validate_sequence(*seq, tf).reaches_target);
    const auto broom = double_broom(8);
    // No happy edges here, so d = n - 1 = 7 equals the flip distance.
    CHECK(diff(broom.tree("initial"), broom.tree("final")).d == 7);
    const auto broom_seq = perfect_sequence(broom.tree("initial"), broom.tree("final"));
    REQUIRE(broom_seq);
    CHECK(broom_seq->size() == 7);
    const auto broom10 = double_broom(10);
    CHECK_FALSE(perfect_sequence(broom10.tree("initial"), broom10.tree("final")));
    CHECK(perfect_sequence(star(ps, 3), star(ps, 0)));
  }

  TEST_CASE("greedy perfect") {
    const auto ps = regular_polygon(6);
    const Tree a = star(ps, 0);
    const auto same = greedy_perfect(a, a);
    CHECK(same.completed);
    CHECK(same.steps.size() == 0);
    const auto g = convex_graph(6);
    const auto failure = find_greedy_failure(g, ps);
    REQUIRE(failure);
    CHECK(validate_sequence(failure->perfect, failure->b).reaches_target);
    const auto end = trees_along(failure->dead_end).back();
    CHECK_FALSE(end == failure->b);
    CHECK_FALSE(greedy_perfect(end, failure->b).completed);
  }

  TEST_CASE("slide neighbours match the definition") {
    const auto ps = regular_polygon(6);
    const EdgeUniverse u(6);
    const auto cross = u.crossing_masks(*ps);
    for (auto code : enumerate_trees(*ps, u)) {
      const Tree t = u.to_tree(ps, code);
      std::vector<TreeCode> expected;
      for (const Flip& f : slide_adjacent(t)) expected.push_back((code & ~bit(u.index(f.remove))) | bit(u.index(f.add)));
      std::vector<TreeCode> brute;
      for (const Edge& r : t.edges())
        for (int i = 0; i < u.size(); ++i) {
          const Edge x = u.edge(i);
          if (t.contains(x) || !r.shares_endpoint(x)) continue;
          const int pivot = r.has(x.a) ? x.a : x.b;
          const int from = r.other(pivot), to = x.other(pivot);
          if (!t.contains(Edge(from, to))) continue;
          if (!triangle_empty(pivot, from, to, *ps)) continue;
          try {
            apply_flip(t, Flip{r, x});
            brute.push_back((code & ~bit(u.index(r))) | bit(i));
          } catch (const Error&) {
          }
        }
      auto got = slide_neighbors(code, u, cross, *ps);
      std::sort(expected.begin(), expected.end());
      std::sort(brute.begin(), brute.end());
      std::sort(got.begin(), got.end());
      brute.erase(std::unique(brute.begin(), brute.end()), brute.end());
      REQUIRE(got == brute);
      REQUIRE(expected == brute);
    }
  }

  TEST_CASE("slide graph distances dominate exchange distances") {
    const auto ex = convex_graph(6);
    const auto sl = convex_graph(6, FlipRule::Slide);
    REQUIRE(ex.nodes == sl.nodes);
    const auto de = bfs_levels(ex, 0), ds = bfs_levels(sl, 0);
    for (std::size_t v = 0; v < de.size(); ++v) CHECK(ds[v] >= de[v]);
  }

  TEST_CASE("slide on an empty edge set") {
    const auto single = std::make_shared<const PointSet>(std::vector<Point>{{0, 0}});
    try {
      slide_adjacent(Tree(single, {}));
      FAIL("edgeless tree accepted");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::Precondition);
    }
    CHECK(slide_adjacent(height_path(regular_polygon(3))).size() > 0);
  }
}
