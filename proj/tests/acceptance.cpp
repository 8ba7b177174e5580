// Runs the end-to-end acceptance checks and prints one PASS/FAIL line each.
#include <omp.h>

#include <atomic>
#include <chrono>
#include <functional>
#include <iomanip>
#include <iostream>
#include <random>
#include <sstream>

#include "ncst/convex_opt.hpp"
#include "ncst/instances.hpp"
#include "ncst/oracle/census.hpp"
#include "ncst/oracle/conjectures.hpp"
#include "ncst/oracle/eccentricity.hpp"
#include "ncst/oracle/enumerate.hpp"
#include "ncst/oracle/symmetry.hpp"
#include "ncst/two_phase.hpp"

using namespace ncst;
using namespace ncst::oracle;

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

int workers() {
  const int env = thread_count_from_env();
  return env > 1 ? env : omp_get_num_procs();
}

std::vector<Tree> trees_of(const PointSetPtr& ps) {
  const EdgeUniverse u(ps->size());
  std::vector<Tree> out;
  for (auto code : enumerate_trees(*ps, u)) out.push_back(u.to_tree(ps, code));
  return out;
}

ReconfigGraph graph_of(const PointSetPtr& ps, FlipRule rule = FlipRule::Exchange) {
  return build_graph(enumerate_trees(*ps, EdgeUniverse(ps->size())), *ps, rule);
}

// Runs check(a, b) over all ordered pairs in parallel; returns failures and
// records the first failing pair.
template <class Check>
std::uint64_t all_pairs(const std::vector<Tree>& trees, Check check, std::string& first) {
  std::atomic<std::uint64_t> failures{0};
  const auto m = static_cast<std::int64_t>(trees.size());
#pragma omp parallel for schedule(dynamic, 8) num_threads(workers())
  for (std::int64_t i = 0; i < m; ++i)
    for (std::int64_t j = 0; j < m; ++j) {
      std::string why;
      try {
        why = check(trees[i], trees[j]);
      } catch (const std::exception& e) {
        why = e.what();
      }
      if (why.empty()) continue;
      if (failures.fetch_add(1) == 0) {
#pragma omp critical
        first = "pair (" + std::to_string(i) + ", " + std::to_string(j) + "): " + why;
      }
    }
  return failures.load();
}

Outcome table_rows() {
  const std::vector<std::string> expected = {"3 3 1 1",         "12 32 3 2",       "55 260 4 3",     "273 1920 5 4",
                                             "1428 13566 6 5",  "7752 93632 8 6",  "43263 637560 9 7"};
  CensusOptions opt;
  opt.threads = workers();
  std::ostringstream detail;
  bool pass = true;
  for (int n = 3; n <= 9; ++n) {
    const auto row = census(*regular_polygon(n), opt);
    const auto got = format_row(row);
    pass &= got == expected[n - 3];
    detail << " n=" << n << ":[" << got << "]";
  }
  return {pass, detail.str()};
}

Outcome path_columns() {
  const int counts[] = {3, 8, 20, 48, 112, 256, 576};
  const int diam[] = {1, 3, 4, 5, 6, 7, 8};
  CensusOptions opt;
  opt.paths = true;
  opt.threads = workers();
  std::ostringstream detail;
  bool pass = true;
  for (int n = 3; n <= 9; ++n) {
    const auto p = *census(*regular_polygon(n), opt).paths;
    pass &= p.count == static_cast<std::uint64_t>(counts[n - 3]) && p.diameter == diam[n - 3];
    pass &= p.radius_all_centers == n - 2;
    detail << " n=" << n << ":" << p.count << "/" << p.diameter << "/r_all=" << p.radius_all_centers
           << "/r_paths=" << p.radius_path_centers;
  }
  return {pass, detail.str() + " (radius checked with centers over all trees)"};
}

std::string check_reaches(const FlipSequence& seq, const Tree& target, int bound) {
  const auto r = validate_sequence(seq, target);
  if (!r.reaches_target) return "invalid: " + r.error;
  if (static_cast<int>(seq.size()) > bound) return "length " + std::to_string(seq.size()) + " > " + std::to_string(bound);
  return "";
}

Outcome two_phase_bound() {
  std::string first;
  std::uint64_t failures = 0, checked = 0;
  for (int n : {5, 6}) {
    const auto trees = trees_of(regular_polygon(n));
    failures += all_pairs(trees, [&](const Tree& a, const Tree& b) {
      return check_reaches(two_phase_reconfigure(a, b), b, 2 * n - 3);
    }, first);
    checked += trees.size() * trees.size();
  }
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 10000; ++trial) {
    const auto ps = general_random(10, 7000 + trial / 100);
    const Tree a = random_tree(ps, rng), b = random_tree(ps, rng);
    const auto why = check_reaches(two_phase_reconfigure(a, b), b, 17);
    ++checked;
    if (!why.empty() && failures++ == 0) first = why;
  }
  std::uint64_t path_pairs = 0;
  for (int trial = 0; trial < 2000; ++trial) {
    const int n = 4 + trial % 9;
    const auto ps = general_random(n, 9000 + trial);
    const Tree target = random_monotone_path(ps, rng);
    const Tree start = random_tree(ps, rng);
    const auto seq = reconfigure_to_monotone_path(start, target);
    const int h = static_cast<int>(diff(start, target).happy.size());
    auto why = check_reaches(seq, target, 2 * n);
    if (why.empty() && 2 * static_cast<int>(seq.size()) > 3 * n - 4 - 2 * h) why = "path bound exceeded";
    ++path_pairs;
    if (!why.empty() && failures++ == 0) first = why;
  }
  std::ostringstream d;
  d << checked << " pairs within 2n-3, " << path_pairs << " monotone-path targets within 1.5n-2-h, failures="
    << failures << (first.empty() ? "" : " first: " + first);
  return {failures == 0, d.str()};
}

std::string check_phase2(const Tree& down, const Tree& up) {
  const auto seq = phase2(down, up);
  const auto r = validate_sequence(seq, up);
  if (!r.reaches_target) return "invalid: " + r.error;
  const int d = diff(down, up).d;
  if (static_cast<int>(seq.size()) != d || r.perfect_flips != d) return "not perfect";
  return "";
}

Outcome phase2_perfection() {
  std::string first;
  std::uint64_t failures = 0, pairs = 0;
  for (int n = 3; n <= 6; ++n) {
    std::vector<Tree> down, up;
    for (const Tree& t : trees_of(regular_polygon(n))) {
      const auto p = orientation_profile(t);
      if (p.downward()) down.push_back(t);
      if (p.upward()) up.push_back(t);
    }
    for (const Tree& a : down)
      for (const Tree& b : up) {
        const auto why = check_phase2(a, b);
        ++pairs;
        if (!why.empty() && failures++ == 0) first = why;
      }
  }
  std::mt19937_64 rng(77);
  for (int trial = 0; trial < 1000; ++trial) {
    const int n = 4 + trial % 9;
    const auto ps = general_random(n, 3000 + trial);
    const Tree a = random_tree(ps, rng), b = random_tree(ps, rng);
    const auto o = choose_opposite(a, b);
    const Tree x = trees_along(o.first).back(), y = trees_along(o.second).back();
    const auto why = o.first_upward ? check_phase2(y, x) : check_phase2(x, y);
    ++pairs;
    if (!why.empty() && failures++ == 0) first = why;
  }
  return {failures == 0, std::to_string(pairs) + " opposite pairs, failures=" + std::to_string(failures) +
                             (first.empty() ? "" : " first: " + first)};
}

Outcome convex_opt_bound_check() {
  std::string first;
  std::uint64_t failures = 0, pairs = 0;
  for (int n = 3; n <= 7; ++n) {
    const auto ps = regular_polygon(n);
    const auto trees = trees_of(ps);
    failures += all_pairs(trees, [&](const Tree& a, const Tree& b) -> std::string {
      const auto seq = convex_reconfigure(a, b);
      const int d = diff(a, b).d;
      const auto r = validate_sequence(seq, b);
      if (!r.reaches_target) return "invalid: " + r.error;
      const int len = static_cast<int>(seq.size());
      if (len < d || len > (d == 0 ? 0 : convex_opt_bound(d))) return "length " + std::to_string(len);
      for (const Edge& e : r.parking_edges)
        if (!ps->is_hull_edge(e)) return "interior parking edge";
      return "";
    }, first);
    pairs += trees.size() * trees.size();
  }
  return {failures == 0, std::to_string(pairs) + " pairs, failures=" + std::to_string(failures) +
                             (first.empty() ? "" : " first: " + first)};
}

Outcome double_broom_tightness() {
  std::ostringstream d;
  bool pass = true;
  for (int n : {6, 8}) {
    const auto inst = double_broom(n);
    const EdgeUniverse u(n);
    const auto g = graph_of(inst.points);
    const int dist = bfs_distance(g, g.id(u.encode(inst.tree("initial").edges())), g.id(u.encode(inst.tree("final").edges())));
    const int want = (3 * n - 10) / 2;
    pass &= dist == want;
    d << " bfs n=" << n << ": " << dist << " (1.5n-5=" << want << ")";
  }
  for (int n : {8, 10}) {
    const auto seq = double_broom_witness(n);
    const bool ok = validate_sequence(seq, double_broom(n).tree("final")).reaches_target &&
                    2 * static_cast<int>(seq.size()) == 3 * n - 10;
    pass &= ok;
    d << " witness n=" << n << ": length " << seq.size() << (ok ? " valid" : " BAD");
  }
  return {pass, d.str()};
}

Outcome happy_and_parking() {
  std::ostringstream d;
  bool pass = true;
  for (int n = 3; n <= 7; ++n) {
    const auto ps = regular_polygon(n);
    const auto g = graph_of(ps);
    const auto orbits = symmetry_orbits(g, SymmetryGroup(*ps, EdgeUniverse(n)));
    for (PairCheck c : {PairCheck::Happy, PairCheck::Parking}) {
      const auto r = sweep_pairs(g, *ps, c, orbits);
      pass &= r.passed == r.pairs && r.pairs == g.node_count() * g.node_count();
    }
  }
  d << "exhaustive n<=7 ok=" << pass;
  const auto ps = regular_polygon(8);
  const auto g = graph_of(ps);
  for (PairCheck c : {PairCheck::Happy, PairCheck::Parking}) {
    const auto r = sample_pairs(g, *ps, c, 2, 8);
    pass &= r.passed == r.pairs && r.pairs >= 10000;
    d << "; n=8 " << (c == PairCheck::Happy ? "happy " : "parking ") << r.passed << "/" << r.pairs;
  }
  return {pass, d.str()};
}

Outcome remove_add() {
  std::uint64_t sequences = 0, violations = 0;
  std::mt19937_64 rng(88);
  for (int n = 3; n <= 6; ++n) {
    const auto ps = regular_polygon(n);
    const auto g = graph_of(ps);
    for (std::uint32_t b = 0; b < g.node_count(); ++b) {
      const auto dist = bfs_levels(g, b);
      for (std::uint32_t a = 0; a < g.node_count(); ++a) {
        const auto seq = sequence_from_nodes(g, ps, random_geodesic(g, a, b, dist, rng));
        ++sequences;
        violations += find_shortenable_pair(seq).has_value();
      }
    }
  }
  // A violator on a convex quadrilateral: v2v3 is parked on v1v3 and comes
  // back two flips later without anything crossing it in between.
  const auto quad = std::make_shared<const PointSet>(std::vector<Point>{{0, 0}, {4, 1}, {5, 4}, {1, 5}});
  const Tree path = height_path(quad);
  const FlipSequence detour{path, {Flip{Edge(1, 2), Edge(0, 2)}, Flip{Edge(2, 3), Edge(0, 3)}, Flip{Edge(0, 2), Edge(1, 2)},
                                   Flip{Edge(0, 3), Edge(2, 3)}}};
  const auto normalized = normalize_sequence(detour);
  const bool shortened = validate_sequence(detour, path).reaches_target && normalized.size() < detour.size() &&
                         validate_sequence(normalized, path).reaches_target;
  return {violations == 0 && shortened, std::to_string(sequences) + " sampled geodesics, shortenable=" +
                                            std::to_string(violations) + "; violator " + std::to_string(detour.size()) +
                                            " -> " + std::to_string(normalized.size())};
}

Outcome slide_gap() {
  const auto ps = regular_polygon(8);
  const auto g = graph_of(ps, FlipRule::Slide);
  const auto gap = slide_happy_gap(g, ps, 8);
  if (!gap) return {false, "no pair at slide distance 8 with a larger happy-restricted distance"};
  return {gap->slide_distance == 8 && gap->happy_distance == 9,
          "slide distance " + std::to_string(gap->slide_distance) + ", happy-restricted " + std::to_string(gap->happy_distance)};
}

Outcome greedy_fails() {
  for (int n = 3; n <= 7; ++n) {
    const auto ps = regular_polygon(n);
    const auto f = find_greedy_failure(graph_of(ps), ps);
    if (!f) continue;
    const Tree end = trees_along(f->dead_end).back();
    const bool ok = validate_sequence(f->perfect, f->b).reaches_target && !(end == f->b);
    return {ok, "n=" + std::to_string(n) + ": perfect length " + std::to_string(f->perfect.size()) +
                    ", dead end after " + std::to_string(f->dead_end.size()) + " perfect flips"};
  }
  return {false, "no pair found for n <= 7"};
}

Outcome cross_equivalence() {
  std::uint64_t checked = 0, mismatches = 0;
  for (int n = 3; n <= 9; ++n) {
    std::vector<PointSetPtr> sets{regular_polygon(n)};
    if (n >= 4) sets.push_back(double_broom(n - n % 2).points);
    for (std::uint64_t s = 0; s < 5; ++s) sets.push_back(convex_random(n, 100 * n + s));
    for (const auto& ps : sets) {
      const int m = ps->size();
      for (int a = 0; a < m; ++a)
        for (int b = a + 1; b < m; ++b)
          for (int c = 0; c < m; ++c)
            for (int d = c + 1; d < m; ++d) {
              ++checked;
              mismatches += convex_cross(Edge(a, b), Edge(c, d), *ps) != segments_cross(Edge(a, b), Edge(c, d), *ps);
            }
    }
  }
  return {mismatches == 0, std::to_string(checked) + " edge pairs, mismatches=" + std::to_string(mismatches)};
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"flip graph table n=3..9", table_rows},
      {"path columns n=3..9", path_columns},
      {"two-phase length bounds", two_phase_bound},
      {"phase 2 perfection", phase2_perfection},
      {"convex-opt length bound", convex_opt_bound_check},
      {"double broom tightness", double_broom_tightness},
      {"happy edge and hull parking", happy_and_parking},
      {"remove-add shortening", remove_add},
      {"slide gap on the octagon", slide_gap},
      {"greedy perfect dead ends", greedy_fails},
      {"convex crossing oracle", cross_equivalence},
  };
  int failed = 0;
  for (std::size_t k = 0; k < criteria.size(); ++k) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[k].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    failed += !o.pass;
    std::cout << (o.pass ? "PASS" : "FAIL") << " [" << k + 1 << "] " << criteria[k].first << " (" << std::fixed
              << std::setprecision(1) << secs << "s): " << o.detail.substr(o.detail.starts_with(" ") ? 1 : 0) << std::endl;
  }
  std::cout << (criteria.size() - failed) << "/" << criteria.size() << " criteria passed" << std::endl;
  return failed == 0 ? 0 : 1;
}
