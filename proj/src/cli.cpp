#include "ncst/cli.hpp"

#include <CLI11.hpp>

#include <iomanip>
#include <optional>

#include "ncst/convex_opt.hpp"
#include "ncst/instances.hpp"
#include "ncst/io.hpp"
#include "ncst/oracle/census.hpp"
#include "ncst/oracle/conjectures.hpp"
#include "ncst/two_phase.hpp"

namespace ncst {

namespace {

using oracle::FlipRule;

std::string edges_str(const Tree& t) {
  std::string s = "[";
  for (const Edge& e : t.edges()) s += (s.size() > 1 ? ", [" : "[") + std::to_string(e.a) + ", " + std::to_string(e.b) + "]";
  return s + "]";
}

struct ValidateArgs {
  std::string file;
  std::string initial = "initial";
  std::string target = "final";
};

int cmd_validate(const ValidateArgs& a, std::ostream& out) {
  const auto inst = load_instance(a.file);
  const bool convex = inst.points->is_convex();
  auto ti = inst.trees.find(a.initial), tf = inst.trees.find(a.target);
  if (ti != inst.trees.end() && tf != inst.trees.end()) {
    const auto s = diff(ti->second, tf->second);
    out << "d=" << s.d << " happy=" << s.happy.size() << " convex=" << (convex ? "true" : "false") << '\n';
  } else {
    out << "trees=" << inst.trees.size() << " convex=" << (convex ? "true" : "false") << '\n';
  }
  return kExitOk;
}

struct ReconfigureArgs {
  std::string file;
  std::string algo = "two-phase";
  std::string initial = "initial";
  std::string target;
  std::string out;
};

int cmd_reconfigure(const ReconfigureArgs& a, std::ostream& out, std::ostream& err) {
  const auto inst = load_instance(a.file);
  const Tree& ti = inst.tree(a.initial);
  const Tree& tf = inst.tree(a.target);
  const int n = ti.vertex_count();
  const auto s = diff(ti, tf);
  FlipSequence seq{ti, {}};
  int bound = 0;
  if (a.algo == "two-phase") {
    seq = two_phase_reconfigure(ti, tf);
    bound = 2 * n - 3;
  } else if (a.algo == "convex-opt") {
    seq = convex_reconfigure(ti, tf);
    bound = convex_opt_bound(s.d);
  } else if (a.algo == "path") {
    seq = ti.points().is_convex() ? reconfigure_convex_to_path(ti, tf) : reconfigure_to_monotone_path(ti, tf);
    bound = 3 * n / 2 - 2 - static_cast<int>(s.happy.size());
  } else {
    err << "unknown --algo '" << a.algo << "' (two-phase, convex-opt, path)\n";
    return kExitInput;
  }
  const auto report = validate_sequence(seq, tf);
  if (!report.reaches_target) {
    err << "internal error: produced sequence does not validate: " << report.error << '\n';
    return kExitAlgorithm;
  }
  out << "length=" << seq.size() << " bound=" << bound << " perfect=" << report.perfect_flips << " d=" << s.d << '\n';
  if (!a.out.empty()) write_json(a.out, sequence_to_json(seq, tf));
  return kExitOk;
}

int cmd_verify(const std::string& file, std::ostream& out, std::ostream& err) {
  const auto sf = load_sequence(file);
  const auto r = validate_sequence(sf.sequence, sf.target);
  if (!r.valid) {
    err << "step " << *r.first_invalid_step << ": " << r.error << '\n';
    return kExitInput;
  }
  out << "valid=true reaches_target=" << (r.reaches_target ? "true" : "false") << " length=" << r.length
      << " perfect=" << r.perfect_flips << " happy_removed=" << r.happy_removed.size()
      << " parking=" << r.parking_edges.size() << '\n';
  return r.reaches_target ? kExitOk : kExitInput;
}

struct CensusArgs {
  int n = 0;
  bool convex = false;
  std::string input;
  bool paths = false;
  bool slide = false;
  bool sym = false;
  std::string cache;
  bool force = false;
  bool details = false;
};

int cmd_census(const CensusArgs& a, std::ostream& out, std::ostream& err) {
  PointSetPtr ps;
  if (!a.input.empty()) {
    ps = load_instance(a.input).points;
  } else if (a.convex) {
    ps = regular_polygon(a.n);
  } else {
    err << "census needs --convex with --n, or --input\n";
    return kExitInput;
  }
  oracle::CensusOptions opt;
  opt.paths = a.paths;
  opt.use_symmetry = a.sym;
  opt.rule = a.slide ? FlipRule::Slide : FlipRule::Exchange;
  opt.force = a.force;
  if (!a.cache.empty()) opt.cache_dir = a.cache;
  const auto row = oracle::census(*ps, opt);
  out << oracle::format_row(row) << '\n';
  if (a.details && row.paths)
    out << "# path radius: all-tree centers " << row.paths->radius_all_centers << ", path centers "
        << row.paths->radius_path_centers << '\n';
  return kExitOk;
}

struct ConjectureArgs {
  std::string which;
  int n = 0;
  int targets = 20;
  std::uint64_t seed = 1;
  bool force = false;
};

void guard(bool ok, const std::string& what) {
  if (!ok) throw Error(ErrorKind::TooLarge, what + " (use --force to override)");
}

int cmd_conjecture(const ConjectureArgs& a, std::ostream& out) {
  const auto ps = regular_polygon(a.n);
  if (a.which == "happy" || a.which == "parking") {
    guard(a.n <= 8 || a.force, "pair sweeps are limited to n <= 8");
    const auto check = a.which == "happy" ? oracle::PairCheck::Happy : oracle::PairCheck::Parking;
    const auto g = oracle::load_or_build(*ps, FlipRule::Exchange, {}, a.force);
    const std::size_t m = g.node_count();
    oracle::SweepResult r;
    if (a.n <= 7 || a.force) {
      const auto orbits = oracle::symmetry_orbits(g, oracle::SymmetryGroup(*ps, oracle::EdgeUniverse(a.n)));
      r = oracle::sweep_pairs(g, *ps, check, orbits);
    } else {
      r = oracle::sample_pairs(g, *ps, check, a.targets, a.seed);
      out << "sampled " << a.targets << " targets against all " << m << " sources\n";
    }
    if (r.passed == r.pairs) {
      if (r.pairs == m * m)
        out << "all " << m << "x" << m << " pairs pass\n";
      else
        out << "all " << r.pairs << " pairs pass\n";
    } else {
      const oracle::EdgeUniverse u(a.n);
      out << r.passed << "/" << r.pairs << " pairs pass\n";
      out << "counterexample a=" << edges_str(u.to_tree(ps, g.nodes[r.counterexample->first]))
          << " b=" << edges_str(u.to_tree(ps, g.nodes[r.counterexample->second])) << '\n';
    }
    return kExitOk;
  }
  if (a.which == "perfect") {
    guard(a.n <= 7 || a.force, "perfect statistics are limited to n <= 7");
    const auto g = oracle::load_or_build(*ps, FlipRule::Exchange, {}, a.force);
    const auto st = oracle::perfect_statistics(g);
    out << "perfect pairs " << st.perfect << "/" << st.pairs << " (" << std::fixed << std::setprecision(4)
        << static_cast<double>(st.perfect) / static_cast<double>(st.pairs) << ")\n";
    return kExitOk;
  }
  if (a.which == "greedy") {
    guard(a.n <= 7 || a.force, "greedy failure search is limited to n <= 7");
    const auto g = oracle::load_or_build(*ps, FlipRule::Exchange, {}, a.force);
    const auto w = oracle::find_greedy_failure(g, ps);
    if (!w) {
      out << "no pair with a perfect sequence and a perfect dead end\n";
      return kExitOk;
    }
    out << "a=" << edges_str(w->a) << "\nb=" << edges_str(w->b) << "\nperfect sequence length " << w->perfect.size()
        << ", dead end after " << w->dead_end.size() << " perfect flips\n";
    return kExitOk;
  }
  if (a.which == "slide-gap") {
    guard(a.n <= 9 || a.force, "slide gap search is limited to n <= 9");
    const auto g = oracle::load_or_build(*ps, FlipRule::Slide, {}, a.force);
    const auto gap = oracle::slide_happy_gap(g, ps, a.n == 8 ? std::optional<int>(8) : std::nullopt);
    if (!gap) {
      out << "no slide gap found\n";
      return kExitOk;
    }
    out << "a=" << edges_str(gap->a) << "\nb=" << edges_str(gap->b) << "\nslide distance " << gap->slide_distance
        << ", happy-restricted slide distance " << gap->happy_distance << '\n';
    return kExitOk;
  }
  throw Error(ErrorKind::InvalidInput, "unknown --which '" + a.which + "'");
}

struct GenArgs {
  std::string kind;
  int n = 0;
  std::uint64_t seed = 0;
  std::string out;
};

int cmd_gen(const GenArgs& a, std::ostream& out) {
  const auto inst = make_instance(InstanceSpec{parse_instance_kind(a.kind), a.n, a.seed});
  const auto doc = instance_to_json(inst);
  if (a.out.empty())
    out << doc.dump(2) << '\n';
  else
    write_json(a.out, doc);
  return kExitOk;
}

}  // namespace

ExitCode exit_code_for(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidInput:
    case ErrorKind::NotInTree:
    case ErrorKind::AlreadyPresent:
    case ErrorKind::NotSpanning:
    case ErrorKind::CrossingViolation:
    case ErrorKind::MismatchedPointSets:
    case ErrorKind::InvalidInputSequence:
    case ErrorKind::BadParity:
    case ErrorKind::TooSmall:
    case ErrorKind::SeedExhausted:
      return kExitInput;
    case ErrorKind::TooLarge:
      return kExitResource;
    default:
      return kExitAlgorithm;
  }
}

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Flip reconfiguration of non-crossing spanning trees", "ncst"};
  app.require_subcommand(1);

  ValidateArgs va;
  auto* validate = app.add_subcommand("validate", "Check an instance file and summarize two of its trees");
  validate->add_option("file", va.file, "Instance JSON")->required();
  validate->add_option("--initial", va.initial, "Initial tree name");
  validate->add_option("--target", va.target, "Target tree name");

  ReconfigureArgs ra;
  auto* reconfigure = app.add_subcommand("reconfigure", "Compute a flip sequence between two trees");
  reconfigure->add_option("file", ra.file, "Instance JSON")->required();
  reconfigure->add_option("--algo", ra.algo, "two-phase, convex-opt, or path");
  reconfigure->add_option("--initial", ra.initial, "Initial tree name");
  reconfigure->add_option("--target", ra.target, "Target tree name")->required();
  reconfigure->add_option("--out", ra.out, "Sequence JSON to write");

  std::string verify_file;
  auto* verify = app.add_subcommand("verify", "Validate a sequence file");
  verify->add_option("file", verify_file, "Sequence JSON")->required();

  CensusArgs ca;
  auto* census = app.add_subcommand("census", "Tree count, flip edges, diameter and radius of the flip graph");
  census->add_option("--n", ca.n, "Number of points");
  census->add_flag("--convex", ca.convex, "Use a regular polygon");
  census->add_option("--input", ca.input, "Take the points from an instance file");
  census->add_flag("--paths", ca.paths, "Append path count, path diameter and path radius");
  census->add_flag("--slide", ca.slide, "Use edge slides instead of exchanges");
  census->add_flag("--sym", ca.sym, "One BFS per symmetry orbit");
  census->add_option("--cache", ca.cache, "Graph cache directory");
  census->add_flag("--force", ca.force, "Ignore resource guards");
  census->add_flag("--details", ca.details, "Also print both path radius variants");

  ConjectureArgs ja;
  auto* conjecture = app.add_subcommand("conjecture", "Exhaustive checks on regular polygons");
  conjecture->add_option("--which", ja.which, "happy, parking, perfect, greedy, or slide-gap")->required();
  conjecture->add_option("--n", ja.n, "Number of points")->required();
  conjecture->add_option("--targets", ja.targets, "Sampled targets when the sweep is sampled");
  conjecture->add_option("--seed", ja.seed, "Sampling seed");
  conjecture->add_flag("--force", ja.force, "Ignore resource guards");

  GenArgs ga;
  auto* gen = app.add_subcommand("gen", "Write a generated instance");
  gen->add_option("--kind", ga.kind, "double-broom, star, monotone-path, convex-random, general-random, regular-polygon")
      ->required();
  gen->add_option("--n", ga.n, "Number of points")->required();
  gen->add_option("--seed", ga.seed, "Seed for random kinds");
  gen->add_option("--out", ga.out, "Output file (stdout if omitted)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kExitOk : kExitInput;
  }

  try {
    if (*validate) return cmd_validate(va, out);
    if (*reconfigure) return cmd_reconfigure(ra, out, err);
    if (*verify) return cmd_verify(verify_file, out, err);
    if (*census) return cmd_census(ca, out, err);
    if (*conjecture) return cmd_conjecture(ja, out);
    if (*gen) return cmd_gen(ga, out);
  } catch (const Error& e) {
    err << e.what() << '\n';
    return exit_code_for(e.kind());
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitInput;
  }
  return kExitInput;
}

}  // namespace ncst
