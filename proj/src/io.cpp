#include "ncst/io.hpp"

#include <fstream>
#include <sstream>

namespace ncst {

namespace {

using nlohmann::json;

[[noreturn]] void bad(const std::string& field, const std::string& what) {
  throw Error(ErrorKind::InvalidInput, field + ": " + what);
}

const json& member(const json& doc, const std::string& key, const std::string& field) {
  if (!doc.is_object()) bad(field.empty() ? "document" : field, "expected an object");
  auto it = doc.find(key);
  if (it == doc.end()) bad(field.empty() ? key : field + "." + key, "missing");
  return *it;
}

std::int64_t integer(const json& v, const std::string& field) {
  if (!v.is_number_integer()) bad(field, "expected an integer");
  return v.get<std::int64_t>();
}

std::vector<Point> parse_points(const json& arr) {
  if (!arr.is_array()) bad("points", "expected an array of [x, y] pairs");
  std::vector<Point> pts;
  for (std::size_t i = 0; i < arr.size(); ++i) {
    const std::string field = "points[" + std::to_string(i) + "]";
    if (!arr[i].is_array() || arr[i].size() != 2) bad(field, "expected [x, y]");
    pts.push_back({integer(arr[i][0], field + "[0]"), integer(arr[i][1], field + "[1]")});
  }
  return pts;
}

Edge parse_edge(const json& v, const std::string& field, int n) {
  if (!v.is_array() || v.size() != 2) bad(field, "expected [i, j]");
  const auto a = integer(v[0], field + "[0]"), b = integer(v[1], field + "[1]");
  if (a < 0 || b < 0 || a >= n || b >= n) bad(field, "index out of range for " + std::to_string(n) + " points");
  if (a == b) bad(field, "loop edge");
  return Edge(static_cast<int>(a), static_cast<int>(b));
}

Tree parse_tree(const json& arr, const std::string& field, const PointSetPtr& ps) {
  if (!arr.is_array()) bad(field, "expected an array of [i, j] pairs");
  std::vector<Edge> edges;
  for (std::size_t k = 0; k < arr.size(); ++k)
    edges.push_back(parse_edge(arr[k], field + "[" + std::to_string(k) + "]", ps->size()));
  try {
    return Tree(ps, std::move(edges));
  } catch (const Error& e) {
    throw Error(e.kind(), field + ": " + e.detail());
  }
}

PointSetPtr make_points(const json& doc) {
  auto pts = parse_points(member(doc, "points", ""));
  try {
    return std::make_shared<const PointSet>(std::move(pts));
  } catch (const Error& e) {
    throw Error(e.kind(), "points: " + e.detail());
  }
}

json edge_json(Edge e) { return json::array({e.a, e.b}); }

json tree_json(const Tree& t) {
  json arr = json::array();
  for (const Edge& e : t.edges()) arr.push_back(edge_json(e));
  return arr;
}

json points_json(const PointSet& ps) {
  json arr = json::array();
  for (const Point& p : ps.points()) arr.push_back(json::array({p.x, p.y}));
  return arr;
}

std::string read_file(const std::filesystem::path& file) {
  std::ifstream is(file);
  if (!is) throw Error(ErrorKind::InvalidInput, "cannot open " + file.string());
  std::ostringstream ss;
  ss << is.rdbuf();
  return ss.str();
}

}  // namespace

nlohmann::json parse_json_text(const std::string& text, const std::string& source) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    // Translate the byte offset into a line and column.
    std::size_t line = 1, col = 1;
    for (std::size_t i = 0; i + 1 < e.byte && i < text.size(); ++i) {
      if (text[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    throw Error(ErrorKind::InvalidInput,
                source + ":" + std::to_string(line) + ":" + std::to_string(col) + ": malformed JSON");
  }
}

Instance parse_instance(const json& doc) {
  Instance inst{make_points(doc), {}};
  const json& trees = member(doc, "trees", "");
  if (!trees.is_object()) bad("trees", "expected an object of named edge lists");
  for (auto it = trees.begin(); it != trees.end(); ++it)
    inst.trees.emplace(it.key(), parse_tree(it.value(), "trees." + it.key(), inst.points));
  return inst;
}

Instance load_instance(const std::filesystem::path& file) {
  const auto doc = parse_json_text(read_file(file), file.string());
  try {
    return parse_instance(doc);
  } catch (const Error& e) {
    throw Error(e.kind(), file.string() + ": " + e.detail());
  }
}

json instance_to_json(const Instance& inst) {
  json trees = json::object();
  for (const auto& [name, t] : inst.trees) trees[name] = tree_json(t);
  return json{{"points", points_json(*inst.points)}, {"trees", trees}};
}

SequenceFile parse_sequence(const json& doc) {
  const auto ps = make_points(doc);
  Tree start = parse_tree(member(doc, "start", ""), "start", ps);
  Tree target = parse_tree(member(doc, "target", ""), "target", ps);
  const json& steps = member(doc, "steps", "");
  if (!steps.is_array()) bad("steps", "expected an array");
  FlipSequence seq{start, {}};
  for (std::size_t k = 0; k < steps.size(); ++k) {
    const std::string field = "steps[" + std::to_string(k) + "]";
    seq.steps.push_back(Flip{parse_edge(member(steps[k], "remove", field), field + ".remove", ps->size()),
                             parse_edge(member(steps[k], "add", field), field + ".add", ps->size())});
  }
  return SequenceFile{std::move(seq), std::move(target)};
}

SequenceFile load_sequence(const std::filesystem::path& file) {
  const auto doc = parse_json_text(read_file(file), file.string());
  try {
    return parse_sequence(doc);
  } catch (const Error& e) {
    throw Error(e.kind(), file.string() + ": " + e.detail());
  }
}

json sequence_to_json(const FlipSequence& seq, const Tree& target) {
  json steps = json::array();
  for (const Flip& f : seq.steps) steps.push_back(json{{"remove", edge_json(f.remove)}, {"add", edge_json(f.add)}});
  return json{{"points", points_json(seq.start.points())},
              {"start", tree_json(seq.start)},
              {"target", tree_json(target)},
              {"steps", steps}};
}

void write_json(const std::filesystem::path& file, const json& doc) {
  std::ofstream os(file);
  if (!os) throw Error(ErrorKind::InvalidInput, "cannot write " + file.string());
  os << doc.dump(2) << '\n';
}

}  // namespace ncst
