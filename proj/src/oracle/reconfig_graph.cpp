#include "ncst/oracle/reconfig_graph.hpp"

#include <algorithm>
#include <array>
#include <cstring>
#include <fstream>
#include <sstream>

namespace ncst::oracle {

namespace {

constexpr char kMagic[8] = {'N', 'C', 'S', 'T', 'G', 'R', 'P', 'H'};
constexpr std::uint32_t kVersion = 1;

// parent[root][v]: next vertex on the tree path from v towards root.
using ParentTable = std::array<std::array<std::int8_t, kMaxCodePoints>, kMaxCodePoints>;

void tree_parents(TreeCode t, const EdgeUniverse& u, ParentTable& parent) {
  const int n = u.n();
  std::array<std::array<std::int8_t, kMaxCodePoints>, kMaxCodePoints> adj{};
  std::array<int, kMaxCodePoints> deg{};
  for_each_bit(t, [&](int i) {
    const Edge e = u.edge(i);
    adj[e.a][deg[e.a]++] = static_cast<std::int8_t>(e.b);
    adj[e.b][deg[e.b]++] = static_cast<std::int8_t>(e.a);
  });
  std::array<int, kMaxCodePoints> stack{};
  for (int root = 0; root < n; ++root) {
    auto& p = parent[root];
    p.fill(-1);
    p[root] = static_cast<std::int8_t>(root);
    int top = 0;
    stack[top++] = root;
    while (top) {
      const int v = stack[--top];
      for (int k = 0; k < deg[v]; ++k) {
        const int w = adj[v][k];
        if (p[w] < 0) {
          p[w] = static_cast<std::int8_t>(v);
          stack[top++] = w;
        }
      }
    }
  }
}

void put_varint(std::ostream& os, std::uint64_t v) {
  while (v >= 0x80) {
    os.put(static_cast<char>((v & 0x7f) | 0x80));
    v >>= 7;
  }
  os.put(static_cast<char>(v));
}

std::uint64_t get_varint(std::istream& is) {
  std::uint64_t v = 0;
  for (int shift = 0; shift < 64; shift += 7) {
    const int c = is.get();
    if (c == EOF) throw Error(ErrorKind::InvalidInput, "truncated graph cache");
    v |= static_cast<std::uint64_t>(c & 0x7f) << shift;
    if (!(c & 0x80)) return v;
  }
  throw Error(ErrorKind::InvalidInput, "bad varint in graph cache");
}

template <class T>
void put_raw(std::ostream& os, const T& v) {
  os.write(reinterpret_cast<const char*>(&v), sizeof v);
}

template <class T>
T get_raw(std::istream& is) {
  T v{};
  if (!is.read(reinterpret_cast<char*>(&v), sizeof v)) throw Error(ErrorKind::InvalidInput, "truncated graph cache");
  return v;
}

}  // namespace

const char* to_string(FlipRule rule) { return rule == FlipRule::Exchange ? "exchange" : "slide"; }

FlipRule parse_flip_rule(const std::string& name) {
  if (name == "exchange") return FlipRule::Exchange;
  if (name == "slide") return FlipRule::Slide;
  throw Error(ErrorKind::InvalidInput, "unknown flip rule '" + name + "'");
}

std::int64_t ReconfigGraph::find(TreeCode code) const {
  auto it = std::lower_bound(nodes.begin(), nodes.end(), code);
  if (it == nodes.end() || *it != code) return -1;
  return it - nodes.begin();
}

std::uint32_t ReconfigGraph::id(TreeCode code) const {
  const auto i = find(code);
  if (i < 0) throw Error(ErrorKind::NotFound, "tree is not a node of the graph");
  return static_cast<std::uint32_t>(i);
}

std::vector<TreeCode> exchange_neighbors(TreeCode t, const EdgeUniverse& u, std::span<const TreeCode> cross) {
  ParentTable parent;
  tree_parents(t, u, parent);
  std::vector<TreeCode> out;
  for (int x = 0; x < u.size(); ++x) {
    if (t & bit(x)) continue;
    const TreeCode crossed = cross[x] & t;
    const int c = popcount(crossed);
    if (c > 1) continue;
    const Edge e = u.edge(x);
    const auto& p = parent[e.a];
    for (int v = e.b; v != e.a; v = p[v]) {
      const int y = u.index(Edge(v, p[v]));
      if (c == 0 || crossed == bit(y)) out.push_back((t & ~bit(y)) | bit(x));
    }
  }
  return out;
}

std::vector<TreeCode> slide_neighbors(TreeCode t, const EdgeUniverse& u, std::span<const TreeCode> cross,
                                      const PointSet& ps) {
  std::vector<TreeCode> out;
  for_each_bit(t, [&](int i) {
    const Edge uv = u.edge(i);
    const TreeCode rest = t & ~bit(i);
    for (int fixed : {uv.a, uv.b}) {
      const int v = uv.other(fixed);
      for_each_bit(rest, [&](int j) {
        const Edge vw = u.edge(j);
        if (!vw.has(v)) return;
        const int w = vw.other(v);
        const int x = u.index(Edge(fixed, w));
        if ((t & bit(x)) || (cross[x] & rest)) return;
        if (!triangle_empty(fixed, v, w, ps)) return;
        out.push_back(rest | bit(x));
      });
    }
  });
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

ReconfigGraph build_graph(std::vector<TreeCode> trees, const PointSet& ps, FlipRule rule) {
  const EdgeUniverse u(ps.size());
  const auto cross = u.crossing_masks(ps);
  ReconfigGraph g;
  g.n = ps.size();
  g.rule = rule;
  std::sort(trees.begin(), trees.end());
  g.nodes = std::move(trees);
  g.offsets.assign(1, 0);
  std::vector<std::uint32_t> ids;
  for (const TreeCode t : g.nodes) {
    const auto nb = rule == FlipRule::Exchange ? exchange_neighbors(t, u, cross) : slide_neighbors(t, u, cross, ps);
    ids.clear();
    for (const TreeCode s : nb) ids.push_back(g.id(s));
    std::sort(ids.begin(), ids.end());
    g.targets.insert(g.targets.end(), ids.begin(), ids.end());
    g.offsets.push_back(g.targets.size());
  }
  return g;
}

std::uint64_t point_set_hash(const PointSet& ps) {
  std::uint64_t h = 1469598103934665603ULL;
  auto mix = [&](std::int64_t v) {
    for (int k = 0; k < 8; ++k) {
      h ^= static_cast<std::uint64_t>(v >> (8 * k)) & 0xff;
      h *= 1099511628211ULL;
    }
  };
  for (const Point& p : ps.points()) {
    mix(p.x);
    mix(p.y);
  }
  return h;
}

std::filesystem::path cache_path(const std::filesystem::path& dir, const PointSet& ps, FlipRule rule) {
  std::ostringstream name;
  name << "graph-n" << ps.size() << '-' << to_string(rule) << '-' << std::hex << point_set_hash(ps) << ".bin";
  return dir / name.str();
}

void save_graph(const std::filesystem::path& file, const ReconfigGraph& g, std::uint64_t hash) {
  std::ofstream os(file, std::ios::binary);
  if (!os) throw Error(ErrorKind::InvalidInput, "cannot write " + file.string());
  os.write(kMagic, sizeof kMagic);
  put_raw(os, kVersion);
  put_raw(os, static_cast<std::uint32_t>(g.n));
  put_raw(os, static_cast<std::uint32_t>(g.rule));
  put_raw(os, hash);
  put_raw(os, static_cast<std::uint64_t>(g.nodes.size()));
  for (const TreeCode c : g.nodes) put_raw(os, c);
  for (std::size_t v = 0; v < g.node_count(); ++v) {
    const auto nb = g.neighbors(v);
    put_varint(os, nb.size());
    std::uint32_t prev = 0;
    for (const std::uint32_t w : nb) {
      put_varint(os, w - prev);
      prev = w;
    }
  }
}

std::optional<ReconfigGraph> load_graph(const std::filesystem::path& file, int n, FlipRule rule, std::uint64_t hash) {
  std::ifstream is(file, std::ios::binary);
  if (!is) return std::nullopt;
  char magic[sizeof kMagic];
  if (!is.read(magic, sizeof magic) || std::memcmp(magic, kMagic, sizeof kMagic) != 0)
    throw Error(ErrorKind::InvalidInput, file.string() + " is not a graph cache");
  if (get_raw<std::uint32_t>(is) != kVersion) return std::nullopt;
  if (get_raw<std::uint32_t>(is) != static_cast<std::uint32_t>(n)) return std::nullopt;
  if (get_raw<std::uint32_t>(is) != static_cast<std::uint32_t>(rule)) return std::nullopt;
  if (get_raw<std::uint64_t>(is) != hash) return std::nullopt;
  ReconfigGraph g;
  g.n = n;
  g.rule = rule;
  g.nodes.resize(get_raw<std::uint64_t>(is));
  for (TreeCode& c : g.nodes) c = get_raw<TreeCode>(is);
  g.offsets.assign(1, 0);
  for (std::size_t v = 0; v < g.nodes.size(); ++v) {
    const auto deg = get_varint(is);
    std::uint32_t prev = 0;
    for (std::uint64_t k = 0; k < deg; ++k) {
      prev += static_cast<std::uint32_t>(get_varint(is));
      if (prev >= g.nodes.size()) throw Error(ErrorKind::InvalidInput, "neighbor id out of range in graph cache");
      g.targets.push_back(prev);
    }
    g.offsets.push_back(g.targets.size());
  }
  return g;
}

}  // namespace ncst::oracle
