#include "ncst/oracle/eccentricity.hpp"

#include <omp.h>

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <string>

namespace ncst::oracle {

namespace {

struct BfsBuffers {
  explicit BfsBuffers(std::size_t m) : dist(m, -1), queue(m) {}
  std::vector<int> dist;
  std::vector<std::uint32_t> queue;
};

// Returns false if some node was not reached.
bool bfs_one(const ReconfigGraph& g, std::uint32_t source, std::span<const char> marked, BfsBuffers& buf,
             int& ecc, int& ecc_marked) {
  std::fill(buf.dist.begin(), buf.dist.end(), -1);
  std::size_t head = 0, tail = 0;
  buf.queue[tail++] = source;
  buf.dist[source] = 0;
  ecc = 0;
  ecc_marked = 0;
  while (head < tail) {
    const std::uint32_t v = buf.queue[head++];
    const int dv = buf.dist[v];
    ecc = dv;
    if (!marked.empty() && marked[v]) ecc_marked = dv;
    for (const std::uint32_t w : g.neighbors(v))
      if (buf.dist[w] < 0) {
        buf.dist[w] = dv + 1;
        buf.queue[tail++] = w;
      }
  }
  return tail == g.node_count();
}

[[noreturn]] void unreachable(std::uint32_t source) {
  throw Error(ErrorKind::Unreachable, "flip graph is disconnected (from node " + std::to_string(source) + ")");
}

}  // namespace

int thread_count_from_env() {
  const char* s = std::getenv("NCST_THREADS");
  if (!s) return 1;
  const int t = std::atoi(s);
  return t > 0 ? t : 1;
}

std::vector<int> bfs_levels(const ReconfigGraph& g, std::uint32_t source) {
  BfsBuffers buf(g.node_count());
  int ecc = 0, ecc_marked = 0;
  if (!bfs_one(g, source, {}, buf, ecc, ecc_marked)) unreachable(source);
  return std::move(buf.dist);
}

std::vector<std::uint32_t> bfs_parents(const ReconfigGraph& g, std::uint32_t source, std::vector<int>& dist) {
  const std::size_t m = g.node_count();
  dist.assign(m, -1);
  std::vector<std::uint32_t> parent(m, source), queue{source};
  dist[source] = 0;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const std::uint32_t v = queue[head];
    for (const std::uint32_t w : g.neighbors(v))
      if (dist[w] < 0) {
        dist[w] = dist[v] + 1;
        parent[w] = v;
        queue.push_back(w);
      }
  }
  if (queue.size() != m) unreachable(source);
  return parent;
}

int bfs_distance(const ReconfigGraph& g, std::uint32_t a, std::uint32_t b) {
  if (a == b) return 0;
  return bfs_levels(g, a)[b];
}

Eccentricities eccentricities_serial(const ReconfigGraph& g, std::span<const std::uint32_t> sources,
                                     std::span<const char> marked) {
  Eccentricities out;
  out.all.resize(sources.size());
  if (!marked.empty()) out.marked.resize(sources.size());
  BfsBuffers buf(g.node_count());
  for (std::size_t i = 0; i < sources.size(); ++i) {
    int ecc = 0, ecc_marked = 0;
    if (!bfs_one(g, sources[i], marked, buf, ecc, ecc_marked)) unreachable(sources[i]);
    out.all[i] = ecc;
    if (!marked.empty()) out.marked[i] = ecc_marked;
  }
  return out;
}

Eccentricities eccentricities_parallel(const ReconfigGraph& g, std::span<const std::uint32_t> sources,
                                       std::span<const char> marked, int threads) {
  if (threads <= 0) threads = thread_count_from_env();
  Eccentricities out;
  out.all.resize(sources.size());
  if (!marked.empty()) out.marked.resize(sources.size());
  std::atomic<std::int64_t> failed{-1};
  const auto count = static_cast<std::int64_t>(sources.size());
#pragma omp parallel num_threads(threads)
  {
    BfsBuffers buf(g.node_count());
#pragma omp for schedule(dynamic, 4)
    for (std::int64_t i = 0; i < count; ++i) {
      int ecc = 0, ecc_marked = 0;
      if (!bfs_one(g, sources[i], marked, buf, ecc, ecc_marked)) failed = sources[i];
      out.all[i] = ecc;
      if (!marked.empty()) out.marked[i] = ecc_marked;
    }
  }
  if (failed >= 0) unreachable(static_cast<std::uint32_t>(failed.load()));
  return out;
}

}  // namespace ncst::oracle
