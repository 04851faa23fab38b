#include "locolor/graph.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <queue>
#include <set>
#include <stdexcept>

namespace locolor {

int Dist::value() const {
  if (!reachable()) throw std::logic_error("Dist: unreachable has no value");
  return value_;
}

std::vector<std::pair<int, int>> Graph::edges() const {
  std::vector<std::pair<int, int>> out;
  out.reserve(static_cast<size_t>(edge_count_));
  for (int u = 0; u < vertex_count(); ++u)
    for (int v : adj_[u])
      if (u < v) out.emplace_back(u, v);
  return out;
}

std::optional<int> Graph::vertex_by_label(const std::string& label) const {
  for (int v = 0; v < vertex_count(); ++v)
    if (labels_[v] && *labels_[v] == label) return v;
  return std::nullopt;
}

Graph build_graph(int n, const std::vector<std::pair<int, int>>& edges) {
  if (n < 0) throw std::invalid_argument("build_graph: negative vertex count");
  Graph g;
  g.adj_.assign(n, {});
  g.labels_.assign(n, std::nullopt);
  g.bits_.assign(n, std::vector<uint64_t>((static_cast<size_t>(n) + 63) / 64, 0));
  for (auto [u, v] : edges) {
    if (u < 0 || v < 0 || u >= n || v >= n)
      throw std::invalid_argument("build_graph: endpoint out of range");
    if (u == v) throw std::invalid_argument("build_graph: self-loop");
    if (g.adjacent(u, v)) continue;
    g.bits_[u][static_cast<size_t>(v) >> 6] |= uint64_t{1} << (v & 63);
    g.bits_[v][static_cast<size_t>(u) >> 6] |= uint64_t{1} << (u & 63);
    g.adj_[u].push_back(v);
    g.adj_[v].push_back(u);
    ++g.edge_count_;
  }
  for (auto& nbrs : g.adj_) std::sort(nbrs.begin(), nbrs.end());
  return g;
}

std::vector<Dist> bfs_distances(const Graph& g, int source) {
  const int n = g.vertex_count();
  if (source < 0 || source >= n)
    throw std::invalid_argument("bfs_distances: source out of range");
  std::vector<Dist> dist(n);
  std::deque<int> queue;
  dist[source] = Dist(0);
  queue.push_back(source);
  while (!queue.empty()) {
    int u = queue.front();
    queue.pop_front();
    int du = dist[u].value();
    for (int v : g.neighbors(u)) {
      if (!dist[v].reachable()) {
        dist[v] = Dist(du + 1);
        queue.push_back(v);
      }
    }
  }
  return dist;
}

Dist distance_to_set(const Graph& g, int v, const std::vector<int>& set) {
  if (set.empty()) throw std::invalid_argument("distance_to_set: empty set");
  auto dist = bfs_distances(g, v);
  Dist best = Dist::unreachable();
  for (int s : set) {
    if (s < 0 || s >= g.vertex_count())
      throw std::invalid_argument("distance_to_set: member out of range");
    best = std::min(best, dist[s]);
  }
  return best;
}

bool is_connected(const Graph& g) {
  if (g.vertex_count() == 0) return true;
  auto dist = bfs_distances(g, 0);
  for (const auto& d : dist)
    if (!d.reachable()) return false;
  return true;
}

std::vector<std::vector<int>> false_twin_classes(const Graph& g) {
  std::map<std::vector<int>, std::vector<int>> by_neighborhood;
  for (int v = 0; v < g.vertex_count(); ++v)
    by_neighborhood[g.neighbors(v)].push_back(v);
  std::vector<std::vector<int>> classes;
  classes.reserve(by_neighborhood.size());
  for (auto& [nbrs, members] : by_neighborhood) classes.push_back(members);
  std::sort(classes.begin(), classes.end());
  return classes;
}

DegreeProfile degree_profile(const Graph& g) {
  DegreeProfile p;
  const int n = g.vertex_count();
  if (n == 0) throw std::invalid_argument("degree_profile: empty graph");
  for (int v = 0; v < n; ++v) p.max_degree = std::max(p.max_degree, g.degree(v));
  p.count_by_degree.assign(p.max_degree + 1, 0);
  for (int v = 0; v < n; ++v) ++p.count_by_degree[g.degree(v)];
  p.cumulative.assign(p.max_degree + 1, 0);
  long long run = 0;
  for (int i = 0; i <= p.max_degree; ++i) {
    run += p.count_by_degree[i];
    p.cumulative[i] = run;
  }
  p.edge_count = g.edge_count();
  p.average_degree = Rational(2 * g.edge_count(), n);
  return p;
}

namespace {

// Dinic max-flow on small integer networks.
struct MaxFlow {
  struct Arc {
    int to;
    long long cap;
    int rev;
  };
  std::vector<std::vector<Arc>> arcs;
  std::vector<int> level, iter;

  explicit MaxFlow(int n) : arcs(n) {}

  void add_edge(int from, int to, long long cap) {
    arcs[from].push_back({to, cap, static_cast<int>(arcs[to].size())});
    arcs[to].push_back({from, 0, static_cast<int>(arcs[from].size()) - 1});
  }

  bool bfs(int s, int t) {
    level.assign(arcs.size(), -1);
    std::queue<int> q;
    level[s] = 0;
    q.push(s);
    while (!q.empty()) {
      int u = q.front();
      q.pop();
      for (const auto& a : arcs[u]) {
        if (a.cap > 0 && level[a.to] < 0) {
          level[a.to] = level[u] + 1;
          q.push(a.to);
        }
      }
    }
    return level[t] >= 0;
  }

  long long dfs(int u, int t, long long f) {
    if (u == t) return f;
    for (int& i = iter[u]; i < static_cast<int>(arcs[u].size()); ++i) {
      Arc& a = arcs[u][i];
      if (a.cap > 0 && level[u] < level[a.to]) {
        long long d = dfs(a.to, t, std::min(f, a.cap));
        if (d > 0) {
          a.cap -= d;
          arcs[a.to][a.rev].cap += d;
          return d;
        }
      }
    }
    return 0;
  }

  long long run(int s, int t) {
    long long flow = 0;
    while (bfs(s, t)) {
      iter.assign(arcs.size(), 0);
      long long f;
      while ((f = dfs(s, t, std::numeric_limits<long long>::max())) > 0) flow += f;
    }
    return flow;
  }
};

// Goldberg's test: some nonempty vertex set S has |E(S)|/|S| strictly
// greater than a/b iff the min cut drops below n*m*b.
bool denser_subgraph_exists(const Graph& g, long long a, long long b) {
  const int n = g.vertex_count();
  const long long m = g.edge_count();
  if (m == 0) return false;
  MaxFlow net(n + 2);
  const int src = n, sink = n + 1;
  for (int v = 0; v < n; ++v) {
    net.add_edge(src, v, m * b);
    net.add_edge(v, sink, m * b + 2 * a - static_cast<long long>(g.degree(v)) * b);
  }
  for (auto [u, v] : g.edges()) {
    net.add_edge(u, v, b);
    net.add_edge(v, u, b);
  }
  long long cut = net.run(src, sink);
  return cut < n * m * b;
}

}  // namespace

Rational max_average_degree(const Graph& g) {
  const int n = g.vertex_count();
  if (n == 0) throw std::invalid_argument("max_average_degree: empty graph");
  const long long m = g.edge_count();
  if (m == 0) return Rational(0);
  // Candidate densities p/q with q <= n, p <= m; the densest subgraph's
  // density is one of them, and the flow test is monotone across them.
  std::set<Rational> candidates;
  for (long long q = 1; q <= n; ++q)
    for (long long p = 0; p <= std::min(m, q * (q - 1) / 2); ++p)
      candidates.insert(Rational(p, q));
  std::vector<Rational> sorted(candidates.begin(), candidates.end());
  // Smallest candidate c with no subgraph denser than c is the maximum density.
  size_t lo = 0, hi = sorted.size() - 1;
  while (lo < hi) {
    size_t mid = (lo + hi) / 2;
    if (denser_subgraph_exists(g, sorted[mid].num(), sorted[mid].den()))
      lo = mid + 1;
    else
      hi = mid;
  }
  return Rational(2) * sorted[lo];
}

long long cycle_rank(const Graph& g) {
  if (!is_connected(g))
    throw std::invalid_argument("cycle_rank: graph must be connected");
  return g.edge_count() - g.vertex_count() + 1;
}

Graph disjoint_union(const Graph& a, const Graph& b) {
  const int na = a.vertex_count();
  std::vector<std::pair<int, int>> edges = a.edges();
  for (auto [u, v] : b.edges()) edges.emplace_back(u + na, v + na);
  Graph g = build_graph(na + b.vertex_count(), edges);
  for (int v = 0; v < na; ++v)
    if (a.label(v)) g.set_label(v, *a.label(v));
  for (int v = 0; v < b.vertex_count(); ++v)
    if (b.label(v)) g.set_label(v + na, *b.label(v));
  return g;
}

IdentifyResult identify_vertices(const Graph& g, int u, int v) {
  const int n = g.vertex_count();
  if (u < 0 || v < 0 || u >= n || v >= n)
    throw std::invalid_argument("identify_vertices: vertex out of range");
  if (u == v) throw std::invalid_argument("identify_vertices: u == v");
  // Keep min(u,v), drop max(u,v), close the id gap.
  int keep = std::min(u, v), drop = std::max(u, v);
  std::vector<int> remap(n);
  for (int w = 0; w < n; ++w) remap[w] = w < drop ? w : (w == drop ? keep : w - 1);
  std::vector<std::pair<int, int>> edges;
  for (auto [a, b] : g.edges()) {
    int x = remap[a], y = remap[b];
    if (x != y) edges.emplace_back(x, y);
  }
  IdentifyResult result{build_graph(n - 1, edges), std::move(remap)};
  for (int w = 0; w < n; ++w) {
    if (!g.label(w)) continue;
    if (w == keep && g.label(drop) && *g.label(drop) != *g.label(keep))
      continue;  // ambiguous merged label, drop both
    if (w == drop && g.label(keep)) continue;
    result.graph.set_label(result.remap[w], *g.label(w));
  }
  return result;
}

Graph attach_pendants(const Graph& g, int v, int count) {
  const int n = g.vertex_count();
  if (v < 0 || v >= n)
    throw std::invalid_argument("attach_pendants: vertex out of range");
  if (count < 0) throw std::invalid_argument("attach_pendants: negative count");
  auto edges = g.edges();
  for (int i = 0; i < count; ++i) edges.emplace_back(v, n + i);
  Graph out = build_graph(n + count, edges);
  for (int w = 0; w < n; ++w)
    if (g.label(w)) out.set_label(w, *g.label(w));
  return out;
}

}  // namespace locolor
