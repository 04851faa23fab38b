#pragma once

#include <compare>
#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "locolor/rational.hpp"

namespace locolor {

// Graph distance with an explicit unreachable value. Unreachable compares
// greater than every finite distance and equal to itself.
class Dist {
 public:
  Dist() : value_(kUnreachable) {}
  explicit Dist(int value) : value_(value) {}
  static Dist unreachable() { return Dist(); }

  bool reachable() const { return value_ != kUnreachable; }
  int value() const;  // throws if unreachable

  friend bool operator==(Dist a, Dist b) { return a.value_ == b.value_; }
  friend std::strong_ordering operator<=>(Dist a, Dist b) {
    if (a.value_ == b.value_) return std::strong_ordering::equal;
    if (a.value_ == kUnreachable) return std::strong_ordering::greater;
    if (b.value_ == kUnreachable) return std::strong_ordering::less;
    return a.value_ <=> b.value_;
  }

 private:
  static constexpr int kUnreachable = std::numeric_limits<int>::max();
  int value_;
};

// Simple undirected graph, vertices 0..n-1, immutable after construction.
// Edits (unions, identification, pendants) build new graphs.
class Graph {
 public:
  Graph() = default;

  int vertex_count() const { return static_cast<int>(adj_.size()); }
  long long edge_count() const { return edge_count_; }

  const std::vector<int>& neighbors(int v) const { return adj_[v]; }
  int degree(int v) const { return static_cast<int>(adj_[v].size()); }
  bool adjacent(int u, int v) const {
    return (bits_[u][static_cast<size_t>(v) >> 6] >> (v & 63)) & 1u;
  }

  // Sorted (u,v) pairs with u < v.
  std::vector<std::pair<int, int>> edges() const;

  const std::optional<std::string>& label(int v) const { return labels_[v]; }
  void set_label(int v, std::string label) { labels_[v] = std::move(label); }
  std::optional<int> vertex_by_label(const std::string& label) const;

 private:
  friend Graph build_graph(int n, const std::vector<std::pair<int, int>>& edges);
  std::vector<std::vector<int>> adj_;
  std::vector<std::vector<uint64_t>> bits_;
  std::vector<std::optional<std::string>> labels_;
  long long edge_count_ = 0;
};

// Canonical construction: rejects out-of-range endpoints and self-loops,
// collapses duplicate pairs.
Graph build_graph(int n, const std::vector<std::pair<int, int>>& edges);

std::vector<Dist> bfs_distances(const Graph& g, int source);

// d(v, S) = min over s in S of d(v, s). S must be nonempty.
Dist distance_to_set(const Graph& g, int v, const std::vector<int>& set);

bool is_connected(const Graph& g);

// Partition of vertices into false-twin classes (equal open neighborhoods).
std::vector<std::vector<int>> false_twin_classes(const Graph& g);

struct DegreeProfile {
  std::vector<long long> count_by_degree;  // index i: number of degree-i vertices
  std::vector<long long> cumulative;       // prefix sums of count_by_degree
  int max_degree = 0;
  long long edge_count = 0;
  Rational average_degree;  // 2m/n, exact
};

DegreeProfile degree_profile(const Graph& g);

// Exact maximum average degree: 2 * max over nonempty subgraphs of |E|/|V|,
// via binary search over candidate densities with a max-flow feasibility test.
Rational max_average_degree(const Graph& g);

// m - n + 1; requires a connected graph.
long long cycle_rank(const Graph& g);

Graph disjoint_union(const Graph& a, const Graph& b);

struct IdentifyResult {
  Graph graph;
  std::vector<int> remap;  // old vertex id -> new vertex id
};

// Merge v into u (the merged vertex inherits the union of both
// neighborhoods). An existing u-v edge is dropped, not an error: the
// constructions only ever identify non-adjacent vertices, but the editor
// stays total.
IdentifyResult identify_vertices(const Graph& g, int u, int v);

Graph attach_pendants(const Graph& g, int v, int count);

}  // namespace locolor
