#include "locolor/constructions.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>
#include <string>

#include "locolor/bounds.hpp"
#include "locolor/solver.hpp"

namespace locolor {

Graph complete_graph(int p) {
  if (p < 1) throw std::invalid_argument("complete_graph: p must be >= 1");
  std::vector<std::pair<int, int>> edges;
  for (int u = 0; u < p; ++u)
    for (int v = u + 1; v < p; ++v) edges.emplace_back(u, v);
  Graph g = build_graph(p, edges);
  for (int v = 0; v < p; ++v) g.set_label(v, "u" + std::to_string(v));
  return g;
}

Graph path_graph(int n) {
  if (n < 1) throw std::invalid_argument("path_graph: n must be >= 1");
  std::vector<std::pair<int, int>> edges;
  for (int v = 0; v + 1 < n; ++v) edges.emplace_back(v, v + 1);
  Graph g = build_graph(n, edges);
  for (int v = 0; v < n; ++v) g.set_label(v, "v" + std::to_string(v));
  return g;
}

Graph cycle_graph(int n) {
  if (n < 3) throw std::invalid_argument("cycle_graph: n must be >= 3");
  std::vector<std::pair<int, int>> edges;
  for (int v = 0; v + 1 < n; ++v) edges.emplace_back(v, v + 1);
  edges.emplace_back(n - 1, 0);
  Graph g = build_graph(n, edges);
  for (int v = 0; v < n; ++v) g.set_label(v, "v" + std::to_string(v));
  return g;
}

Graph star_graph(int leaves) {
  if (leaves < 0) throw std::invalid_argument("star_graph: negative leaf count");
  std::vector<std::pair<int, int>> edges;
  for (int v = 1; v <= leaves; ++v) edges.emplace_back(0, v);
  Graph g = build_graph(leaves + 1, edges);
  g.set_label(0, "center");
  for (int v = 1; v <= leaves; ++v) g.set_label(v, "leaf" + std::to_string(v));
  return g;
}

namespace {

Graph induced_subgraph(const Graph& g, const std::vector<int>& vertices) {
  std::vector<int> remap(g.vertex_count(), -1);
  for (size_t i = 0; i < vertices.size(); ++i) remap[vertices[i]] = static_cast<int>(i);
  std::vector<std::pair<int, int>> edges;
  for (auto [u, v] : g.edges())
    if (remap[u] >= 0 && remap[v] >= 0) edges.emplace_back(remap[u], remap[v]);
  Graph out = build_graph(static_cast<int>(vertices.size()), edges);
  for (size_t i = 0; i < vertices.size(); ++i)
    if (g.label(vertices[i])) out.set_label(static_cast<int>(i), *g.label(vertices[i]));
  return out;
}

// Solver-certified (chi_L, chi_NL) of a candidate, or nullopt on budget.
bool certify(const Graph& g, int q, int r) {
  SolveReport l = locating_chromatic_number(g);
  if (!l.exact() || l.value() != q) return false;
  SolveReport nl = nl_chromatic_number(g);
  return nl.exact() && nl.value() == r;
}

// The 2 = p < q < r sub-case has no construction in scope; we search small
// bipartite candidates (paths for q = 3, brooms otherwise) and certify with
// the exact solver.
Graph gpqr_experimental(int q, int r) {
  if (q == 3) {
    // smallest n in the chi_NL(P_n) = r band
    long long n = static_cast<long long>(r - 1) * (r - 1) * (r - 2) / 2 + 1;
    Graph g = path_graph(static_cast<int>(n));
    if (certify(g, q, r)) return g;
    throw std::runtime_error("gpqr: path candidate failed certification");
  }
  for (int m = 3; m <= 40; ++m) {
    Graph broom = attach_pendants(path_graph(m), 0, q - 1);
    if (certify(broom, q, r)) return broom;
  }
  throw std::runtime_error("gpqr: no certified candidate for 2 = p < q < r");
}

}  // namespace

GpqrResult gpqr(int p, int q, int r) {
  if (p < 2) throw std::invalid_argument("gpqr: p must be >= 2");
  if (!(p <= q && q <= r)) throw std::invalid_argument("gpqr: requires p <= q <= r");
  if (p == 2 && q == 2 && r > 2)
    throw std::invalid_argument("gpqr: no graph exists for p = q = 2 < r");
  GpqrResult result{Graph{}, p, q, r, false};
  if (p == q && q == r) {
    result.graph = complete_graph(p);
  } else if (p == 2 && q == r) {
    result.graph = star_graph(q - 1);
  } else if (p >= 3 && p < q && q == r) {
    // K_p with q-1 pendants at one vertex
    result.graph = attach_pendants(complete_graph(p), 0, q - 1);
  } else if (p == 3 && q == 3) {  // 3 = p = q < r
    result.graph = cycle_graph(static_cast<int>(suitable_odd_cycle_length(r)));
  } else if (p >= 4 && p == q) {  // 4 <= p = q < r
    int n = static_cast<int>(suitable_odd_cycle_length(r));
    Graph u = disjoint_union(complete_graph(p), cycle_graph(n));
    auto merged = identify_vertices(u, 0, p);
    merged.graph.set_label(merged.remap[0], "v0");
    result.graph = std::move(merged.graph);
  } else if (p == 2) {  // 2 = p < q < r
    result.graph = gpqr_experimental(q, r);
    result.experimental = true;
  } else if (p == 3) {  // 3 = p < q < r
    int n = static_cast<int>(suitable_odd_cycle_length(r));
    result.graph = attach_pendants(cycle_graph(n), 0, q - 1);
  } else {  // 4 <= p < q < r
    long long n = static_cast<long long>(r) * (r - 1) * (r - 2) / 2;
    Graph u = disjoint_union(complete_graph(p), path_graph(static_cast<int>(n)));
    auto merged = identify_vertices(u, 0, p);  // u_0 of the path into K_p
    Graph g = std::move(merged.graph);
    int hook = merged.remap[p + static_cast<int>(n) - 2];  // u_{n-2}
    result.graph = attach_pendants(g, hook, q - 2);
  }
  if (!is_connected(result.graph))
    throw std::logic_error("gpqr: construction produced a disconnected graph");
  return result;
}

GapPair gap_pair(int k) {
  if (k < 0) throw std::invalid_argument("gap_pair: k must be >= 0");
  const int n = 1 + 4 * k;
  std::vector<std::pair<int, int>> edges;
  for (int v = 1; v < n; ++v) edges.emplace_back(0, v);
  for (int i = 0; i < k; ++i)
    edges.emplace_back(2 * k + 1 + 2 * i, 2 * k + 2 + 2 * i);  // b_i b'_i
  GapPair pair;
  pair.g = build_graph(n, edges);
  pair.g.set_label(0, "v");
  for (int i = 1; i <= 2 * k; ++i) pair.g.set_label(i, "a" + std::to_string(i));
  for (int i = 0; i < k; ++i) {
    pair.g.set_label(2 * k + 1 + 2 * i, "b" + std::to_string(i + 1));
    pair.g.set_label(2 * k + 2 + 2 * i, "b'" + std::to_string(i + 1));
  }
  pair.h_vertices.push_back(0);
  for (int i = 1; i <= 2 * k; ++i) pair.h_vertices.push_back(i);
  for (int i = 0; i < k; ++i) pair.h_vertices.push_back(2 * k + 1 + 2 * i);
  pair.h = induced_subgraph(pair.g, pair.h_vertices);
  return pair;
}

MatchingGrid matrix_matching(int p, int q) {
  if (p < 1) throw std::invalid_argument("matrix_matching: p must be >= 1");
  if (p >= q) throw std::invalid_argument("matrix_matching: requires p < q");
  MatchingGrid grid;
  grid.rows = p;
  grid.cols = q;
  for (int i = 1; i <= p / 2; ++i)
    for (int j = 1; j <= q; ++j)
      grid.edges.push_back({{2 * i - 1, j}, {2 * i, (i + j - 1) % q + 1}});
  return grid;
}

Graph extend_with_matching(const Graph& g,
                           const std::vector<std::vector<int>>& grid,
                           const Coloring& phi) {
  validate_coloring(g, phi);
  const int p = static_cast<int>(grid.size());
  if (p == 0) return g;
  const int q = static_cast<int>(grid[0].size());
  if (p >= q) throw std::invalid_argument("extend_with_matching: requires p < q");
  std::vector<char> in_grid(g.vertex_count(), 0);
  for (const auto& row : grid) {
    if (static_cast<int>(row.size()) != q)
      throw std::invalid_argument("extend_with_matching: ragged grid");
    for (int v : row) {
      if (v < 0 || v >= g.vertex_count())
        throw std::invalid_argument("extend_with_matching: vertex out of range");
      if (in_grid[v])
        throw std::invalid_argument("extend_with_matching: repeated grid vertex");
      in_grid[v] = 1;
    }
  }
  // column j uniformly colored s'+j, and those colors exclusive to the grid
  const int base = phi.color(grid[0][0]) - 1;
  for (int j = 0; j < q; ++j)
    for (int i = 0; i < p; ++i)
      if (phi.color(grid[i][j]) != base + j + 1)
        throw std::invalid_argument("extend_with_matching: column not uniformly colored");
  for (int v = 0; v < g.vertex_count(); ++v)
    if (!in_grid[v] && phi.color(v) > base && phi.color(v) <= base + q)
      throw std::invalid_argument("extend_with_matching: grid color used outside the grid");
  for (const auto& row : grid)
    for (int u : row)
      for (int v : g.neighbors(u))
        if (in_grid[v])
          throw std::invalid_argument("extend_with_matching: grid is not independent");
  // all pairs not fully inside the grid must already be distinguished
  std::map<std::pair<int, std::set<int>>, int> seen;
  for (int v = 0; v < g.vertex_count(); ++v) {
    auto sig = nl_signature(g, phi, v);
    auto key = std::make_pair(sig.own_color, sig.neighbor_colors);
    auto [it, inserted] = seen.try_emplace(key, v);
    if (!inserted && !(in_grid[v] && in_grid[it->second]))
      throw std::invalid_argument(
          "extend_with_matching: non-grid pair not neighbor-distinguished");
  }
  auto edges = g.edges();
  for (const auto& [a, b] : matrix_matching(p, q).edges)
    edges.emplace_back(grid[a.first - 1][a.second - 1],
                       grid[b.first - 1][b.second - 1]);
  Graph out = build_graph(g.vertex_count(), edges);
  for (int v = 0; v < g.vertex_count(); ++v)
    if (g.label(v)) out.set_label(v, *g.label(v));
  if (!check_nl(out, phi).ok())
    throw std::logic_error(
        "extend_with_matching: coloring not neighbor-locating on the "
        "supergraph (spanning-supergraph corollary violated)");
  return out;
}

namespace {

// Cells of the tuple system, keyed by sorted color set; deterministic via
// std::map ordering. Values are tuple indices.
std::map<std::vector<int>, std::vector<int>> color_cells(
    const TripletState& state, const std::vector<std::vector<int>>& tuples) {
  std::map<std::vector<int>, std::vector<int>> cells;
  for (size_t t = 0; t < tuples.size(); ++t) {
    std::vector<int> key;
    for (int v : tuples[t]) key.push_back(state.phi.color(v));
    std::sort(key.begin(), key.end());
    cells[key].push_back(static_cast<int>(t));
  }
  return cells;
}

void validate_triplet(const TripletState& state, const char* where) {
  const int n = state.g.vertex_count();
  std::vector<int> cover(n, 0);
  for (const auto& tuple : state.tuples) {
    if (static_cast<int>(tuple.size()) != state.level + 1)
      throw std::logic_error(std::string(where) + ": tuple arity mismatch");
    for (int v : tuple) ++cover[v];
  }
  for (int v = 0; v < n; ++v)
    if (cover[v] != 1)
      throw std::logic_error(std::string(where) +
                             ": tuples do not disjointly cover the vertices");
  if (state.phi.palette_size != state.level * state.s)
    throw std::logic_error(std::string(where) + ": palette size mismatch");
  if (!check_nl(state.g, state.phi).ok())
    throw std::logic_error(std::string(where) +
                           ": coloring not neighbor-locating (NL invariant broken)");
  for (const auto& [key, cell] : color_cells(state, state.tuples))
    if (static_cast<int>(cell.size()) >= state.s)
      throw std::logic_error(std::string(where) +
                             ": cell with >= s tuples (cell size invariant broken)");
  for (int v = 0; v < n; ++v)
    if (state.g.degree(v) > state.level + 1)
      throw std::logic_error(std::string(where) +
                             ": maximum degree exceeds level+1 (degree cap broken)");
}

}  // namespace

TripletState base_triplet(int s) {
  if (s < 4) throw std::invalid_argument("base_triplet: s must be >= 4");
  const long long t = 4 * (static_cast<long long>(s) * s * (s - 1) / 8);
  TripletState state;
  state.s = s;
  state.level = 1;
  state.g = path_graph(static_cast<int>(t));
  FindResult found = find_nl_coloring(state.g, s);
  if (found.status != Feasibility::Feasible)
    throw std::logic_error("base_triplet: no NL s-coloring of the base path found");
  state.phi = *found.witness;
  // pairs (v_{i-1}, v_{i+1}) for i = 2,3 (mod 4), 1-based: they tile each
  // block of four consecutive vertices
  for (long long b = 0; b + 3 < t; b += 4) {
    state.tuples.push_back({static_cast<int>(b), static_cast<int>(b + 2)});
    state.tuples.push_back({static_cast<int>(b + 1), static_cast<int>(b + 3)});
  }
  validate_triplet(state, "base_triplet");
  return state;
}

TripletState iterate_triplet(const TripletState& state) {
  validate_triplet(state, "iterate_triplet(input)");
  const int s = state.s;
  const int n0 = state.g.vertex_count();
  const int tuple_count = static_cast<int>(state.tuples.size());
  const int n1 = n0 + tuple_count;  // one copy, with new vertices appended
  // one-copy edge list and extended tuples
  std::vector<std::pair<int, int>> copy_edges = state.g.edges();
  std::vector<std::vector<int>> copy_tuples = state.tuples;
  for (int t = 0; t < tuple_count; ++t) {
    for (int v : state.tuples[t]) copy_edges.emplace_back(v, n0 + t);
    copy_tuples[t].push_back(n0 + t);
  }
  // s disjoint copies; new vertices of copy c get color level*s + c + 1
  TripletState next;
  next.s = s;
  next.level = state.level + 1;
  std::vector<std::pair<int, int>> edges;
  std::vector<int> color(static_cast<size_t>(s) * n1);
  for (int c = 0; c < s; ++c) {
    const int off = c * n1;
    for (auto [u, v] : copy_edges) edges.emplace_back(u + off, v + off);
    for (int v = 0; v < n0; ++v) color[off + v] = state.phi.color(v);
    for (int t = 0; t < tuple_count; ++t)
      color[off + n0 + t] = state.level * s + c + 1;
    for (const auto& tuple : copy_tuples) {
      std::vector<int> shifted;
      for (int v : tuple) shifted.push_back(v + off);
      next.tuples.push_back(shifted);
    }
  }
  next.phi = Coloring{std::move(color), next.level * s};
  // per cell of same-color-set tuples: rows = the cell's new vertices,
  // columns = the s copies; add the matrix-matching edges. The appended new
  // vertex has the same color within a copy, so keying on the old members
  // matches the partition of the extended tuples.
  for (const auto& [key, cell] : color_cells(state, state.tuples)) {
    const int p = static_cast<int>(cell.size());
    if (p >= s)
      throw std::logic_error("iterate_triplet: cell with >= s tuples (cell size invariant broken)");
    if (p < 2) continue;  // matching is empty below two rows
    for (const auto& [a, b] : matrix_matching(p, s).edges)
      edges.emplace_back((a.second - 1) * n1 + n0 + cell[a.first - 1],
                         (b.second - 1) * n1 + n0 + cell[b.first - 1]);
  }
  next.g = build_graph(s * n1, edges);
  validate_triplet(next, "iterate_triplet(output)");
  return next;
}

FamilyResult nl_family(int max_degree, int s) {
  if (max_degree < 2) throw std::invalid_argument("nl_family: Delta must be >= 2");
  if (s < 4) throw std::invalid_argument("nl_family: s must be >= 4");
  TripletState state = base_triplet(s);
  for (int i = 2; i < max_degree; ++i) state = iterate_triplet(state);
  if (state.g.vertex_count() != family_order_formula(s, max_degree - 1))
    throw std::logic_error("nl_family: vertex count disagrees with the formula");
  if (state.g.vertex_count() < family_lower_bound(max_degree, s))
    throw std::logic_error("nl_family: vertex count below the claimed lower bound");
  return {std::move(state.g), std::move(state.phi)};
}

}  // namespace locolor
