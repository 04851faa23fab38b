#include "locolor/reduction.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "locolor/solver.hpp"

namespace locolor {

GstarResult build_gstar(const Graph& g) {
  const int n = g.vertex_count();
  if (n < 2) throw std::invalid_argument("build_gstar: need n >= 2");
  if (!is_connected(g)) throw std::invalid_argument("build_gstar: G must be connected");
  GstarResult result;
  GadgetMap& map = result.map;
  int next = 0;
  auto take = [&next] { return next++; };
  for (int i = 0; i < n; ++i) map.u.push_back(take());
  for (int i = 0; i < n; ++i) map.uprime.push_back(take());
  for (int j = 0; j < 3; ++j) map.y[j] = take();
  map.a.resize(n);
  map.b.resize(n);
  for (int i = 0; i < n; ++i) {
    map.x.push_back(take());
    for (int j = 0; j < n - 1; ++j) map.a[i].push_back(take());
    for (int j = 0; j < n + 2; ++j) map.b[i].push_back(take());
  }
  std::vector<std::pair<int, int>> edges;
  for (auto [i, j] : g.edges()) {
    edges.emplace_back(map.u[i], map.u[j]);            // G itself
    edges.emplace_back(map.uprime[i], map.uprime[j]);  // the copy G'
    edges.emplace_back(map.uprime[i], map.u[j]);       // cross edges
    edges.emplace_back(map.u[i], map.uprime[j]);
  }
  for (int i = 0; i < n; ++i) {
    for (int v : map.a[i]) {
      edges.emplace_back(map.x[i], v);
      edges.emplace_back(map.u[i], v);
      edges.emplace_back(map.uprime[i], v);
      for (int j = 0; j < 3; ++j) edges.emplace_back(map.y[j], v);
    }
    for (int v : map.b[i]) edges.emplace_back(map.x[i], v);
    for (int j = 0; j < 3; ++j) edges.emplace_back(map.y[j], map.x[i]);
  }
  result.graph = build_graph(next, edges);
  for (int i = 0; i < n; ++i) {
    const std::string si = std::to_string(i + 1);
    result.graph.set_label(map.u[i], "u_" + si);
    result.graph.set_label(map.uprime[i], "u'_" + si);
    result.graph.set_label(map.x[i], "x_" + si);
    for (size_t j = 0; j < map.a[i].size(); ++j)
      result.graph.set_label(map.a[i][j], "A_" + si + "[" + std::to_string(j + 1) + "]");
    for (size_t j = 0; j < map.b[i].size(); ++j)
      result.graph.set_label(map.b[i][j], "B_" + si + "[" + std::to_string(j + 1) + "]");
  }
  for (int j = 0; j < 3; ++j)
    result.graph.set_label(map.y[j], "y_" + std::to_string(j + 1));
  // order and size identities, checked on every build
  const long long nn = n, m = g.edge_count();
  if (result.graph.vertex_count() != 2 * nn * nn + 4 * nn + 3)
    throw std::logic_error("build_gstar: vertex count violates 2n^2+4n+3");
  if (result.graph.edge_count() != 7 * nn * nn - nn + 4 * m)
    throw std::logic_error("build_gstar: edge count violates 7n^2-n+4m");
  if (!is_connected(result.graph))
    throw std::logic_error("build_gstar: G* is disconnected");
  return result;
}

Coloring lift_3coloring(const Graph& g, const GstarResult& gstar,
                        const Coloring& f3) {
  const int n = g.vertex_count();
  // At n = 2 the scheme genuinely breaks: x_i's neighbor colors K\{c_i} and
  // those of an A_j vertex colored c_i ({1,2,3,c_j}) coincide. The forward
  // lemma needs n >= 3.
  if (n < 3) throw std::invalid_argument("lift_3coloring: need n >= 3");
  validate_coloring(g, f3);
  if (f3.palette_size != 3 || !check_proper(g, f3).ok())
    throw std::invalid_argument("lift_3coloring: need a proper 3-coloring of G");
  const GadgetMap& map = gstar.map;
  const int k = n + 3;
  std::vector<int> color(gstar.graph.vertex_count(), 0);
  auto c = [](int i) { return 3 + i + 1; };  // c_i for 0-based i
  for (int i = 0; i < n; ++i) {
    color[map.u[i]] = f3.color(i);
    color[map.uprime[i]] = c(i);
    color[map.x[i]] = c(i);
  }
  for (int j = 0; j < 3; ++j) color[map.y[j]] = j + 1;
  for (int i = 0; i < n; ++i) {
    // A_i: the colors {c_1..c_n} minus c_i, sorted onto ascending ids
    int next = 0;
    for (int j = 0; j < n; ++j)
      if (j != i) color[map.a[i][next++]] = c(j);
    // B_i: the whole palette minus c_i
    next = 0;
    for (int col = 1; col <= k; ++col)
      if (col != c(i)) color[map.b[i][next++]] = col;
  }
  Coloring lifted{std::move(color), k};
  if (!check_nl(gstar.graph, lifted).ok())
    throw std::logic_error(
        "lift_3coloring: lifted coloring is not neighbor-locating (forward "
        "lemma violated)");
  return lifted;
}

Coloring extract_3coloring(const Graph& g, const GstarResult& gstar,
                           const Coloring& f, ExtractMode mode) {
  const int n = g.vertex_count();
  validate_coloring(gstar.graph, f);
  if (f.palette_size != n + 3)
    throw std::invalid_argument("extract_3coloring: palette must be n+3");
  const bool valid = mode == ExtractMode::NeighborLocating
                         ? check_nl(gstar.graph, f).ok()
                         : check_locating(gstar.graph, f).ok();
  if (!valid)
    throw std::invalid_argument(
        "extract_3coloring: input coloring is not valid on G*");
  const GadgetMap& map = gstar.map;
  // palette normalization: Y's colors become 1,2,3 and x_i's become c_i.
  // Y is a false-twin triple and each x_i is adjacent to Y, so these n+3
  // source colors are pairwise distinct in any valid coloring.
  std::vector<int> sigma(n + 4, 0);
  auto assign = [&sigma](int from, int to) {
    if (sigma[from] != 0)
      throw std::logic_error(
          "extract_3coloring: normalization impossible (backward lemma "
          "violated)");
    sigma[from] = to;
  };
  for (int j = 0; j < 3; ++j) assign(f.color(map.y[j]), j + 1);
  for (int i = 0; i < n; ++i) assign(f.color(map.x[i]), 3 + i + 1);
  std::vector<int> restricted(n, 0);
  for (int i = 0; i < n; ++i) {
    int cu = sigma[f.color(map.u[i])];
    if (cu < 1 || cu > 3) cu = sigma[f.color(map.uprime[i])];  // the swap step
    if (cu < 1 || cu > 3)
      throw std::logic_error(
          "extract_3coloring: neither u_i nor u'_i carries a base color "
          "(backward lemma violated)");
    restricted[i] = cu;
  }
  Coloring f3{std::move(restricted), 3};
  if (!check_proper(g, f3).ok())
    throw std::logic_error(
        "extract_3coloring: extracted coloring is improper (backward lemma "
        "violated)");
  return f3;
}

Coloring four_partition(const Graph& g, const GstarResult& gstar,
                        long long budget) {
  SolveReport chi = chromatic_number(g, budget);
  if (!chi.exact() || chi.value() > 4 || !chi.witness)
    throw std::runtime_error(
        "four_partition: no proper 4-coloring of G found within budget");
  const Coloring& f4 = *chi.witness;
  const GadgetMap& map = gstar.map;
  const int n = g.vertex_count();
  std::vector<int> color(gstar.graph.vertex_count(), 0);
  for (int i = 0; i < n; ++i) {
    color[map.u[i]] = f4.color(i);
    color[map.uprime[i]] = f4.color(i);
    const int xi = f4.color(i) == 1 ? 1 : 2;
    color[map.x[i]] = xi;
    for (int v : map.a[i]) color[v] = 3 - xi;
    for (int v : map.b[i]) color[v] = 3 - xi;
  }
  for (int j = 0; j < 3; ++j) color[map.y[j]] = 3;
  Coloring out{std::move(color), 4};
  if (!check_proper(gstar.graph, out).ok())
    throw std::logic_error("four_partition: extension is improper (4-partite "
                           "lemma violated)");
  return out;
}

SparsityReport sparsity_report(const Graph& g, const GstarResult& gstar) {
  SparsityReport report;
  const long long nstar = gstar.graph.vertex_count();
  report.avg_degree = Rational(2 * gstar.graph.edge_count(), nstar);
  if (nstar <= 60) {
    report.mad_bound = max_average_degree(gstar.graph);
    report.mad_exact = true;
  } else {
    // decomposition bound: the B/x forest, Y, A/u edges and
    // the doubled G contribute at most 8+4+4+4
    report.mad_bound = Rational(20);
    report.mad_exact = false;
  }
  try {
    report.four_colorable = check_proper(gstar.graph, four_partition(g, gstar)).ok();
  } catch (const std::exception&) {
    report.four_colorable = false;
  }
  return report;
}

}  // namespace locolor
