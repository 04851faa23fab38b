#pragma once

#include <array>
#include <vector>

#include "locolor/graph.hpp"
#include "locolor/rational.hpp"
#include "locolor/verify.hpp"

namespace locolor {

// Vertex roles inside G*: for each vertex u_i of G there is a gadget with a
// copy u'_i, a hub x_i, an independent set A_i of n-1 vertices (attached to
// u_i, u'_i and Y) and n+2 pendants B_i on x_i; Y = {y_1, y_2, y_3} is
// adjacent to every x_i and every A_i vertex.
struct GadgetMap {
  std::vector<int> u, uprime, x;
  std::vector<std::vector<int>> a, b;
  std::array<int, 3> y{};
};

struct GstarResult {
  Graph graph;
  GadgetMap map;
};

// Requires G connected with n >= 2. The result has 2n^2+4n+3 vertices and
// 7n^2-n+4m edges (self-checked), and is connected.
GstarResult build_gstar(const Graph& g);

// Extends a proper 3-coloring of G to the canonical NL (n+3)-coloring of
// G*: originals keep their colors, u'_i and x_i get color c_i = 3+i, y_j
// gets j, A_i receives {c_1..c_n} minus c_i and B_i receives the whole
// palette minus c_i, both in the sorted bijection (smallest color to
// smallest vertex id). Verified neighbor-locating before returning.
Coloring lift_3coloring(const Graph& g, const GstarResult& gstar,
                        const Coloring& f3);

enum class ExtractMode { NeighborLocating, Locating };

// Recovers a proper 3-coloring of G from any NL (or locating) (n+3)-coloring
// of G*: normalize the palette so Y carries 1,2,3 and x_i carries c_i, swap
// u_i with u'_i where u_i's color is not in {1,2,3}, restrict to G.
Coloring extract_3coloring(const Graph& g, const GstarResult& gstar,
                           const Coloring& f,
                           ExtractMode mode = ExtractMode::NeighborLocating);

// Proper 4-coloring of G* from a proper 4-coloring of G (found by exact
// search): u'_i copies u_i, x_i is 1 exactly when u_i is, A_i and B_i take
// the complementary color in {1,2}, Y is monochrome in 3.
Coloring four_partition(const Graph& g, const GstarResult& gstar,
                        long long budget = 50'000'000);

struct SparsityReport {
  Rational avg_degree;      // exact 2m*/n*
  Rational mad_bound;       // exact mad for small G*, else the decomposition bound 20
  bool mad_exact = false;
  bool four_colorable = false;
};

// Average degree (asserted <= 7), a maximum-average-degree bound (exact
// flow computation when n* <= 60, the 8+4+4+4 decomposition bound 20
// otherwise) and a 4-colorability flag via four_partition.
SparsityReport sparsity_report(const Graph& g, const GstarResult& gstar);

}  // namespace locolor
