#pragma once

#include <utility>
#include <vector>

#include "locolor/graph.hpp"
#include "locolor/verify.hpp"

namespace locolor {

Graph complete_graph(int p);
Graph path_graph(int n);
Graph cycle_graph(int n);
Graph star_graph(int leaves);  // K_{1,leaves}

struct GpqrResult {
  Graph graph;
  int p = 0, q = 0, r = 0;  // claimed (chi, chi_L, chi_NL)
  bool experimental = false;  // the 2 = p < q < r sub-case is solver-searched
};

// Connected graph with chi = p, chi_L = q, chi_NL = r. Requires
// 2 <= p <= q <= r, excluding p = q = 2 with r > 2 (no such graph exists).
GpqrResult gpqr(int p, int q, int r);

struct GapPair {
  Graph g;                     // G_k: center joined to 2k leaves and k edges
  Graph h;                     // H_k: the induced star K_{1,3k}
  std::vector<int> h_vertices; // vertices of g inducing h (center first)
};

// Gap pair: chi_L(G_k) = chi_NL(G_k) = 2k+1 while the induced
// subgraph H_k has chi_L = chi_NL = 3k+1.
GapPair gap_pair(int k);

struct MatchingGrid {
  int rows = 0, cols = 0;
  // matched pairs ((row,col),(row,col)), all indices 1-based
  std::vector<std::pair<std::pair<int, int>, std::pair<int, int>>> edges;
};

// The explicit matching on a p x q grid (p < q):
// (2i-1, j) -- (2i, ((i+j-1) mod q)+1) for i <= floor(p/2), j <= q.
// Endpoints of each edge lie in different columns, edges sharing a column
// on one side differ on the other, and all rows except a last odd row are
// saturated.
MatchingGrid matrix_matching(int p, int q);

// Adds the matrix-matching edges between the given independent grid of
// vertices (rows x columns of vertex ids). Preconditions: column j is
// uniformly colored s'+j for some base s', those q colors appear nowhere
// outside the grid, the grid is independent, and all pairs not both inside
// the grid are already neighbor-distinguished. The returned supergraph
// keeps phi neighbor-locating (verified; a failure would falsify the
// corollary and raises an internal error).
Graph extend_with_matching(const Graph& g,
                           const std::vector<std::vector<int>>& grid,
                           const Coloring& phi);

// Iteration state: graph G_i, NL coloring phi_i with palette i*s, and a
// system of (i+1)-tuples disjointly covering the vertices.
struct TripletState {
  Graph g;
  Coloring phi;
  std::vector<std::vector<int>> tuples;
  int level = 0;
  int s = 0;
};

// Level 1: the path on 4*floor(s^2(s-1)/8) vertices with a solver-found
// NL s-coloring and the pair system {(v_{i-1}, v_{i+1}) : i = 2,3 mod 4}.
TripletState base_triplet(int s);

// One step of the iteration: a new vertex per tuple, s disjoint copies with
// fresh colors on the new vertices of each copy, and matrix matchings
// between copies within each cell of same-color-set tuples. All state
// invariants are re-verified.
TripletState iterate_triplet(const TripletState& state);

struct FamilyResult {
  Graph graph;
  Coloring phi;  // NL coloring with (max_degree - 1) * s colors
};

// Near-extremal family member with maximum degree max_degree:
// max_degree - 2 iterations from base_triplet(s).
FamilyResult nl_family(int max_degree, int s);

}  // namespace locolor
