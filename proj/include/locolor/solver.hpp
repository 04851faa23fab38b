#pragma once

#include <optional>
#include <string>

#include "locolor/graph.hpp"
#include "locolor/verify.hpp"

namespace locolor {

enum class Feasibility { Feasible, Infeasible, BudgetExceeded };

// Budgets count search-tree nodes, not wall time, so CI runs are
// deterministic.
inline constexpr long long kDefaultBudget = 50'000'000;

struct FindResult {
  Feasibility status = Feasibility::Infeasible;
  std::optional<Coloring> witness;
  long long nodes_explored = 0;
};

struct SolveReport {
  int lower = 0;
  int upper = 0;  // lower == upper means the value is certified exact
  std::optional<Coloring> witness;
  long long nodes_explored = 0;
  std::string lower_bound_origin;

  bool exact() const { return lower == upper; }
  int value() const { return lower; }
};

// Greedy clique (exact for small graphs): a chromatic lower bound.
int clique_lower_bound(const Graph& g);

// False-twin classes need pairwise distinct colors under any locating or
// neighbor-locating coloring; a shared neighbor adds one more.
int twin_lower_bound(const Graph& g);

// Smallest k satisfying the degree-count necessary condition
// sum_{i<=s} d_i <= k * sum_{i<=s} C(k-1, i) for every s <= Delta, where
// terms with i > k-1 vanish. Isolated vertices are excluded from the counts.
int nl_lower_bound_from_degrees(const Graph& g);

SolveReport chromatic_number(const Graph& g, long long budget = kDefaultBudget);

// Backtracking over vertices in descending-degree order (ties by id) with
// first-use color symmetry breaking, ascending colors on false-twin chains,
// and eager neighbor-signature freezing.
FindResult find_nl_coloring(const Graph& g, int palette_size,
                            long long budget = kDefaultBudget);

SolveReport nl_chromatic_number(const Graph& g, long long budget = kDefaultBudget);

// Same vertex order; pruning is limited to proper-coloring and false-twin
// constraints because class distances depend on the full coloring. Leaves
// run the full locating checker.
FindResult find_locating_coloring(const Graph& g, int palette_size,
                                  long long budget = kDefaultBudget);

// Requires a connected graph.
SolveReport locating_chromatic_number(const Graph& g,
                                      long long budget = kDefaultBudget);

enum class LocatingKind { Locating, NeighborLocating };

// Exhaustive enumeration over canonical colorings; guard k^n <= 1e8.
// Independent of the backtracking engine, used for cross-validation.
Feasibility brute_force_oracle(const Graph& g, int palette_size,
                               LocatingKind kind);

}  // namespace locolor
