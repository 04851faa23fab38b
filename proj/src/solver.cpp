#include "locolor/solver.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <unordered_map>

namespace locolor {

namespace {

// Vertices in descending-degree order, ties by id. Fixed for
// reproducibility; maximizes early signature freezing.
std::vector<int> search_order(const Graph& g) {
  std::vector<int> order(g.vertex_count());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    return g.degree(a) != g.degree(b) ? g.degree(a) > g.degree(b) : a < b;
  });
  return order;
}

// Per-vertex predecessor on its false-twin chain (in search order), or -1.
// Twin swaps are graph automorphisms, so the lexicographically least
// coloring of each orbit has nondecreasing colors along every chain; for
// locating-type colorings twins need distinct colors, making the chain
// strictly increasing.
std::vector<int> twin_chains(const Graph& g, const std::vector<int>& pos) {
  std::vector<int> prev(g.vertex_count(), -1);
  for (const auto& cls : false_twin_classes(g)) {
    if (cls.size() < 2) continue;
    std::vector<int> members(cls);
    std::sort(members.begin(), members.end(),
              [&](int a, int b) { return pos[a] < pos[b]; });
    for (size_t i = 1; i < members.size(); ++i)
      prev[members[i]] = members[i - 1];
  }
  return prev;
}

struct SearchState {
  const Graph& g;
  int n;
  int k;
  long long budget;
  long long nodes = 0;
  std::vector<int> order;
  std::vector<int> pos;
  std::vector<int> color;      // 1..k, 0 = uncolored
  std::vector<int> twin_prev;  // -1 or earlier vertex on the twin chain

  SearchState(const Graph& graph, int palette, long long node_budget)
      : g(graph), n(graph.vertex_count()), k(palette), budget(node_budget) {
    order = search_order(g);
    pos.assign(n, 0);
    for (int i = 0; i < n; ++i) pos[order[i]] = i;
    color.assign(n, 0);
    twin_prev = twin_chains(g, pos);
  }

  bool color_free_on_neighbors(int v, int c) const {
    for (int u : g.neighbors(v))
      if (color[u] == c) return false;
    return true;
  }
};

// Neighbor-locating backtracking with eager signature freezing: as soon as
// a vertex's closed neighborhood is fully colored, its signature is final
// and immediately checked against all frozen same-colored signatures.
struct NlSearch : SearchState {
  std::vector<int> uncolored_closed;  // uncolored vertices in N[v]
  std::unordered_map<uint64_t, int> frozen_count;
  std::vector<uint64_t> frozen_key;
  std::vector<char> is_frozen;

  NlSearch(const Graph& graph, int palette, long long node_budget)
      : SearchState(graph, palette, node_budget) {
    uncolored_closed.assign(n, 0);
    for (int v = 0; v < n; ++v) uncolored_closed[v] = g.degree(v) + 1;
    frozen_key.assign(n, 0);
    is_frozen.assign(n, 0);
  }

  uint64_t signature_key(int v) const {
    uint64_t mask = 0;
    for (int u : g.neighbors(v)) mask |= uint64_t{1} << color[u];
    return (mask << 7) | static_cast<uint64_t>(color[v]);
  }

  // Returns the number of vertices frozen, or -1 on a signature clash
  // (in which case everything is already rolled back).
  int assign(int v, int c, std::vector<int>& frozen_here) {
    color[v] = c;
    frozen_here.clear();
    --uncolored_closed[v];
    if (uncolored_closed[v] == 0) frozen_here.push_back(v);
    for (int u : g.neighbors(v)) {
      --uncolored_closed[u];
      if (uncolored_closed[u] == 0) frozen_here.push_back(u);
    }
    for (size_t i = 0; i < frozen_here.size(); ++i) {
      int u = frozen_here[i];
      uint64_t key = signature_key(u);
      if (frozen_count[key]++ > 0) {
        // clash: undo the freezes done so far, then the assignment
        for (size_t j = 0; j <= i; ++j) --frozen_count[signature_key(frozen_here[j])];
        unassign_counts(v);
        color[v] = 0;
        return -1;
      }
      frozen_key[u] = key;
      is_frozen[u] = 1;
    }
    return static_cast<int>(frozen_here.size());
  }

  void unassign_counts(int v) {
    ++uncolored_closed[v];
    for (int u : g.neighbors(v)) ++uncolored_closed[u];
  }

  void unassign(int v, const std::vector<int>& frozen_here) {
    for (int u : frozen_here) {
      --frozen_count[frozen_key[u]];
      is_frozen[u] = 0;
    }
    unassign_counts(v);
    color[v] = 0;
  }

  Feasibility dfs(int idx, int max_used) {
    if (idx == n) return Feasibility::Feasible;
    int v = order[idx];
    int lo = twin_prev[v] >= 0 ? color[twin_prev[v]] + 1 : 1;
    int hi = std::min(k, max_used + 1);
    std::vector<int> frozen_here;
    for (int c = lo; c <= hi; ++c) {
      if (!color_free_on_neighbors(v, c)) continue;
      if (++nodes > budget) return Feasibility::BudgetExceeded;
      if (assign(v, c, frozen_here) < 0) continue;
      Feasibility sub = dfs(idx + 1, std::max(max_used, c));
      if (sub != Feasibility::Infeasible) return sub;
      unassign(v, frozen_here);
    }
    return Feasibility::Infeasible;
  }
};

// Locating search: proper + twin pruning only; leaves run check_locating.
// New colors are tried first, which tends to produce small distinguished
// classes early and reaches locating witnesses much sooner on the
// cycle-with-pendants shapes.
struct LocatingSearch : SearchState {
  using SearchState::SearchState;

  Feasibility dfs(int idx, int max_used) {
    if (idx == n) {
      Coloring f{color, max_used};
      return check_locating(g, f).ok() ? Feasibility::Feasible
                                       : Feasibility::Infeasible;
    }
    int v = order[idx];
    int lo = twin_prev[v] >= 0 ? color[twin_prev[v]] + 1 : 1;
    int hi = std::min(k, max_used + 1);
    for (int c = hi; c >= lo; --c) {
      if (!color_free_on_neighbors(v, c)) continue;
      if (++nodes > budget) return Feasibility::BudgetExceeded;
      color[v] = c;
      Feasibility sub = dfs(idx + 1, std::max(max_used, c));
      if (sub != Feasibility::Infeasible) return sub;
      color[v] = 0;
    }
    return Feasibility::Infeasible;
  }
};

// Proper-coloring feasibility. Twin chains are only nondecreasing here:
// twins may legally share a color.
struct ProperSearch : SearchState {
  using SearchState::SearchState;

  Feasibility dfs(int idx, int max_used) {
    if (idx == n) return Feasibility::Feasible;
    int v = order[idx];
    int lo = twin_prev[v] >= 0 ? color[twin_prev[v]] : 1;
    int hi = std::min(k, max_used + 1);
    for (int c = lo; c <= hi; ++c) {
      if (!color_free_on_neighbors(v, c)) continue;
      if (++nodes > budget) return Feasibility::BudgetExceeded;
      color[v] = c;
      Feasibility sub = dfs(idx + 1, std::max(max_used, c));
      if (sub != Feasibility::Infeasible) return sub;
      color[v] = 0;
    }
    return Feasibility::Infeasible;
  }
};

int greedy_palette(const Graph& g) {
  auto order = search_order(g);
  std::vector<int> color(g.vertex_count(), 0);
  int used = 0;
  for (int v : order) {
    int c = 1;
    while (true) {
      bool free = true;
      for (int u : g.neighbors(v))
        if (color[u] == c) free = false;
      if (free) break;
      ++c;
    }
    color[v] = c;
    used = std::max(used, c);
  }
  return std::max(used, g.vertex_count() > 0 ? 1 : 0);
}

}  // namespace

int clique_lower_bound(const Graph& g) {
  const int n = g.vertex_count();
  if (n == 0) return 0;
  int best = 1;
  for (int start = 0; start < n; ++start) {
    std::vector<int> clique{start};
    std::vector<int> candidates;
    for (int u : g.neighbors(start)) candidates.push_back(u);
    while (!candidates.empty()) {
      // candidate with most connections inside the candidate set
      int pick = candidates[0], pick_score = -1;
      for (int u : candidates) {
        int score = 0;
        for (int w : candidates)
          if (w != u && g.adjacent(u, w)) ++score;
        if (score > pick_score) {
          pick = u;
          pick_score = score;
        }
      }
      clique.push_back(pick);
      std::vector<int> next;
      for (int u : candidates)
        if (u != pick && g.adjacent(u, pick)) next.push_back(u);
      candidates = std::move(next);
    }
    best = std::max(best, static_cast<int>(clique.size()));
  }
  return best;
}

int twin_lower_bound(const Graph& g) {
  int best = g.vertex_count() > 0 ? 1 : 0;
  for (const auto& cls : false_twin_classes(g)) {
    int bound = static_cast<int>(cls.size());
    if (!g.neighbors(cls[0]).empty()) ++bound;  // shared neighbor
    best = std::max(best, bound);
  }
  return best;
}

int nl_lower_bound_from_degrees(const Graph& g) {
  const int n = g.vertex_count();
  if (n == 0) return 0;
  auto profile = degree_profile(g);
  int max_degree = profile.max_degree;
  if (max_degree == 0) return 1;
  // cumulative counts excluding isolated vertices
  std::vector<long long> cum(max_degree + 1, 0);
  for (int i = 1; i <= max_degree; ++i)
    cum[i] = cum[i - 1] + profile.count_by_degree[i];
  for (int k = 1; k <= n + 1; ++k) {
    bool ok = true;
    // sum_{i<=s} C(k-1,i); terms with i > k-1 vanish, so the sum saturates
    __int128 rhs_sum = 0;
    __int128 binom = 1;  // C(k-1, 0)
    for (int s = 1; s <= max_degree; ++s) {
      if (s <= k - 1) {
        binom = binom * (k - s) / s;  // C(k-1, s)
        rhs_sum += binom;
      }
      __int128 rhs = static_cast<__int128>(k) * rhs_sum;
      if (static_cast<__int128>(cum[s]) > rhs) {
        ok = false;
        break;
      }
    }
    if (ok) return k;
  }
  return 1;
}

SolveReport chromatic_number(const Graph& g, long long budget) {
  const int n = g.vertex_count();
  SolveReport report;
  if (n == 0) {
    report.lower_bound_origin = "trivial";
    return report;
  }
  int lb = std::max(1, clique_lower_bound(g));
  report.lower_bound_origin = lb > 1 ? "clique" : "trivial";
  int ub = greedy_palette(g);
  for (int k = lb; k < ub; ++k) {
    ProperSearch search(g, k, budget - report.nodes_explored);
    Feasibility status = search.dfs(0, 0);
    report.nodes_explored += search.nodes;
    if (status == Feasibility::Feasible) {
      Coloring witness{search.color, k};
      if (!check_proper(g, witness).ok())
        throw std::logic_error("chromatic_number: witness failed verification");
      report.lower = report.upper = k;
      report.witness = witness;
      return report;
    }
    if (status == Feasibility::BudgetExceeded) {
      report.lower = k;
      report.upper = ub;
      return report;
    }
    lb = k + 1;
  }
  // greedy witness at ub is exact
  report.lower = report.upper = ub;
  ProperSearch search(g, ub, budget);
  if (search.dfs(0, 0) == Feasibility::Feasible)
    report.witness = Coloring{search.color, ub};
  report.nodes_explored += search.nodes;
  return report;
}

FindResult find_nl_coloring(const Graph& g, int palette_size, long long budget) {
  if (palette_size < 1)
    throw std::invalid_argument("find_nl_coloring: palette must be >= 1");
  if (palette_size > 56)
    throw std::invalid_argument("find_nl_coloring: palette too large for the signature mask");
  FindResult result;
  if (g.vertex_count() == 0) {
    result.status = Feasibility::Feasible;
    result.witness = Coloring{{}, palette_size};
    return result;
  }
  NlSearch search(g, palette_size, budget);
  result.status = search.dfs(0, 0);
  result.nodes_explored = search.nodes;
  if (result.status == Feasibility::Feasible) {
    Coloring witness{search.color, palette_size};
    if (!check_nl(g, witness).ok())
      throw std::logic_error("find_nl_coloring: witness failed verification");
    result.witness = std::move(witness);
  }
  return result;
}

SolveReport nl_chromatic_number(const Graph& g, long long budget) {
  const int n = g.vertex_count();
  SolveReport report;
  if (n == 0) {
    report.lower_bound_origin = "trivial";
    return report;
  }
  int lb = 1;
  report.lower_bound_origin = "trivial";
  if (int b = clique_lower_bound(g); b > lb) {
    lb = b;
    report.lower_bound_origin = "clique";
  }
  if (int b = twin_lower_bound(g); b > lb) {
    lb = b;
    report.lower_bound_origin = "false-twin";
  }
  if (int b = nl_lower_bound_from_degrees(g); b > lb) {
    lb = b;
    report.lower_bound_origin = "degree-count";
  }
  for (int k = lb; k <= n; ++k) {
    FindResult sub = find_nl_coloring(g, k, budget - report.nodes_explored);
    report.nodes_explored += sub.nodes_explored;
    if (sub.status == Feasibility::Feasible) {
      report.lower = report.upper = k;
      report.witness = std::move(sub.witness);
      return report;
    }
    if (sub.status == Feasibility::BudgetExceeded) {
      report.lower = k;
      report.upper = n;  // rainbow coloring is always neighbor-locating
      return report;
    }
  }
  throw std::logic_error("nl_chromatic_number: rainbow palette rejected");
}

FindResult find_locating_coloring(const Graph& g, int palette_size,
                                  long long budget) {
  if (palette_size < 1)
    throw std::invalid_argument("find_locating_coloring: palette must be >= 1");
  if (!is_connected(g))
    throw std::invalid_argument("find_locating_coloring: graph must be connected");
  FindResult result;
  if (g.vertex_count() == 0) {
    result.status = Feasibility::Feasible;
    result.witness = Coloring{{}, palette_size};
    return result;
  }
  LocatingSearch search(g, palette_size, budget);
  result.status = search.dfs(0, 0);
  result.nodes_explored = search.nodes;
  if (result.status == Feasibility::Feasible) {
    int used = *std::max_element(search.color.begin(), search.color.end());
    Coloring witness{search.color, used};
    if (!check_locating(g, witness).ok())
      throw std::logic_error("find_locating_coloring: witness failed verification");
    result.witness = std::move(witness);
  }
  return result;
}

SolveReport locating_chromatic_number(const Graph& g, long long budget) {
  if (!is_connected(g))
    throw std::invalid_argument("locating_chromatic_number: graph must be connected");
  const int n = g.vertex_count();
  SolveReport report;
  if (n == 0) {
    report.lower_bound_origin = "trivial";
    return report;
  }
  SolveReport chi = chromatic_number(g, budget / 4 + 1);
  report.nodes_explored += chi.nodes_explored;
  int lb = std::max(1, chi.lower);
  report.lower_bound_origin = lb > 1 ? "clique" : "trivial";
  if (int b = twin_lower_bound(g); b > lb) {
    lb = b;
    report.lower_bound_origin = "false-twin";
  }
  int nl_deg_lb = nl_lower_bound_from_degrees(g);
  for (int k = lb; k <= n; ++k) {
    // Cheap upper-bound probe: a neighbor-locating witness is locating too.
    if (k >= nl_deg_lb) {
      long long probe = std::min<long long>(2'000'000, budget - report.nodes_explored);
      if (probe > 0) {
        FindResult nl = find_nl_coloring(g, k, probe);
        report.nodes_explored += nl.nodes_explored;
        if (nl.status == Feasibility::Feasible) {
          int used = *std::max_element(nl.witness->assignment.begin(),
                                       nl.witness->assignment.end());
          Coloring compact{nl.witness->assignment, used};
          if (check_locating(g, compact).ok() && used <= k) {
            report.lower = report.upper = k;
            report.witness = std::move(compact);
            return report;
          }
        }
      }
    }
    FindResult sub = find_locating_coloring(g, k, budget - report.nodes_explored);
    report.nodes_explored += sub.nodes_explored;
    if (sub.status == Feasibility::Feasible) {
      report.lower = report.upper = k;
      report.witness = std::move(sub.witness);
      return report;
    }
    if (sub.status == Feasibility::BudgetExceeded) {
      report.lower = k;
      report.upper = n;
      return report;
    }
  }
  throw std::logic_error("locating_chromatic_number: rainbow palette rejected");
}

namespace {

bool oracle_extend(const Graph& g, int k, LocatingKind kind,
                   std::vector<int>& color, int v, int max_used) {
  const int n = g.vertex_count();
  if (v == n) {
    Coloring f{color, max_used};
    if (kind == LocatingKind::NeighborLocating) return check_nl(g, f).ok();
    return check_locating(g, f).ok();
  }
  for (int c = 1; c <= std::min(k, max_used + 1); ++c) {
    color[v] = c;
    if (oracle_extend(g, k, kind, color, v + 1, std::max(max_used, c)))
      return true;
  }
  color[v] = 0;
  return false;
}

}  // namespace

Feasibility brute_force_oracle(const Graph& g, int palette_size,
                               LocatingKind kind) {
  const int n = g.vertex_count();
  if (palette_size < 1)
    throw std::invalid_argument("brute_force_oracle: palette must be >= 1");
  if (n * std::log(static_cast<double>(palette_size)) > std::log(1e8))
    throw std::invalid_argument("brute_force_oracle: k^n exceeds the 1e8 guard");
  if (n == 0) return Feasibility::Feasible;
  std::vector<int> color(n, 0);
  return oracle_extend(g, palette_size, kind, color, 0, 0)
             ? Feasibility::Feasible
             : Feasibility::Infeasible;
}

}  // namespace locolor
