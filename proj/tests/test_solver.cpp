#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "locolor/bounds.hpp"
#include "locolor/constructions.hpp"
#include "locolor/solver.hpp"

using namespace locolor;

namespace {

Graph petersen() {
  return build_graph(10, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0},
                          {5, 7}, {7, 9}, {9, 6}, {6, 8}, {8, 5},
                          {0, 5}, {1, 6}, {2, 7}, {3, 8}, {4, 9}});
}

}  // namespace

TEST_CASE("chromatic number") {
  auto c11 = chromatic_number(cycle_graph(11));
  CHECK(c11.exact());
  CHECK(c11.value() == 3);
  auto k4 = chromatic_number(complete_graph(4));
  CHECK(k4.value() == 4);
  CHECK(k4.lower_bound_origin == "clique");
  auto pet = chromatic_number(petersen());
  CHECK(pet.exact());
  CHECK(pet.value() == 3);
  CHECK(check_proper(petersen(), *pet.witness).ok());
}

TEST_CASE("degree-count lower bound (Inequality 5)") {
  CHECK(nl_lower_bound_from_degrees(cycle_graph(11)) == 4);  // 3*(2+1)=9 < 11
  CHECK(nl_lower_bound_from_degrees(path_graph(24)) == 4);   // 9 < 24
  // on cliques the count only reflects that k colors give k(2^{k-1}-1) slots
  CHECK(nl_lower_bound_from_degrees(complete_graph(4)) == 3);
  // coincides with the path formula across the solver range
  for (int n = 2; n <= 30; ++n)
    CHECK(nl_lower_bound_from_degrees(path_graph(n)) == path_nl_chromatic(n));
}

TEST_CASE("twin lower bound") {
  CHECK(twin_lower_bound(star_graph(5)) == 6);  // 5 twins + common neighbor
  CHECK(twin_lower_bound(complete_graph(4)) == 2);
  CHECK(twin_lower_bound(cycle_graph(4)) == 3);
}

TEST_CASE("find_nl_coloring on paths and stars") {
  auto feasible = find_nl_coloring(path_graph(24), 4);
  REQUIRE(feasible.status == Feasibility::Feasible);
  CHECK(check_nl(path_graph(24), *feasible.witness).ok());
  CHECK(find_nl_coloring(path_graph(24), 3).status == Feasibility::Infeasible);
  CHECK(find_nl_coloring(star_graph(5), 5).status == Feasibility::Infeasible);
  CHECK(find_nl_coloring(star_graph(5), 6).status == Feasibility::Feasible);
  CHECK_THROWS_AS(find_nl_coloring(path_graph(2), 0), std::invalid_argument);
}

TEST_CASE("nl chromatic number") {
  auto c11 = nl_chromatic_number(cycle_graph(11));
  CHECK(c11.value() == 4);
  CHECK(c11.lower_bound_origin == "degree-count");
  CHECK(nl_chromatic_number(star_graph(3)).value() == 4);
  for (int n = 3; n <= 24; ++n)
    CHECK(nl_chromatic_number(path_graph(n)).value() == path_nl_chromatic(n));
  // same-colored isolated vertices are indistinguishable, so three of them
  // force a third color even though the edge part is 2-chromatic
  Graph isolated = build_graph(5, {{0, 1}});
  auto iso = nl_chromatic_number(isolated);
  CHECK(iso.exact());
  CHECK(iso.value() == 3);
}

TEST_CASE("locating chromatic number") {
  for (int n = 3; n <= 10; ++n)
    CHECK(locating_chromatic_number(path_graph(n)).value() == 3);
  CHECK(locating_chromatic_number(cycle_graph(11)).value() == 3);
  CHECK(locating_chromatic_number(star_graph(4)).value() == 5);  // K_{1,q-1} -> q
  CHECK_THROWS_AS(locating_chromatic_number(disjoint_union(path_graph(2), path_graph(2))),
                  std::invalid_argument);
  CHECK_THROWS_AS(find_locating_coloring(disjoint_union(path_graph(2), path_graph(2)), 3),
                  std::invalid_argument);
}

TEST_CASE("witnesses re-verify and budgets are honored") {
  auto report = nl_chromatic_number(cycle_graph(11));
  REQUIRE(report.witness.has_value());
  CHECK(check_nl(cycle_graph(11), *report.witness).ok());
  auto loc = locating_chromatic_number(cycle_graph(11));
  REQUIRE(loc.witness.has_value());
  CHECK(check_locating(cycle_graph(11), *loc.witness).ok());
  // a one-node budget cannot finish
  auto starved = find_nl_coloring(path_graph(24), 4, 1);
  CHECK(starved.status == Feasibility::BudgetExceeded);
  auto starved_report = nl_chromatic_number(path_graph(24), 1);
  CHECK_FALSE(starved_report.exact());
  CHECK(starved_report.lower <= 4);
  CHECK(starved_report.upper == 24);
}

TEST_CASE("brute force oracle basics") {
  CHECK(brute_force_oracle(path_graph(5), 3, LocatingKind::NeighborLocating) ==
        Feasibility::Feasible);
  CHECK(brute_force_oracle(cycle_graph(4), 2, LocatingKind::Locating) ==
        Feasibility::Infeasible);
  CHECK(brute_force_oracle(complete_graph(3), 3, LocatingKind::NeighborLocating) ==
        Feasibility::Feasible);
  CHECK_THROWS_AS(brute_force_oracle(path_graph(30), 4, LocatingKind::NeighborLocating),
                  std::invalid_argument);  // k^n guard
}

TEST_CASE("solver agrees with the oracle on all labeled graphs up to n = 4") {
  for (int n = 1; n <= 4; ++n) {
    const int pairs = n * (n - 1) / 2;
    for (int mask = 0; mask < (1 << pairs); ++mask) {
      std::vector<std::pair<int, int>> edges;
      int bit = 0;
      for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v, ++bit)
          if (mask & (1 << bit)) edges.emplace_back(u, v);
      Graph g = build_graph(n, edges);
      for (int k = 1; k <= 4; ++k) {
        auto nl = find_nl_coloring(g, k);
        CHECK(nl.status == brute_force_oracle(g, k, LocatingKind::NeighborLocating));
        if (is_connected(g)) {
          auto loc = find_locating_coloring(g, k);
          CHECK(loc.status == brute_force_oracle(g, k, LocatingKind::Locating));
        }
      }
    }
  }
}

TEST_CASE("feasibility is monotone in k") {
  std::vector<Graph> graphs;
  graphs.push_back(path_graph(8));
  graphs.push_back(cycle_graph(7));
  graphs.push_back(star_graph(4));
  graphs.push_back(gpqr(3, 4, 4).graph);
  for (const auto& g : graphs) {
    bool seen_feasible = false;
    for (int k = 1; k <= g.vertex_count(); ++k) {
      bool feasible = find_nl_coloring(g, std::min(k, 56)).status == Feasibility::Feasible;
      if (seen_feasible) CHECK(feasible);
      seen_feasible = seen_feasible || feasible;
    }
    CHECK(seen_feasible);
  }
}

TEST_CASE("sandwich chain on assorted graphs") {
  std::vector<Graph> graphs;
  graphs.push_back(path_graph(9));
  graphs.push_back(cycle_graph(6));
  graphs.push_back(complete_graph(5));
  graphs.push_back(star_graph(5));
  graphs.push_back(petersen());
  for (const auto& g : graphs) {
    int chi = chromatic_number(g).value();
    int chi_l = locating_chromatic_number(g).value();
    int chi_nl = nl_chromatic_number(g).value();
    CHECK(chi <= chi_l);
    CHECK(chi_l <= chi_nl);
  }
}
