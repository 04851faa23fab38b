#include "locolor/cli.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "locolor/bounds.hpp"
#include "locolor/constructions.hpp"
#include "locolor/io.hpp"
#include "locolor/reduction.hpp"
#include "locolor/solver.hpp"

namespace locolor {

namespace {

using nlohmann::json;

constexpr const char* kVersion = "1.0.0";

long long default_budget() {
  if (const char* env = std::getenv("LOCOLOR_BUDGET")) {
    try {
      return std::stoll(env);
    } catch (const std::exception&) {
      throw std::runtime_error("LOCOLOR_BUDGET is not an integer");
    }
  }
  return kDefaultBudget;
}

Rational parse_rational(const std::string& text) {
  auto slash = text.find('/');
  if (slash == std::string::npos) return Rational(std::stoll(text));
  return Rational(std::stoll(text.substr(0, slash)),
                  std::stoll(text.substr(slash + 1)));
}

std::string hash_string(uint64_t hash) {
  std::ostringstream ss;
  ss << "fnv:" << std::hex << hash;
  return ss.str();
}

json manifest_base(const std::string& command) {
  json m;
  m["command"] = command;
  m["version"] = kVersion;
  m["inputs"] = json::object();
  m["outputs"] = json::object();
  m["assertions"] = json::array();
  return m;
}

json witness_json(const std::optional<Coloring>& witness) {
  if (!witness) return nullptr;
  json w;
  w["k"] = witness->palette_size;
  w["assignment"] = witness->assignment;
  return w;
}

int run_verify(const std::string& kind, const std::string& graph_path,
               const std::string& coloring_path, bool as_json) {
  Graph g = load_graph(graph_path);
  Coloring f = load_coloring(coloring_path, g.vertex_count());
  CheckReport report;
  if (kind == "proper")
    report = check_proper(g, f);
  else if (kind == "nl")
    report = check_nl(g, f);
  else
    report = check_locating(g, f);
  if (as_json) {
    json out;
    out["status"] = report.ok() ? "ok"
                    : report.status == CheckStatus::MonochromaticEdge
                        ? "monochromatic-edge"
                        : "signature-clash";
    out["witness"] =
        report.ok() ? json(nullptr) : json{{"u", report.u}, {"v", report.v}};
    std::cout << out.dump(2) << '\n';
  } else if (report.ok()) {
    std::cout << "ok\n";
  } else {
    std::cout << (report.status == CheckStatus::MonochromaticEdge
                      ? "monochromatic edge "
                      : "signature clash ")
              << report.u << ' ' << report.v << '\n';
  }
  return report.ok() ? 0 : 1;
}

int feasibility_exit(Feasibility status) {
  switch (status) {
    case Feasibility::Feasible: return 0;
    case Feasibility::Infeasible: return 1;
    default: return 3;
  }
}

int run_solve(const std::string& invariant, const std::string& graph_path,
              std::optional<int> k, long long budget, bool as_json) {
  Graph g = load_graph(graph_path);
  json out;
  out["invariant"] = invariant;
  if (k) {
    FindResult result;
    if (invariant == "chi") {
      SolveReport report = chromatic_number(g, budget);
      result.nodes_explored = report.nodes_explored;
      if (report.upper <= *k && report.witness) {
        result.status = Feasibility::Feasible;
        result.witness = report.witness;
      } else if (report.lower > *k) {
        result.status = Feasibility::Infeasible;
      } else {
        result.status = report.exact() ? Feasibility::Infeasible
                                       : Feasibility::BudgetExceeded;
      }
    } else if (invariant == "chi-nl") {
      result = find_nl_coloring(g, *k, budget);
    } else {
      result = find_locating_coloring(g, *k, budget);
    }
    const char* verdict = result.status == Feasibility::Feasible ? "feasible"
                          : result.status == Feasibility::Infeasible
                              ? "infeasible"
                              : "budget-exceeded";
    if (as_json) {
      out["k"] = *k;
      out["status"] = verdict;
      out["nodes_explored"] = result.nodes_explored;
      out["witness"] = witness_json(result.witness);
      std::cout << out.dump(2) << '\n';
    } else {
      std::cout << verdict << '\n';
      if (result.witness) write_coloring(*result.witness, std::cout);
    }
    return feasibility_exit(result.status);
  }
  SolveReport report;
  if (invariant == "chi")
    report = chromatic_number(g, budget);
  else if (invariant == "chi-nl")
    report = nl_chromatic_number(g, budget);
  else
    report = locating_chromatic_number(g, budget);
  if (as_json) {
    out["lower"] = report.lower;
    out["upper"] = report.upper;
    out["exact"] = report.exact();
    out["nodes_explored"] = report.nodes_explored;
    out["lower_bound_origin"] = report.lower_bound_origin;
    out["witness"] = witness_json(report.witness);
    std::cout << out.dump(2) << '\n';
  } else if (report.exact()) {
    std::cout << invariant << " = " << report.value() << '\n';
  } else {
    std::cout << invariant << " in [" << report.lower << ", " << report.upper
              << "] (budget exhausted)\n";
  }
  return report.exact() ? 0 : 3;
}

int run_construct(const std::string& family, int p, int q, int r, int k, int n,
                  int delta, int s, const std::string& out_prefix) {
  Graph graph;
  std::optional<Coloring> coloring;
  json manifest = manifest_base("construct");
  json& claims = manifest["assertions"];
  if (family == "path") {
    graph = path_graph(n);
  } else if (family == "cycle") {
    graph = cycle_graph(n);
  } else if (family == "complete") {
    graph = complete_graph(p);
  } else if (family == "star") {
    graph = star_graph(n);
  } else if (family == "gpqr") {
    GpqrResult result = gpqr(p, q, r);
    graph = std::move(result.graph);
    claims.push_back({{"chi", p}, {"chi_l", q}, {"chi_nl", r},
                      {"experimental", result.experimental}});
  } else if (family == "gap-pair") {
    GapPair pair = gap_pair(k);
    graph = std::move(pair.g);
    claims.push_back({{"chi_l_g", 2 * k + 1}, {"chi_nl_g", 2 * k + 1},
                      {"chi_l_h", 3 * k + 1}, {"chi_nl_h", 3 * k + 1}});
    if (!out_prefix.empty()) {
      save_graph(pair.h, out_prefix + "_h.graph");
      manifest["outputs"][out_prefix + "_h.graph"] =
          hash_string(graph_hash(pair.h));
    }
  } else if (family == "nl-family") {
    FamilyResult result = nl_family(delta, s);
    graph = std::move(result.graph);
    coloring = std::move(result.phi);
    claims.push_back({{"order", graph.vertex_count()},
                      {"colors", coloring->palette_size},
                      {"max_degree", delta}});
  } else {
    throw CLI::ValidationError("--family", "unknown family " + family);
  }
  if (out_prefix.empty()) {
    write_edge_list(graph, std::cout);
    if (coloring) write_coloring(*coloring, std::cout);
    return 0;
  }
  save_graph(graph, out_prefix + ".graph");
  manifest["outputs"][out_prefix + ".graph"] = hash_string(graph_hash(graph));
  if (coloring) {
    save_coloring(*coloring, out_prefix + ".coloring");
  }
  std::ofstream mf(out_prefix + ".json");
  mf << manifest.dump(2) << '\n';
  return 0;
}

int run_bounds(const std::string& formula, int k, int delta,
               const std::string& avgdeg, long long n, int s, int level,
               long long c, bool as_json) {
  json out;
  out["formula"] = formula;
  std::string text;
  if (formula == "general") {
    out["value"] = general_max_order(k);
  } else if (formula == "maxdeg") {
    out["value"] = max_order_nl_maxdeg(k, delta);
  } else if (formula == "avgdeg") {
    AvgDegBound bound = max_order_nl_avgdeg(k, parse_rational(avgdeg));
    out["value"] = bound.value;
    out["case"] = bound.case_tag;
    out["strict"] = bound.strict;
    text = (bound.strict ? " (strict, case i)" : " (case ii)");
  } else if (formula == "cycle-rank") {
    out["value"] = cycle_rank_max_order(k, c);
  } else if (formula == "path") {
    out["value"] = path_nl_chromatic(n);
    if (n >= 3 && n <= 9) {
      out["extension"] = true;  // solver-derived small-case range
      text = " (small-case extension)";
    }
  } else if (formula == "extremal-profile") {
    ExtremalProfile profile = extremal_degree_profile(k, delta);
    json counts = json::object();
    for (auto [deg, count] : profile.count_by_degree)
      counts[std::to_string(deg)] = count;
    out["value"] = counts;
    out["max_degree_cap"] = profile.max_degree_cap;
  } else if (formula == "suitable-cycle") {
    out["value"] = suitable_odd_cycle_length(k);
  } else if (formula == "family-order") {
    out["value"] = family_order_formula(s, level);
  } else if (formula == "family-lower") {
    out["value"] = family_lower_bound(delta, s);
  } else {
    throw CLI::ValidationError("--formula", "unknown formula " + formula);
  }
  if (as_json)
    std::cout << out.dump(2) << '\n';
  else
    std::cout << out["value"].dump() << text << '\n';
  return 0;
}

int run_reduce(const std::string& graph_path, const std::string& lift_path,
               const std::string& extract_path, const std::string& mode,
               bool report, const std::string& out_prefix, bool as_json) {
  Graph g = load_graph(graph_path);
  GstarResult gstar = build_gstar(g);
  json manifest = manifest_base("reduce");
  manifest["inputs"][graph_path] = hash_string(graph_hash(g));
  if (!lift_path.empty()) {
    Coloring f3 = load_coloring(lift_path, g.vertex_count());
    Coloring lifted = lift_3coloring(g, gstar, f3);
    if (!out_prefix.empty())
      save_coloring(lifted, out_prefix + ".coloring");
    else
      write_coloring(lifted, std::cout);
    return 0;
  }
  if (!extract_path.empty()) {
    Coloring f = load_coloring(extract_path, gstar.graph.vertex_count());
    Coloring f3 = extract_3coloring(g, gstar, f,
                                    mode == "locating"
                                        ? ExtractMode::Locating
                                        : ExtractMode::NeighborLocating);
    if (!out_prefix.empty())
      save_coloring(f3, out_prefix + ".coloring");
    else
      write_coloring(f3, std::cout);
    return 0;
  }
  // default: emit G* (+ report)
  const long long n = g.vertex_count(), m = g.edge_count();
  json info;
  info["n_star"] = gstar.graph.vertex_count();
  info["m_star"] = gstar.graph.edge_count();
  info["n_star_formula"] = 2 * n * n + 4 * n + 3;
  info["m_star_formula"] = 7 * n * n - n + 4 * m;
  if (report) {
    SparsityReport sparsity = sparsity_report(g, gstar);
    std::ostringstream avg, mad;
    avg << sparsity.avg_degree;
    mad << sparsity.mad_bound;
    info["avg_degree"] = avg.str();
    info["mad_bound"] = mad.str();
    info["mad_exact"] = sparsity.mad_exact;
    info["four_colorable"] = sparsity.four_colorable;
  }
  if (!out_prefix.empty()) {
    save_graph(gstar.graph, out_prefix + ".graph");
    manifest["outputs"][out_prefix + ".graph"] =
        hash_string(graph_hash(gstar.graph));
    manifest["report"] = info;
    std::ofstream mf(out_prefix + ".json");
    mf << manifest.dump(2) << '\n';
  }
  if (as_json)
    std::cout << info.dump(2) << '\n';
  else
    std::cout << "n*=" << info["n_star"] << " m*=" << info["m_star"] << '\n';
  return 0;
}

int run_corpus(uint64_t seed, int size, const std::string& out_dir) {
  auto corpus = corpus_generate(seed, size);
  json manifest = manifest_base("corpus");
  manifest["seed"] = seed;
  if (!out_dir.empty()) {
    std::filesystem::create_directories(out_dir);
    for (const auto& entry : corpus) {
      const std::string path = out_dir + "/" + entry.name + ".graph";
      save_graph(entry.graph, path);
      manifest["outputs"][entry.name] = hash_string(graph_hash(entry.graph));
    }
    std::ofstream mf(out_dir + "/manifest.json");
    mf << manifest.dump(2) << '\n';
  }
  std::cout << "corpus " << corpus.size() << " graphs, hash "
            << hash_string(corpus_hash(corpus)) << '\n';
  return 0;
}

}  // namespace

int cli_dispatch(int argc, const char* const* argv) {
  CLI::App app{"locating / neighbor-locating coloring toolkit"};
  app.require_subcommand(1);

  std::string kind, graph_path, coloring_path, invariant, family, formula;
  std::string avgdeg = "1", lift_path, extract_path, mode = "nl", out;
  int k_param = 0, p = 2, q = 2, r = 2, n = 1, delta = 2, s = 4, level = 1;
  long long budget = 0, cycle_rank_param = 0, n_long = 1;
  bool as_json = false, report_flag = false;
  std::optional<int> solve_k;

  auto* verify = app.add_subcommand("verify", "check a coloring");
  verify->add_option("--kind", kind)->required()
      ->check(CLI::IsMember({"proper", "nl", "locating"}));
  verify->add_option("--graph", graph_path)->required();
  verify->add_option("--coloring", coloring_path)->required();
  verify->add_flag("--json", as_json);

  auto* solve = app.add_subcommand("solve", "compute a chromatic invariant");
  solve->add_option("--invariant", invariant)->required()
      ->check(CLI::IsMember({"chi", "chi-l", "chi-nl"}));
  solve->add_option("--graph", graph_path)->required();
  solve->add_option("--k", solve_k);
  solve->add_option("--budget", budget);
  solve->add_flag("--json", as_json);

  auto* construct = app.add_subcommand("construct", "generate a graph family instance");
  construct->add_option("--family", family)->required()
      ->check(CLI::IsMember({"gpqr", "gap-pair", "nl-family", "path", "cycle",
                             "complete", "star"}));
  construct->add_option("--p", p);
  construct->add_option("--q", q);
  construct->add_option("--r", r);
  construct->add_option("--k", k_param);
  construct->add_option("--n", n);
  construct->add_option("--delta", delta);
  construct->add_option("--s", s);
  construct->add_option("--out", out);

  auto* bounds = app.add_subcommand("bounds", "evaluate a bound formula");
  bounds->add_option("--formula", formula)->required()
      ->check(CLI::IsMember({"general", "maxdeg", "avgdeg", "cycle-rank",
                             "path", "extremal-profile", "suitable-cycle",
                             "family-order", "family-lower"}));
  bounds->add_option("--k", k_param);
  bounds->add_option("--delta", delta);
  bounds->add_option("--avgdeg", avgdeg);
  bounds->add_option("--n", n_long);
  bounds->add_option("--s", s);
  bounds->add_option("--level", level);
  bounds->add_option("--c", cycle_rank_param);
  bounds->add_flag("--json", as_json);

  auto* reduce = app.add_subcommand("reduce", "the G* hardness gadget");
  reduce->add_option("--graph", graph_path)->required();
  reduce->add_option("--lift", lift_path);
  reduce->add_option("--extract", extract_path);
  reduce->add_option("--mode", mode)->check(CLI::IsMember({"nl", "locating"}));
  reduce->add_flag("--report", report_flag);
  reduce->add_option("--out", out);
  reduce->add_flag("--json", as_json);

  auto* corpus = app.add_subcommand("corpus", "generate the test corpus");
  uint64_t seed = 0;
  int size = 50;
  corpus->add_option("--seed", seed);
  corpus->add_option("--size", size);
  corpus->add_option("--out", out);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (budget == 0) budget = default_budget();
    if (verify->parsed())
      return run_verify(kind, graph_path, coloring_path, as_json);
    if (solve->parsed())
      return run_solve(invariant, graph_path, solve_k, budget, as_json);
    if (construct->parsed())
      return run_construct(family, p, q, r, k_param, n, delta, s, out);
    if (bounds->parsed())
      return run_bounds(formula, k_param, delta, avgdeg, n_long, s, level,
                        cycle_rank_param, as_json);
    if (reduce->parsed())
      return run_reduce(graph_path, lift_path, extract_path, mode, report_flag,
                        out, as_json);
    if (corpus->parsed()) return run_corpus(seed, size, out);
  } catch (const CLI::Error& e) {
    std::cerr << e.what() << '\n';
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 2;
}

}  // namespace locolor
