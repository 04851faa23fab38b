#include "locolor/verify.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <stdexcept>

namespace locolor {

void validate_coloring(const Graph& g, const Coloring& f) {
  if (static_cast<int>(f.assignment.size()) != g.vertex_count())
    throw std::invalid_argument("coloring does not cover the vertex set");
  for (int c : f.assignment)
    if (c < 1 || c > f.palette_size)
      throw std::invalid_argument("color outside palette 1..k");
}

CheckReport check_proper(const Graph& g, const Coloring& f) {
  validate_coloring(g, f);
  for (int u = 0; u < g.vertex_count(); ++u)
    for (int v : g.neighbors(u))
      if (u < v && f.color(u) == f.color(v))
        return {CheckStatus::MonochromaticEdge, u, v};
  return {};
}

NlSignature nl_signature(const Graph& g, const Coloring& f, int v) {
  validate_coloring(g, f);
  NlSignature sig;
  sig.own_color = f.color(v);
  for (int u : g.neighbors(v)) sig.neighbor_colors.insert(f.color(u));
  return sig;
}

std::vector<std::vector<int>> color_classes(const Graph& g, const Coloring& f) {
  validate_coloring(g, f);
  std::vector<std::vector<int>> classes(f.palette_size);
  for (int v = 0; v < g.vertex_count(); ++v)
    classes[f.color(v) - 1].push_back(v);
  return classes;
}

CheckReport check_nl(const Graph& g, const Coloring& f) {
  if (auto proper = check_proper(g, f); !proper.ok()) return proper;
  // Same-colored pairs only; different colors distinguish by definition.
  std::vector<std::map<std::set<int>, int>> seen(f.palette_size);
  std::optional<std::pair<int, int>> worst;
  for (int v = 0; v < g.vertex_count(); ++v) {
    std::set<int> nbr_colors;
    for (int u : g.neighbors(v)) nbr_colors.insert(f.color(u));
    auto [it, inserted] = seen[f.color(v) - 1].try_emplace(std::move(nbr_colors), v);
    if (!inserted) {
      std::pair<int, int> pair{it->second, v};
      if (!worst || pair < *worst) worst = pair;
    }
  }
  if (worst) return {CheckStatus::SignatureClash, worst->first, worst->second};
  return {};
}

namespace {

std::vector<Dist> multi_source_distances(const Graph& g,
                                         const std::vector<int>& sources) {
  std::vector<Dist> dist(g.vertex_count());
  std::deque<int> queue;
  for (int s : sources) {
    dist[s] = Dist(0);
    queue.push_back(s);
  }
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

}  // namespace

LocatingSignature locating_signature(const Graph& g, const Coloring& f, int v) {
  if (auto proper = check_proper(g, f); !proper.ok())
    throw std::invalid_argument("locating_signature: coloring is not proper");
  auto classes = color_classes(g, f);
  LocatingSignature sig;
  for (const auto& cls : classes) {
    if (cls.empty())
      throw std::invalid_argument("locating_signature: empty color class");
    sig.distances.push_back(distance_to_set(g, v, cls));
  }
  return sig;
}

CheckReport check_locating(const Graph& g, const Coloring& f,
                           bool allow_disconnected) {
  if (auto proper = check_proper(g, f); !proper.ok()) return proper;
  if (!allow_disconnected && !is_connected(g))
    throw std::invalid_argument(
        "check_locating: disconnected input (pass allow_disconnected to use "
        "unreachable-distance semantics)");
  auto classes = color_classes(g, f);
  for (const auto& cls : classes)
    if (cls.empty())
      throw std::invalid_argument("check_locating: empty color class");
  // One multi-source BFS sweep per class.
  std::vector<std::vector<Dist>> class_dist;
  class_dist.reserve(classes.size());
  for (const auto& cls : classes)
    class_dist.push_back(multi_source_distances(g, cls));
  std::vector<std::map<std::vector<int>, int>> seen(f.palette_size);
  std::optional<std::pair<int, int>> worst;
  for (int v = 0; v < g.vertex_count(); ++v) {
    std::vector<int> key;
    key.reserve(classes.size());
    for (const auto& dist : class_dist)
      key.push_back(dist[v].reachable() ? dist[v].value() : -1);
    auto [it, inserted] = seen[f.color(v) - 1].try_emplace(std::move(key), v);
    if (!inserted) {
      std::pair<int, int> pair{it->second, v};
      if (!worst || pair < *worst) worst = pair;
    }
  }
  if (worst) return {CheckStatus::SignatureClash, worst->first, worst->second};
  return {};
}

}  // namespace locolor
