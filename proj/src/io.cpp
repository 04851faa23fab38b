#include "locolor/io.hpp"

#include <algorithm>
#include <fstream>
#include <random>
#include <sstream>

#include "locolor/constructions.hpp"
#include "locolor/reduction.hpp"

namespace locolor {

namespace {

// Line-oriented tokenizer that keeps track of line numbers for diagnostics.
struct LineReader {
  std::istream& in;
  int line_number = 0;

  // Next non-comment, non-blank line split into tokens; false at EOF.
  bool next(std::vector<std::string>& tokens, char comment = '\0') {
    std::string line;
    while (std::getline(in, line)) {
      ++line_number;
      if (!line.empty() && line.back() == '\r') line.pop_back();
      std::istringstream ss(line);
      tokens.assign(std::istream_iterator<std::string>(ss),
                    std::istream_iterator<std::string>());
      if (tokens.empty()) continue;
      if (comment && tokens[0].size() == 1 && tokens[0][0] == comment) continue;
      return true;
    }
    return false;
  }
};

long long parse_int(const std::string& token, int line) {
  size_t used = 0;
  long long value;
  try {
    value = std::stoll(token, &used);
  } catch (const std::exception&) {
    throw ParseError(line, "expected an integer, got '" + token + "'");
  }
  if (used != token.size())
    throw ParseError(line, "trailing characters in integer '" + token + "'");
  return value;
}

}  // namespace

Graph read_edge_list(std::istream& in) {
  LineReader reader{in};
  std::vector<std::string> tokens;
  if (!reader.next(tokens, '#'))
    throw ParseError(reader.line_number + 1, "missing 'n m' header");
  if (tokens.size() != 2)
    throw ParseError(reader.line_number, "header must be 'n m'");
  const long long n = parse_int(tokens[0], reader.line_number);
  const long long m = parse_int(tokens[1], reader.line_number);
  if (n < 0 || m < 0) throw ParseError(reader.line_number, "negative count");
  std::vector<std::pair<int, int>> edges;
  for (long long i = 0; i < m; ++i) {
    if (!reader.next(tokens, '#'))
      throw ParseError(reader.line_number + 1, "unexpected end of file: expected " +
                                                   std::to_string(m) + " edges");
    if (tokens.size() != 2)
      throw ParseError(reader.line_number, "edge line must be 'u v'");
    long long u = parse_int(tokens[0], reader.line_number);
    long long v = parse_int(tokens[1], reader.line_number);
    if (u < 0 || v < 0 || u >= n || v >= n)
      throw ParseError(reader.line_number, "endpoint out of range");
    if (u == v) throw ParseError(reader.line_number, "self-loop");
    edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
  }
  return build_graph(static_cast<int>(n), edges);
}

void write_edge_list(const Graph& g, std::ostream& out) {
  out << g.vertex_count() << ' ' << g.edge_count() << '\n';
  for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
}

Graph read_dimacs(std::istream& in) {
  LineReader reader{in};
  std::vector<std::string> tokens;
  if (!reader.next(tokens, 'c'))
    throw ParseError(reader.line_number + 1, "missing 'p edge n m' header");
  if (tokens.size() != 4 || tokens[0] != "p" || tokens[1] != "edge")
    throw ParseError(reader.line_number, "header must be 'p edge n m'");
  const long long n = parse_int(tokens[2], reader.line_number);
  const long long m = parse_int(tokens[3], reader.line_number);
  if (n < 0 || m < 0) throw ParseError(reader.line_number, "negative count");
  std::vector<std::pair<int, int>> edges;
  while (reader.next(tokens, 'c')) {
    if (tokens[0] != "e" || tokens.size() != 3)
      throw ParseError(reader.line_number, "expected 'e u v'");
    long long u = parse_int(tokens[1], reader.line_number);
    long long v = parse_int(tokens[2], reader.line_number);
    if (u < 1 || v < 1 || u > n || v > n)
      throw ParseError(reader.line_number, "endpoint out of range (1-based)");
    if (u == v) throw ParseError(reader.line_number, "self-loop");
    edges.emplace_back(static_cast<int>(u - 1), static_cast<int>(v - 1));
  }
  if (static_cast<long long>(edges.size()) != m)
    throw ParseError(reader.line_number,
                     "edge count mismatch: header says " + std::to_string(m) +
                         ", found " + std::to_string(edges.size()));
  return build_graph(static_cast<int>(n), edges);
}

void write_dimacs(const Graph& g, std::ostream& out) {
  out << "p edge " << g.vertex_count() << ' ' << g.edge_count() << '\n';
  for (auto [u, v] : g.edges()) out << "e " << u + 1 << ' ' << v + 1 << '\n';
}

Coloring read_coloring(std::istream& in, int vertex_count) {
  LineReader reader{in};
  std::vector<std::string> tokens;
  if (!reader.next(tokens, '#'))
    throw ParseError(reader.line_number + 1, "missing 'k <int>' header");
  if (tokens.size() != 2 || tokens[0] != "k")
    throw ParseError(reader.line_number, "header must be 'k <int>'");
  const long long k = parse_int(tokens[1], reader.line_number);
  if (k < 0) throw ParseError(reader.line_number, "negative palette");
  std::vector<int> assignment(vertex_count, 0);
  std::vector<char> seen(vertex_count, 0);
  while (reader.next(tokens, '#')) {
    if (tokens.size() != 2)
      throw ParseError(reader.line_number, "coloring line must be 'v c'");
    long long v = parse_int(tokens[0], reader.line_number);
    long long c = parse_int(tokens[1], reader.line_number);
    if (v < 0 || v >= vertex_count)
      throw ParseError(reader.line_number, "vertex out of range");
    if (c < 1 || c > k)
      throw ParseError(reader.line_number, "color outside 1..k");
    if (seen[v]) throw ParseError(reader.line_number, "vertex colored twice");
    seen[v] = 1;
    assignment[v] = static_cast<int>(c);
  }
  for (int v = 0; v < vertex_count; ++v)
    if (!seen[v])
      throw ParseError(reader.line_number, "vertex " + std::to_string(v) +
                                               " has no color");
  return Coloring{std::move(assignment), static_cast<int>(k)};
}

void write_coloring(const Coloring& f, std::ostream& out) {
  out << "k " << f.palette_size << '\n';
  for (size_t v = 0; v < f.assignment.size(); ++v)
    out << v << ' ' << f.assignment[v] << '\n';
}

namespace {

bool ends_with(const std::string& s, const std::string& suffix) {
  return s.size() >= suffix.size() &&
         s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0;
}

std::ifstream open_input(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  return in;
}

std::ofstream open_output(const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open " + path + " for writing");
  return out;
}

}  // namespace

Graph load_graph(const std::string& path) {
  auto in = open_input(path);
  return ends_with(path, ".col") ? read_dimacs(in) : read_edge_list(in);
}

void save_graph(const Graph& g, const std::string& path) {
  auto out = open_output(path);
  if (ends_with(path, ".col"))
    write_dimacs(g, out);
  else
    write_edge_list(g, out);
}

Coloring load_coloring(const std::string& path, int vertex_count) {
  auto in = open_input(path);
  return read_coloring(in, vertex_count);
}

void save_coloring(const Coloring& f, const std::string& path) {
  auto out = open_output(path);
  write_coloring(f, out);
}

uint64_t fnv1a(const std::string& data) {
  uint64_t hash = 1469598103934665603ULL;
  for (unsigned char byte : data) {
    hash ^= byte;
    hash *= 1099511628211ULL;
  }
  return hash;
}

uint64_t graph_hash(const Graph& g) {
  std::ostringstream ss;
  write_edge_list(g, ss);
  return fnv1a(ss.str());
}

std::vector<CorpusEntry> corpus_generate(uint64_t seed, int size) {
  std::vector<CorpusEntry> corpus;
  auto add = [&corpus](std::string name, Graph g) {
    corpus.push_back({std::move(name), std::move(g)});
  };
  for (int n : {2, 3, 4, 5, 6, 7, 8, 9, 24, 25, 30})
    add("path_" + std::to_string(n), path_graph(n));
  for (int n : {3, 4, 5, 6, 7, 8, 11})
    add("cycle_" + std::to_string(n), cycle_graph(n));
  for (int l : {3, 4, 5}) add("star_" + std::to_string(l), star_graph(l));
  for (int p : {2, 3, 4, 5}) add("complete_" + std::to_string(p), complete_graph(p));
  add("gpqr_3_3_3", gpqr(3, 3, 3).graph);
  add("gpqr_2_4_4", gpqr(2, 4, 4).graph);
  add("gpqr_3_4_4", gpqr(3, 4, 4).graph);
  add("gpqr_3_3_4", gpqr(3, 3, 4).graph);
  for (int k : {0, 1, 2}) {
    GapPair pair = gap_pair(k);
    add("gap_g_" + std::to_string(k), std::move(pair.g));
    if (k > 0) add("gap_h_" + std::to_string(k), std::move(pair.h));
  }
  add("gstar_path_3", build_gstar(path_graph(3)).graph);
  add("gstar_cycle_4", build_gstar(cycle_graph(4)).graph);
  add("gstar_complete_3", build_gstar(complete_graph(3)).graph);
  // fill with random connected graphs on 4..8 vertices
  std::mt19937_64 rng(seed);
  int counter = 0;
  while (static_cast<int>(corpus.size()) < size) {
    std::uniform_int_distribution<int> pick_n(4, 8);
    const int n = pick_n(rng);
    std::vector<std::pair<int, int>> edges;
    // random spanning tree first, then extra edges
    for (int v = 1; v < n; ++v) {
      std::uniform_int_distribution<int> pick_parent(0, v - 1);
      edges.emplace_back(pick_parent(rng), v);
    }
    std::uniform_int_distribution<int> extra(0, n);
    for (int i = extra(rng); i > 0; --i) {
      std::uniform_int_distribution<int> pick_v(0, n - 1);
      int u = pick_v(rng), v = pick_v(rng);
      if (u != v) edges.emplace_back(std::min(u, v), std::max(u, v));
    }
    add("random_" + std::to_string(counter++), build_graph(n, edges));
  }
  return corpus;
}

uint64_t corpus_hash(const std::vector<CorpusEntry>& corpus) {
  std::ostringstream ss;
  for (const auto& entry : corpus) {
    ss << entry.name << '\n';
    write_edge_list(entry.graph, ss);
  }
  return fnv1a(ss.str());
}

}  // namespace locolor
