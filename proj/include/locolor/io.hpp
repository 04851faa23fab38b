#pragma once

#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include "locolor/graph.hpp"
#include "locolor/verify.hpp"

namespace locolor {

struct ParseError : std::runtime_error {
  int line;
  ParseError(int line_number, const std::string& message)
      : std::runtime_error("line " + std::to_string(line_number) + ": " + message),
        line(line_number) {}
};

// Edge-list format: header "n m", then m lines "u v" (0-based). Writes are
// canonical: u < v, ascending lexicographic order.
Graph read_edge_list(std::istream& in);
void write_edge_list(const Graph& g, std::ostream& out);

// DIMACS .col: "p edge n m" then "e u v" (1-based); "c" comment lines are
// skipped on read. Canonical writes round-trip bit-exactly.
Graph read_dimacs(std::istream& in);
void write_dimacs(const Graph& g, std::ostream& out);

// Coloring file: header "k <int>", then one "v c" line per vertex
// (0-based vertex, 1-based color).
Coloring read_coloring(std::istream& in, int vertex_count);
void write_coloring(const Coloring& f, std::ostream& out);

// Reads a graph file, choosing the codec by extension (.col = DIMACS).
Graph load_graph(const std::string& path);
void save_graph(const Graph& g, const std::string& path);
Coloring load_coloring(const std::string& path, int vertex_count);
void save_coloring(const Coloring& f, const std::string& path);

uint64_t fnv1a(const std::string& data);

// FNV-1a over the canonical edge-list text.
uint64_t graph_hash(const Graph& g);

struct CorpusEntry {
  std::string name;
  Graph graph;
};

// Deterministic corpus: paths, cycles, stars, complete graphs, the library's
// constructions at small parameters, and random connected graphs on at most
// 8 vertices to fill up to `size` entries.
std::vector<CorpusEntry> corpus_generate(uint64_t seed, int size);

// Combined hash of all corpus entries (order-sensitive).
uint64_t corpus_hash(const std::vector<CorpusEntry>& corpus);

}  // namespace locolor
