#pragma once

#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "locolor/graph.hpp"

namespace locolor {

// Total color assignment, colors 1..k. Empty classes are tolerated by the
// neighbor-locating checker and rejected by the locating checker.
struct Coloring {
  std::vector<int> assignment;  // vertex -> color in 1..k
  int palette_size = 0;

  int color(int v) const { return assignment[v]; }
};

// Validates coverage and range; throws on palette mismatch.
void validate_coloring(const Graph& g, const Coloring& f);

enum class CheckStatus { Ok, MonochromaticEdge, SignatureClash };

struct CheckReport {
  CheckStatus status = CheckStatus::Ok;
  int u = -1;  // witness pair (or edge), lexicographically smallest
  int v = -1;

  bool ok() const { return status == CheckStatus::Ok; }
};

CheckReport check_proper(const Graph& g, const Coloring& f);

struct NlSignature {
  int own_color = 0;
  std::set<int> neighbor_colors;

  friend bool operator==(const NlSignature&, const NlSignature&) = default;
  friend auto operator<=>(const NlSignature&, const NlSignature&) = default;
};

NlSignature nl_signature(const Graph& g, const Coloring& f, int v);

// Proper + all same-colored pairs have distinct neighbor-color sets.
CheckReport check_nl(const Graph& g, const Coloring& f);

struct LocatingSignature {
  std::vector<Dist> distances;  // d(v, S_i), i = 1..k

  friend bool operator==(const LocatingSignature&, const LocatingSignature&) = default;
};

// Requires proper coloring with all classes nonempty.
LocatingSignature locating_signature(const Graph& g, const Coloring& f, int v);

// Proper + all same-colored pairs have distinct class-distance vectors.
// Disconnected inputs are rejected unless allow_disconnected is set, in
// which case unreachable distances compare equal to each other.
CheckReport check_locating(const Graph& g, const Coloring& f,
                           bool allow_disconnected = false);

std::vector<std::vector<int>> color_classes(const Graph& g, const Coloring& f);

}  // namespace locolor
