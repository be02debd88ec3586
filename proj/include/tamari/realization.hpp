#pragma once

#include <string>
#include <utility>
#include <vector>

#include "tamari/cubic.hpp"

namespace tamari {

// Vertices are the coordinates of one size, sorted; edges are the cover
// pairs as vertex-index pairs, sorted. The graph is acyclic with one source
// (the bottom coordinate) and one sink (the top).
struct RealizationGraph {
  int n = 0;
  std::vector<CubicCoordinate> vertices;
  std::vector<std::pair<int, int>> edges;
};

RealizationGraph build_realization(int n);

std::string to_dot(const RealizationGraph& graph);

}  // namespace tamari
