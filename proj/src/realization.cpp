#include "tamari/realization.hpp"

#include <algorithm>
#include <sstream>

#include "tamari/serialization.hpp"
#include "tamari/shelling.hpp"

namespace tamari {

RealizationGraph build_realization(int n) {
  const CoverDag dag(n);
  RealizationGraph graph;
  graph.n = n;
  graph.vertices = dag.coordinates();
  for (int id = 0; id < dag.count(); ++id) {
    for (int up : dag.covers_of(id)) {
      graph.edges.emplace_back(id, up);
    }
  }
  std::sort(graph.edges.begin(), graph.edges.end());
  return graph;
}

std::string to_dot(const RealizationGraph& graph) {
  std::ostringstream out;
  out << "digraph realization {\n";
  out << "  rankdir=BT;\n";
  for (size_t id = 0; id < graph.vertices.size(); ++id) {
    out << "  v" << id << " [label=\"" << cc_to_text(graph.vertices[id]) << "\"];\n";
  }
  for (const auto& [from, to] : graph.edges) {
    out << "  v" << from << " -> v" << to << ";\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace tamari
