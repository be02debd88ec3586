#include "tamari/serialization.hpp"

#include <sstream>
#include <stdexcept>

namespace tamari {

namespace {

std::vector<int> ints_from_csv(const std::string& text) {
  std::vector<int> out;
  if (text.empty()) {
    return out;
  }
  std::istringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    size_t used = 0;
    int value = std::stoi(item, &used);
    if (used != item.size()) {
      throw std::invalid_argument("bad integer list: '" + text + "'");
    }
    out.push_back(value);
  }
  return out;
}

std::string csv_from_ints(const std::vector<int>& values) {
  std::ostringstream out;
  for (size_t i = 0; i < values.size(); ++i) {
    if (i) {
      out << ',';
    }
    out << values[i];
  }
  return out.str();
}

}  // namespace

std::string tree_to_parens(const BinaryTree& t) {
  // Iterative over infix structure: word(node) = "(" word(L) ")" word(R).
  std::string out;
  const auto emit = [&](auto&& self, int k) -> void {
    if (k == 0) {
      return;
    }
    out.push_back('(');
    self(self, t.left_child(k));
    out.push_back(')');
    self(self, t.right_child(k));
  };
  emit(emit, t.root());
  return out;
}

BinaryTree tree_from_parens(const std::string& text) {
  size_t pos = 0;
  const auto parse = [&](auto&& self) -> BinaryTree {
    if (pos >= text.size() || text[pos] != '(') {
      return BinaryTree();
    }
    ++pos;
    BinaryTree left = self(self);
    if (pos >= text.size() || text[pos] != ')') {
      throw std::invalid_argument("unbalanced parentheses in tree: '" + text + "'");
    }
    ++pos;
    BinaryTree right = self(self);
    return BinaryTree::node(left, right);
  };
  BinaryTree t = parse(parse);
  if (pos != text.size()) {
    throw std::invalid_argument("trailing characters in tree: '" + text + "'");
  }
  return t;
}

std::string tid_to_text(const TamariIntervalDiagram& d) {
  return csv_from_ints(d.u().word()) + " " + csv_from_ints(d.v().word());
}

TamariIntervalDiagram tid_from_text(const std::string& text) {
  const size_t split = text.find(' ');
  if (split == std::string::npos) {
    throw std::invalid_argument("diagram pair needs two space-separated words");
  }
  return TamariIntervalDiagram(TamariDiagram(ints_from_csv(text.substr(0, split))),
                               DualTamariDiagram(ints_from_csv(text.substr(split + 1))));
}

std::string cc_to_text(const CubicCoordinate& c) {
  return "(" + csv_from_ints(c.components()) + ")";
}

CubicCoordinate cc_from_text(const std::string& text) {
  std::string body;
  for (char ch : text) {
    if (!isspace(static_cast<unsigned char>(ch))) {
      body.push_back(ch);
    }
  }
  if (body.size() < 2 || body.front() != '(' || body.back() != ')') {
    throw std::invalid_argument("coordinate must look like (c1,c2,...): '" + text + "'");
  }
  return CubicCoordinate(ints_from_csv(body.substr(1, body.size() - 2)));
}

std::string interval_to_text(const TamariInterval& iv) {
  return tree_to_parens(iv.lower()) + " " + tree_to_parens(iv.upper());
}

TamariInterval interval_from_text(const std::string& text) {
  const size_t split = text.find(' ');
  if (split == std::string::npos) {
    throw std::invalid_argument("tree pair needs two space-separated words");
  }
  return TamariInterval(tree_from_parens(text.substr(0, split)),
                        tree_from_parens(text.substr(split + 1)));
}

nlohmann::json tree_to_json(const BinaryTree& t) {
  const auto emit = [&](auto&& self, int k) -> nlohmann::json {
    if (k == 0) {
      return nullptr;
    }
    return nlohmann::json::array({self(self, t.left_child(k)), self(self, t.right_child(k))});
  };
  return emit(emit, t.root());
}

BinaryTree tree_from_json(const nlohmann::json& j) {
  if (j.is_null()) {
    return BinaryTree();
  }
  if (!j.is_array() || j.size() != 2) {
    throw std::invalid_argument("tree JSON must be null or [left, right]");
  }
  return BinaryTree::node(tree_from_json(j[0]), tree_from_json(j[1]));
}

nlohmann::json tid_to_json(const TamariIntervalDiagram& d) {
  return {{"u", d.u().word()}, {"v", d.v().word()}};
}

TamariIntervalDiagram tid_from_json(const nlohmann::json& j) {
  return TamariIntervalDiagram(TamariDiagram(j.at("u").get<std::vector<int>>()),
                               DualTamariDiagram(j.at("v").get<std::vector<int>>()));
}

nlohmann::json poset_to_json(const IntervalPoset& p) {
  nlohmann::json j;
  j["n"] = p.size();
  j["decreasing"] = nlohmann::json::array();
  for (const auto& [src, goal] : p.decreasing_relations()) {
    j["decreasing"].push_back({src, goal});
  }
  j["increasing"] = nlohmann::json::array();
  for (const auto& [src, goal] : p.increasing_relations()) {
    j["increasing"].push_back({src, goal});
  }
  return j;
}

IntervalPoset poset_from_json(const nlohmann::json& j) {
  const int n = j.at("n").get<int>();
  std::vector<std::pair<int, int>> arcs;
  for (const auto& pair : j.at("decreasing")) {
    arcs.emplace_back(pair.at(0).get<int>(), pair.at(1).get<int>());
  }
  for (const auto& pair : j.at("increasing")) {
    arcs.emplace_back(pair.at(0).get<int>(), pair.at(1).get<int>());
  }
  // Reflexive pairs are restored (and minimalist inputs closed) on load.
  return IntervalPoset::closed_from_arcs(n, arcs);
}

nlohmann::json cc_to_json(const CubicCoordinate& c) { return c.components(); }

CubicCoordinate cc_from_json(const nlohmann::json& j) {
  return CubicCoordinate(j.get<std::vector<int>>());
}

nlohmann::json interval_to_json(const TamariInterval& iv) {
  return {{"lower", tree_to_json(iv.lower())}, {"upper", tree_to_json(iv.upper())}};
}

TamariInterval interval_from_json(const nlohmann::json& j) {
  return TamariInterval(tree_from_json(j.at("lower")), tree_from_json(j.at("upper")));
}

nlohmann::json cell_to_json(const Cell& cell) {
  return {{"min", cell.min.components()},
          {"max", cell.max.components()},
          {"gamma", gamma(cell).components()},
          {"volume", cell_volume(cell)}};
}

nlohmann::json realization_to_json(const RealizationGraph& graph) {
  nlohmann::json j;
  j["n"] = graph.n;
  j["vertices"] = nlohmann::json::array();
  for (const CubicCoordinate& c : graph.vertices) {
    j["vertices"].push_back(c.components());
  }
  j["edges"] = nlohmann::json::array();
  for (const auto& [from, to] : graph.edges) {
    j["edges"].push_back({from, to});
  }
  return j;
}

std::string chain_to_text(const SaturatedChain& chain) {
  std::ostringstream out;
  for (size_t i = 0; i < chain.elements.size(); ++i) {
    if (i) {
      out << " ";
    }
    out << cc_to_text(chain.elements[i]);
  }
  out << " labels";
  for (const EdgeLabel& label : chain.labels) {
    out << " " << label.to_string();
  }
  return out.str();
}

}  // namespace tamari
