#pragma once

#include <string>

#include <json.hpp>

#include "tamari/binary_tree.hpp"
#include "tamari/cells.hpp"
#include "tamari/cubic.hpp"
#include "tamari/diagrams.hpp"
#include "tamari/interval_poset.hpp"
#include "tamari/realization.hpp"
#include "tamari/shelling.hpp"
#include "tamari/tamari_interval.hpp"

namespace tamari {

// Text forms. Trees are balanced-parenthesis words: a leaf is empty, an
// internal node is "(" + left + ")" + right. Diagram words are comma-joined
// (letters may exceed 9), a diagram pair joins the two lists with one space,
// and coordinates are "(c1,c2,...)" with signs.
std::string tree_to_parens(const BinaryTree& t);
BinaryTree tree_from_parens(const std::string& text);  // throws std::invalid_argument

std::string tid_to_text(const TamariIntervalDiagram& d);
TamariIntervalDiagram tid_from_text(const std::string& text);

std::string cc_to_text(const CubicCoordinate& c);
CubicCoordinate cc_from_text(const std::string& text);

std::string interval_to_text(const TamariInterval& iv);  // two parens words
TamariInterval interval_from_text(const std::string& text);

// JSON forms. Trees are nested arrays [left, right] with null for a leaf;
// diagram pairs are {"u": [...], "v": [...]}; interval-posets are
// {"n": n, "decreasing": [[source, goal], ...], "increasing": [...]} with
// reflexive pairs omitted on the wire; coordinates are arrays of integers.
nlohmann::json tree_to_json(const BinaryTree& t);
BinaryTree tree_from_json(const nlohmann::json& j);

nlohmann::json tid_to_json(const TamariIntervalDiagram& d);
TamariIntervalDiagram tid_from_json(const nlohmann::json& j);

nlohmann::json poset_to_json(const IntervalPoset& p);
IntervalPoset poset_from_json(const nlohmann::json& j);

nlohmann::json cc_to_json(const CubicCoordinate& c);
CubicCoordinate cc_from_json(const nlohmann::json& j);

nlohmann::json interval_to_json(const TamariInterval& iv);
TamariInterval interval_from_json(const nlohmann::json& j);

nlohmann::json cell_to_json(const Cell& cell);  // includes gamma and volume

nlohmann::json realization_to_json(const RealizationGraph& graph);

std::string chain_to_text(const SaturatedChain& chain);

}  // namespace tamari
