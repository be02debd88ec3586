#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "tamari/diagrams.hpp"

namespace tamari {

// A partial order on symbols x_1 .. x_n satisfying the two span properties:
//   (i)  i < k and x_k < x_i   imply  x_j < x_i  for all i < j < k;
//   (ii) i < k and x_i < x_k   imply  x_j < x_k  for all i < j < k.
// Relations x_j < x_i with i < j are decreasing, x_i < x_j increasing. The
// full relation set is stored, reflexive pairs included.

struct PosetViolation {
  enum class Kind {
    Reflexivity,
    Antisymmetry,
    Transitivity,
    SpanDecreasing,  // property (i), witness (i, j, k)
    SpanIncreasing,  // property (ii), witness (i, j, k)
  };
  Kind kind = Kind::Reflexivity;
  int i = 0;
  int j = 0;
  int k = 0;

  std::string describe() const;
  bool operator==(const PosetViolation&) const = default;
};

// rel is an n*n row-major matrix, rel[(a-1)*n + (b-1)] nonzero meaning
// x_a < x_b. Axioms are checked in the order reflexivity, antisymmetry,
// transitivity, property (i), property (ii).
std::optional<PosetViolation> scan_relation_matrix(int n, std::span<const std::uint8_t> rel);

class IntervalPoset {
 public:
  IntervalPoset() = default;  // size 0

  // Validates the given relation set as-is; reflexive pairs must be present.
  // Pairs are (a, b) meaning x_a < x_b. Throws std::invalid_argument.
  static IntervalPoset from_relations(int n, const std::vector<std::pair<int, int>>& relations);

  // Accepts a minimalist arc list and closes it under reflexivity,
  // transitivity and the two span properties before validating.
  static IntervalPoset closed_from_arcs(int n, const std::vector<std::pair<int, int>>& arcs);

  int size() const { return n_; }
  bool related(int a, int b) const { return rel_[(a - 1) * n_ + (b - 1)] != 0; }

  // Non-reflexive relations as (source, goal) pairs, sorted.
  std::vector<std::pair<int, int>> decreasing_relations() const;  // source > goal
  std::vector<std::pair<int, int>> increasing_relations() const;  // source < goal

  int decreasing_count(int i) const;  // #{j > i : x_j < x_i}
  int increasing_count(int j) const;  // #{i < j : x_i < x_j}

  bool operator==(const IntervalPoset&) const = default;

 private:
  IntervalPoset(int n, std::vector<std::uint8_t> rel) : n_(n), rel_(std::move(rel)) {}

  int n_ = 0;
  std::vector<std::uint8_t> rel_;
};

// The relation generated by the diagram letters: x_{i+l} < x_i for
// l in [0, u_i] and x_{i-k} < x_i for k in [0, v_i].
IntervalPoset chi(const TamariIntervalDiagram& d);

// u_i counts decreasing relations of goal x_i, v_j increasing ones of goal
// x_j; inverse of chi.
TamariIntervalDiagram chi_inv(const IntervalPoset& p);

}  // namespace tamari
