#pragma once

#include <vector>

#include "tamari/binary_tree.hpp"
#include "tamari/interval_poset.hpp"

namespace tamari {

// A pair of comparable binary trees of the same size.
class TamariInterval {
 public:
  TamariInterval() = default;
  TamariInterval(BinaryTree lower, BinaryTree upper);  // throws unless lower <= upper

  const BinaryTree& lower() const { return lower_; }
  const BinaryTree& upper() const { return upper_; }
  int size() const { return lower_.size(); }

  auto operator<=>(const TamariInterval&) const = default;

 private:
  BinaryTree lower_;
  BinaryTree upper_;
};

// Componentwise order on intervals.
bool interval_leq(const TamariInterval& a, const TamariInterval& b);

// Lower tree from the decreasing relations, upper tree from the increasing
// ones, through the diagram codecs.
TamariInterval rho(const IntervalPoset& p);
IntervalPoset rho_inv(const TamariInterval& iv);

// Covers in the interval lattice: rotate the lower tree (keeping the pair an
// interval) or rotate the upper tree.
std::vector<TamariInterval> interval_covers(const TamariInterval& iv);

std::vector<TamariInterval> enumerate_intervals(int n);

}  // namespace tamari
