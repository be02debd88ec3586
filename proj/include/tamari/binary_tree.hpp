#pragma once

#include <array>
#include <compare>
#include <string>
#include <vector>

#include "tamari/diagrams.hpp"

namespace tamari {

// Planar complete rooted binary tree. Internal nodes are numbered 1..n in
// infix order (left subtree, node, right subtree); 0 stands for a leaf.
// Because the numbering is infix, every subtree occupies a contiguous index
// range and rotations never renumber nodes.
class BinaryTree {
 public:
  BinaryTree() = default;  // the empty tree, a single leaf

  static BinaryTree node(const BinaryTree& left, const BinaryTree& right);
  static BinaryTree left_comb(int n);   // every internal child is a left child
  static BinaryTree right_comb(int n);  // every internal child is a right child

  int size() const { return static_cast<int>(kids_.size()); }
  bool is_leaf() const { return kids_.empty(); }
  int root() const { return root_; }

  int left_child(int k) const { return kids_[k - 1][0]; }
  int right_child(int k) const { return kids_[k - 1][1]; }
  int parent(int k) const { return parent_[k - 1]; }

  // Infix span [first, last] of the subtree rooted at node k.
  int subtree_first(int k) const;
  int subtree_last(int k) const;

  auto operator<=>(const BinaryTree&) const = default;

 private:
  friend BinaryTree right_rotate(const BinaryTree& t, struct RotationEdge e);

  std::vector<std::array<int, 2>> kids_;  // kids_[k-1] = {left, right}
  std::vector<int> parent_;               // parent_[k-1], 0 for the root
  int root_ = 0;
};

// Edge (child, parent) where node `child` is the left child of node `parent`.
struct RotationEdge {
  int child = 0;
  int parent = 0;
  bool operator==(const RotationEdge&) const = default;
};

// All edges of t eligible for a right rotation, sorted by child index.
std::vector<RotationEdge> rotation_edges(const BinaryTree& t);

// Right rotation: ((A,B),C) under `parent` becomes (A,(B,C)) under `child`.
// Infix labels are unchanged. Throws std::invalid_argument on a bad edge.
BinaryTree right_rotate(const BinaryTree& t, RotationEdge e);

// Leaf orientations left->'0', right->'1' in infix order, first and last
// dropped; a word of length n-1.
std::string canopy(const BinaryTree& t);

TamariDiagram to_tamari_diagram(const BinaryTree& t);            // u[i] = right subtree size
BinaryTree from_tamari_diagram(const TamariDiagram& u);
DualTamariDiagram to_dual_tamari_diagram(const BinaryTree& t);   // v[i] = left subtree size
BinaryTree from_dual_tamari_diagram(const DualTamariDiagram& v);

// Tamari order: s precedes t when t is reachable from s by right rotations.
// Decided by componentwise comparison of Tamari diagrams; validated against
// the rotation closure below. Throws on size mismatch.
bool tamari_leq(const BinaryTree& s, const BinaryTree& t);

// Reference implementation straight from the definition: breadth-first
// closure of single right rotations.
bool tamari_leq_by_rotations(const BinaryTree& s, const BinaryTree& t);

// All Catalan(n) trees of size n, deterministic order (left subtree size
// ascending, then recursively).
std::vector<BinaryTree> enumerate_trees(int n);

// The rotation order on all trees of one size, with meet and join. The order
// is built by breadth-first closure of single rotations, independently of the
// diagram comparison above.
class TamariLattice {
 public:
  explicit TamariLattice(int n);

  int n() const { return n_; }
  int count() const { return static_cast<int>(trees_.size()); }
  const std::vector<BinaryTree>& trees() const { return trees_; }
  const BinaryTree& tree(int a) const { return trees_[a]; }

  int index_of(const BinaryTree& t) const;  // throws on size mismatch
  bool leq(int a, int b) const { return leq_[a * count() + b] != 0; }

  int meet(int a, int b) const;
  int join(int a, int b) const;

 private:
  int n_ = 0;
  std::vector<BinaryTree> trees_;
  std::vector<std::uint8_t> leq_;
};

}  // namespace tamari
