#include <doctest.h>

#include <algorithm>
#include <set>

#include "oracles.hpp"
#include "tamari/binary_tree.hpp"

using namespace tamari;

namespace {

BinaryTree leaf() { return BinaryTree(); }

// A size-8 tree with diagram 10040210: root 4, left part 3(1(., 2), .),
// right part 6(5, 7(., 8)).
BinaryTree sample_size8_tree() {
  const BinaryTree n1 = BinaryTree::node(leaf(), BinaryTree::node(leaf(), leaf()));
  const BinaryTree n3 = BinaryTree::node(n1, leaf());
  const BinaryTree n7 = BinaryTree::node(leaf(), BinaryTree::node(leaf(), leaf()));
  const BinaryTree n6 = BinaryTree::node(BinaryTree::node(leaf(), leaf()), n7);
  return BinaryTree::node(n3, n6);
}

// Size 5: 1(., 4(2(., 3), 5)).
BinaryTree sample_upper_tree() {
  const BinaryTree n2 = BinaryTree::node(leaf(), BinaryTree::node(leaf(), leaf()));
  const BinaryTree n4 = BinaryTree::node(n2, BinaryTree::node(leaf(), leaf()));
  return BinaryTree::node(leaf(), n4);
}

const std::vector<std::vector<int>> kSize4Diagrams = {
    {0, 0, 0, 0}, {0, 0, 1, 0}, {0, 1, 0, 0}, {0, 2, 0, 0}, {0, 2, 1, 0},
    {1, 0, 0, 0}, {1, 0, 1, 0}, {2, 0, 0, 0}, {2, 1, 0, 0}, {3, 0, 0, 0},
    {3, 0, 1, 0}, {3, 1, 0, 0}, {3, 2, 0, 0}, {3, 2, 1, 0}};

}  // namespace

TEST_CASE("infix numbering and structure") {
  const BinaryTree t = sample_size8_tree();
  CHECK(t.size() == 8);
  CHECK(t.root() == 4);
  CHECK(t.left_child(4) == 3);
  CHECK(t.right_child(4) == 6);
  CHECK(t.left_child(3) == 1);
  CHECK(t.right_child(1) == 2);
  CHECK(t.parent(6) == 4);
  CHECK(t.subtree_first(6) == 5);
  CHECK(t.subtree_last(6) == 8);
}

TEST_CASE("tree to diagram") {
  CHECK(to_tamari_diagram(BinaryTree::node(leaf(), leaf())).word() == std::vector<int>{0});
  CHECK(to_tamari_diagram(sample_size8_tree()).word() == std::vector<int>{1, 0, 0, 4, 0, 2, 1, 0});
  CHECK(to_tamari_diagram(BinaryTree::left_comb(3)).word() == std::vector<int>{0, 0, 0});
  CHECK(to_tamari_diagram(BinaryTree::right_comb(4)).word() == std::vector<int>{3, 2, 1, 0});
}

TEST_CASE("tree to dual diagram") {
  CHECK(to_dual_tamari_diagram(BinaryTree::node(leaf(), leaf())).word() == std::vector<int>{0});
  CHECK(to_dual_tamari_diagram(sample_upper_tree()).word() == std::vector<int>{0, 0, 0, 2, 0});
  CHECK(to_dual_tamari_diagram(BinaryTree::left_comb(3)).word() == std::vector<int>{0, 1, 2});
}

TEST_CASE("diagram to tree") {
  CHECK(from_tamari_diagram(TamariDiagram({0})) == BinaryTree::node(leaf(), leaf()));
  CHECK(from_tamari_diagram(TamariDiagram({3, 2, 1, 0})) == BinaryTree::right_comb(4));
  CHECK(from_dual_tamari_diagram(DualTamariDiagram({0})) == BinaryTree::node(leaf(), leaf()));
  CHECK(from_dual_tamari_diagram(DualTamariDiagram({0, 0, 0, 2, 0})) == sample_upper_tree());
}

TEST_CASE("the fourteen diagrams of size 4") {
  std::set<std::vector<int>> seen;
  for (const BinaryTree& t : enumerate_trees(4)) {
    seen.insert(to_tamari_diagram(t).word());
  }
  const std::set<std::vector<int>> expected(kSize4Diagrams.begin(), kSize4Diagrams.end());
  CHECK(seen == expected);
}

TEST_CASE("diagram round trips") {
  for (int n = 0; n <= 6; ++n) {
    for (const BinaryTree& t : enumerate_trees(n)) {
      CHECK(from_tamari_diagram(to_tamari_diagram(t)) == t);
      CHECK(from_dual_tamari_diagram(to_dual_tamari_diagram(t)) == t);
      std::vector<int> reversed = to_dual_tamari_diagram(t).word();
      std::reverse(reversed.begin(), reversed.end());
      CHECK(!scan_tamari_word(reversed).has_value());
    }
  }
}

TEST_CASE("right rotation") {
  const BinaryTree left2 = BinaryTree::left_comb(2);
  CHECK(to_tamari_diagram(left2).word() == std::vector<int>{0, 0});
  const BinaryTree rotated = right_rotate(left2, {1, 2});
  CHECK(to_tamari_diagram(rotated).word() == std::vector<int>{1, 0});
  CHECK(rotated == BinaryTree::right_comb(2));

  CHECK(to_tamari_diagram(right_rotate(BinaryTree::left_comb(3), {2, 3})).word() ==
        std::vector<int>{0, 1, 0});

  CHECK_THROWS_AS(right_rotate(left2, {2, 1}), std::invalid_argument);
  CHECK_THROWS_AS(right_rotate(BinaryTree::right_comb(2), {1, 2}), std::invalid_argument);
}

TEST_CASE("rotation preserves infix labels and goes up in the order") {
  for (const BinaryTree& t : enumerate_trees(4)) {
    for (const RotationEdge& e : rotation_edges(t)) {
      const BinaryTree r = right_rotate(t, e);
      CHECK(r.size() == t.size());
      CHECK(r != t);
      CHECK(tamari_leq(t, r));
      // Infix positions keep their subtree contiguity on both sides.
      for (int k = 1; k <= r.size(); ++k) {
        CHECK(r.subtree_first(k) <= k);
        CHECK(r.subtree_last(k) >= k);
      }
    }
  }
}

TEST_CASE("canopy") {
  CHECK(canopy(BinaryTree::node(leaf(), leaf())).empty());
  CHECK(canopy(sample_size8_tree()) == "0110100");
  CHECK(canopy(BinaryTree::left_comb(4)) == "111");
  CHECK(canopy(BinaryTree::right_comb(4)) == "000");
}

TEST_CASE("order agrees with the rotation closure") {
  CHECK(tamari_leq(BinaryTree::left_comb(3), BinaryTree::right_comb(3)));
  CHECK_THROWS_AS(tamari_leq(BinaryTree::left_comb(2), BinaryTree::left_comb(3)),
                  std::invalid_argument);

  CHECK(tamari_leq_by_rotations(BinaryTree::left_comb(3), BinaryTree::right_comb(3)));
  CHECK(!tamari_leq_by_rotations(BinaryTree::right_comb(3), BinaryTree::left_comb(3)));

  for (int n = 1; n <= 5; ++n) {
    const TamariLattice lattice(n);
    const auto& trees = lattice.trees();
    for (int a = 0; a < lattice.count(); ++a) {
      for (int b = 0; b < lattice.count(); ++b) {
        CHECK(tamari_leq(trees[a], trees[b]) == lattice.leq(a, b));
      }
    }
  }
  for (const BinaryTree& s : enumerate_trees(3)) {
    for (const BinaryTree& t : enumerate_trees(3)) {
      CHECK(tamari_leq(s, t) == tamari_leq_by_rotations(s, t));
    }
  }
}

TEST_CASE("order axioms on the enumeration") {
  for (int n = 1; n <= 5; ++n) {
    const std::vector<BinaryTree> trees = enumerate_trees(n);
    for (const BinaryTree& a : trees) {
      CHECK(tamari_leq(a, a));
    }
    for (size_t i = 0; i < trees.size(); ++i) {
      for (size_t j = 0; j < trees.size(); ++j) {
        if (i != j && tamari_leq(trees[i], trees[j])) {
          CHECK(!tamari_leq(trees[j], trees[i]));
        }
        for (size_t k = 0; k < trees.size(); ++k) {
          if (tamari_leq(trees[i], trees[j]) && tamari_leq(trees[j], trees[k])) {
            CHECK(tamari_leq(trees[i], trees[k]));
          }
        }
      }
    }
  }
}

TEST_CASE("covers of the order are exactly single rotations") {
  for (int n = 1; n <= 5; ++n) {
    const TamariLattice lattice(n);
    std::set<std::pair<int, int>> rotation_pairs;
    for (int a = 0; a < lattice.count(); ++a) {
      for (const RotationEdge& e : rotation_edges(lattice.tree(a))) {
        rotation_pairs.emplace(a, lattice.index_of(right_rotate(lattice.tree(a), e)));
      }
    }
    std::set<std::pair<int, int>> cover_pairs;
    for (int a = 0; a < lattice.count(); ++a) {
      for (int b = 0; b < lattice.count(); ++b) {
        if (a == b || !lattice.leq(a, b)) {
          continue;
        }
        bool strict_middle = false;
        for (int z = 0; z < lattice.count() && !strict_middle; ++z) {
          strict_middle = z != a && z != b && lattice.leq(a, z) && lattice.leq(z, b);
        }
        if (!strict_middle) {
          cover_pairs.emplace(a, b);
        }
      }
    }
    CHECK(rotation_pairs == cover_pairs);
  }
}

TEST_CASE("enumeration counts") {
  CHECK(enumerate_trees(0).size() == 1);
  for (int n = 1; n <= 6; ++n) {
    CHECK(static_cast<long long>(enumerate_trees(n).size()) == oracles::catalan(n));
  }
  // Deterministic order and no duplicates.
  const auto once = enumerate_trees(5);
  const auto twice = enumerate_trees(5);
  CHECK(once == twice);
  std::set<BinaryTree> distinct(once.begin(), once.end());
  CHECK(distinct.size() == once.size());
}

TEST_CASE("tree lattice meet and join") {
  const TamariLattice lattice(3);
  const int bottom = lattice.index_of(BinaryTree::left_comb(3));
  const int top = lattice.index_of(BinaryTree::right_comb(3));
  CHECK(lattice.meet(bottom, top) == bottom);
  CHECK(lattice.join(bottom, top) == top);
  for (int a = 0; a < lattice.count(); ++a) {
    CHECK(lattice.meet(a, a) == a);
    CHECK(lattice.join(a, a) == a);
  }
}
