#include "tamari/binary_tree.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <sstream>
#include <stdexcept>

namespace tamari {

BinaryTree BinaryTree::node(const BinaryTree& left, const BinaryTree& right) {
  const int nl = left.size();
  const int nr = right.size();
  BinaryTree t;
  t.kids_.resize(nl + 1 + nr, {0, 0});
  t.parent_.resize(nl + 1 + nr, 0);

  for (int k = 1; k <= nl; ++k) {
    t.kids_[k - 1] = left.kids_[k - 1];
    t.parent_[k - 1] = left.parent_[k - 1];
  }
  const int root = nl + 1;
  for (int k = 1; k <= nr; ++k) {
    const auto [l, r] = right.kids_[k - 1];
    t.kids_[root + k - 1] = {l == 0 ? 0 : l + root, r == 0 ? 0 : r + root};
    const int p = right.parent_[k - 1];
    t.parent_[root + k - 1] = p == 0 ? 0 : p + root;
  }
  t.kids_[root - 1] = {left.root_, right.root_ == 0 ? 0 : right.root_ + root};
  t.root_ = root;
  if (left.root_ != 0) {
    t.parent_[left.root_ - 1] = root;
  }
  if (right.root_ != 0) {
    t.parent_[right.root_ + root - 1] = root;
  }
  return t;
}

BinaryTree BinaryTree::left_comb(int n) {
  BinaryTree t;
  for (int i = 0; i < n; ++i) {
    t = node(t, BinaryTree());
  }
  return t;
}

BinaryTree BinaryTree::right_comb(int n) {
  BinaryTree t;
  for (int i = 0; i < n; ++i) {
    t = node(BinaryTree(), t);
  }
  return t;
}

int BinaryTree::subtree_first(int k) const {
  while (left_child(k) != 0) {
    k = left_child(k);
  }
  return k;
}

int BinaryTree::subtree_last(int k) const {
  while (right_child(k) != 0) {
    k = right_child(k);
  }
  return k;
}

std::vector<RotationEdge> rotation_edges(const BinaryTree& t) {
  std::vector<RotationEdge> edges;
  for (int l = 1; l <= t.size(); ++l) {
    if (const int k = t.left_child(l); k != 0) {
      edges.push_back({k, l});
    }
  }
  return edges;
}

BinaryTree right_rotate(const BinaryTree& t, RotationEdge e) {
  const int k = e.child;
  const int l = e.parent;
  if (k < 1 || k > t.size() || l < 1 || l > t.size() || t.left_child(l) != k) {
    std::ostringstream out;
    out << "right_rotate: node " << k << " is not the left child of node " << l;
    throw std::invalid_argument(out.str());
  }

  BinaryTree r = t;
  const int b = r.kids_[k - 1][1];  // subtree between k and l
  const int p = r.parent_[l - 1];
  r.kids_[k - 1][1] = l;
  r.kids_[l - 1][0] = b;
  r.parent_[l - 1] = k;
  if (b != 0) {
    r.parent_[b - 1] = l;
  }
  r.parent_[k - 1] = p;
  if (p == 0) {
    r.root_ = k;
  } else if (r.kids_[p - 1][0] == l) {
    r.kids_[p - 1][0] = k;
  } else {
    r.kids_[p - 1][1] = k;
  }
  return r;
}

std::string canopy(const BinaryTree& t) {
  // The leaf between consecutive nodes i and i+1 is either the right child of
  // i or the left child of i+1; inner leaves are exactly these.
  std::string word;
  for (int i = 1; i < t.size(); ++i) {
    word.push_back(t.right_child(i) == 0 ? '1' : '0');
  }
  return word;
}

TamariDiagram to_tamari_diagram(const BinaryTree& t) {
  std::vector<int> u(t.size());
  for (int k = 1; k <= t.size(); ++k) {
    u[k - 1] = t.subtree_last(k) - k;
  }
  return TamariDiagram(std::move(u));
}

DualTamariDiagram to_dual_tamari_diagram(const BinaryTree& t) {
  std::vector<int> v(t.size());
  for (int k = 1; k <= t.size(); ++k) {
    v[k - 1] = k - t.subtree_first(k);
  }
  return DualTamariDiagram(std::move(v));
}

namespace {

// Window [b, e) of a Tamari diagram word: the root is the smallest position p
// whose letter takes the maximal allowed value e-1-p.
BinaryTree build_from_tamari(const std::vector<int>& w, int b, int e) {
  if (b >= e) {
    return BinaryTree();
  }
  int p = b;
  while (w[p] != e - 1 - p) {
    ++p;
  }
  return BinaryTree::node(build_from_tamari(w, b, p), build_from_tamari(w, p + 1, e));
}

// Dual window: the root is the largest position p whose letter reaches p-b.
BinaryTree build_from_dual(const std::vector<int>& w, int b, int e) {
  if (b >= e) {
    return BinaryTree();
  }
  int p = e - 1;
  while (w[p] != p - b) {
    --p;
  }
  return BinaryTree::node(build_from_dual(w, b, p), build_from_dual(w, p + 1, e));
}

}  // namespace

BinaryTree from_tamari_diagram(const TamariDiagram& u) {
  return build_from_tamari(u.word(), 0, u.size());
}

BinaryTree from_dual_tamari_diagram(const DualTamariDiagram& v) {
  return build_from_dual(v.word(), 0, v.size());
}

bool tamari_leq(const BinaryTree& s, const BinaryTree& t) {
  if (s.size() != t.size()) {
    throw std::invalid_argument("tamari_leq: trees have different sizes");
  }
  const auto us = to_tamari_diagram(s).word();
  const auto ut = to_tamari_diagram(t).word();
  for (size_t i = 0; i < us.size(); ++i) {
    if (us[i] > ut[i]) {
      return false;
    }
  }
  return true;
}

bool tamari_leq_by_rotations(const BinaryTree& s, const BinaryTree& t) {
  if (s.size() != t.size()) {
    throw std::invalid_argument("tamari_leq_by_rotations: trees have different sizes");
  }
  std::deque<BinaryTree> queue{s};
  std::map<std::vector<int>, bool> seen;
  seen[to_tamari_diagram(s).word()] = true;
  while (!queue.empty()) {
    BinaryTree cur = queue.front();
    queue.pop_front();
    if (cur == t) {
      return true;
    }
    for (const RotationEdge& e : rotation_edges(cur)) {
      BinaryTree next = right_rotate(cur, e);
      auto key = to_tamari_diagram(next).word();
      if (!seen.contains(key)) {
        seen[key] = true;
        queue.push_back(std::move(next));
      }
    }
  }
  return false;
}

std::vector<BinaryTree> enumerate_trees(int n) {
  if (n < 0) {
    throw std::invalid_argument("enumerate_trees: negative size");
  }
  std::vector<std::vector<BinaryTree>> by_size(n + 1);
  by_size[0] = {BinaryTree()};
  for (int m = 1; m <= n; ++m) {
    for (int nl = 0; nl < m; ++nl) {
      for (const BinaryTree& left : by_size[nl]) {
        for (const BinaryTree& right : by_size[m - 1 - nl]) {
          by_size[m].push_back(BinaryTree::node(left, right));
        }
      }
    }
  }
  return std::move(by_size[n]);
}

TamariLattice::TamariLattice(int n) : n_(n), trees_(enumerate_trees(n)) {
  const int c = count();
  leq_.assign(static_cast<size_t>(c) * c, 0);

  std::map<std::vector<int>, int> index;
  for (int a = 0; a < c; ++a) {
    index[to_tamari_diagram(trees_[a]).word()] = a;
  }

  std::vector<std::vector<int>> step(c);
  for (int a = 0; a < c; ++a) {
    for (const RotationEdge& e : rotation_edges(trees_[a])) {
      step[a].push_back(index.at(to_tamari_diagram(right_rotate(trees_[a], e)).word()));
    }
  }

  for (int a = 0; a < c; ++a) {
    std::deque<int> queue{a};
    leq_[a * c + a] = 1;
    while (!queue.empty()) {
      const int cur = queue.front();
      queue.pop_front();
      for (int next : step[cur]) {
        if (!leq_[a * c + next]) {
          leq_[a * c + next] = 1;
          queue.push_back(next);
        }
      }
    }
  }
}

int TamariLattice::index_of(const BinaryTree& t) const {
  if (t.size() != n_) {
    throw std::invalid_argument("TamariLattice: tree size mismatch");
  }
  for (int a = 0; a < count(); ++a) {
    if (trees_[a] == t) {
      return a;
    }
  }
  throw std::logic_error("TamariLattice: tree not found");
}

int TamariLattice::meet(int a, int b) const {
  int best = -1;
  for (int z = 0; z < count(); ++z) {
    if (leq(z, a) && leq(z, b) && (best == -1 || leq(best, z))) {
      best = z;
    }
  }
  for (int z = 0; z < count(); ++z) {
    if (leq(z, a) && leq(z, b) && !leq(z, best)) {
      throw std::logic_error("TamariLattice::meet: lower bounds have no maximum");
    }
  }
  return best;
}

int TamariLattice::join(int a, int b) const {
  int best = -1;
  for (int z = 0; z < count(); ++z) {
    if (leq(a, z) && leq(b, z) && (best == -1 || leq(z, best))) {
      best = z;
    }
  }
  for (int z = 0; z < count(); ++z) {
    if (leq(a, z) && leq(b, z) && !leq(best, z)) {
      throw std::logic_error("TamariLattice::join: upper bounds have no minimum");
    }
  }
  return best;
}

}  // namespace tamari
