#include "tamari/tamari_interval.hpp"

#include <algorithm>
#include <stdexcept>

namespace tamari {

TamariInterval::TamariInterval(BinaryTree lower, BinaryTree upper)
    : lower_(std::move(lower)), upper_(std::move(upper)) {
  if (lower_.size() != upper_.size()) {
    throw std::invalid_argument("Tamari interval: trees have different sizes");
  }
  if (!tamari_leq(lower_, upper_)) {
    throw std::invalid_argument("Tamari interval: lower tree is not below upper tree");
  }
}

bool interval_leq(const TamariInterval& a, const TamariInterval& b) {
  return tamari_leq(a.lower(), b.lower()) && tamari_leq(a.upper(), b.upper());
}

TamariInterval rho(const IntervalPoset& p) {
  const TamariIntervalDiagram d = chi_inv(p);
  return TamariInterval(from_tamari_diagram(d.u()), from_dual_tamari_diagram(d.v()));
}

IntervalPoset rho_inv(const TamariInterval& iv) {
  return chi(TamariIntervalDiagram(to_tamari_diagram(iv.lower()),
                                   to_dual_tamari_diagram(iv.upper())));
}

std::vector<TamariInterval> interval_covers(const TamariInterval& iv) {
  std::vector<TamariInterval> out;
  for (const RotationEdge& e : rotation_edges(iv.lower())) {
    BinaryTree rotated = right_rotate(iv.lower(), e);
    if (tamari_leq(rotated, iv.upper())) {
      out.emplace_back(std::move(rotated), iv.upper());
    }
  }
  for (const RotationEdge& e : rotation_edges(iv.upper())) {
    out.emplace_back(iv.lower(), right_rotate(iv.upper(), e));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<TamariInterval> enumerate_intervals(int n) {
  const std::vector<BinaryTree> trees = enumerate_trees(n);
  std::vector<TamariInterval> out;
  for (const BinaryTree& s : trees) {
    for (const BinaryTree& t : trees) {
      if (tamari_leq(s, t)) {
        out.emplace_back(s, t);
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace tamari
