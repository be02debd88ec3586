#include "tamari/interval_poset.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace tamari {

std::string PosetViolation::describe() const {
  std::ostringstream out;
  switch (kind) {
    case Kind::Reflexivity:
      out << "not reflexive at x" << i;
      break;
    case Kind::Antisymmetry:
      out << "not antisymmetric: x" << i << " and x" << j << " related both ways";
      break;
    case Kind::Transitivity:
      out << "not transitive at (x" << i << ", x" << j << ", x" << k << ")";
      break;
    case Kind::SpanDecreasing:
      out << "interval-poset property (i) fails at (" << i << ", " << j << ", " << k << ")";
      break;
    case Kind::SpanIncreasing:
      out << "interval-poset property (ii) fails at (" << i << ", " << j << ", " << k << ")";
      break;
  }
  return out.str();
}

std::optional<PosetViolation> scan_relation_matrix(int n, std::span<const std::uint8_t> rel) {
  const auto at = [&](int a, int b) { return rel[(a - 1) * n + (b - 1)] != 0; };

  for (int a = 1; a <= n; ++a) {
    if (!at(a, a)) {
      return PosetViolation{PosetViolation::Kind::Reflexivity, a, 0, 0};
    }
  }
  for (int a = 1; a <= n; ++a) {
    for (int b = a + 1; b <= n; ++b) {
      if (at(a, b) && at(b, a)) {
        return PosetViolation{PosetViolation::Kind::Antisymmetry, a, b, 0};
      }
    }
  }
  for (int a = 1; a <= n; ++a) {
    for (int b = 1; b <= n; ++b) {
      if (a == b || !at(a, b)) {
        continue;
      }
      for (int c = 1; c <= n; ++c) {
        if (c != b && at(b, c) && !at(a, c)) {
          return PosetViolation{PosetViolation::Kind::Transitivity, a, b, c};
        }
      }
    }
  }
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) {
      for (int k = j + 1; k <= n; ++k) {
        if (at(k, i) && !at(j, i)) {
          return PosetViolation{PosetViolation::Kind::SpanDecreasing, i, j, k};
        }
      }
    }
  }
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) {
      for (int k = j + 1; k <= n; ++k) {
        if (at(i, k) && !at(j, k)) {
          return PosetViolation{PosetViolation::Kind::SpanIncreasing, i, j, k};
        }
      }
    }
  }
  return std::nullopt;
}

namespace {

std::vector<std::uint8_t> matrix_from_pairs(int n, const std::vector<std::pair<int, int>>& pairs) {
  if (n < 0) {
    throw std::invalid_argument("interval-poset: negative size");
  }
  std::vector<std::uint8_t> rel(static_cast<size_t>(n) * n, 0);
  for (const auto& [a, b] : pairs) {
    if (a < 1 || a > n || b < 1 || b > n) {
      std::ostringstream out;
      out << "interval-poset: relation (" << a << ", " << b << ") out of range for size " << n;
      throw std::invalid_argument(out.str());
    }
    rel[(a - 1) * n + (b - 1)] = 1;
  }
  return rel;
}

void close_matrix(int n, std::vector<std::uint8_t>& rel) {
  const auto at = [&](int a, int b) -> std::uint8_t& { return rel[(a - 1) * n + (b - 1)]; };
  for (int a = 1; a <= n; ++a) {
    at(a, a) = 1;
  }
  bool changed = true;
  while (changed) {
    changed = false;
    // Span closures.
    for (int i = 1; i <= n; ++i) {
      for (int k = i + 1; k <= n; ++k) {
        if (at(k, i)) {
          for (int j = i + 1; j < k; ++j) {
            if (!at(j, i)) {
              at(j, i) = 1;
              changed = true;
            }
          }
        }
        if (at(i, k)) {
          for (int j = i + 1; j < k; ++j) {
            if (!at(j, k)) {
              at(j, k) = 1;
              changed = true;
            }
          }
        }
      }
    }
    // Transitive closure.
    for (int b = 1; b <= n; ++b) {
      for (int a = 1; a <= n; ++a) {
        if (!at(a, b)) {
          continue;
        }
        for (int c = 1; c <= n; ++c) {
          if (at(b, c) && !at(a, c)) {
            at(a, c) = 1;
            changed = true;
          }
        }
      }
    }
  }
}

}  // namespace

IntervalPoset IntervalPoset::from_relations(int n,
                                            const std::vector<std::pair<int, int>>& relations) {
  std::vector<std::uint8_t> rel = matrix_from_pairs(n, relations);
  if (auto bad = scan_relation_matrix(n, rel)) {
    throw std::invalid_argument(bad->describe());
  }
  return IntervalPoset(n, std::move(rel));
}

IntervalPoset IntervalPoset::closed_from_arcs(int n,
                                              const std::vector<std::pair<int, int>>& arcs) {
  std::vector<std::uint8_t> rel = matrix_from_pairs(n, arcs);
  close_matrix(n, rel);
  if (auto bad = scan_relation_matrix(n, rel)) {
    throw std::invalid_argument(bad->describe());
  }
  return IntervalPoset(n, std::move(rel));
}

std::vector<std::pair<int, int>> IntervalPoset::decreasing_relations() const {
  std::vector<std::pair<int, int>> out;
  for (int goal = 1; goal <= n_; ++goal) {
    for (int src = goal + 1; src <= n_; ++src) {
      if (related(src, goal)) {
        out.emplace_back(src, goal);
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::pair<int, int>> IntervalPoset::increasing_relations() const {
  std::vector<std::pair<int, int>> out;
  for (int goal = 1; goal <= n_; ++goal) {
    for (int src = 1; src < goal; ++src) {
      if (related(src, goal)) {
        out.emplace_back(src, goal);
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

int IntervalPoset::decreasing_count(int i) const {
  int count = 0;
  for (int j = i + 1; j <= n_; ++j) {
    count += related(j, i) ? 1 : 0;
  }
  return count;
}

int IntervalPoset::increasing_count(int j) const {
  int count = 0;
  for (int i = 1; i < j; ++i) {
    count += related(i, j) ? 1 : 0;
  }
  return count;
}

IntervalPoset chi(const TamariIntervalDiagram& d) {
  const int n = d.size();
  std::vector<std::pair<int, int>> pairs;
  for (int i = 1; i <= n; ++i) {
    for (int l = 0; l <= d.u().at(i); ++l) {
      pairs.emplace_back(i + l, i);
    }
    for (int k = 0; k <= d.v().at(i); ++k) {
      pairs.emplace_back(i - k, i);
    }
  }
  return IntervalPoset::from_relations(n, pairs);
}

TamariIntervalDiagram chi_inv(const IntervalPoset& p) {
  const int n = p.size();
  std::vector<int> u(n);
  std::vector<int> v(n);
  for (int i = 1; i <= n; ++i) {
    u[i - 1] = p.decreasing_count(i);
    v[i - 1] = p.increasing_count(i);
  }
  return TamariIntervalDiagram(TamariDiagram(std::move(u)), DualTamariDiagram(std::move(v)));
}

}  // namespace tamari
