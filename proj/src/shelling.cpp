#include "tamari/shelling.hpp"

#include <algorithm>
#include <chrono>
#include <sstream>
#include <stdexcept>

#include "tamari/sweep.hpp"

namespace tamari {

std::string EdgeLabel::to_string() const {
  std::ostringstream out;
  out << "(" << epsilon << "," << index << "," << value << ")";
  return out.str();
}

EdgeLabel edge_label(const CubicCoordinate& c, const CubicCoordinate& cp) {
  if (!is_cc_cover(c, cp)) {
    throw std::invalid_argument("edge_label: not a cover pair");
  }
  for (int i = 1; i < c.size(); ++i) {
    if (c.component(i) != cp.component(i)) {
      return EdgeLabel{c.component(i) < 0 ? -1 : 1, i, c.component(i)};
    }
  }
  throw std::logic_error("edge_label: cover pair with no differing component");
}

SaturatedChain label_chain(std::vector<CubicCoordinate> elements) {
  SaturatedChain chain;
  chain.labels.reserve(elements.empty() ? 0 : elements.size() - 1);
  for (size_t k = 0; k + 1 < elements.size(); ++k) {
    chain.labels.push_back(edge_label(elements[k], elements[k + 1]));
  }
  chain.elements = std::move(elements);
  return chain;
}

bool labels_strictly_increasing(const std::vector<EdgeLabel>& labels) {
  for (size_t k = 0; k + 1 < labels.size(); ++k) {
    if (!(labels[k] < labels[k + 1])) {
      return false;
    }
  }
  return true;
}

bool labels_weakly_decreasing(const std::vector<EdgeLabel>& labels) {
  for (size_t k = 0; k + 1 < labels.size(); ++k) {
    if (labels[k] < labels[k + 1]) {
      return false;
    }
  }
  return true;
}

SaturatedChain increasing_chain(const CubicCoordinate& c, const CubicCoordinate& cp) {
  return label_chain(chain_between(c, cp));
}

std::optional<SaturatedChain> weakly_decreasing_chain(const CubicCoordinate& c,
                                                      const CubicCoordinate& cp) {
  if (!cc_leq(c, cp)) {
    throw std::invalid_argument("weakly_decreasing_chain: endpoints are not comparable");
  }
  // In a weakly decreasing label word every component moves in one cover
  // step, positive steps (right to left) before negative ones; any other
  // shape produces an ascent somewhere.
  std::vector<CubicCoordinate> elements{c};
  CubicCoordinate cur = c;
  const auto step_to = [&](int i, int target) -> bool {
    auto up = min_increase(cur, i);
    if (!up || up->component(i) != target) {
      return false;
    }
    cur = std::move(*up);
    elements.push_back(cur);
    return true;
  };
  for (int i = c.size() - 1; i >= 1; --i) {
    if (cp.component(i) > 0 && cur.component(i) != cp.component(i)) {
      if (!step_to(i, cp.component(i))) {
        return std::nullopt;
      }
    }
  }
  for (int i = c.size() - 1; i >= 1; --i) {
    if (cp.component(i) <= 0 && cur.component(i) != cp.component(i)) {
      if (!step_to(i, cp.component(i))) {
        return std::nullopt;
      }
    }
  }
  SaturatedChain chain = label_chain(std::move(elements));
  if (!labels_weakly_decreasing(chain.labels)) {
    throw std::logic_error("weakly_decreasing_chain: construction produced an ascent");
  }
  return chain;
}

CoverDag::CoverDag(int n) : n_(n), coords_(enumerate_cc(n)) {
  covers_.resize(coords_.size());
  for (size_t id = 0; id < coords_.size(); ++id) {
    for (const CubicCoordinate& up : cc_covers(coords_[id])) {
      covers_[id].push_back(id_of(up));
    }
  }
}

int CoverDag::id_of(const CubicCoordinate& c) const {
  const auto it = std::lower_bound(coords_.begin(), coords_.end(), c);
  if (it == coords_.end() || *it != c) {
    throw std::invalid_argument("CoverDag: coordinate not of this size");
  }
  return static_cast<int>(it - coords_.begin());
}

long long CoverDag::edge_count() const {
  long long edges = 0;
  for (const auto& adj : covers_) {
    edges += static_cast<long long>(adj.size());
  }
  return edges;
}

namespace {

void collect_chains(const CoverDag& dag, int cur, int target, std::vector<int>& path,
                    std::vector<std::vector<int>>& chains) {
  path.push_back(cur);
  if (cur == target) {
    chains.push_back(path);
  } else {
    for (int next : dag.covers_of(cur)) {
      if (cc_leq(dag.coordinate(next), dag.coordinate(target))) {
        collect_chains(dag, next, target, path, chains);
      }
    }
  }
  path.pop_back();
}

}  // namespace

std::vector<SaturatedChain> all_saturated_chains(const CubicCoordinate& c,
                                                 const CubicCoordinate& cp, const CoverDag& dag) {
  if (!cc_leq(c, cp)) {
    throw std::invalid_argument("all_saturated_chains: endpoints are not comparable");
  }
  std::vector<std::vector<int>> id_chains;
  std::vector<int> path;
  collect_chains(dag, dag.id_of(c), dag.id_of(cp), path, id_chains);

  std::vector<SaturatedChain> out;
  out.reserve(id_chains.size());
  for (const auto& ids : id_chains) {
    std::vector<CubicCoordinate> elements;
    elements.reserve(ids.size());
    for (int id : ids) {
      elements.push_back(dag.coordinate(id));
    }
    out.push_back(label_chain(std::move(elements)));
  }
  return out;
}

namespace {

// Label of a known cover pair; skips the cover validation of edge_label.
EdgeLabel cover_label(const CubicCoordinate& c, const CubicCoordinate& cp) {
  for (int i = 1; i < c.size(); ++i) {
    if (c.component(i) != cp.component(i)) {
      return EdgeLabel{c.component(i) < 0 ? -1 : 1, i, c.component(i)};
    }
  }
  throw std::logic_error("cover_label: identical coordinates");
}

// Counts label-increasing saturated chains by depth-first search with
// monotone pruning; stops early beyond two.
long long count_increasing_chains(const CoverDag& dag, int cur, int target,
                                  std::optional<EdgeLabel> last) {
  if (cur == target) {
    return 1;
  }
  long long total = 0;
  for (int next : dag.covers_of(cur)) {
    if (!cc_leq(dag.coordinate(next), dag.coordinate(target))) {
      continue;
    }
    const EdgeLabel label = cover_label(dag.coordinate(cur), dag.coordinate(next));
    if (last && !(*last < label)) {
      continue;
    }
    total += count_increasing_chains(dag, next, target, label);
    if (total > 1) {
      return total;
    }
  }
  return total;
}

std::string chain_failure(const CoverDag& dag, int a, int b, const std::string& what) {
  std::ostringstream out;
  out << "pair " << a << " -> " << b << " [";
  for (int v : dag.coordinate(a).components()) {
    out << v << " ";
  }
  out << "-> ";
  for (int v : dag.coordinate(b).components()) {
    out << v << " ";
  }
  out << "]: " << what;
  return out.str();
}

// Label words compare lexicographically with the shorter-prefix rule.
bool label_word_less(const std::vector<EdgeLabel>& a, const std::vector<EdgeLabel>& b) {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

std::optional<std::string> check_pair(const CoverDag& dag, int a, int b, bool exhaustive) {
  const CubicCoordinate& lo = dag.coordinate(a);
  const CubicCoordinate& hi = dag.coordinate(b);

  const SaturatedChain canonical = increasing_chain(lo, hi);
  if (!labels_strictly_increasing(canonical.labels)) {
    return chain_failure(dag, a, b, "canonical chain is not label-increasing");
  }
  const std::optional<SaturatedChain> decreasing = weakly_decreasing_chain(lo, hi);
  if (decreasing && !labels_weakly_decreasing(decreasing->labels)) {
    return chain_failure(dag, a, b, "constructed decreasing chain has an ascent");
  }
  if (!exhaustive) {
    // Pruned count instead of full chain enumeration.
    if (count_increasing_chains(dag, a, b, std::nullopt) != 1) {
      return chain_failure(dag, a, b, "label-increasing chain is not unique");
    }
    return std::nullopt;
  }

  const std::vector<SaturatedChain> chains = all_saturated_chains(lo, hi, dag);
  const SaturatedChain* increasing = nullptr;
  const SaturatedChain* weakly_dec = nullptr;
  for (const SaturatedChain& chain : chains) {
    if (labels_strictly_increasing(chain.labels)) {
      if (increasing != nullptr) {
        return chain_failure(dag, a, b, "more than one label-increasing chain");
      }
      increasing = &chain;
    }
    if (labels_weakly_decreasing(chain.labels)) {
      if (weakly_dec != nullptr) {
        return chain_failure(dag, a, b, "more than one label-weakly-decreasing chain");
      }
      weakly_dec = &chain;
    }
  }
  if (increasing == nullptr) {
    return chain_failure(dag, a, b, "no label-increasing chain");
  }
  if (*increasing != canonical) {
    return chain_failure(dag, a, b, "increasing chain differs from the canonical one");
  }
  for (const SaturatedChain& chain : chains) {
    if (&chain != increasing && label_word_less(chain.labels, increasing->labels)) {
      return chain_failure(dag, a, b, "increasing chain is not lexicographically minimal");
    }
  }
  if (decreasing.has_value() != (weakly_dec != nullptr) ||
      (weakly_dec != nullptr && *weakly_dec != *decreasing)) {
    return chain_failure(dag, a, b, "weakly decreasing chain mismatch");
  }
  return std::nullopt;
}

}  // namespace

ShellingReport verify_el_shellability(int n, bool exhaustive, bool parallel) {
  const auto start = std::chrono::steady_clock::now();
  const CoverDag dag(n);

  std::vector<std::pair<int, int>> pairs;
  for (int a = 0; a < dag.count(); ++a) {
    for (int b = 0; b < dag.count(); ++b) {
      if (cc_leq(dag.coordinate(a), dag.coordinate(b))) {
        pairs.emplace_back(a, b);
      }
    }
  }

  ShellingReport report;
  report.n = n;
  report.exhaustive = exhaustive;
  report.pairs = static_cast<long long>(pairs.size());
  sweep(parallel, static_cast<long long>(pairs.size()),
        [&](long long i) { return check_pair(dag, pairs[i].first, pairs[i].second, exhaustive); },
        report.failures);
  report.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

std::vector<int> mobius_values(int n, bool parallel) {
  const CoverDag dag(n);
  const int count = dag.count();
  std::vector<std::vector<int>> per_source(count);

  // mu(a, a) = 1 and mu(a, b) = -sum of mu(a, z) over a <= z < b; sources are
  // independent, and ids ascend with the order, so one pass per source works.
#pragma omp parallel for schedule(dynamic, 4) if (parallel)
  for (int a = 0; a < count; ++a) {
    std::vector<int> mu(count, 0);
    std::vector<int> upset;
    for (int z = a; z < count; ++z) {
      if (cc_leq(dag.coordinate(a), dag.coordinate(z))) {
        upset.push_back(z);
      }
    }
    for (size_t bi = 0; bi < upset.size(); ++bi) {
      const int b = upset[bi];
      if (b == a) {
        mu[b] = 1;
      } else {
        int sum = 0;
        for (size_t zi = 0; zi < bi; ++zi) {
          const int z = upset[zi];
          if (cc_leq(dag.coordinate(z), dag.coordinate(b))) {
            sum += mu[z];
          }
        }
        mu[b] = -sum;
      }
      per_source[a].push_back(mu[b]);
    }
  }

  std::vector<int> values;
  for (const auto& chunk : per_source) {
    values.insert(values.end(), chunk.begin(), chunk.end());
  }
  std::sort(values.begin(), values.end());
  return values;
}

}  // namespace tamari
