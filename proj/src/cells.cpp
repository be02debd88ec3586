#include "tamari/cells.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <stdexcept>

namespace tamari {

bool is_minimal_cellular(const CubicCoordinate& c) {
  for (int i = 1; i < c.size(); ++i) {
    if (!min_increase(c, i)) {
      return false;
    }
  }
  return true;
}

CubicCoordinate maximal_cellular(const CubicCoordinate& c) {
  if (!is_minimal_cellular(c)) {
    throw std::invalid_argument("maximal_cellular: coordinate is not minimal-cellular");
  }
  CubicCoordinate cur = c;
  for (int i = c.size() - 1; i >= 1; --i) {
    auto up = min_increase(cur, i);
    if (!up) {
      throw std::logic_error("maximal_cellular: increasing map became undefined");
    }
    cur = std::move(*up);
  }
  return cur;
}

Cell make_cell(const CubicCoordinate& minimal) { return Cell{minimal, maximal_cellular(minimal)}; }

std::vector<CubicCoordinate> cell_vertices(const Cell& cell) {
  const int m = cell.size() - 1;
  std::vector<CubicCoordinate> out;
  out.reserve(1u << m);
  std::vector<int> comps(m);
  for (std::uint32_t mask = 0; mask < (1u << m); ++mask) {
    for (int i = 0; i < m; ++i) {
      comps[i] = (mask >> i) & 1 ? cell.max.component(i + 1) : cell.min.component(i + 1);
    }
    out.emplace_back(comps);
  }
  std::sort(out.begin(), out.end());
  return out;
}

CubicCoordinate gamma(const Cell& cell) {
  std::vector<int> comps(cell.size() - 1);
  for (int i = 1; i < cell.size(); ++i) {
    comps[i - 1] = cell.min.component(i) < 0 ? cell.min.component(i) : cell.max.component(i);
  }
  return CubicCoordinate(std::move(comps));
}

CubicCoordinate gamma_bar(const Cell& cell) {
  std::vector<int> comps(cell.size() - 1);
  for (int i = 1; i < cell.size(); ++i) {
    comps[i - 1] = cell.min.component(i) < 0 ? cell.max.component(i) : cell.min.component(i);
  }
  return CubicCoordinate(std::move(comps));
}

namespace {

bool search_min(const CubicCoordinate& target, std::vector<int>& comps, size_t pos, Cell& found) {
  const int m = target.size() - 1;
  if (pos == static_cast<size_t>(m)) {
    auto candidate = CubicCoordinate::try_make(comps);
    if (!candidate || !is_minimal_cellular(*candidate)) {
      return false;
    }
    Cell cell{*candidate, maximal_cellular(*candidate)};
    if (gamma(cell) == target) {
      found = std::move(cell);
      return true;
    }
    return false;
  }
  const int t = target.component(static_cast<int>(pos) + 1);
  if (t < 0) {
    comps[pos] = t;  // negative components of the target sit on the minimal corner
    return search_min(target, comps, pos + 1, found);
  }
  for (int value = 0; value < t; ++value) {
    comps[pos] = value;
    if (search_min(target, comps, pos + 1, found)) {
      return true;
    }
  }
  return false;
}

}  // namespace

Cell gamma_inv(const CubicCoordinate& synchronized) {
  if (!is_synchronized(synchronized)) {
    throw std::invalid_argument("gamma_inv: coordinate is not synchronized");
  }
  std::vector<int> comps(synchronized.size() - 1);
  Cell found;
  if (!search_min(synchronized, comps, 0, found)) {
    throw std::logic_error("gamma_inv: no cell maps to the given coordinate");
  }
  return found;
}

long long cell_volume(const Cell& cell) {
  long long volume = 1;
  for (int i = 1; i < cell.size(); ++i) {
    volume *= cell.max.component(i) - cell.min.component(i);
  }
  return volume;
}

long long extended_sync_volume(const CubicCoordinate& c) {
  if (!is_synchronized(c)) {
    throw std::invalid_argument("extended_sync_volume: coordinate is not synchronized");
  }
  long long volume = 1;
  for (int i = 1; i < c.size(); ++i) {
    volume *= std::abs(c.component(i));
  }
  return volume;
}

bool sync_leq(const CubicCoordinate& a, const CubicCoordinate& b) {
  if (a.size() != b.size()) {
    throw std::invalid_argument("sync_leq: coordinates have different sizes");
  }
  if (!is_synchronized(a) || !is_synchronized(b)) {
    throw std::invalid_argument("sync_leq: both coordinates must be synchronized");
  }
  for (int i = 1; i < a.size(); ++i) {
    const int x = a.component(i);
    const int y = b.component(i);
    if ((x < 0) != (y < 0) || std::abs(x) > std::abs(y)) {
      return false;
    }
  }
  return true;
}

SyncVolumes::SyncVolumes(int n) {
  for (const CubicCoordinate& c : enumerate_cc(n)) {
    if (is_synchronized(c)) {
      coords_.push_back(c);
    }
  }
  // The recursion is grounded by total magnitude: strict predecessors have
  // strictly smaller magnitude sums.
  std::vector<int> order(coords_.size());
  for (size_t i = 0; i < order.size(); ++i) {
    order[i] = static_cast<int>(i);
  }
  const auto magnitude = [&](int idx) {
    long long sum = 0;
    for (int v : coords_[idx].components()) {
      sum += std::abs(v);
    }
    return sum;
  };
  std::sort(order.begin(), order.end(),
            [&](int a, int b) { return magnitude(a) < magnitude(b); });

  values_.assign(coords_.size(), 0);
  for (int idx : order) {
    long long value = extended_sync_volume(coords_[idx]);
    for (size_t j = 0; j < coords_.size(); ++j) {
      if (j != static_cast<size_t>(idx) && sync_leq(coords_[j], coords_[idx])) {
        value -= values_[j];
      }
    }
    values_[idx] = value;
  }
}

long long SyncVolumes::value(const CubicCoordinate& c) const {
  const auto it = std::lower_bound(coords_.begin(), coords_.end(), c);
  if (it == coords_.end() || *it != c) {
    throw std::invalid_argument("SyncVolumes::value: not a synchronized coordinate of this size");
  }
  return values_[static_cast<size_t>(it - coords_.begin())];
}

bool is_external(const CubicCoordinate& c, const std::vector<CubicCoordinate>& universe) {
  const int m = c.size() - 1;
  if (m == 0) {
    // The single empty pattern has c itself in its region.
    return false;
  }
  if (m > 24) {
    throw std::invalid_argument("is_external: size too large for pattern enumeration");
  }
  std::vector<std::uint8_t> inhabited(1u << m, 0);
  for (const CubicCoordinate& x : universe) {
    std::uint32_t mask = 0;
    bool strict = true;
    for (int i = 1; i <= m && strict; ++i) {
      if (x.component(i) == c.component(i)) {
        strict = false;
      } else if (x.component(i) > c.component(i)) {
        mask |= 1u << (i - 1);
      }
    }
    if (strict) {
      inhabited[mask] = 1;
    }
  }
  for (std::uint32_t mask = 0; mask < (1u << m); ++mask) {
    if (!inhabited[mask]) {
      return true;
    }
  }
  return false;
}

bool is_internal(const CubicCoordinate& c, const std::vector<CubicCoordinate>& universe) {
  return !is_external(c, universe);
}

std::vector<Cell> enumerate_cells(int n) {
  std::vector<Cell> out;
  for (const CubicCoordinate& c : enumerate_cc(n)) {
    if (is_minimal_cellular(c)) {
      out.push_back(make_cell(c));
    }
  }
  return out;
}

}  // namespace tamari
