#pragma once

#include <cstdint>
#include <vector>

#include "tamari/cubic.hpp"

namespace tamari {

// A cell of the cubic realization: a minimal-cellular coordinate (one with
// n-1 covers) together with its maximal-cellular, obtained by applying the
// minimal increasing map to components n-1, n-2, ..., 1 in that order.
struct Cell {
  CubicCoordinate min;
  CubicCoordinate max;

  int size() const { return min.size(); }
  auto operator<=>(const Cell&) const = default;
};

bool is_minimal_cellular(const CubicCoordinate& c);

// Throws unless c is minimal-cellular.
CubicCoordinate maximal_cellular(const CubicCoordinate& c);

Cell make_cell(const CubicCoordinate& minimal);

// All 2^{n-1} choices of one endpoint per component; every choice is a valid
// coordinate. Sorted.
std::vector<CubicCoordinate> cell_vertices(const Cell& cell);

// Componentwise: the negative endpoint from min, the positive one from max.
// Always synchronized; a bijection onto the synchronized coordinates.
CubicCoordinate gamma(const Cell& cell);

// The inverse of gamma, reconstructed by search: negative components pin
// min, positive components pin max, and the remaining min entries are found
// by scanning [0, c_i) with the cell conditions as filter.
Cell gamma_inv(const CubicCoordinate& synchronized);

// The opposite choice: positive endpoints from min, negative from max. A
// vertex of the cell.
CubicCoordinate gamma_bar(const Cell& cell);

long long cell_volume(const Cell& cell);  // product of componentwise gaps

// Product of |c_i| over a synchronized coordinate: the volume of the box
// spanned by the origin and c.
long long extended_sync_volume(const CubicCoordinate& c);

// Same-sign componentwise magnitude order on synchronized coordinates.
bool sync_leq(const CubicCoordinate& a, const CubicCoordinate& b);

// Volumes obtained by inverting the box volumes over sync_leq:
//   value(c) = extended_sync_volume(c) - sum of value(c') over c' strictly
//   below c. Equals the volume of the cell gamma_inv(c).
class SyncVolumes {
 public:
  explicit SyncVolumes(int n);

  long long value(const CubicCoordinate& c) const;  // throws if not synchronized
  const std::vector<CubicCoordinate>& synchronized_coordinates() const { return coords_; }

 private:
  std::vector<CubicCoordinate> coords_;  // sorted lexicographically
  std::vector<long long> values_;
};

// c is external when some orthant pattern around c contains no coordinate of
// the universe; the test needs the full enumeration of size c.size().
bool is_external(const CubicCoordinate& c, const std::vector<CubicCoordinate>& universe);
bool is_internal(const CubicCoordinate& c, const std::vector<CubicCoordinate>& universe);

// All cells of size n, sorted by minimal coordinate.
std::vector<Cell> enumerate_cells(int n);

}  // namespace tamari
