#pragma once

#include <string>
#include <vector>

#include "tamari/cubic.hpp"

namespace tamari::verify {

struct CheckReport {
  std::string suite;
  int max_size = 0;
  long long checked = 0;
  std::vector<std::string> failures;
  double seconds = 0.0;

  bool ok() const { return failures.empty(); }
};

std::string to_text(const CheckReport& report);

// Round trips of the four bijections over every object of size <= max_size,
// plus image distinctness and matching counts.
CheckReport check_bijections(int max_size, bool parallel = true);

// Componentwise coordinate order against the rotation-closure interval
// order, and meet/join against the bound-search oracle plus the lattice laws.
CheckReport check_lattice(int max_size, bool parallel = true);

// Cell structure: counts, vertex sets, empty interiors, the bijection with
// synchronized coordinates, and the disjoint cover of origin boxes.
CheckReport check_cells(int max_size, bool parallel = true);

// Cell volumes against the inverted synchronized volumes.
CheckReport check_volumes(int max_size, bool parallel = true);

// Synchronized <=> equal canopies; synchronized => not new; internal => new;
// synchronized => external.
CheckReport check_predicates(int max_size, bool parallel = true);

// Edge-labeling verification (exhaustive chain enumeration up to
// exhaustive_up_to, constructed chains only beyond) and Möbius values in
// {-1, 0, 1}.
CheckReport check_shelling(int max_size, bool parallel = true, int exhaustive_up_to = 4);

std::vector<CheckReport> check_all(int max_size, bool parallel = true);

}  // namespace tamari::verify
