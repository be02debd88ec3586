#pragma once

#include <compare>
#include <optional>
#include <string>
#include <vector>

#include "tamari/cubic.hpp"

namespace tamari {

// Edge label of a cover c -> c': the sign of the changing component, its
// index, and its value in c. Labels compare lexicographically.
struct EdgeLabel {
  int epsilon = 0;  // -1 when the lower value is negative, +1 otherwise
  int index = 0;
  int value = 0;

  auto operator<=>(const EdgeLabel&) const = default;
  std::string to_string() const;
};

// Throws unless cp covers c.
EdgeLabel edge_label(const CubicCoordinate& c, const CubicCoordinate& cp);

struct SaturatedChain {
  std::vector<CubicCoordinate> elements;  // consecutive cover pairs
  std::vector<EdgeLabel> labels;          // labels[k] = label(elements[k], elements[k+1])

  bool operator==(const SaturatedChain&) const = default;
};

SaturatedChain label_chain(std::vector<CubicCoordinate> elements);

bool labels_strictly_increasing(const std::vector<EdgeLabel>& labels);
bool labels_weakly_decreasing(const std::vector<EdgeLabel>& labels);

// The canonical chain of chain_between with its labels; strictly increasing.
SaturatedChain increasing_chain(const CubicCoordinate& c, const CubicCoordinate& cp);

// The unique label-weakly-decreasing chain when it exists: positive targets
// right to left, then negative targets right to left, each component moved by
// a single cover step. nullopt when some step is not a cover (in particular
// when a component changes sign).
std::optional<SaturatedChain> weakly_decreasing_chain(const CubicCoordinate& c,
                                                      const CubicCoordinate& cp);

// The cover graph of all coordinates of one size; built once, then read-only.
class CoverDag {
 public:
  explicit CoverDag(int n);

  int n() const { return n_; }
  int count() const { return static_cast<int>(coords_.size()); }
  const std::vector<CubicCoordinate>& coordinates() const { return coords_; }
  const CubicCoordinate& coordinate(int id) const { return coords_[id]; }
  int id_of(const CubicCoordinate& c) const;  // throws when absent
  const std::vector<int>& covers_of(int id) const { return covers_[id]; }
  long long edge_count() const;

 private:
  int n_ = 0;
  std::vector<CubicCoordinate> coords_;  // sorted lexicographically
  std::vector<std::vector<int>> covers_;
};

// Every saturated chain from c to cp, by depth-first traversal of the cover
// graph. Throws when the endpoints are not comparable.
std::vector<SaturatedChain> all_saturated_chains(const CubicCoordinate& c,
                                                 const CubicCoordinate& cp, const CoverDag& dag);

struct ShellingReport {
  int n = 0;
  bool exhaustive = false;       // chains enumerated pair by pair
  long long pairs = 0;           // comparable pairs checked
  std::vector<std::string> failures;
  double seconds = 0.0;

  bool ok() const { return failures.empty(); }
};

// Checks, for every comparable pair: exactly one label-increasing saturated
// chain exists, it equals increasing_chain, and it is lexicographically
// minimal; at most one label-weakly-decreasing chain exists and matches
// weakly_decreasing_chain. With exhaustive=false only the constructed chains
// are verified, without enumerating all chains.
ShellingReport verify_el_shellability(int n, bool exhaustive, bool parallel = true);

// Values of the Möbius function over all comparable pairs, sorted.
std::vector<int> mobius_values(int n, bool parallel = true);

}  // namespace tamari
