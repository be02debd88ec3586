#pragma once

#include <optional>
#include <span>
#include <vector>

#include "tamari/diagrams.hpp"
#include "tamari/tamari_interval.hpp"

namespace tamari {

// An integer (n-1)-tuple c encoding an interval of size n. The tuple is a
// cubic coordinate when the induced pair
//   u_i = max(c_i, 0) (u_n = 0),   v_{i+1} = |min(c_i, 0)| (v_1 = 0)
// is a Tamari interval diagram. Invalid tuples are unrepresentable: every
// constructor validates.
class CubicCoordinate {
 public:
  CubicCoordinate() = default;  // size 1, the empty tuple
  explicit CubicCoordinate(std::vector<int> components);  // throws std::invalid_argument

  static bool valid_tuple(std::span<const int> components);
  static std::optional<CubicCoordinate> try_make(std::vector<int> components);

  int size() const { return static_cast<int>(components_.size()) + 1; }
  int component(int i) const { return components_[i - 1]; }  // 1-based
  const std::vector<int>& components() const { return components_; }

  auto operator<=>(const CubicCoordinate&) const = default;

 private:
  struct Unchecked {};
  CubicCoordinate(std::vector<int> components, Unchecked) : components_(std::move(components)) {}

  std::vector<int> components_;
};

TamariIntervalDiagram phi(const CubicCoordinate& c);
CubicCoordinate phi_inv(const TamariIntervalDiagram& d);  // c_i = u_i - v_{i+1}

// psi and its inverse connect intervals and coordinates through the
// interval-poset and diagram bijections.
CubicCoordinate psi(const TamariInterval& iv);
TamariInterval psi_inv(const CubicCoordinate& c);

// Componentwise order; throws on size mismatch.
bool cc_leq(const CubicCoordinate& a, const CubicCoordinate& b);

// The cover of c raising component i minimally: the first value in
// (c_i, n-i] whose tuple validates. nullopt when no valid increase exists.
// If c_i < 0 the result never exceeds 0 (zeroing a component always
// validates, so the scan stops at 0 at the latest).
std::optional<CubicCoordinate> min_increase(const CubicCoordinate& c, int i);

// All covers of c; one per component where min_increase is defined.
std::vector<CubicCoordinate> cc_covers(const CubicCoordinate& c);

bool is_cc_cover(const CubicCoordinate& c, const CubicCoordinate& cp);

// c with component i set to zero; requires c_i != 0. Always a valid
// coordinate.
CubicCoordinate zero_component(const CubicCoordinate& c, int i);

// Differing components split by sign: d_minus collects indices with
// cp_d <= 0, d_plus those with c_d >= 0. Disjoint; a component crossing zero
// belongs to neither and is handled by both phases of the chain below.
struct DeltaSets {
  std::vector<int> d_minus;
  std::vector<int> d_plus;
};

DeltaSets delta_sets(const CubicCoordinate& c, const CubicCoordinate& cp);

// The canonical saturated chain from c to cp: components with negative lower
// value are raised first (left to right, up to min(target, 0)), then the
// positive targets are completed left to right; every consecutive pair is a
// cover. Throws when the endpoints are not comparable.
std::vector<CubicCoordinate> chain_between(const CubicCoordinate& c, const CubicCoordinate& cp);

// Meet and join, computed through the interval lattice: componentwise tree
// meet/join of the endpoint pairs, mapped back by psi. The TamariLattice must
// match the coordinate size.
CubicCoordinate cc_meet(const CubicCoordinate& a, const CubicCoordinate& b,
                        const TamariLattice& lattice);
CubicCoordinate cc_join(const CubicCoordinate& a, const CubicCoordinate& b,
                        const TamariLattice& lattice);

// All cubic coordinates of size n in lexicographic order.
std::vector<CubicCoordinate> enumerate_cc(int n);

// No zero component.
bool is_synchronized(const CubicCoordinate& c);

}  // namespace tamari
