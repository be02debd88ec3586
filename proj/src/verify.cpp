#include "tamari/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <sstream>

#include "tamari/cells.hpp"
#include "tamari/interval_poset.hpp"
#include "tamari/serialization.hpp"
#include "tamari/shelling.hpp"
#include "tamari/sweep.hpp"
#include "tamari/tamari_interval.hpp"

namespace tamari::verify {

namespace {

class Timer {
 public:
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

std::string fail(int n, const std::string& what) {
  std::ostringstream out;
  out << "n=" << n << ": " << what;
  return out.str();
}

}  // namespace

std::string to_text(const CheckReport& report) {
  std::ostringstream out;
  out << "suite " << report.suite << " (sizes <= " << report.max_size << "): "
      << (report.ok() ? "PASS" : "FAIL") << ", " << report.checked << " checks in "
      << report.seconds << "s";
  for (size_t i = 0; i < report.failures.size() && i < 10; ++i) {
    out << "\n  " << report.failures[i];
  }
  if (report.failures.size() > 10) {
    out << "\n  ... " << (report.failures.size() - 10) << " more";
  }
  return out.str();
}

CheckReport check_bijections(int max_size, bool parallel) {
  Timer timer;
  CheckReport report;
  report.suite = "bijections";
  report.max_size = max_size;

  for (int n = 0; n <= max_size; ++n) {
    const std::vector<BinaryTree> trees = enumerate_trees(n);
    report.checked += static_cast<long long>(trees.size());
    sweep(parallel, static_cast<long long>(trees.size()),
          [&](long long i) -> std::optional<std::string> {
            const BinaryTree& t = trees[i];
            if (from_tamari_diagram(to_tamari_diagram(t)) != t) {
              return fail(n, "tree " + tree_to_parens(t) + ": diagram round trip broken");
            }
            if (from_dual_tamari_diagram(to_dual_tamari_diagram(t)) != t) {
              return fail(n, "tree " + tree_to_parens(t) + ": dual diagram round trip broken");
            }
            std::vector<int> reversed = to_dual_tamari_diagram(t).word();
            std::reverse(reversed.begin(), reversed.end());
            if (scan_tamari_word(reversed)) {
              return fail(n, "tree " + tree_to_parens(t) + ": reversed dual word invalid");
            }
            return std::nullopt;
          },
          report.failures);

    const std::vector<TamariIntervalDiagram> tids = enumerate_tids(n);
    report.checked += static_cast<long long>(tids.size());
    sweep(parallel, static_cast<long long>(tids.size()),
          [&](long long i) -> std::optional<std::string> {
            const TamariIntervalDiagram& d = tids[i];
            if (chi_inv(chi(d)) != d) {
              return fail(n, "diagram " + tid_to_text(d) + ": chi round trip broken");
            }
            if (n >= 1 && phi(phi_inv(d)) != d) {
              return fail(n, "diagram " + tid_to_text(d) + ": phi round trip broken");
            }
            return std::nullopt;
          },
          report.failures);

    const std::vector<TamariInterval> intervals = enumerate_intervals(n);
    report.checked += static_cast<long long>(intervals.size());
    if (tids.size() != intervals.size()) {
      report.failures.push_back(fail(n, "interval and diagram counts differ"));
    }
    sweep(parallel, static_cast<long long>(intervals.size()),
          [&](long long i) -> std::optional<std::string> {
            const TamariInterval& iv = intervals[i];
            if (rho(rho_inv(iv)) != iv) {
              return fail(n, "interval " + interval_to_text(iv) + ": rho round trip broken");
            }
            if (chi_inv(rho_inv(iv)) !=
                TamariIntervalDiagram(to_tamari_diagram(iv.lower()),
                                      to_dual_tamari_diagram(iv.upper()))) {
              return fail(n, "interval " + interval_to_text(iv) + ": codec coherence broken");
            }
            if (n >= 1) {
              const CubicCoordinate c = psi(iv);
              if (psi_inv(c) != iv) {
                return fail(n, "interval " + interval_to_text(iv) + ": psi round trip broken");
              }
            }
            return std::nullopt;
          },
          report.failures);

    if (n >= 1) {
      const std::vector<CubicCoordinate> coords = enumerate_cc(n);
      report.checked += static_cast<long long>(coords.size());
      if (coords.size() != intervals.size()) {
        report.failures.push_back(fail(n, "coordinate and interval counts differ"));
      }
      std::vector<CubicCoordinate> images;
      images.reserve(intervals.size());
      for (const TamariInterval& iv : intervals) {
        images.push_back(psi(iv));
      }
      std::sort(images.begin(), images.end());
      if (std::adjacent_find(images.begin(), images.end()) != images.end()) {
        report.failures.push_back(fail(n, "psi is not injective"));
      }
      if (images != coords) {
        report.failures.push_back(fail(n, "psi image differs from the enumeration"));
      }
      sweep(parallel, static_cast<long long>(coords.size()),
            [&](long long i) -> std::optional<std::string> {
              const CubicCoordinate& c = coords[i];
              if (phi_inv(phi(c)) != c) {
                return fail(n, "coordinate " + cc_to_text(c) + ": phi round trip broken");
              }
              return std::nullopt;
            },
            report.failures);
    }
  }
  report.seconds = timer.seconds();
  return report;
}

CheckReport check_lattice(int max_size, bool parallel) {
  Timer timer;
  CheckReport report;
  report.suite = "lattice";
  report.max_size = max_size;

  for (int n = 1; n <= max_size; ++n) {
    const TamariLattice lattice(n);
    const std::vector<TamariInterval> intervals = enumerate_intervals(n);
    const int count = static_cast<int>(intervals.size());
    std::vector<CubicCoordinate> coords;
    std::vector<int> lower_idx(count);
    std::vector<int> upper_idx(count);
    coords.reserve(count);
    for (int i = 0; i < count; ++i) {
      coords.push_back(psi(intervals[i]));
      lower_idx[i] = lattice.index_of(intervals[i].lower());
      upper_idx[i] = lattice.index_of(intervals[i].upper());
    }
    std::vector<CubicCoordinate> sorted = coords;
    std::sort(sorted.begin(), sorted.end());
    const auto id_of = [&](const CubicCoordinate& c) {
      return static_cast<int>(std::lower_bound(sorted.begin(), sorted.end(), c) - sorted.begin());
    };

    // Order isomorphism against the rotation-closure oracle.
    report.checked += static_cast<long long>(count) * count;
    sweep(parallel, static_cast<long long>(count) * count,
          [&](long long pair) -> std::optional<std::string> {
            const int a = static_cast<int>(pair / count);
            const int b = static_cast<int>(pair % count);
            const bool by_coordinates = cc_leq(coords[a], coords[b]);
            const bool by_rotations = lattice.leq(lower_idx[a], lower_idx[b]) &&
                                      lattice.leq(upper_idx[a], upper_idx[b]);
            if (by_coordinates != by_rotations) {
              return fail(n, "order mismatch between " + cc_to_text(coords[a]) + " and " +
                                 cc_to_text(coords[b]));
            }
            return std::nullopt;
          },
          report.failures);

    // Meet/join tables via the tree route, checked against the bound-search
    // oracle over the enumeration.
    std::vector<int> meet_table(static_cast<size_t>(count) * count, -1);
    std::vector<int> join_table(static_cast<size_t>(count) * count, -1);
    report.checked += 2ll * count * count;
    sweep(parallel, static_cast<long long>(count) * count,
          [&](long long pair) -> std::optional<std::string> {
            const int a = static_cast<int>(pair / count);
            const int b = static_cast<int>(pair % count);
            const CubicCoordinate meet = cc_meet(sorted[a], sorted[b], lattice);
            const CubicCoordinate join = cc_join(sorted[a], sorted[b], lattice);
            meet_table[pair] = id_of(meet);
            join_table[pair] = id_of(join);
            for (int z = 0; z < count; ++z) {
              const bool is_lower = cc_leq(sorted[z], sorted[a]) && cc_leq(sorted[z], sorted[b]);
              if (is_lower != cc_leq(sorted[z], meet)) {
                return fail(n, "meet oracle mismatch at " + cc_to_text(sorted[a]) + ", " +
                                   cc_to_text(sorted[b]));
              }
              const bool is_upper = cc_leq(sorted[a], sorted[z]) && cc_leq(sorted[b], sorted[z]);
              if (is_upper != cc_leq(join, sorted[z])) {
                return fail(n, "join oracle mismatch at " + cc_to_text(sorted[a]) + ", " +
                                   cc_to_text(sorted[b]));
              }
            }
            return std::nullopt;
          },
          report.failures);

    const auto meet_of = [&](int a, int b) { return meet_table[static_cast<size_t>(a) * count + b]; };
    const auto join_of = [&](int a, int b) { return join_table[static_cast<size_t>(a) * count + b]; };

    for (int a = 0; a < count; ++a) {
      if (meet_of(a, a) != a || join_of(a, a) != a) {
        report.failures.push_back(fail(n, "idempotence broken at " + cc_to_text(sorted[a])));
      }
    }
    report.checked += count;
    report.checked += static_cast<long long>(count) * count;
    sweep(parallel, static_cast<long long>(count) * count,
          [&](long long pair) -> std::optional<std::string> {
            const int a = static_cast<int>(pair / count);
            const int b = static_cast<int>(pair % count);
            if (meet_of(a, b) != meet_of(b, a) || join_of(a, b) != join_of(b, a)) {
              return fail(n, "commutativity broken");
            }
            if (meet_of(a, join_of(a, b)) != a || join_of(a, meet_of(a, b)) != a) {
              return fail(n, "absorption broken");
            }
            return std::nullopt;
          },
          report.failures);
    report.checked += static_cast<long long>(count) * count * count;
    sweep(parallel, static_cast<long long>(count) * count,
          [&](long long pair) -> std::optional<std::string> {
            const int a = static_cast<int>(pair / count);
            const int b = static_cast<int>(pair % count);
            for (int c = 0; c < count; ++c) {
              if (meet_of(meet_of(a, b), c) != meet_of(a, meet_of(b, c)) ||
                  join_of(join_of(a, b), c) != join_of(a, join_of(b, c))) {
                return fail(n, "associativity broken");
              }
            }
            return std::nullopt;
          },
          report.failures);
  }
  report.seconds = timer.seconds();
  return report;
}

CheckReport check_cells(int max_size, bool parallel) {
  Timer timer;
  CheckReport report;
  report.suite = "cells";
  report.max_size = max_size;

  for (int n = 1; n <= max_size; ++n) {
    const std::vector<Cell> cells = enumerate_cells(n);
    const std::vector<CubicCoordinate> universe = enumerate_cc(n);
    std::vector<CubicCoordinate> synchronized_coords;
    for (const CubicCoordinate& c : universe) {
      if (is_synchronized(c)) {
        synchronized_coords.push_back(c);
      }
    }
    if (cells.size() != synchronized_coords.size()) {
      report.failures.push_back(fail(n, "cell count differs from synchronized count"));
    }

    report.checked += static_cast<long long>(cells.size());
    sweep(parallel, static_cast<long long>(cells.size()),
          [&](long long i) -> std::optional<std::string> {
            const Cell& cell = cells[i];
            const std::string name = cc_to_text(cell.min);
            for (int k = 1; k < n; ++k) {
              const int lo = cell.min.component(k);
              const int hi = cell.max.component(k);
              if (lo < 0 ? hi > 0 : hi <= 0) {
                return fail(n, "cell " + name + ": sign coupling broken at component " +
                                   std::to_string(k));
              }
            }
            const std::vector<CubicCoordinate> vertices = cell_vertices(cell);
            if (vertices.size() != (1u << (n - 1))) {
              return fail(n, "cell " + name + ": wrong vertex count");
            }
            for (size_t a = 0; a + 1 < vertices.size(); ++a) {
              if (vertices[a] == vertices[a + 1]) {
                return fail(n, "cell " + name + ": duplicate vertices");
              }
            }
            for (const CubicCoordinate& vertex : vertices) {
              if (!std::binary_search(universe.begin(), universe.end(), vertex)) {
                return fail(n, "cell " + name + ": vertex outside the enumeration");
              }
            }
            for (const CubicCoordinate& c : universe) {
              // A zero-dimensional cell is its unique vertex; no interior.
              bool interior = n >= 2;
              for (int k = 1; k < n && interior; ++k) {
                interior = cell.min.component(k) < c.component(k) &&
                           c.component(k) < cell.max.component(k);
              }
              if (interior) {
                return fail(n, "cell " + name + ": interior coordinate " + cc_to_text(c));
              }
            }
            const CubicCoordinate image = gamma(cell);
            if (!is_synchronized(image)) {
              return fail(n, "cell " + name + ": gamma image not synchronized");
            }
            if (gamma_inv(image) != cell) {
              return fail(n, "cell " + name + ": gamma_inv does not invert gamma");
            }
            const CubicCoordinate opposite = gamma_bar(cell);
            if (!std::binary_search(vertices.begin(), vertices.end(), opposite)) {
              return fail(n, "cell " + name + ": opposite coordinate is not a vertex");
            }
            return std::nullopt;
          },
          report.failures);

    std::vector<CubicCoordinate> images;
    images.reserve(cells.size());
    for (const Cell& cell : cells) {
      images.push_back(gamma(cell));
    }
    std::sort(images.begin(), images.end());
    if (std::adjacent_find(images.begin(), images.end()) != images.end()) {
      report.failures.push_back(fail(n, "gamma is not injective"));
    }
    if (images != synchronized_coords) {
      report.failures.push_back(fail(n, "gamma image differs from synchronized coordinates"));
    }

    // Each origin box is the disjoint union of the cells below it: every
    // half-grid point of the box lies in exactly one such cell. Doubled
    // coordinates keep the arithmetic integral.
    if (n <= 4) {
      report.checked += static_cast<long long>(synchronized_coords.size());
      sweep(parallel, static_cast<long long>(synchronized_coords.size()),
            [&](long long i) -> std::optional<std::string> {
              const CubicCoordinate& c = synchronized_coords[i];
              std::vector<Cell> below;
              for (const Cell& cell : cells) {
                if (sync_leq(gamma(cell), c)) {
                  below.push_back(cell);
                }
              }
              std::vector<int> point(n - 1);
              const auto walk = [&](auto&& self, int k) -> std::optional<std::string> {
                if (k == n - 1) {
                  int hits = 0;
                  for (const Cell& cell : below) {
                    bool inside = true;
                    for (int d = 1; d < n && inside; ++d) {
                      inside = 2 * cell.min.component(d) < point[d - 1] &&
                               point[d - 1] < 2 * cell.max.component(d);
                    }
                    hits += inside ? 1 : 0;
                  }
                  if (hits != 1) {
                    return fail(n, "box of " + cc_to_text(c) + ": half-grid point covered " +
                                       std::to_string(hits) + " times");
                  }
                  return std::nullopt;
                }
                const int target = c.component(k + 1);
                const int lo = std::min(0, target);
                const int hi = std::max(0, target);
                for (int x = 2 * lo + 1; x < 2 * hi; x += 2) {
                  point[k] = x;
                  if (auto failure = self(self, k + 1)) {
                    return failure;
                  }
                }
                return std::nullopt;
              };
              return walk(walk, 0);
            },
            report.failures);
    }
  }
  report.seconds = timer.seconds();
  return report;
}

CheckReport check_volumes(int max_size, bool parallel) {
  Timer timer;
  CheckReport report;
  report.suite = "volumes";
  report.max_size = max_size;

  for (int n = 1; n <= max_size; ++n) {
    const SyncVolumes volumes(n);
    const std::vector<Cell> cells = enumerate_cells(n);
    report.checked += static_cast<long long>(cells.size());
    sweep(parallel, static_cast<long long>(cells.size()),
          [&](long long i) -> std::optional<std::string> {
            const Cell& cell = cells[i];
            const long long direct = cell_volume(cell);
            const long long inverted = volumes.value(gamma(cell));
            if (direct != inverted) {
              std::ostringstream out;
              out << "cell " << cc_to_text(cell.min) << ": volume " << direct
                  << " but inversion gives " << inverted;
              return fail(n, out.str());
            }
            if (inverted < 1) {
              return fail(n, "cell " + cc_to_text(cell.min) + ": nonpositive volume");
            }
            return std::nullopt;
          },
          report.failures);

    long long total_cells = 0;
    for (const Cell& cell : cells) {
      total_cells += cell_volume(cell);
    }
    long long total_sync = 0;
    for (const CubicCoordinate& c : volumes.synchronized_coordinates()) {
      total_sync += volumes.value(c);
    }
    if (total_cells != total_sync) {
      report.failures.push_back(fail(n, "total volumes disagree"));
    }
  }
  report.seconds = timer.seconds();
  return report;
}

CheckReport check_predicates(int max_size, bool parallel) {
  Timer timer;
  CheckReport report;
  report.suite = "predicates";
  report.max_size = max_size;

  for (int n = 1; n <= max_size; ++n) {
    const std::vector<CubicCoordinate> universe = enumerate_cc(n);
    report.checked += static_cast<long long>(universe.size());
    sweep(parallel, static_cast<long long>(universe.size()),
          [&](long long i) -> std::optional<std::string> {
            const CubicCoordinate& c = universe[i];
            const std::string name = cc_to_text(c);
            const bool sync = is_synchronized(c);

            if (sync != is_synchronized(phi(c))) {
              return fail(n, name + ": diagram and coordinate synchronization differ");
            }
            const TamariInterval iv = psi_inv(c);
            if (sync != (canopy(iv.lower()) == canopy(iv.upper()))) {
              return fail(n, name + ": synchronization does not match canopy equality");
            }
            if (n >= 3) {
              const bool fresh = is_new(phi(c));
              if (sync && fresh) {
                return fail(n, name + ": synchronized yet new");
              }
              if (is_internal(c, universe) && !fresh) {
                return fail(n, name + ": internal yet not new");
              }
            }
            if (n >= 2 && sync && !is_external(c, universe)) {
              return fail(n, name + ": synchronized yet internal");
            }
            return std::nullopt;
          },
          report.failures);
  }
  report.seconds = timer.seconds();
  return report;
}

CheckReport check_shelling(int max_size, bool parallel, int exhaustive_up_to) {
  Timer timer;
  CheckReport report;
  report.suite = "shelling";
  report.max_size = max_size;

  for (int n = 1; n <= max_size; ++n) {
    const ShellingReport shelling = verify_el_shellability(n, n <= exhaustive_up_to, parallel);
    report.checked += shelling.pairs;
    for (const std::string& failure : shelling.failures) {
      report.failures.push_back(fail(n, failure));
    }
    if (n <= 5) {
      const std::vector<int> values = mobius_values(n, parallel);
      report.checked += static_cast<long long>(values.size());
      for (int value : values) {
        if (value < -1 || value > 1) {
          report.failures.push_back(fail(n, "Moebius value " + std::to_string(value)));
          break;
        }
      }
    }
  }
  report.seconds = timer.seconds();
  return report;
}

std::vector<CheckReport> check_all(int max_size, bool parallel) {
  return {check_bijections(max_size, parallel),
          check_lattice(std::min(max_size, 4), parallel),
          check_cells(max_size, parallel),
          check_volumes(max_size, parallel),
          check_predicates(std::min(max_size, 4), parallel),
          check_shelling(std::min(max_size, 4), parallel)};
}

}  // namespace tamari::verify
