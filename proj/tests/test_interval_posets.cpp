#include <doctest.h>

#include <algorithm>
#include <set>

#include "oracles.hpp"
#include "tamari/interval_poset.hpp"
#include "tamari/tamari_interval.hpp"

using namespace tamari;

namespace {

std::vector<std::pair<int, int>> with_reflexive(int n, std::vector<std::pair<int, int>> pairs) {
  for (int a = 1; a <= n; ++a) {
    pairs.emplace_back(a, a);
  }
  return pairs;
}

// x2 < x1, x3 < x1, x5 < x4, x2 < x4, x3 < x4.
IntervalPoset sample_poset() {
  return IntervalPoset::from_relations(
      5, with_reflexive(5, {{2, 1}, {3, 1}, {5, 4}, {2, 4}, {3, 4}}));
}

}  // namespace

TEST_CASE("validation") {
  CHECK_NOTHROW(IntervalPoset::from_relations(1, {{1, 1}}));
  CHECK_NOTHROW(sample_poset());

  // x3 < x1 without x2 < x1 breaks property (i) at (1, 2, 3).
  const auto bad = [&] {
    std::vector<std::uint8_t> rel(9, 0);
    rel[0 * 3 + 0] = rel[1 * 3 + 1] = rel[2 * 3 + 2] = 1;
    rel[2 * 3 + 0] = 1;
    return scan_relation_matrix(3, rel);
  }();
  REQUIRE(bad.has_value());
  CHECK(bad->kind == PosetViolation::Kind::SpanDecreasing);
  CHECK(bad->i == 1);
  CHECK(bad->j == 2);
  CHECK(bad->k == 3);
  CHECK_THROWS_AS(IntervalPoset::from_relations(3, with_reflexive(3, {{3, 1}})),
                  std::invalid_argument);

  CHECK_THROWS_AS(IntervalPoset::from_relations(2, {{1, 1}, {2, 2}, {1, 2}, {2, 1}}),
                  std::invalid_argument);
  CHECK_THROWS_AS(IntervalPoset::from_relations(2, {{1, 2}}), std::invalid_argument);  // reflexive
  CHECK_THROWS_AS(IntervalPoset::from_relations(2, {{1, 3}}), std::invalid_argument);  // range
}

TEST_CASE("closure of minimalist arcs") {
  const IntervalPoset closed = IntervalPoset::closed_from_arcs(5, {{3, 1}, {2, 4}, {5, 4}});
  CHECK(closed == sample_poset());
  CHECK(closed.decreasing_relations() ==
        std::vector<std::pair<int, int>>{{2, 1}, {3, 1}, {5, 4}});
  CHECK(closed.increasing_relations() ==
        std::vector<std::pair<int, int>>{{2, 4}, {3, 4}});
}

TEST_CASE("chi") {
  const TamariIntervalDiagram zero(TamariDiagram({0, 0, 0}), DualTamariDiagram({0, 0, 0}));
  const IntervalPoset antichain = chi(zero);
  for (int a = 1; a <= 3; ++a) {
    for (int b = 1; b <= 3; ++b) {
      CHECK(antichain.related(a, b) == (a == b));
    }
  }

  const TamariIntervalDiagram sample(TamariDiagram({2, 0, 0, 1, 0}),
                                     DualTamariDiagram({0, 0, 0, 2, 0}));
  CHECK(chi(sample) == sample_poset());

  // Size-10 pair u = 9021043100, v = 0010040002; the minimalist arcs come
  // straight from the letter values.
  const TamariIntervalDiagram big(TamariDiagram({9, 0, 2, 1, 0, 4, 3, 1, 0, 0}),
                                  DualTamariDiagram({0, 0, 1, 0, 0, 4, 0, 0, 0, 2}));
  const IntervalPoset expected = IntervalPoset::closed_from_arcs(
      10, {{10, 1}, {5, 3}, {5, 4}, {10, 6}, {10, 7}, {9, 8}, {2, 3}, {2, 6}, {8, 10}});
  CHECK(chi(big) == expected);
}

TEST_CASE("chi inverse") {
  const IntervalPoset antichain = IntervalPoset::closed_from_arcs(4, {});
  CHECK(chi_inv(antichain) ==
        TamariIntervalDiagram(TamariDiagram({0, 0, 0, 0}), DualTamariDiagram({0, 0, 0, 0})));

  CHECK(chi_inv(sample_poset()) ==
        TamariIntervalDiagram(TamariDiagram({2, 0, 0, 1, 0}), DualTamariDiagram({0, 0, 0, 2, 0})));

  for (int n = 0; n <= 5; ++n) {
    for (const TamariIntervalDiagram& d : enumerate_tids(n)) {
      CHECK(chi_inv(chi(d)) == d);
    }
  }
}

TEST_CASE("rho") {
  const TamariInterval iv = rho(sample_poset());
  CHECK(to_tamari_diagram(iv.lower()).word() == std::vector<int>{2, 0, 0, 1, 0});
  CHECK(to_dual_tamari_diagram(iv.upper()).word() == std::vector<int>{0, 0, 0, 2, 0});

  const IntervalPoset antichain = IntervalPoset::closed_from_arcs(4, {});
  const TamariInterval full = rho(antichain);
  CHECK(full.lower() == BinaryTree::left_comb(4));
  CHECK(full.upper() == BinaryTree::right_comb(4));

  const IntervalPoset tiny = IntervalPoset::from_relations(1, {{1, 1}});
  CHECK(rho(tiny).size() == 1);
}

TEST_CASE("rho agrees with the forest reading") {
  for (int n = 0; n <= 4; ++n) {
    for (const TamariIntervalDiagram& d : enumerate_tids(n)) {
      const IntervalPoset p = chi(d);
      const TamariInterval iv = rho(p);
      CHECK(iv.lower() == oracles::lower_tree_from_forest(p, 1, n));
      CHECK(iv.upper() == oracles::upper_tree_from_forest(p, 1, n));
    }
  }
}

TEST_CASE("rho inverse") {
  CHECK(rho_inv(rho(IntervalPoset::from_relations(1, {{1, 1}}))) ==
        IntervalPoset::from_relations(1, {{1, 1}}));
  CHECK(rho_inv(rho(sample_poset())) == sample_poset());
  for (const TamariInterval& iv : enumerate_intervals(4)) {
    CHECK(rho(rho_inv(iv)) == iv);
  }
}

TEST_CASE("interval construction guards") {
  CHECK_THROWS_AS(TamariInterval(BinaryTree::right_comb(3), BinaryTree::left_comb(3)),
                  std::invalid_argument);
  CHECK_THROWS_AS(TamariInterval(BinaryTree::left_comb(2), BinaryTree::left_comb(3)),
                  std::invalid_argument);
}

TEST_CASE("interval covers") {
  const TamariInterval top(BinaryTree::right_comb(3), BinaryTree::right_comb(3));
  CHECK(interval_covers(top).empty());

  const TamariInterval bottom(BinaryTree::left_comb(3), BinaryTree::left_comb(3));
  CHECK(interval_covers(bottom).size() == 2);

  long long edges = 0;
  for (const TamariInterval& iv : enumerate_intervals(3)) {
    edges += static_cast<long long>(interval_covers(iv).size());
  }
  CHECK(edges == 18);
}

TEST_CASE("interval covers equal the closure covers") {
  for (int n = 1; n <= 4; ++n) {
    const std::vector<TamariInterval> intervals = enumerate_intervals(n);
    for (const TamariInterval& iv : intervals) {
      std::set<TamariInterval> by_closure;
      for (const TamariInterval& other : intervals) {
        if (other == iv || !interval_leq(iv, other)) {
          continue;
        }
        bool strict_middle = false;
        for (const TamariInterval& mid : intervals) {
          if (mid != iv && mid != other && interval_leq(iv, mid) && interval_leq(mid, other)) {
            strict_middle = true;
            break;
          }
        }
        if (!strict_middle) {
          by_closure.insert(other);
        }
      }
      const std::vector<TamariInterval> direct = interval_covers(iv);
      CHECK(by_closure == std::set<TamariInterval>(direct.begin(), direct.end()));
    }
  }
}
