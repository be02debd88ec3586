#include <doctest.h>

#include <algorithm>
#include <set>

#include "oracles.hpp"
#include "tamari/cubic.hpp"
#include "tamari/interval_poset.hpp"

using namespace tamari;

namespace {

const std::vector<int> kBigTuple = {9, -1, 2, 1, -4, 4, 3, 1, -2};

TamariIntervalDiagram big_pair() {
  return TamariIntervalDiagram(TamariDiagram({9, 0, 2, 1, 0, 4, 3, 1, 0, 0}),
                               DualTamariDiagram({0, 0, 1, 0, 0, 4, 0, 0, 0, 2}));
}

TamariInterval sample_interval() {
  return rho(IntervalPoset::closed_from_arcs(5, {{3, 1}, {2, 4}, {5, 4}}));
}

}  // namespace

TEST_CASE("construction validates") {
  CHECK_NOTHROW(CubicCoordinate{kBigTuple});
  CHECK_NOTHROW(CubicCoordinate{});
  CHECK_THROWS_AS(CubicCoordinate({1, 1}), std::invalid_argument);
  CHECK_THROWS_AS(CubicCoordinate({-1, -1}), std::invalid_argument);
  CHECK_THROWS_AS(CubicCoordinate({3, 0}), std::invalid_argument);  // letter range
  CHECK(!CubicCoordinate::try_make({1, 1}).has_value());
  CHECK(CubicCoordinate::try_make({2, 1}).has_value());
}

TEST_CASE("phi and its inverse") {
  CHECK(phi(CubicCoordinate(kBigTuple)) == big_pair());
  CHECK(phi_inv(big_pair()) == CubicCoordinate(kBigTuple));

  CHECK(phi(CubicCoordinate({0, 0, 0})) ==
        TamariIntervalDiagram(TamariDiagram({0, 0, 0, 0}), DualTamariDiagram({0, 0, 0, 0})));
  CHECK(phi(CubicCoordinate({2, 0, -2, 1})) ==
        TamariIntervalDiagram(TamariDiagram({2, 0, 0, 1, 0}), DualTamariDiagram({0, 0, 0, 2, 0})));

  for (int n = 1; n <= 5; ++n) {
    for (const CubicCoordinate& c : enumerate_cc(n)) {
      CHECK(phi_inv(phi(c)) == c);
    }
    for (const TamariIntervalDiagram& d : enumerate_tids(n)) {
      CHECK(phi(phi_inv(d)) == d);
    }
  }
}

TEST_CASE("psi and its inverse") {
  const BinaryTree single = BinaryTree::node(BinaryTree(), BinaryTree());
  CHECK(psi(TamariInterval(single, single)) == CubicCoordinate{});
  CHECK(psi_inv(CubicCoordinate{}) == TamariInterval(single, single));
  CHECK(psi(sample_interval()) == CubicCoordinate({2, 0, -2, 1}));
  CHECK(psi_inv(CubicCoordinate({2, 0, -2, 1})) == sample_interval());

  std::set<CubicCoordinate> image;
  for (const TamariInterval& iv : enumerate_intervals(4)) {
    image.insert(psi(iv));
  }
  CHECK(image.size() == 68);

  for (const CubicCoordinate& c : enumerate_cc(4)) {
    CHECK(psi(psi_inv(c)) == c);
  }
}

TEST_CASE("componentwise order") {
  CHECK(cc_leq(CubicCoordinate({-1, -2}), CubicCoordinate({2, 1})));
  CHECK(!cc_leq(CubicCoordinate({2, 1}), CubicCoordinate({-1, -2})));
  CHECK_THROWS_AS(cc_leq(CubicCoordinate({0}), CubicCoordinate({0, 0})), std::invalid_argument);
  for (const CubicCoordinate& c : enumerate_cc(4)) {
    CHECK(cc_leq(c, c));
  }
}

TEST_CASE("minimal increase") {
  CHECK(min_increase(CubicCoordinate({-1, -2}), 1) == CubicCoordinate({0, -2}));
  CHECK(min_increase(CubicCoordinate({0, 1}), 1) == CubicCoordinate({2, 1}));  // jumps over (1,1)
  CHECK(!min_increase(CubicCoordinate({2, 1}), 1).has_value());
  CHECK_THROWS_AS(min_increase(CubicCoordinate({0, 0}), 3), std::invalid_argument);

  // Sign law: a negative component never climbs past zero in one cover.
  for (int n = 2; n <= 5; ++n) {
    for (const CubicCoordinate& c : enumerate_cc(n)) {
      for (int i = 1; i < n; ++i) {
        const auto up = min_increase(c, i);
        if (!up.has_value()) {
          continue;
        }
        if (c.component(i) < 0) {
          CHECK(up->component(i) <= 0);
        } else {
          CHECK(up->component(i) > 0);
        }
      }
    }
  }
}

TEST_CASE("covers") {
  CHECK(cc_covers(CubicCoordinate({2, 1})).empty());
  CHECK(cc_covers(CubicCoordinate({0, 0})) ==
        std::vector<CubicCoordinate>{CubicCoordinate({0, 1}), CubicCoordinate({1, 0})});

  long long edges = 0;
  for (const CubicCoordinate& c : enumerate_cc(3)) {
    edges += static_cast<long long>(cc_covers(c).size());
  }
  CHECK(edges == 18);

  CHECK(is_cc_cover(CubicCoordinate({-1, -2}), CubicCoordinate({0, -2})));
  CHECK(!is_cc_cover(CubicCoordinate({-1, -2}), CubicCoordinate({0, 0})));
  CHECK(!is_cc_cover(CubicCoordinate({0, -2}), CubicCoordinate({-1, -2})));
}

TEST_CASE("covers characterize the order") {
  // c' covers c exactly when one component differs and nothing fits between.
  const std::vector<CubicCoordinate> coords = enumerate_cc(4);
  for (const CubicCoordinate& a : coords) {
    const std::vector<CubicCoordinate> ups = cc_covers(a);
    for (const CubicCoordinate& b : coords) {
      if (a == b || !cc_leq(a, b)) {
        continue;
      }
      bool strict_middle = false;
      for (const CubicCoordinate& z : coords) {
        if (z != a && z != b && cc_leq(a, z) && cc_leq(z, b)) {
          strict_middle = true;
          break;
        }
      }
      const bool listed = std::binary_search(ups.begin(), ups.end(), b);
      CHECK(listed == !strict_middle);
      CHECK(listed == is_cc_cover(a, b));
    }
  }
}

TEST_CASE("zero component") {
  CHECK(zero_component(CubicCoordinate(kBigTuple), 1) ==
        CubicCoordinate({0, -1, 2, 1, -4, 4, 3, 1, -2}));
  CHECK(zero_component(CubicCoordinate({-1, -2}), 2) == CubicCoordinate({-1, 0}));
  CHECK(zero_component(CubicCoordinate({1}), 1) == CubicCoordinate({0}));
  CHECK_THROWS_AS(zero_component(CubicCoordinate({0, 1}), 1), std::invalid_argument);

  for (const CubicCoordinate& c : enumerate_cc(5)) {
    for (int i = 1; i < 5; ++i) {
      if (c.component(i) != 0) {
        CHECK_NOTHROW(zero_component(c, i));
      }
    }
  }
}

TEST_CASE("delta sets") {
  const DeltaSets sets = delta_sets(CubicCoordinate({-1, -2}), CubicCoordinate({2, 1}));
  CHECK(sets.d_minus.empty());  // both targets are positive
  CHECK(sets.d_plus.empty());   // both starts are negative: the chain crosses zero

  const DeltaSets mixed = delta_sets(CubicCoordinate({-1, 0}), CubicCoordinate({-1, 1}));
  CHECK(mixed.d_minus.empty());
  CHECK(mixed.d_plus == std::vector<int>{2});

  const DeltaSets down = delta_sets(CubicCoordinate({0, -2}), CubicCoordinate({0, -1}));
  CHECK(down.d_minus == std::vector<int>{2});
  CHECK(down.d_plus.empty());

  // Disjoint on every comparable pair.
  for (const CubicCoordinate& a : enumerate_cc(4)) {
    for (const CubicCoordinate& b : enumerate_cc(4)) {
      if (!cc_leq(a, b)) {
        continue;
      }
      const DeltaSets s = delta_sets(a, b);
      for (int d : s.d_minus) {
        CHECK(!std::count(s.d_plus.begin(), s.d_plus.end(), d));
      }
    }
  }
}

TEST_CASE("canonical chain") {
  const std::vector<CubicCoordinate> chain =
      chain_between(CubicCoordinate({-1, -2}), CubicCoordinate({2, 1}));
  const std::vector<CubicCoordinate> expected = {
      CubicCoordinate({-1, -2}), CubicCoordinate({0, -2}), CubicCoordinate({0, -1}),
      CubicCoordinate({0, 0}),   CubicCoordinate({1, 0}),  CubicCoordinate({2, 0}),
      CubicCoordinate({2, 1})};
  CHECK(chain == expected);

  CHECK(chain_between(CubicCoordinate({0, 1}), CubicCoordinate({0, 1})).size() == 1);
  CHECK_THROWS_AS(chain_between(CubicCoordinate({2, 1}), CubicCoordinate({-1, -2})),
                  std::invalid_argument);

  const std::vector<CubicCoordinate> coords = enumerate_cc(4);
  for (const CubicCoordinate& a : coords) {
    for (const CubicCoordinate& b : coords) {
      if (!cc_leq(a, b)) {
        continue;
      }
      const std::vector<CubicCoordinate> steps = chain_between(a, b);
      CHECK(steps.front() == a);
      CHECK(steps.back() == b);
      for (size_t k = 0; k + 1 < steps.size(); ++k) {
        CHECK(is_cc_cover(steps[k], steps[k + 1]));
      }
    }
  }
}

TEST_CASE("meet and join") {
  const TamariLattice lattice3(3);
  CHECK(cc_join(CubicCoordinate({-1, 1}), CubicCoordinate({1, -2}), lattice3) ==
        CubicCoordinate({2, 1}));
  CHECK(cc_meet(CubicCoordinate({-1, 1}), CubicCoordinate({1, -2}), lattice3) ==
        CubicCoordinate({-1, -2}));
  CHECK(!CubicCoordinate::valid_tuple(std::vector<int>{1, 1}));  // componentwise max fails

  const TamariLattice lattice4(4);
  for (const CubicCoordinate& c : enumerate_cc(4)) {
    CHECK(cc_join(c, c, lattice4) == c);
    CHECK(cc_meet(c, c, lattice4) == c);
  }
  CHECK_THROWS_AS(cc_meet(CubicCoordinate({0}), CubicCoordinate({0, 0}), lattice3),
                  std::invalid_argument);
}

TEST_CASE("enumeration") {
  CHECK(enumerate_cc(1) == std::vector<CubicCoordinate>{CubicCoordinate{}});
  const std::vector<long long> expected = {1, 3, 13, 68, 399, 2530};
  for (int n = 1; n <= 6; ++n) {
    const auto coords = enumerate_cc(n);
    CHECK(static_cast<long long>(coords.size()) == expected[n - 1]);
    CHECK(std::is_sorted(coords.begin(), coords.end()));
    CHECK(std::adjacent_find(coords.begin(), coords.end()) == coords.end());
  }
  for (const CubicCoordinate& c : enumerate_cc(5)) {
    CHECK(CubicCoordinate::valid_tuple(c.components()));
  }
  CHECK_THROWS_AS(enumerate_cc(0), std::invalid_argument);
}

TEST_CASE("synchronized coordinates") {
  CHECK(is_synchronized(CubicCoordinate({-1, -2})));
  CHECK(!is_synchronized(CubicCoordinate({0, 0})));
  CHECK(is_synchronized(CubicCoordinate{}));  // vacuous at size 1

  // Diagram-level and coordinate-level notions agree through phi.
  for (const CubicCoordinate& c : enumerate_cc(4)) {
    CHECK(is_synchronized(c) == is_synchronized(phi(c)));
  }
}
