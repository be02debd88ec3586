#include "tamari/cubic.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "tamari/interval_poset.hpp"

namespace tamari {

namespace {

void split_tuple(std::span<const int> comps, std::vector<int>& u, std::vector<int>& v) {
  const int n = static_cast<int>(comps.size()) + 1;
  u.assign(n, 0);
  v.assign(n, 0);
  for (int i = 1; i < n; ++i) {
    const int c = comps[i - 1];
    u[i - 1] = std::max(c, 0);
    v[i] = c < 0 ? -c : 0;
  }
}

}  // namespace

CubicCoordinate::CubicCoordinate(std::vector<int> components)
    : components_(std::move(components)) {
  std::vector<int> u;
  std::vector<int> v;
  split_tuple(components_, u, v);
  if (auto bad = scan_tamari_word(u)) {
    throw std::invalid_argument("not a cubic coordinate: " + bad->describe(false));
  }
  if (auto bad = scan_dual_tamari_word(v)) {
    throw std::invalid_argument("not a cubic coordinate: " + bad->describe(true));
  }
  if (auto bad = compatibility_violation(u, v)) {
    std::ostringstream out;
    out << "not a cubic coordinate: compatibility fails at (i=" << bad->first
        << ", j=" << bad->second << ")";
    throw std::invalid_argument(out.str());
  }
}

bool CubicCoordinate::valid_tuple(std::span<const int> components) {
  std::vector<int> u;
  std::vector<int> v;
  split_tuple(components, u, v);
  return !scan_tamari_word(u) && !scan_dual_tamari_word(v) &&
         !compatibility_violation(u, v);
}

std::optional<CubicCoordinate> CubicCoordinate::try_make(std::vector<int> components) {
  if (!valid_tuple(components)) {
    return std::nullopt;
  }
  return CubicCoordinate(std::move(components), Unchecked{});
}

TamariIntervalDiagram phi(const CubicCoordinate& c) {
  std::vector<int> u;
  std::vector<int> v;
  split_tuple(c.components(), u, v);
  return TamariIntervalDiagram(TamariDiagram(std::move(u)), DualTamariDiagram(std::move(v)));
}

CubicCoordinate phi_inv(const TamariIntervalDiagram& d) {
  const int n = d.size();
  std::vector<int> comps(std::max(n - 1, 0));
  for (int i = 1; i < n; ++i) {
    comps[i - 1] = d.u().at(i) - d.v().at(i + 1);
  }
  return CubicCoordinate(std::move(comps));
}

CubicCoordinate psi(const TamariInterval& iv) { return phi_inv(chi_inv(rho_inv(iv))); }

TamariInterval psi_inv(const CubicCoordinate& c) { return rho(chi(phi(c))); }

bool cc_leq(const CubicCoordinate& a, const CubicCoordinate& b) {
  if (a.size() != b.size()) {
    throw std::invalid_argument("cc_leq: coordinates have different sizes");
  }
  for (int i = 1; i < a.size(); ++i) {
    if (a.component(i) > b.component(i)) {
      return false;
    }
  }
  return true;
}

std::optional<CubicCoordinate> min_increase(const CubicCoordinate& c, int i) {
  const int n = c.size();
  if (i < 1 || i > n - 1) {
    throw std::invalid_argument("min_increase: component index out of range");
  }
  std::vector<int> comps = c.components();
  for (int value = c.component(i) + 1; value <= n - i; ++value) {
    comps[i - 1] = value;
    if (CubicCoordinate::valid_tuple(comps)) {
      return CubicCoordinate(std::move(comps));
    }
  }
  return std::nullopt;
}

std::vector<CubicCoordinate> cc_covers(const CubicCoordinate& c) {
  std::vector<CubicCoordinate> out;
  for (int i = 1; i < c.size(); ++i) {
    if (auto up = min_increase(c, i)) {
      out.push_back(std::move(*up));
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool is_cc_cover(const CubicCoordinate& c, const CubicCoordinate& cp) {
  if (c.size() != cp.size()) {
    return false;
  }
  int diff = 0;
  for (int i = 1; i < c.size(); ++i) {
    if (c.component(i) != cp.component(i)) {
      if (diff != 0 || c.component(i) > cp.component(i)) {
        return false;
      }
      diff = i;
    }
  }
  if (diff == 0) {
    return false;
  }
  auto up = min_increase(c, diff);
  return up && *up == cp;
}

CubicCoordinate zero_component(const CubicCoordinate& c, int i) {
  if (i < 1 || i > c.size() - 1) {
    throw std::invalid_argument("zero_component: component index out of range");
  }
  if (c.component(i) == 0) {
    throw std::invalid_argument("zero_component: component is already zero");
  }
  std::vector<int> comps = c.components();
  comps[i - 1] = 0;
  return CubicCoordinate(std::move(comps));
}

DeltaSets delta_sets(const CubicCoordinate& c, const CubicCoordinate& cp) {
  if (c.size() != cp.size()) {
    throw std::invalid_argument("delta_sets: coordinates have different sizes");
  }
  DeltaSets sets;
  for (int d = 1; d < c.size(); ++d) {
    if (c.component(d) == cp.component(d)) {
      continue;
    }
    if (cp.component(d) <= 0) {
      sets.d_minus.push_back(d);
    }
    if (c.component(d) >= 0) {
      sets.d_plus.push_back(d);
    }
  }
  return sets;
}

std::vector<CubicCoordinate> chain_between(const CubicCoordinate& c,
                                           const CubicCoordinate& cp) {
  if (!cc_leq(c, cp)) {
    throw std::invalid_argument("chain_between: endpoints are not comparable");
  }
  std::vector<CubicCoordinate> chain{c};
  CubicCoordinate cur = c;

  const auto raise_to = [&](int i, int target) {
    while (cur.component(i) < target) {
      auto up = min_increase(cur, i);
      if (!up || up->component(i) > target) {
        throw std::logic_error("chain_between: minimal increase overshot its target");
      }
      cur = std::move(*up);
      chain.push_back(cur);
    }
  };

  // Negative components first, raised to min(target, 0); mixed-sign
  // components pass through zero and are finished in the second sweep.
  for (int i = 1; i < c.size(); ++i) {
    if (cur.component(i) < 0 && cur.component(i) != cp.component(i)) {
      raise_to(i, std::min(cp.component(i), 0));
    }
  }
  for (int i = 1; i < c.size(); ++i) {
    if (cp.component(i) > 0 && cur.component(i) != cp.component(i)) {
      raise_to(i, cp.component(i));
    }
  }
  if (cur != cp) {
    throw std::logic_error("chain_between: chain did not reach its endpoint");
  }
  return chain;
}

CubicCoordinate cc_meet(const CubicCoordinate& a, const CubicCoordinate& b,
                        const TamariLattice& lattice) {
  if (a.size() != b.size()) {
    throw std::invalid_argument("cc_meet: coordinates have different sizes");
  }
  const TamariInterval iva = psi_inv(a);
  const TamariInterval ivb = psi_inv(b);
  const int lo = lattice.meet(lattice.index_of(iva.lower()), lattice.index_of(ivb.lower()));
  const int hi = lattice.meet(lattice.index_of(iva.upper()), lattice.index_of(ivb.upper()));
  return psi(TamariInterval(lattice.tree(lo), lattice.tree(hi)));
}

CubicCoordinate cc_join(const CubicCoordinate& a, const CubicCoordinate& b,
                        const TamariLattice& lattice) {
  if (a.size() != b.size()) {
    throw std::invalid_argument("cc_join: coordinates have different sizes");
  }
  const TamariInterval iva = psi_inv(a);
  const TamariInterval ivb = psi_inv(b);
  const int lo = lattice.join(lattice.index_of(iva.lower()), lattice.index_of(ivb.lower()));
  const int hi = lattice.join(lattice.index_of(iva.upper()), lattice.index_of(ivb.upper()));
  return psi(TamariInterval(lattice.tree(lo), lattice.tree(hi)));
}

namespace {

// Completing c_1..c_k with a new component only adds constraints whose later
// index is the new letter, so checking those per step keeps the search exact.
bool prefix_extension_ok(const std::vector<int>& comps, int pos) {
  const auto u_at = [&](int i) { return std::max(comps[i - 1], 0); };   // i in [1, pos+1]
  const auto v_at = [&](int i) { return std::max(-comps[i - 2], 0); };  // i in [2, pos+2]

  const int k = pos + 1;  // 1-based index of the new component
  const int uk = u_at(k);
  const int vk1 = std::max(-comps[k - 1], 0);  // v_{k+1}

  for (int i = 1; i < k; ++i) {
    const int ui = u_at(i);
    if (k - i <= ui && uk > ui - (k - i)) {
      return false;
    }
    if (ui >= (k + 1) - i && vk1 >= (k + 1) - i) {
      return false;
    }
  }
  for (int j = 1; j <= vk1; ++j) {
    const int prev = k + 1 - j;
    if (prev >= 2 && v_at(prev) > vk1 - j) {
      return false;
    }
    // prev == 1 is v_1 = 0 <= vk1 - j, guaranteed by the range bound.
  }
  return true;
}

void enumerate_rec(int n, int pos, std::vector<int>& comps,
                   std::vector<CubicCoordinate>& out) {
  const int m = n - 1;
  if (pos == m) {
    auto cc = CubicCoordinate::try_make(comps);
    if (!cc) {
      throw std::logic_error("enumerate_cc: pruning accepted an invalid tuple");
    }
    out.push_back(std::move(*cc));
    return;
  }
  const int i = pos + 1;
  for (int value = -i; value <= n - i; ++value) {
    comps[pos] = value;
    if (prefix_extension_ok(comps, pos)) {
      enumerate_rec(n, pos + 1, comps, out);
    }
  }
}

}  // namespace

std::vector<CubicCoordinate> enumerate_cc(int n) {
  if (n < 1) {
    throw std::invalid_argument("enumerate_cc: size must be at least 1");
  }
  std::vector<CubicCoordinate> out;
  std::vector<int> comps(n - 1);
  enumerate_rec(n, 0, comps, out);
  return out;
}

bool is_synchronized(const CubicCoordinate& c) {
  for (int i = 1; i < c.size(); ++i) {
    if (c.component(i) == 0) {
      return false;
    }
  }
  return true;
}

}  // namespace tamari
