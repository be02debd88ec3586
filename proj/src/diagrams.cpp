#include "tamari/diagrams.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "tamari/binary_tree.hpp"

namespace tamari {

std::string WordViolation::describe(bool dual) const {
  std::ostringstream out;
  out << (dual ? "dual Tamari diagram" : "Tamari diagram");
  if (rule == Rule::LetterRange) {
    out << " condition (i) fails at i=" << i;
  } else {
    out << " condition (ii) fails at (i=" << i << ", j=" << j << ")";
  }
  return out.str();
}

std::optional<WordViolation> scan_tamari_word(std::span<const int> word) {
  const int n = static_cast<int>(word.size());
  for (int i = 1; i <= n; ++i) {
    const int ui = word[i - 1];
    if (ui < 0 || ui > n - i) {
      return WordViolation{WordViolation::Rule::LetterRange, i, 0};
    }
    for (int j = 1; j <= ui; ++j) {
      if (word[i + j - 1] > ui - j) {
        return WordViolation{WordViolation::Rule::Slope, i, j};
      }
    }
  }
  return std::nullopt;
}

std::optional<WordViolation> scan_dual_tamari_word(std::span<const int> word) {
  const int n = static_cast<int>(word.size());
  for (int i = 1; i <= n; ++i) {
    const int vi = word[i - 1];
    if (vi < 0 || vi > i - 1) {
      return WordViolation{WordViolation::Rule::LetterRange, i, 0};
    }
    for (int j = 1; j <= vi; ++j) {
      if (word[i - j - 1] > vi - j) {
        return WordViolation{WordViolation::Rule::Slope, i, j};
      }
    }
  }
  return std::nullopt;
}

TamariDiagram::TamariDiagram(std::vector<int> word) : word_(std::move(word)) {
  if (auto bad = scan_tamari_word(word_)) {
    throw std::invalid_argument(bad->describe(false));
  }
}

DualTamariDiagram::DualTamariDiagram(std::vector<int> word) : word_(std::move(word)) {
  if (auto bad = scan_dual_tamari_word(word_)) {
    throw std::invalid_argument(bad->describe(true));
  }
}

std::optional<std::pair<int, int>> compatibility_violation(std::span<const int> u,
                                                           std::span<const int> v) {
  const int n = static_cast<int>(u.size());
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= i + u[i - 1] && j <= n; ++j) {
      if (v[j - 1] >= j - i) {
        return std::make_pair(i, j);
      }
    }
  }
  return std::nullopt;
}

bool compatible(const TamariDiagram& u, const DualTamariDiagram& v) {
  if (u.size() != v.size()) {
    throw std::invalid_argument("compatible: words have different lengths");
  }
  return !compatibility_violation(u.word(), v.word()).has_value();
}

TamariIntervalDiagram::TamariIntervalDiagram(TamariDiagram u, DualTamariDiagram v)
    : u_(std::move(u)), v_(std::move(v)) {
  if (u_.size() != v_.size()) {
    throw std::invalid_argument("Tamari interval diagram: words have different lengths");
  }
  if (auto bad = compatibility_violation(u_.word(), v_.word())) {
    std::ostringstream out;
    out << "incompatible diagrams: u[" << bad->first << "] >= " << (bad->second - bad->first)
        << " but v[" << bad->second << "] >= " << (bad->second - bad->first);
    throw std::invalid_argument(out.str());
  }
}

bool is_synchronized(const TamariIntervalDiagram& d) {
  for (int i = 1; i < d.size(); ++i) {
    if (d.u().at(i) == 0 && d.v().at(i + 1) == 0) {
      return false;
    }
  }
  return true;
}

bool is_new(const TamariIntervalDiagram& d) {
  const int n = d.size();
  if (n < 3) {
    throw std::invalid_argument("is_new: defined for size >= 3 only");
  }
  for (int i = 1; i <= n - 1; ++i) {
    if (d.u().at(i) > n - i - 1) {
      return false;
    }
  }
  for (int j = 2; j <= n; ++j) {
    if (d.v().at(j) > j - 2) {
      return false;
    }
  }
  for (int k = 1; k <= n; ++k) {
    for (int l = k + 2; l <= n; ++l) {
      if (d.u().at(k) >= l - k - 1 && d.v().at(l) >= l - k - 1) {
        return false;
      }
    }
  }
  return true;
}

std::vector<TamariIntervalDiagram> enumerate_tids(int n) {
  // Candidate words come from the tree enumeration (every Tamari diagram
  // encodes a tree); pairs are then filtered by compatibility.
  std::vector<std::vector<int>> us;
  std::vector<std::vector<int>> vs;
  for (const BinaryTree& t : enumerate_trees(n)) {
    us.push_back(to_tamari_diagram(t).word());
    vs.push_back(to_dual_tamari_diagram(t).word());
  }
  std::sort(us.begin(), us.end());
  std::sort(vs.begin(), vs.end());

  std::vector<TamariIntervalDiagram> out;
  for (const auto& u : us) {
    for (const auto& v : vs) {
      if (!compatibility_violation(u, v)) {
        out.emplace_back(TamariDiagram(u), DualTamariDiagram(v));
      }
    }
  }
  return out;
}

}  // namespace tamari
