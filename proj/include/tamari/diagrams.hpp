#pragma once

#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace tamari {

// Integer words encoding binary trees, 1-based positions throughout.
//
// A word u of length n is a Tamari diagram when
//   (i)  0 <= u[i] <= n - i,
//   (ii) u[i+j] <= u[i] - j            for all j in [0, u[i]].
// A word v is a dual Tamari diagram when
//   (i)  0 <= v[i] <= i - 1,
//   (ii) v[i-j] <= v[i] - j            for all j in [0, v[i]].
// Reversing a dual diagram yields a Tamari diagram and vice versa.

struct WordViolation {
  enum class Rule {
    LetterRange,  // condition (i) at position i
    Slope,        // condition (ii) at position i, offset j
  };
  Rule rule = Rule::LetterRange;
  int i = 0;
  int j = 0;

  std::string describe(bool dual) const;
  bool operator==(const WordViolation&) const = default;
};

// Both scans report the lexicographically smallest failing (i, j).
std::optional<WordViolation> scan_tamari_word(std::span<const int> word);
std::optional<WordViolation> scan_dual_tamari_word(std::span<const int> word);

class TamariDiagram {
 public:
  TamariDiagram() = default;
  explicit TamariDiagram(std::vector<int> word);  // throws std::invalid_argument

  int size() const { return static_cast<int>(word_.size()); }
  int at(int i) const { return word_[i - 1]; }  // 1-based
  const std::vector<int>& word() const { return word_; }

  auto operator<=>(const TamariDiagram&) const = default;

 private:
  std::vector<int> word_;
};

class DualTamariDiagram {
 public:
  DualTamariDiagram() = default;
  explicit DualTamariDiagram(std::vector<int> word);  // throws std::invalid_argument

  int size() const { return static_cast<int>(word_.size()); }
  int at(int i) const { return word_[i - 1]; }
  const std::vector<int>& word() const { return word_; }

  auto operator<=>(const DualTamariDiagram&) const = default;

 private:
  std::vector<int> word_;
};

// First pair (i, j) with i < j, u[i] >= j-i and v[j] >= j-i; nullopt when the
// words are compatible.
std::optional<std::pair<int, int>> compatibility_violation(std::span<const int> u,
                                                           std::span<const int> v);

// Throws std::invalid_argument on length mismatch.
bool compatible(const TamariDiagram& u, const DualTamariDiagram& v);

// A compatible pair (u, v). Compatibility means u[i] >= j-i implies
// v[j] < j-i for every i < j; in particular u[i] and v[i+1] are never both
// non-zero.
class TamariIntervalDiagram {
 public:
  TamariIntervalDiagram() = default;  // size 0
  TamariIntervalDiagram(TamariDiagram u, DualTamariDiagram v);  // throws

  int size() const { return u_.size(); }
  const TamariDiagram& u() const { return u_; }
  const DualTamariDiagram& v() const { return v_; }

  auto operator<=>(const TamariIntervalDiagram&) const = default;

 private:
  TamariDiagram u_;
  DualTamariDiagram v_;
};

// No index i in [1, n-1] with u[i] = 0 and v[i+1] = 0.
bool is_synchronized(const TamariIntervalDiagram& d);

// Strict bounds everywhere: u[i] <= n-i-1, v[j] <= j-2, and for k+1 < l never
// both u[k] and v[l] reach l-k-1. Throws for sizes below 3.
bool is_new(const TamariIntervalDiagram& d);

// All Tamari interval diagrams of size n, sorted by (u, v).
std::vector<TamariIntervalDiagram> enumerate_tids(int n);

}  // namespace tamari
