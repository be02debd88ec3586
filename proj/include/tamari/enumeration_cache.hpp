#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "tamari/binary_tree.hpp"
#include "tamari/cubic.hpp"
#include "tamari/diagrams.hpp"

namespace tamari {

// Persists enumerations as line-delimited JSON, one file per (kind, n). The
// first line is a header carrying the element count and an FNV-1a checksum of
// the data lines; a missing, corrupt, or mismatching file is rebuilt.
class EnumerationCache {
 public:
  explicit EnumerationCache(std::filesystem::path dir);

  std::vector<CubicCoordinate> coordinates(int n, bool* rebuilt = nullptr);
  std::vector<BinaryTree> trees(int n, bool* rebuilt = nullptr);
  std::vector<TamariIntervalDiagram> interval_diagrams(int n, bool* rebuilt = nullptr);

  struct Status {
    bool present = false;
    bool valid = false;
    long long count = 0;
  };
  Status status(const std::string& kind, int n) const;

  std::filesystem::path file_for(const std::string& kind, int n) const;
  const std::filesystem::path& dir() const { return dir_; }

  // Resolves the cache directory from the environment (TAMARI_CACHE_DIR);
  // empty when unset.
  static std::filesystem::path env_dir();

 private:
  std::filesystem::path dir_;
};

}  // namespace tamari
