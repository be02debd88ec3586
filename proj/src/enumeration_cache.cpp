#include "tamari/enumeration_cache.hpp"

#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "tamari/serialization.hpp"

namespace tamari {

namespace {

std::string fnv1a_hex(const std::string& data) {
  std::uint64_t hash = 1469598103934665603ull;
  for (unsigned char byte : data) {
    hash ^= byte;
    hash *= 1099511628211ull;
  }
  std::ostringstream out;
  out << std::hex << hash;
  return out.str();
}

struct FileContent {
  bool valid = false;
  std::vector<std::string> lines;
};

FileContent read_checked(const std::filesystem::path& path, const std::string& kind, int n) {
  FileContent content;
  std::ifstream in(path);
  if (!in) {
    return content;
  }
  std::string header_line;
  if (!std::getline(in, header_line)) {
    return content;
  }
  nlohmann::json header;
  try {
    header = nlohmann::json::parse(header_line);
  } catch (const nlohmann::json::exception&) {
    return content;
  }
  if (!header.is_object() || header.value("kind", "") != kind || header.value("n", -1) != n) {
    return content;
  }
  std::string data;
  std::string line;
  while (std::getline(in, line)) {
    content.lines.push_back(line);
    data += line;
    data += '\n';
  }
  if (header.value("count", -1) != static_cast<long long>(content.lines.size()) ||
      header.value("checksum", "") != fnv1a_hex(data)) {
    content.lines.clear();
    return content;
  }
  content.valid = true;
  return content;
}

void write_checked(const std::filesystem::path& path, const std::string& kind, int n,
                   const std::vector<std::string>& lines) {
  std::filesystem::create_directories(path.parent_path());
  std::string data;
  for (const std::string& line : lines) {
    data += line;
    data += '\n';
  }
  nlohmann::json header = {{"kind", kind},
                           {"n", n},
                           {"count", static_cast<long long>(lines.size())},
                           {"checksum", fnv1a_hex(data)}};
  std::ofstream out(path, std::ios::trunc);
  out << header.dump() << "\n" << data;
}

// Loads kind/n through the checksum gate, rebuilding via the callbacks on
// any mismatch.
template <typename T, typename Enumerate, typename Dump, typename Parse>
std::vector<T> load_or_build(const std::filesystem::path& path, const std::string& kind, int n,
                             Enumerate&& enumerate, Dump&& dump, Parse&& parse, bool* rebuilt) {
  FileContent content = read_checked(path, kind, n);
  if (content.valid) {
    try {
      std::vector<T> out;
      out.reserve(content.lines.size());
      for (const std::string& line : content.lines) {
        out.push_back(parse(nlohmann::json::parse(line)));
      }
      if (rebuilt) {
        *rebuilt = false;
      }
      return out;
    } catch (const std::exception&) {
      // fall through to rebuild
    }
  }
  std::vector<T> fresh = enumerate();
  std::vector<std::string> lines;
  lines.reserve(fresh.size());
  for (const T& item : fresh) {
    lines.push_back(dump(item).dump());
  }
  write_checked(path, kind, n, lines);
  if (rebuilt) {
    *rebuilt = true;
  }
  return fresh;
}

}  // namespace

EnumerationCache::EnumerationCache(std::filesystem::path dir) : dir_(std::move(dir)) {}

std::filesystem::path EnumerationCache::file_for(const std::string& kind, int n) const {
  return dir_ / (kind + "-" + std::to_string(n) + ".jsonl");
}

std::vector<CubicCoordinate> EnumerationCache::coordinates(int n, bool* rebuilt) {
  return load_or_build<CubicCoordinate>(
      file_for("cc", n), "cc", n, [n] { return enumerate_cc(n); },
      [](const CubicCoordinate& c) { return cc_to_json(c); },
      [](const nlohmann::json& j) { return cc_from_json(j); }, rebuilt);
}

std::vector<BinaryTree> EnumerationCache::trees(int n, bool* rebuilt) {
  return load_or_build<BinaryTree>(
      file_for("trees", n), "trees", n, [n] { return enumerate_trees(n); },
      [](const BinaryTree& t) { return tree_to_json(t); },
      [](const nlohmann::json& j) { return tree_from_json(j); }, rebuilt);
}

std::vector<TamariIntervalDiagram> EnumerationCache::interval_diagrams(int n, bool* rebuilt) {
  return load_or_build<TamariIntervalDiagram>(
      file_for("tid", n), "tid", n, [n] { return enumerate_tids(n); },
      [](const TamariIntervalDiagram& d) { return tid_to_json(d); },
      [](const nlohmann::json& j) { return tid_from_json(j); }, rebuilt);
}

EnumerationCache::Status EnumerationCache::status(const std::string& kind, int n) const {
  Status status;
  const auto path = file_for(kind, n);
  status.present = std::filesystem::exists(path);
  if (status.present) {
    FileContent content = read_checked(path, kind, n);
    status.valid = content.valid;
    status.count = static_cast<long long>(content.lines.size());
  }
  return status;
}

std::filesystem::path EnumerationCache::env_dir() {
  const char* dir = std::getenv("TAMARI_CACHE_DIR");
  return dir ? std::filesystem::path(dir) : std::filesystem::path();
}

}  // namespace tamari
