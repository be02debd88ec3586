#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "tamari/cells.hpp"
#include "tamari/cubic.hpp"
#include "tamari/enumeration_cache.hpp"
#include "tamari/realization.hpp"
#include "tamari/serialization.hpp"
#include "tamari/shelling.hpp"
#include "tamari/verify.hpp"

namespace {

constexpr int kEnumerationCap = 6;
constexpr int kFullShellingCap = 4;

int effective_cap(int default_cap, int override_cap, const std::string& what) {
  if (override_cap <= 0) {
    return default_cap;
  }
  if (override_cap > default_cap) {
    std::cerr << "warning: raising the " << what << " cap to " << override_cap
              << "; expect long runtimes\n";
  }
  return override_cap;
}

void require_within_cap(int n, int cap) {
  if (n > cap) {
    std::ostringstream out;
    out << "size " << n << " exceeds the cap " << cap << " (use --cap-override to raise it)";
    throw CLI::ValidationError(out.str());
  }
}

std::filesystem::path resolve_cache_dir(const std::string& flag) {
  if (!flag.empty()) {
    return flag;
  }
  return tamari::EnumerationCache::env_dir();
}

std::string read_input(const std::string& value, const std::string& file) {
  std::string text;
  if (!file.empty()) {
    std::ifstream in(file);
    if (!in) {
      throw CLI::ValidationError("cannot open input file " + file);
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    text = buffer.str();
  } else if (value.empty() || value == "-") {
    std::ostringstream buffer;
    buffer << std::cin.rdbuf();
    text = buffer.str();
  } else {
    text = value;
  }
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) {
    text.pop_back();
  }
  return text;
}

void write_output(const std::string& path, const std::string& content) {
  if (path.empty()) {
    std::cout << content;
    return;
  }
  std::ofstream out(path, std::ios::trunc);
  if (!out) {
    throw CLI::ValidationError("cannot open output file " + path);
  }
  out << content;
}

struct Counts {
  long long cc = 0;
  long long synchronized_count = 0;
  long long cells = 0;
  long long trees = 0;
  long long edges = 0;
};

Counts compute_counts(int n, const std::filesystem::path& cache_dir) {
  std::vector<tamari::CubicCoordinate> coords;
  long long tree_count = 0;
  if (!cache_dir.empty()) {
    tamari::EnumerationCache cache(cache_dir);
    coords = cache.coordinates(n);
    tree_count = static_cast<long long>(cache.trees(n).size());
  } else {
    coords = tamari::enumerate_cc(n);
    tree_count = static_cast<long long>(tamari::enumerate_trees(n).size());
  }

  Counts counts;
  counts.cc = static_cast<long long>(coords.size());
  counts.trees = tree_count;
  for (const tamari::CubicCoordinate& c : coords) {
    counts.synchronized_count += tamari::is_synchronized(c) ? 1 : 0;
    counts.cells += tamari::is_minimal_cellular(c) ? 1 : 0;
    counts.edges += static_cast<long long>(tamari::cc_covers(c).size());
  }
  return counts;
}

// Conversion hub: every representation goes through a cubic coordinate.
tamari::CubicCoordinate parse_as_cc(const std::string& from, const std::string& text, bool json) {
  if (from == "cc") {
    return json ? tamari::cc_from_json(nlohmann::json::parse(text)) : tamari::cc_from_text(text);
  }
  if (from == "tid") {
    const tamari::TamariIntervalDiagram d =
        json ? tamari::tid_from_json(nlohmann::json::parse(text)) : tamari::tid_from_text(text);
    return tamari::phi_inv(d);
  }
  if (from == "interval-poset") {
    return tamari::phi_inv(tamari::chi_inv(tamari::poset_from_json(nlohmann::json::parse(text))));
  }
  if (from == "tree-pair") {
    const tamari::TamariInterval iv = json
                                          ? tamari::interval_from_json(nlohmann::json::parse(text))
                                          : tamari::interval_from_text(text);
    return tamari::psi(iv);
  }
  throw CLI::ValidationError("unknown source format " + from);
}

std::string render_from_cc(const std::string& to, const tamari::CubicCoordinate& c, bool json) {
  if (to == "cc") {
    return json ? tamari::cc_to_json(c).dump() : tamari::cc_to_text(c);
  }
  if (to == "tid") {
    const tamari::TamariIntervalDiagram d = tamari::phi(c);
    return json ? tamari::tid_to_json(d).dump() : tamari::tid_to_text(d);
  }
  if (to == "interval-poset") {
    return tamari::poset_to_json(tamari::chi(tamari::phi(c))).dump();
  }
  if (to == "tree-pair") {
    const tamari::TamariInterval iv = tamari::psi_inv(c);
    return json ? tamari::interval_to_json(iv).dump() : tamari::interval_to_text(iv);
  }
  throw CLI::ValidationError("unknown target format " + to);
}

nlohmann::json report_to_json(const tamari::verify::CheckReport& report) {
  return {{"suite", report.suite},
          {"max_size", report.max_size},
          {"pairs", report.checked},
          {"failures", report.failures},
          {"seconds", report.seconds}};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Tamari interval toolbox: bijections, coordinate lattices, cells, shelling"};
  app.require_subcommand(1);

  // count
  auto* count_cmd = app.add_subcommand("count", "Object counts for one size");
  int count_n = 0;
  int count_override = 0;
  bool count_json = false;
  std::string count_cache;
  count_cmd->add_option("--n", count_n, "size")->required();
  count_cmd->add_option("--cap-override", count_override, "raise the enumeration cap");
  count_cmd->add_option("--cache-dir", count_cache, "enumeration cache directory");
  count_cmd->add_flag("--json", count_json, "JSON output");

  // convert
  auto* convert_cmd = app.add_subcommand("convert", "Convert between representations");
  std::string convert_from;
  std::string convert_to;
  std::string convert_format = "text";
  std::string convert_input;
  std::string convert_input_file;
  const std::vector<std::string> formats{"tree-pair", "interval-poset", "tid", "cc"};
  convert_cmd->add_option("--from", convert_from, "source representation")
      ->required()
      ->check(CLI::IsMember(formats));
  convert_cmd->add_option("--to", convert_to, "target representation")
      ->required()
      ->check(CLI::IsMember(formats));
  convert_cmd->add_option("--format", convert_format, "text or json")
      ->check(CLI::IsMember({"text", "json"}));
  convert_cmd->add_option("object", convert_input, "object to convert ('-' for stdin)");
  convert_cmd->add_option("--input", convert_input_file, "read the object from a file");

  // export
  auto* export_cmd = app.add_subcommand("export", "Export the realization graph");
  int export_n = 0;
  int export_override = 0;
  std::string export_format = "dot";
  std::string export_output;
  export_cmd->add_option("--n", export_n, "size")->required();
  export_cmd->add_option("--format", export_format, "dot or json")
      ->check(CLI::IsMember({"dot", "json"}));
  export_cmd->add_option("--output", export_output, "output file (stdout when absent)");
  export_cmd->add_option("--cap-override", export_override, "raise the enumeration cap");

  // check
  auto* check_cmd = app.add_subcommand("check", "Run verification suites");
  int check_n = 0;
  int check_override = 0;
  bool check_json = false;
  bool check_serial = false;
  bool check_certificates = false;
  std::string check_suite = "all";
  check_cmd->add_option("--n", check_n, "largest size to check")->required();
  check_cmd
      ->add_option("--suite", check_suite,
                   "bijections, lattice, cells, volumes, predicates, shelling, or all")
      ->check(CLI::IsMember(
          {"bijections", "lattice", "cells", "volumes", "predicates", "shelling", "all"}));
  check_cmd->add_flag("--json", check_json, "JSON report");
  check_cmd->add_flag("--serial", check_serial, "serial sweeps (reference drivers)");
  check_cmd->add_flag("--certificates", check_certificates,
                      "emit each comparable pair's increasing chain (shelling)");
  check_cmd->add_option("--cap-override", check_override, "raise the caps");

  // cells
  auto* cells_cmd = app.add_subcommand("cells", "List the cells of one size");
  int cells_n = 0;
  int cells_override = 0;
  cells_cmd->add_option("--n", cells_n, "size")->required();
  cells_cmd->add_option("--cap-override", cells_override, "raise the enumeration cap");

  // volume
  auto* volume_cmd = app.add_subcommand("volume", "Cell volumes and their total");
  int volume_n = 0;
  int volume_override = 0;
  volume_cmd->add_option("--n", volume_n, "size")->required();
  volume_cmd->add_option("--cap-override", volume_override, "raise the enumeration cap");

  // cache
  auto* cache_cmd = app.add_subcommand("cache", "Manage the enumeration cache");
  cache_cmd->require_subcommand(1);
  auto* cache_build = cache_cmd->add_subcommand("build", "Build caches for sizes 1..N");
  auto* cache_status = cache_cmd->add_subcommand("status", "Report cache state for sizes 1..N");
  int cache_n = 0;
  int cache_override = 0;
  std::string cache_dir_flag;
  for (auto* sub : {cache_build, cache_status}) {
    sub->add_option("--n", cache_n, "largest size")->required();
    sub->add_option("--cache-dir", cache_dir_flag,
                    "cache directory (TAMARI_CACHE_DIR when absent)");
    sub->add_option("--cap-override", cache_override, "raise the enumeration cap");
  }

  CLI11_PARSE(app, argc, argv);

  try {
    if (*count_cmd) {
      require_within_cap(count_n, effective_cap(kEnumerationCap, count_override, "enumeration"));
      const Counts counts = compute_counts(count_n, resolve_cache_dir(count_cache));
      if (count_json) {
        nlohmann::json j = {{"n", count_n},
                            {"cc", counts.cc},
                            {"synchronized", counts.synchronized_count},
                            {"cells", counts.cells},
                            {"trees", counts.trees},
                            {"edges", counts.edges}};
        std::cout << j.dump() << "\n";
      } else {
        std::cout << "n=" << count_n << " cc=" << counts.cc
                  << " synchronized=" << counts.synchronized_count << " cells=" << counts.cells
                  << " trees=" << counts.trees << " edges=" << counts.edges << "\n";
      }
      return 0;
    }

    if (*convert_cmd) {
      const bool json = convert_format == "json";
      const std::string text = read_input(convert_input, convert_input_file);
      const tamari::CubicCoordinate c = parse_as_cc(convert_from, text, json);
      std::cout << render_from_cc(convert_to, c, json) << "\n";
      return 0;
    }

    if (*export_cmd) {
      require_within_cap(export_n, effective_cap(kEnumerationCap, export_override, "enumeration"));
      const tamari::RealizationGraph graph = tamari::build_realization(export_n);
      if (export_format == "dot") {
        write_output(export_output, tamari::to_dot(graph));
      } else {
        write_output(export_output, tamari::realization_to_json(graph).dump(2) + "\n");
      }
      return 0;
    }

    if (*check_cmd) {
      require_within_cap(check_n, effective_cap(kEnumerationCap, check_override, "enumeration"));
      const int shelling_cap =
          effective_cap(kFullShellingCap, check_override, "exhaustive shelling");
      const bool parallel = !check_serial;

      std::vector<tamari::verify::CheckReport> reports;
      if (check_suite == "bijections" || check_suite == "all") {
        reports.push_back(tamari::verify::check_bijections(check_n, parallel));
      }
      if (check_suite == "lattice" || check_suite == "all") {
        reports.push_back(
            tamari::verify::check_lattice(std::min(check_n, 4), parallel));
      }
      if (check_suite == "cells" || check_suite == "all") {
        reports.push_back(tamari::verify::check_cells(check_n, parallel));
      }
      if (check_suite == "volumes" || check_suite == "all") {
        reports.push_back(tamari::verify::check_volumes(check_n, parallel));
      }
      if (check_suite == "predicates" || check_suite == "all") {
        reports.push_back(tamari::verify::check_predicates(std::min(check_n, 4), parallel));
      }
      if (check_suite == "shelling" || check_suite == "all") {
        reports.push_back(tamari::verify::check_shelling(std::min(check_n, 5), parallel,
                                                         std::min(check_n, shelling_cap)));
      }

      bool all_ok = true;
      nlohmann::json json_reports = nlohmann::json::array();
      for (const tamari::verify::CheckReport& report : reports) {
        all_ok = all_ok && report.ok();
        if (check_json) {
          json_reports.push_back(report_to_json(report));
        } else {
          std::cout << tamari::verify::to_text(report) << "\n";
        }
      }
      if (check_json) {
        std::cout << (json_reports.size() == 1 ? json_reports[0].dump() : json_reports.dump())
                  << "\n";
      }

      if (check_certificates && (check_suite == "shelling" || check_suite == "all")) {
        for (int n = 1; n <= std::min(check_n, shelling_cap); ++n) {
          const tamari::CoverDag dag(n);
          for (int a = 0; a < dag.count(); ++a) {
            for (int b = 0; b < dag.count(); ++b) {
              if (!tamari::cc_leq(dag.coordinate(a), dag.coordinate(b))) {
                continue;
              }
              std::cout << "n=" << n << " " << tamari::cc_to_text(dag.coordinate(a)) << " -> "
                        << tamari::cc_to_text(dag.coordinate(b)) << ": "
                        << tamari::chain_to_text(
                               tamari::increasing_chain(dag.coordinate(a), dag.coordinate(b)))
                        << "\n";
            }
          }
        }
      }
      return all_ok ? 0 : 1;
    }

    if (*cells_cmd) {
      require_within_cap(cells_n, effective_cap(kEnumerationCap, cells_override, "enumeration"));
      for (const tamari::Cell& cell : tamari::enumerate_cells(cells_n)) {
        std::cout << tamari::cell_to_json(cell).dump() << "\n";
      }
      return 0;
    }

    if (*volume_cmd) {
      require_within_cap(volume_n, effective_cap(kEnumerationCap, volume_override, "enumeration"));
      long long total = 0;
      for (const tamari::Cell& cell : tamari::enumerate_cells(volume_n)) {
        const long long volume = tamari::cell_volume(cell);
        total += volume;
        std::cout << "cell " << tamari::cc_to_text(cell.min) << " .. "
                  << tamari::cc_to_text(cell.max) << " gamma "
                  << tamari::cc_to_text(tamari::gamma(cell)) << " volume " << volume << "\n";
      }
      std::cout << "total " << total << "\n";
      return 0;
    }

    if (*cache_cmd) {
      require_within_cap(cache_n, effective_cap(kEnumerationCap, cache_override, "enumeration"));
      const std::filesystem::path dir = resolve_cache_dir(cache_dir_flag);
      if (dir.empty()) {
        throw CLI::ValidationError("no cache directory: pass --cache-dir or set TAMARI_CACHE_DIR");
      }
      tamari::EnumerationCache cache(dir);
      if (*cache_build) {
        for (int n = 1; n <= cache_n; ++n) {
          bool rebuilt = false;
          const auto coords = cache.coordinates(n, &rebuilt);
          const auto trees = cache.trees(n, &rebuilt);
          const auto tids = cache.interval_diagrams(n, &rebuilt);
          std::cout << "n=" << n << " cc=" << coords.size() << " trees=" << trees.size()
                    << " tid=" << tids.size() << "\n";
        }
      } else {
        for (int n = 1; n <= cache_n; ++n) {
          for (const std::string kind : {"cc", "trees", "tid"}) {
            const auto status = cache.status(kind, n);
            std::cout << kind << "-" << n << ": "
                      << (!status.present ? "absent" : status.valid ? "valid" : "corrupt")
                      << " count=" << status.count << "\n";
          }
        }
      }
      return 0;
    }
  } catch (const CLI::ValidationError& error) {
    std::cerr << "error: " << error.what() << "\n";
    return 2;
  } catch (const std::exception& error) {
    std::cerr << "error: " << error.what() << "\n";
    return 1;
  }
  return 0;
}
