// Benchmark comparing the serial reference drivers against the OpenMP
// parallel ones on the verification sweeps.

#include <chrono>
#include <iomanip>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "tamari/shelling.hpp"
#include "tamari/verify.hpp"

namespace {

template <typename Fn>
double time_seconds(Fn&& fn) {
  const auto start = std::chrono::steady_clock::now();
  fn();
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

void report(const std::string& kernel, double serial, double parallel) {
  std::cout << std::left << std::setw(12) << kernel << " serial " << std::setw(9) << serial
            << "s  parallel " << std::setw(9) << parallel << "s  speedup "
            << (parallel > 0 ? serial / parallel : 0.0) << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Timings of the verification kernels, serial vs OpenMP"};
  int n = 4;
  std::string kernel = "all";
  app.add_option("--n", n, "size to benchmark");
  app.add_option("--kernel", kernel, "bijections, lattice, shelling, mobius, or all")
      ->check(CLI::IsMember({"bijections", "lattice", "shelling", "mobius", "all"}));
  CLI11_PARSE(app, argc, argv);

  std::cout << std::setprecision(4);
  if (kernel == "bijections" || kernel == "all") {
    report("bijections", time_seconds([&] { tamari::verify::check_bijections(n, false); }),
           time_seconds([&] { tamari::verify::check_bijections(n, true); }));
  }
  if (kernel == "lattice" || kernel == "all") {
    report("lattice", time_seconds([&] { tamari::verify::check_lattice(n, false); }),
           time_seconds([&] { tamari::verify::check_lattice(n, true); }));
  }
  if (kernel == "shelling" || kernel == "all") {
    report("shelling",
           time_seconds([&] { tamari::verify_el_shellability(n, n <= 4, false); }),
           time_seconds([&] { tamari::verify_el_shellability(n, n <= 4, true); }));
  }
  if (kernel == "mobius" || kernel == "all") {
    report("mobius", time_seconds([&] { tamari::mobius_values(n, false); }),
           time_seconds([&] { tamari::mobius_values(n, true); }));
  }
  return 0;
}
