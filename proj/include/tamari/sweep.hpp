#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

namespace tamari {

// Data-parallel sweep over [0, count): fn(i) returns nullopt on success or a
// failure message. The serial driver is the reference; the OpenMP driver must
// produce the same failure set, which the tests assert. Failures are sorted,
// so the output does not depend on scheduling.
template <typename Fn>
void sweep_serial(long long count, Fn&& fn, std::vector<std::string>& failures) {
  for (long long i = 0; i < count; ++i) {
    if (auto failure = fn(i)) {
      failures.push_back(std::move(*failure));
    }
  }
  std::sort(failures.begin(), failures.end());
}

template <typename Fn>
void sweep_parallel(long long count, Fn&& fn, std::vector<std::string>& failures) {
#pragma omp parallel
  {
    std::vector<std::string> local;
#pragma omp for schedule(dynamic, 64) nowait
    for (long long i = 0; i < count; ++i) {
      if (auto failure = fn(i)) {
        local.push_back(std::move(*failure));
      }
    }
#pragma omp critical
    failures.insert(failures.end(), std::make_move_iterator(local.begin()),
                    std::make_move_iterator(local.end()));
  }
  std::sort(failures.begin(), failures.end());
}

template <typename Fn>
void sweep(bool parallel, long long count, Fn&& fn, std::vector<std::string>& failures) {
  if (parallel) {
    sweep_parallel(count, fn, failures);
  } else {
    sweep_serial(count, fn, failures);
  }
}

}  // namespace tamari
