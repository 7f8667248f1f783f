// Timing comparison of the serial reference driver against the OpenMP one
// over the verification sweeps, checking along the way that both modes
// produce identical outcomes.

#include <chrono>
#include <cstdio>
#include <string>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "kp/verify.hpp"

namespace {

struct Timing {
  const char* name;
  long cases;
  double serial_seconds;
  double parallel_seconds;
  bool identical;
};

template <class Fn>
Timing time_sweep(const char* name, Fn&& fn) {
  using clock = std::chrono::steady_clock;
  const auto t0 = clock::now();
  const std::vector<kp::CaseOutcome> serial = fn(kp::RunMode::Serial);
  const auto t1 = clock::now();
  const std::vector<kp::CaseOutcome> parallel = fn(kp::RunMode::Parallel);
  const auto t2 = clock::now();
  bool identical = serial.size() == parallel.size();
  for (std::size_t k = 0; identical && k < serial.size(); ++k)
    identical = serial[k].key == parallel[k].key && serial[k].pass == parallel[k].pass &&
                serial[k].detail == parallel[k].detail;
  return {name, static_cast<long>(serial.size()), std::chrono::duration<double>(t1 - t0).count(),
          std::chrono::duration<double>(t2 - t1).count(), identical};
}

}  // namespace

int main(int argc, char** argv) {
  int max_sn = 5;
  for (int a = 1; a < argc; ++a) {
    const std::string arg = argv[a];
    if (arg == "--max-sn" && a + 1 < argc)
      max_sn = std::stoi(argv[++a]);
    else {
      std::fprintf(stderr, "usage: kp-bench [--max-sn N]\n");
      return 2;
    }
  }
  if (max_sn < 2) {
    std::fprintf(stderr, "kp-bench: --max-sn must be >= 2\n");
    return 2;
  }

#ifdef _OPENMP
  std::printf("OpenMP threads: %d\n", omp_get_max_threads());
#else
  std::printf("OpenMP not enabled; parallel mode falls back to the serial loop\n");
#endif

  const int group = max_sn;
  const int chains = max_sn - 1;
  std::vector<Timing> rows;
  rows.push_back(time_sweep("characters", [&](kp::RunMode m) { return kp::character_sweep(group, group - 1, m); }));
  rows.push_back(time_sweep("pieri", [&](kp::RunMode m) { return kp::pieri_sweep(chains, 3, 4, m); }));
  rows.push_back(time_sweep("filtrations", [&](kp::RunMode m) { return kp::filtration_sweep(chains, 4, m); }));
  rows.push_back(time_sweep("triangularity", [&](kp::RunMode m) { return kp::triangularity_sweep(chains, 4, m); }));

  std::printf("%-14s %8s %12s %12s %9s %s\n", "sweep", "cases", "serial[s]", "parallel[s]", "speedup", "identical");
  bool all_identical = true;
  double total_serial = 0, total_parallel = 0;
  for (const Timing& t : rows) {
    all_identical = all_identical && t.identical;
    total_serial += t.serial_seconds;
    total_parallel += t.parallel_seconds;
    std::printf("%-14s %8ld %12.3f %12.3f %8.2fx %s\n", t.name, t.cases, t.serial_seconds, t.parallel_seconds,
                t.parallel_seconds > 0 ? t.serial_seconds / t.parallel_seconds : 0.0,
                t.identical ? "yes" : "NO");
  }
  std::printf("%-14s %8s %12.3f %12.3f %8.2fx %s\n", "total", "", total_serial, total_parallel,
              total_parallel > 0 ? total_serial / total_parallel : 0.0, all_identical ? "yes" : "NO");
  return all_identical ? 0 : 1;
}
