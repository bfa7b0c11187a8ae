// Compares the serial reference kernels against their OpenMP variants:
// identical results (bitwise) and wall time for each.

#include <chrono>
#include <cstdio>
#include <cstring>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "lident/gauss.hpp"
#include "lident/identities.hpp"
#include "lident/sweep.hpp"

using namespace lident;
using Clock = std::chrono::steady_clock;

namespace {

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

bool same_doubles(const std::vector<double>& a, const std::vector<double>& b) {
  return a.size() == b.size() &&
         std::memcmp(a.data(), b.data(), a.size() * sizeof(double)) == 0;
}

}  // namespace

int main() {
#ifdef _OPENMP
  std::printf("OpenMP enabled, max threads = %d\n", omp_get_max_threads());
#else
  std::printf("OpenMP not enabled\n");
#endif

  {
    const long q = 499;
    CharacterGroup g(q);
    auto chi = character_by_index(g, 1);
    auto t0 = Clock::now();
    GaussTable serial = gauss_table(chi);
    double ts = seconds_since(t0);
    t0 = Clock::now();
    GaussTable parallel = gauss_table_parallel(chi);
    double tp = seconds_since(t0);
    bool same = true;
    for (long j = 1; j <= q; ++j)
      same = same && serial.at(j).re == parallel.at(j).re &&
             serial.at(j).im == parallel.at(j).im;
    std::printf("gauss_table q=%ld:        serial %.3fs  omp %.3fs  identical=%s\n",
                q, ts, tp, same ? "yes" : "NO");
  }

  {
    const long q = 20, N = 4000000;
    const int s = 2;
    auto t0 = Clock::now();
    auto serial = theorem1_inner_sums(q, s, N);
    double ts = seconds_since(t0);
    t0 = Clock::now();
    auto parallel = theorem1_inner_sums_parallel(q, s, N);
    double tp = seconds_since(t0);
    std::printf("inner sums q=%ld N=%ld: serial %.3fs  omp %.3fs  identical=%s\n",
                q, N, ts, tp, same_doubles(serial, parallel) ? "yes" : "NO");
  }

  {
    SweepConfig cfg;
    cfg.q_min = 3;
    cfg.q_max = 16;
    cfg.s_max = 4;
    cfg.theorem1_N_s2 = 200000;
    cfg.parallel = false;
    auto t0 = Clock::now();
    SweepResult serial = run_verify_sweep(cfg);
    double ts = seconds_since(t0);
    cfg.parallel = true;
    t0 = Clock::now();
    SweepResult parallel = run_verify_sweep(cfg);
    double tp = seconds_since(t0);
    bool same = serial.records.size() == parallel.records.size();
    for (std::size_t i = 0; same && i < serial.records.size(); ++i)
      same = serial.records[i].abs_dev == parallel.records[i].abs_dev &&
             serial.records[i].identity == parallel.records[i].identity;
    std::printf("verify sweep q<=16:      serial %.3fs  omp %.3fs  identical=%s\n",
                ts, tp, same ? "yes" : "NO");
  }
  return 0;
}
