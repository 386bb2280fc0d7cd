// Serial reference vs OpenMP grid kernels.
//
//   bench_grid [a] [resolution] [repeats]

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <omp.h>

#include "fhzeta/grid.hpp"

using namespace fhzeta;

namespace {

template <class F>
double best_of(int repeats, F&& f) {
  double best = 1e300;
  for (int r = 0; r < repeats; ++r) {
    const auto t0 = std::chrono::steady_clock::now();
    f();
    const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (s < best) best = s;
  }
  return best;
}

bool identical(const std::vector<GridSample>& x, const std::vector<GridSample>& y) {
  if (x.size() != y.size()) return false;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i].valid != y[i].valid) return false;
    if (x[i].valid && x[i].value != y[i].value) return false;
  }
  return true;
}

}  // namespace

int main(int argc, char** argv) {
  const double a = argc > 1 ? std::atof(argv[1]) : 0.5;
  const double res = argc > 2 ? std::atof(argv[2]) : 0.1;
  const int repeats = argc > 3 ? std::atoi(argv[3]) : 3;
  const ZetaParams params(a);

  std::printf("threads: %d\n", omp_get_max_threads());
  std::printf("%-28s %8s %12s %12s %8s %s\n", "kernel", "points", "serial [s]", "openmp [s]",
              "speedup", "identical");

  auto report = [&](const char* name, const GridSpec& g, auto kernel) {
    std::vector<GridSample> s, p;
    const double ts = best_of(repeats, [&] { s = kernel(g, Exec::Serial); });
    const double tp = best_of(repeats, [&] { p = kernel(g, Exec::Parallel); });
    std::printf("%-28s %8zu %12.4f %12.4f %8.2f %s\n", name, g.size(), ts, tp, ts / tp,
                identical(s, p) ? "yes" : "NO");
  };

  const GridSpec plane{-3.0, 3.0, res, -10.0, 10.0, res};
  report("zeta_a over [-3,3]x[-10,10]", plane,
         [&](const GridSpec& g, Exec e) { return zeta_grid(params, g, e); });

  const GridSpec strip{-0.9, -0.1, 0.1, 0.1, 10.0, res};
  report("F_2 over strip grid", strip,
         [&](const GridSpec& g, Exec e) { return continued_grid(params, 2, g, e); });
  return 0;
}
