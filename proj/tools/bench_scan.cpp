// Times the cell-parallel scan against the serial reference enumerator and
// against itself at increasing worker counts, checking that outputs agree.

#include <chrono>
#include <iostream>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "cycmon/io.hpp"
#include "cycmon/reference.hpp"

using namespace cycmon;
namespace chrono = std::chrono;

namespace {

template <typename F>
double time_ms(F&& f) {
  const auto t0 = chrono::steady_clock::now();
  f();
  const auto t1 = chrono::steady_clock::now();
  return chrono::duration<double, std::milli>(t1 - t0).count();
}

}  // namespace

int main(int argc, char** argv) {
  Int genus_max = 16;
  Int reference_genus_max = 8;
  if (argc > 1) genus_max = std::stoll(argv[1]);
  if (argc > 2) reference_genus_max = std::stoll(argv[2]);

  int max_workers = 1;
#ifdef _OPENMP
  max_workers = omp_get_max_threads();
#endif

  // Reference enumerator: quadratic orbit dedup, small window only.
  {
    const auto bounds = SearchBounds::for_total_genus(1, reference_genus_max);
    std::vector<MonodromyDatum> ref;
    std::vector<CanonicalDatum> fast;
    const double t_ref = time_ms([&] { ref = reference_enumerate(bounds); });
    const double t_fast = time_ms([&] { fast = enumerate_data(bounds, 1); });
    const bool agree = ref.size() == fast.size();
    std::cout << "enumerate g<=" << reference_genus_max << ": reference " << t_ref
              << " ms, cell kernel " << t_fast << " ms, " << fast.size()
              << " data, counts " << (agree ? "agree" : "DISAGREE") << "\n";
    if (!agree) return 1;
  }

  // Worker scaling of the special scan.
  const auto bounds = SearchBounds::for_total_genus(1, genus_max);
  std::vector<AtlasRecord> serial;
  const double t1 = time_ms([&] { serial = scan_special(bounds, 1); });
  std::cout << "scan-special g<=" << genus_max << ": 1 worker " << t1 << " ms, "
            << serial.size() << " records\n";
  for (int w = 2; w <= max_workers; w *= 2) {
    std::vector<AtlasRecord> parallel;
    const double tw = time_ms([&] { parallel = scan_special(bounds, w); });
    const bool same = parallel == serial;
    std::cout << "scan-special g<=" << genus_max << ": " << w << " workers " << tw
              << " ms, speedup " << (tw > 0 ? t1 / tw : 0.0) << "x, output "
              << (same ? "identical" : "DIFFERS") << "\n";
    if (!same) return 1;
  }
  return 0;
}
