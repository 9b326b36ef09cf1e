// Throughput comparison of the serial reference loops against the OpenMP
// kernels, over the hot Monte Carlo estimators. The two paths compute
// bit-identical results (asserted here as well as in the tests).

#include <omp.h>

#include <cstdio>
#include <cstdlib>
#include <string>

#include "conesum/mc.hpp"

using namespace conesum;

namespace {

constexpr std::uint64_t kSeed = 1729;

template <class Fn>
double timeIt(Fn&& fn) {
  const double t0 = omp_get_wtime();
  fn();
  return omp_get_wtime() - t0;
}

void report(const char* name, std::uint64_t samples, double serial, double parallel,
            bool identical) {
  std::printf("%-28s %10llu samples   serial %7.3fs   omp(%d) %7.3fs   speedup %.2fx   %s\n",
              name, static_cast<unsigned long long>(samples), serial,
              omp_get_max_threads(), parallel, serial / parallel,
              identical ? "identical" : "MISMATCH");
}

} // namespace

int main(int argc, char** argv) {
  std::uint64_t scale = 1;
  if (argc > 1) scale = std::strtoull(argv[1], nullptr, 10);

  {
    const std::uint64_t n = 2000000 * scale;
    MCEstimate a, b;
    const double ts = timeIt([&] { a = estimateSparreAndersen(6, n, kSeed, 1); });
    const double tp = timeIt([&] { b = estimateSparreAndersen(6, n, kSeed, 0); });
    report("sparre-andersen walk", n, ts, tp, a.mean == b.mean && a.stdErr == b.stdErr);
  }
  {
    const std::uint64_t n = 1000000 * scale;
    const ConeSpec spec = ConeSpec::parse("A3xB3");
    std::vector<MCEstimate> a, b;
    const double ts = timeIt([&] { a = estimateIntrinsicVolumes(spec, n, kSeed, 1); });
    const double tp = timeIt([&] { b = estimateIntrinsicVolumes(spec, n, kSeed, 0); });
    bool same = a.size() == b.size();
    for (std::size_t i = 0; same && i < a.size(); ++i) same = a[i].mean == b[i].mean;
    report("intrinsic volumes A3xB3", n, ts, tp, same);
  }
  {
    const std::uint64_t n = 100000 * scale;
    const WalkEnsemble ens{2, {4, 4}, WalkKind::Walk};
    MCEstimate a, b;
    const double ts = timeIt([&] { a = estimateExpectedFaces(ens, 0, n, kSeed, 1); });
    const double tp = timeIt([&] { b = estimateExpectedFaces(ens, 0, n, kSeed, 0); });
    report("minkowski hull faces", n, ts, tp, a.mean == b.mean);
  }
  {
    const std::uint64_t n = 20000 * scale;
    RecoveryEstimate a, b;
    const double ts = timeIt(
        [&] { a = estimateRecoveryProbability(Source::KB, 4, 1, 3, n, kSeed, 1); });
    const double tp = timeIt(
        [&] { b = estimateRecoveryProbability(Source::KB, 4, 1, 3, n, kSeed, 0); });
    report("recovery LP trials", n, ts, tp, a.estimate.mean == b.estimate.mean);
  }
  return 0;
}
