#include "conesum/mc.hpp"

#include <omp.h>

#include <algorithm>
#include <atomic>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>

#include "conesum/isotonic.hpp"

namespace conesum {

int resolveThreads(int threads) {
  if (threads <= 0) return omp_get_max_threads();
  return threads;
}

namespace {

MCEstimate fromSums(long long sum, long long sumsq, std::uint64_t samples,
                    std::uint64_t seed) {
  MCEstimate est;
  est.samples = samples;
  est.seed = seed;
  if (samples == 0) return est;
  const double n = static_cast<double>(samples);
  est.mean = static_cast<double>(sum) / n;
  if (samples >= 2) {
    const double ss = static_cast<double>(sumsq) - n * est.mean * est.mean;
    est.stdErr = std::sqrt(std::max(ss, 0.0) / (n - 1.0) / n);
  }
  return est;
}

// Serial reference loop and OpenMP kernel over integer-valued trials.
template <class Kernel>
MCEstimate runMean(std::uint64_t samples, std::uint64_t seed, int threads,
                   Kernel kernel) {
  long long sum = 0, sumsq = 0;
  const int nt = resolveThreads(threads);
  if (nt == 1) {
    for (std::uint64_t t = 0; t < samples; ++t) {
      const long long v = kernel(t);
      sum += v;
      sumsq += v * v;
    }
  } else {
    const long long total = static_cast<long long>(samples);
#pragma omp parallel for schedule(static) num_threads(nt) reduction(+ : sum, sumsq)
    for (long long t = 0; t < total; ++t) {
      const long long v = kernel(static_cast<std::uint64_t>(t));
      sum += v;
      sumsq += v * v;
    }
  }
  return fromSums(sum, sumsq, samples, seed);
}

} // namespace

PointSet sampleWalk(unsigned d, unsigned n, RngStream& stream) {
  PointSet points(n + 1, Point(d, 0.0));
  for (unsigned k = 1; k <= n; ++k)
    for (unsigned c = 0; c < d; ++c)
      points[k][c] = points[k - 1][c] + stream.nextGaussian();
  return points;
}

PointSet sampleBridge(unsigned d, unsigned n, RngStream& stream) {
  PointSet walk = sampleWalk(d, n + 1, stream);
  PointSet points(n + 1, Point(d, 0.0));
  const double scale = 1.0 / static_cast<double>(n + 1);
  for (unsigned k = 1; k <= n; ++k)
    for (unsigned c = 0; c < d; ++c)
      points[k][c] = walk[k][c] - static_cast<double>(k) * scale * walk[n + 1][c];
  return points;
}

MCEstimate estimateSparreAndersen(unsigned steps, std::uint64_t samples,
                                  std::uint64_t seed, int threads) {
  return runMean(samples, seed, threads, [=](std::uint64_t t) -> long long {
    RngStream stream(seed, t);
    double s = 0.0;
    for (unsigned i = 0; i < steps; ++i) {
      s += stream.nextGaussian();
      if (s > 0.0) return 0;
    }
    return 1;
  });
}

std::vector<MCEstimate> estimateIntrinsicVolumes(const ConeSpec& spec,
                                                 std::uint64_t samples,
                                                 std::uint64_t seed, int threads) {
  const unsigned dim = spec.ambientDim();
  std::vector<std::uint64_t> hist(dim + 1, 0);
  auto kernel = [&](std::uint64_t t) -> unsigned {
    // workspaces live per OS thread; results stay pure functions of t
    thread_local ChamberProjector projector;
    thread_local std::vector<double> x, factorOut, projected;
    RngStream stream(seed, t);
    projected.clear();
    for (const auto& f : spec.factors()) {
      x.resize(f.size);
      for (auto& v : x) v = stream.nextGaussian();
      projector.project(f.family, x.data(), x.size(), factorOut);
      projected.insert(projected.end(), factorOut.begin(), factorOut.end());
    }
    return projectionFaceDim(spec, projected);
  };
  const int nt = resolveThreads(threads);
  if (nt == 1) {
    for (std::uint64_t t = 0; t < samples; ++t) ++hist[kernel(t)];
  } else {
    const long long total = static_cast<long long>(samples);
#pragma omp parallel num_threads(nt)
    {
      std::vector<std::uint64_t> local(dim + 1, 0);
#pragma omp for schedule(static)
      for (long long t = 0; t < total; ++t) ++local[kernel(static_cast<std::uint64_t>(t))];
#pragma omp critical
      for (unsigned k = 0; k <= dim; ++k) hist[k] += local[k];
    }
  }
  std::vector<MCEstimate> out(dim + 1);
  for (unsigned k = 0; k <= dim; ++k) {
    const long long count = static_cast<long long>(hist[k]);
    out[k] = fromSums(count, count, samples, seed); // indicator: v^2 = v
  }
  return out;
}

namespace {

// indicator of xi_1/sqrt(h_1) >= ... >= xi_r/sqrt(h_r) [>= 0]
bool orderedGaussianEvent(const std::vector<unsigned>& lengths, bool bounded,
                          RngStream& stream) {
  double prev = std::numeric_limits<double>::infinity();
  for (unsigned h : lengths) {
    const double v = stream.nextGaussian() / std::sqrt(static_cast<double>(h));
    if (v > prev) return false;
    prev = v;
  }
  return !bounded || prev >= 0.0;
}

} // namespace

MCEstimate estimateInternalAngle(const std::vector<unsigned>& blockLengths,
                                 bool bounded, std::uint64_t samples,
                                 std::uint64_t seed, int threads) {
  if (blockLengths.empty()) {
    // 0-dimensional face: the angle is exactly 1
    MCEstimate est;
    est.mean = 1.0;
    est.samples = samples;
    est.seed = seed;
    return est;
  }
  for (unsigned h : blockLengths)
    if (h == 0) throw std::invalid_argument("estimateInternalAngle: zero block");
  return runMean(samples, seed, threads, [&, seed](std::uint64_t t) -> long long {
    RngStream stream(seed, t);
    return orderedGaussianEvent(blockLengths, bounded, stream) ? 1 : 0;
  });
}

MCEstimate estimateFaceInternalAngle(const FaceSpec& face, std::uint64_t samples,
                                     std::uint64_t seed, int threads) {
  bool anyBlocks = false;
  for (const auto& p : face.parts) anyBlocks = anyBlocks || !p.blockLengths.empty();
  if (!anyBlocks) {
    MCEstimate est;
    est.mean = 1.0;
    est.samples = samples;
    est.seed = seed;
    return est;
  }
  return runMean(samples, seed, threads, [&, seed](std::uint64_t t) -> long long {
    RngStream stream(seed, t);
    for (std::size_t i = 0; i < face.parts.size(); ++i) {
      const auto& part = face.parts[i];
      if (part.blockLengths.empty()) continue;
      const bool bounded = face.spec.factors()[i].family == Chamber::B;
      if (!orderedGaussianEvent(part.blockLengths, bounded, stream)) return 0;
    }
    return 1;
  });
}

MCEstimate estimateExpectedFaces(const WalkEnsemble& ens, unsigned j,
                                 std::uint64_t samples, std::uint64_t seed,
                                 int threads) {
  if (ens.d != 2 && ens.d != 3)
    throw std::invalid_argument("estimateExpectedFaces: d must be 2 or 3");
  if (j >= ens.d)
    throw std::invalid_argument("estimateExpectedFaces: requires j < d");
  std::atomic<bool> degenerate{false};
  MCEstimate est = runMean(samples, seed, threads, [&, seed](std::uint64_t t) -> long long {
    RngStream stream(seed, t);
    std::vector<PointSet> sets;
    sets.reserve(ens.ns.size());
    for (unsigned n : ens.ns)
      sets.push_back(ens.kind == WalkKind::Walk ? sampleWalk(ens.d, n, stream)
                                                : sampleBridge(ens.d, n, stream));
    try {
      return static_cast<long long>(minkowskiHullFaces(sets, ens.d).faces(j));
    } catch (const DegenerateHullError&) {
      degenerate.store(true);
      return 0;
    }
  });
  if (degenerate.load())
    throw DegenerateHullError("estimateExpectedFaces: degenerate sample hull");
  return est;
}

namespace {

// uniformly random size-m subset of {0, ..., population-1}, sorted
std::vector<unsigned> drawSubset(unsigned population, unsigned m,
                                 RngStream& stream) {
  std::vector<unsigned> idx(population);
  std::iota(idx.begin(), idx.end(), 0u);
  for (unsigned i = 0; i < m; ++i) {
    const unsigned pick =
        i + static_cast<unsigned>(stream.nextBelow(population - i));
    std::swap(idx[i], idx[pick]);
  }
  idx.resize(m);
  std::sort(idx.begin(), idx.end());
  return idx;
}

void appendChainRows(ConeSystem& sys, unsigned from, unsigned to) {
  // v_from >= v_{from+1} >= ... >= v_to
  for (unsigned i = from; i < to; ++i) {
    std::vector<double> r(sys.dim, 0.0);
    r[i] = -1.0;
    r[i + 1] = 1.0;
    sys.ineqs.push_back(std::move(r));
  }
}

std::vector<double> defaultWeights(Source family, unsigned j) {
  switch (family) {
    case Source::WB: return std::vector<double>(j, 1.0);
    case Source::WA: return std::vector<double>(j, 1.0);
    case Source::KB: return std::vector<double>(j + 1, 1.0 / (j + 1.0));
    case Source::KA: return std::vector<double>(j + 1, 1.0 / (j + 1.0));
  }
  return {};
}

} // namespace

RecoveryInstance drawRecoveryInstance(Source family, unsigned n, unsigned j,
                                      RngStream& stream,
                                      const std::vector<double>& weights) {
  if (family == Source::WA && j == 0)
    throw std::invalid_argument("drawRecoveryInstance: WA requires j >= 1");
  if (j > n) throw std::invalid_argument("drawRecoveryInstance: j > n");
  const std::vector<double> a = weights.empty() ? defaultWeights(family, j) : weights;

  RecoveryInstance inst;
  ConeSystem& sys = inst.tangentCone;

  switch (family) {
    case Source::WB: {
      if (a.size() != j) throw std::invalid_argument("WB: needs j weights");
      // subset {i_1 < ... < i_j} of {1..n}
      for (unsigned v : drawSubset(n, j, stream)) inst.subset.push_back(v + 1);
      sys.dim = n;
      inst.signal.assign(n, 0.0);
      for (unsigned m = 1; m <= n; ++m)
        for (unsigned l = 0; l < j; ++l)
          if (inst.subset[l] >= m) inst.signal[m - 1] += a[l];
      unsigned prev = 0;
      for (unsigned b = 0; b <= j; ++b) {
        const unsigned end = (b < j) ? inst.subset[b] : n;
        appendChainRows(sys, prev, end == 0 ? 0 : end - 1);
        prev = end;
      }
      if (j == 0 || inst.subset.back() < n) { // zero tail present: v_n >= 0
        std::vector<double> r(n, 0.0);
        r[n - 1] = -1.0;
        sys.ineqs.push_back(std::move(r));
      }
      break;
    }
    case Source::WA: {
      if (a.size() != j) throw std::invalid_argument("WA: needs j weights");
      // subset {i_1 < ... < i_{j-1}} of {1..n-1}, i_j := n
      for (unsigned v : drawSubset(n - 1, j - 1, stream)) inst.subset.push_back(v + 1);
      inst.subset.push_back(n);
      sys.dim = n;
      inst.signal.assign(n, 0.0);
      for (unsigned m = 1; m <= n; ++m)
        for (unsigned l = 0; l < j; ++l)
          if (inst.subset[l] >= m) inst.signal[m - 1] += a[l];
      unsigned prev = 0;
      for (unsigned b = 0; b < j; ++b) {
        appendChainRows(sys, prev, inst.subset[b] - 1);
        prev = inst.subset[b];
      }
      break;
    }
    case Source::KB: {
      if (a.size() != j + 1) throw std::invalid_argument("KB: needs j+1 weights");
      // subset {i_0 < ... < i_j} of {0..n}
      inst.subset = drawSubset(n + 1, j + 1, stream);
      sys.dim = n;
      inst.signal.assign(n, 0.0);
      for (unsigned m = 1; m <= n; ++m)
        for (unsigned l = 0; l <= j; ++l)
          if (inst.subset[l] >= m) inst.signal[m - 1] += a[l];
      const unsigned i0 = inst.subset.front();
      if (i0 >= 1) { // block pinned at 1: 0 >= v_1 >= ... >= v_{i0}
        std::vector<double> r(n, 0.0);
        r[0] = 1.0;
        sys.ineqs.push_back(std::move(r));
        appendChainRows(sys, 0, i0 - 1);
      }
      unsigned prev = i0;
      for (unsigned b = 1; b <= j; ++b) {
        appendChainRows(sys, prev, inst.subset[b] - 1);
        prev = inst.subset[b];
      }
      appendChainRows(sys, prev, n == 0 ? 0 : n - 1);
      if (inst.subset.back() < n) { // zero tail: v_n >= 0
        std::vector<double> r(n, 0.0);
        r[n - 1] = -1.0;
        sys.ineqs.push_back(std::move(r));
      }
      break;
    }
    case Source::KA: {
      if (a.size() != j + 1) throw std::invalid_argument("KA: needs j+1 weights");
      // subset {i_1 < ... < i_{j+1}} of {1..n+1}
      for (unsigned v : drawSubset(n + 1, j + 1, stream)) inst.subset.push_back(v + 1);
      sys.dim = n + 1;
      inst.signal.assign(n + 1, 0.0);
      double total = 0.0;
      for (unsigned m = 1; m <= n + 1; ++m) {
        for (unsigned l = 0; l <= j; ++l)
          if (inst.subset[l] >= m) inst.signal[m - 1] += a[l];
        total += inst.signal[m - 1];
      }
      const double center = total / static_cast<double>(n + 1);
      for (double& v : inst.signal) v -= center;
      const bool wrapped = inst.subset.back() <= n; // x_1 - x_{n+1} = 1 active
      unsigned prev = 0;
      for (unsigned b = 0; b <= j; ++b) {
        appendChainRows(sys, prev, inst.subset[b] - 1);
        prev = inst.subset[b];
      }
      if (wrapped) {
        appendChainRows(sys, prev, n); // trailing block up to v_{n+1}
        std::vector<double> r(n + 1, 0.0); // v_1 <= v_{n+1}
        r[0] = 1.0;
        r[n] = -1.0;
        sys.ineqs.push_back(std::move(r));
      }
      std::vector<double> zeroSum(n + 1, 1.0);
      sys.eqs.push_back(std::move(zeroSum));
      break;
    }
  }
  return inst;
}

RecoveryEstimate estimateRecoveryProbability(Source family, unsigned n, unsigned j,
                                             unsigned k, std::uint64_t samples,
                                             std::uint64_t seed, int threads,
                                             const std::vector<double>& weights) {
  if (!(j <= k && k <= n))
    throw std::invalid_argument("estimateRecoveryProbability: requires j <= k <= n");
  long long unique = 0, conclusive = 0, inconclusive = 0;
  const int nt = resolveThreads(threads);
  auto trial = [&, seed](std::uint64_t t, long long& uniq, long long& conc,
                         long long& inc) {
    RngStream stream(seed, t);
    const RecoveryInstance inst = drawRecoveryInstance(family, n, j, stream, weights);
    std::vector<std::vector<double>> G(k, std::vector<double>(inst.tangentCone.dim));
    for (auto& row : G)
      for (auto& v : row) v = stream.nextGaussian();
    switch (coneKernelIntersects(inst.tangentCone, G, stream)) {
      case KernelResult::TrivialOnly:
        ++uniq;
        ++conc;
        break;
      case KernelResult::Intersects:
        ++conc;
        break;
      case KernelResult::Inconclusive:
        ++inc;
        break;
    }
  };
  if (nt == 1) {
    for (std::uint64_t t = 0; t < samples; ++t) trial(t, unique, conclusive, inconclusive);
  } else {
    const long long total = static_cast<long long>(samples);
#pragma omp parallel for schedule(static) num_threads(nt) \
    reduction(+ : unique, conclusive, inconclusive)
    for (long long t = 0; t < total; ++t)
      trial(static_cast<std::uint64_t>(t), unique, conclusive, inconclusive);
  }
  RecoveryEstimate out;
  out.inconclusive = static_cast<std::uint64_t>(inconclusive);
  out.estimate = fromSums(unique, unique, static_cast<std::uint64_t>(conclusive), seed);
  return out;
}

double zScore(const MCEstimate& est, double exact) {
  const double diff = est.mean - exact;
  if (est.stdErr > 0.0) return diff / est.stdErr;
  if (diff == 0.0) return 0.0;
  return diff > 0.0 ? std::numeric_limits<double>::infinity()
                    : -std::numeric_limits<double>::infinity();
}

} // namespace conesum
