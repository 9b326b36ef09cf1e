#ifndef CONESUM_MC_HPP
#define CONESUM_MC_HPP

#include <cstdint>
#include <vector>

#include "conesum/cone_spec.hpp"
#include "conesum/expected_faces.hpp"
#include "conesum/face_spec.hpp"
#include "conesum/hull.hpp"
#include "conesum/lp.hpp"
#include "conesum/rng.hpp"

namespace conesum {

// Monte Carlo estimators. Every estimator draws trial t from the counter
// stream (seed, t) and accumulates integer per-trial statistics, so results
// are bit-identical for any thread count; threads == 1 runs the plain serial
// reference loop, threads > 1 the OpenMP kernel, threads <= 0 uses all
// available cores.

struct MCEstimate {
  double mean = 0.0;
  double stdErr = 0.0;
  std::uint64_t samples = 0;
  std::uint64_t seed = 0;
};

int resolveThreads(int threads);

// Gaussian random walk S_0 = 0, S_1, ..., S_n in R^d.
PointSet sampleWalk(unsigned d, unsigned n, RngStream& stream);
// Gaussian bridge S~_0 = 0, ..., S~_n (the implicit S~_{n+1} = 0 is not
// returned), built from an (n+1)-step walk via S~_k = S_k - k/(n+1) S_{n+1}.
PointSet sampleBridge(unsigned d, unsigned n, RngStream& stream);

// P(walk of `steps` Gaussian increments stays non-positive); exact value is
// sparreAndersenWalkAngle(steps).
MCEstimate estimateSparreAndersen(unsigned steps, std::uint64_t samples,
                                  std::uint64_t seed, int threads = 1);

// Empirical conic intrinsic volumes of a chamber product via metric
// projection of Gaussian vectors; the k-th entry estimates upsilon_k.
// Estimates sum to exactly 1.
std::vector<MCEstimate> estimateIntrinsicVolumes(const ConeSpec& spec,
                                                 std::uint64_t samples,
                                                 std::uint64_t seed,
                                                 int threads = 1);

// P(xi_1/sqrt(h_1) >= ... >= xi_r/sqrt(h_r) [>= 0 when bounded]).
MCEstimate estimateInternalAngle(const std::vector<unsigned>& blockLengths,
                                 bool bounded, std::uint64_t samples,
                                 std::uint64_t seed, int threads = 1);

// Internal angle of a product-cone face: the per-factor ordered-Gaussian
// events are independent, so one trial draws all factors and multiplies the
// indicators.
MCEstimate estimateFaceInternalAngle(const FaceSpec& face, std::uint64_t samples,
                                     std::uint64_t seed, int threads = 1);

// Mean face count of Minkowski sums of freshly sampled walk/bridge hulls.
MCEstimate estimateExpectedFaces(const WalkEnsemble& ens, unsigned j,
                                 std::uint64_t samples, std::uint64_t seed,
                                 int threads = 1);

// One sampled recovery experiment: the uniformly drawn face (index subset in
// the family's convention), the signal built from the a-weights, and the
// tangent cone at the face in original coordinates.
struct RecoveryInstance {
  std::vector<unsigned> subset;
  std::vector<double> signal;
  ConeSystem tangentCone;
};

RecoveryInstance drawRecoveryInstance(Source family, unsigned n, unsigned j,
                                      RngStream& stream,
                                      const std::vector<double>& weights = {});

struct RecoveryEstimate {
  MCEstimate estimate; // over conclusive trials
  std::uint64_t inconclusive = 0;
};

// Empirical probability that the face-uniform random signal is uniquely
// recoverable from k Gaussian measurements; LP-inconclusive trials are
// counted separately, never folded into the estimate.
RecoveryEstimate estimateRecoveryProbability(Source family, unsigned n,
                                             unsigned j, unsigned k,
                                             std::uint64_t samples,
                                             std::uint64_t seed, int threads = 1,
                                             const std::vector<double>& weights = {});

// z-score of an estimate against an exact value; 0 when both sides agree
// exactly with zero spread, +/-inf when they differ with zero spread.
double zScore(const MCEstimate& est, double exact);

} // namespace conesum

#endif
