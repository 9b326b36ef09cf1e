// Acceptance suite: one pass/fail line per criterion. Run with no arguments
// for all criteria, or pass criterion numbers (1..11) to run a subset.
// Exit status is the number of failed criteria.

#include <chrono>
#include <cmath>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "conesum/angle_sums.hpp"
#include "conesum/expected_faces.hpp"
#include "conesum/face_spec.hpp"
#include "conesum/isotonic.hpp"
#include "conesum/mc.hpp"
#include "conesum/series.hpp"
#include "conesum/stirling.hpp"

using namespace conesum;

namespace {

constexpr std::uint64_t kBaseSeed = 1729;
constexpr double kSigma = 4.0;

std::uint64_t baseSeed() {
  if (const char* env = std::getenv("CONESUM_SEED")) {
    try {
      return std::stoull(env);
    } catch (const std::exception&) {
    }
  }
  return kBaseSeed;
}

struct Outcome {
  bool pass = true;
  std::string detail;

  void fail(const std::string& msg) {
    pass = false;
    if (detail.empty()) detail = msg;
  }
};

// --- criterion 1: exact Stirling identities, n <= 15, 2b in {0..6} ---------
// The positive-sum identity holds for all j <= n; the alternating sum
// vanishes for j < n (at j = n only the k = n term survives and equals
// (-1)^n, since the composition family degenerates to a linear subspace).
Outcome criterion1() {
  Outcome out;
  for (unsigned twoB = 0; twoB <= 6 && out.pass; ++twoB) {
    const Rational b = Rational(twoB) / Rational(2);
    for (unsigned n = 1; n <= 15 && out.pass; ++n)
      for (unsigned j = 0; j <= n; ++j) {
        Rational sum(0), alt(0);
        for (unsigned k = 0; k <= n; ++k) {
          const Rational term = rStirling1(n, k, b) * rStirling2(k, j, b);
          sum += term;
          alt += (k % 2 == 0) ? term : -term;
        }
        const Rational expect = Rational::factorial(n) / Rational::factorial(j) *
                                Rational::binomial(n + twoB - 1, n - j);
        if (sum != expect) {
          out.fail("sum identity fails at 2b=" + std::to_string(twoB) +
                   " n=" + std::to_string(n) + " j=" + std::to_string(j));
          break;
        }
        if (j < n && alt != Rational(0)) {
          out.fail("alternating identity fails at 2b=" + std::to_string(twoB) +
                   " n=" + std::to_string(n) + " j=" + std::to_string(j));
          break;
        }
      }
  }
  return out;
}

// --- criterion 2: theorems vs tangent-cone enumeration, n <= 8 -------------
Outcome criterion2() {
  Outcome out;
  for (Source src : {Source::KB, Source::KA, Source::WB, Source::WA})
    for (unsigned n = 1; n <= 8 && out.pass; ++n)
      for (unsigned j = 0; j <= n && out.pass; ++j) {
        const TangentConeMultiset cones = enumerateTangentCones(src, n, j);
        for (unsigned k = 0; k <= n; ++k)
          if (tangentConeSumClosedForm(src, n, j, k) !=
              tangentConeSumEnumerated(cones, k)) {
            out.fail(sourceName(src) + " mismatch at n=" + std::to_string(n) +
                     " j=" + std::to_string(j) + " k=" + std::to_string(k));
            break;
          }
      }
  return out;
}

// --- criterion 3: series coefficients vs closed forms ----------------------
Outcome criterion3() {
  Outcome out;
  for (unsigned n = 0; n <= 12 && out.pass; ++n)
    for (unsigned j = 0; j <= n && out.pass; ++j)
      for (unsigned k = 0; k <= n; ++k) {
        if (seriesR(Rational(1), k, j, {n}) != theoremOrthoscheme(n, j, k)) {
          out.fail("R_1 vs orthoscheme at n=" + std::to_string(n));
          break;
        }
        if (seriesR(Rational(1, 2), k, j, {n}) != theoremWeyl(Chamber::B, n, j, k)) {
          out.fail("R_1/2 vs Weyl B at n=" + std::to_string(n));
          break;
        }
        if (seriesR(Rational(0), k, j, {n}) != theoremWeyl(Chamber::A, n, j, k)) {
          out.fail("R_0 vs Weyl A at n=" + std::to_string(n));
          break;
        }
      }
  for (unsigned b = 1; b <= 3 && out.pass; ++b)
    for (unsigned n = 1; n <= 8 && out.pass; ++n)
      for (unsigned j = 0; j <= n && out.pass; ++j)
        for (unsigned k = 0; k <= n; ++k)
          if (aggregatedProductSum(b, n, j, k) !=
              aggregatedProductSumEnumerated(b, n, j, k)) {
            out.fail("aggregated sum vs enumeration at b=" + std::to_string(b) +
                     " n=" + std::to_string(n));
            break;
          }
  return out;
}

// --- criterion 4: face-count checksums, n <= 15 ----------------------------
Outcome criterion4() {
  Outcome out;
  for (Source src : {Source::KB, Source::KA, Source::WB, Source::WA})
    for (unsigned n = 1; n <= 15 && out.pass; ++n)
      for (unsigned j = (src == Source::WA ? 1u : 0u); j <= n; ++j) {
        Rational sum(0);
        for (unsigned k = 0; k <= n; ++k)
          sum += tangentConeSumClosedForm(src, n, j, k);
        if (sum != faceCount(src, n, j)) {
          out.fail(sourceName(src) + " checksum at n=" + std::to_string(n) +
                   " j=" + std::to_string(j));
          break;
        }
      }
  return out;
}

// --- criterion 5: the six generating-function oracles to order 12 ----------
Outcome criterion5() {
  Outcome out;
  const std::vector<Rational> rs{Rational(0), Rational(1, 2), Rational(1),
                                 Rational(3, 2), Rational(2)};
  for (unsigned n = 0; n <= 12 && out.pass; ++n)
    for (unsigned k = 0; k <= n; ++k) {
      if (seriesCoefficientOracle(GfCatalog::Stirling1, n, k) != stirling1(n, k) ||
          seriesCoefficientOracle(GfCatalog::Stirling2, n, k) != stirling2(n, k) ||
          seriesCoefficientOracle(GfCatalog::Stirling1B, n, k) != stirling1B(n, k) ||
          seriesCoefficientOracle(GfCatalog::Stirling2B, n, k) != stirling2B(n, k)) {
        out.fail("classical catalog mismatch at n=" + std::to_string(n) +
                 " k=" + std::to_string(k));
        break;
      }
      bool ok = true;
      for (const Rational& r : rs)
        ok = ok &&
             seriesCoefficientOracle(GfCatalog::RStirling1, n, k, r) ==
                 rStirling1(n, k, r) &&
             seriesCoefficientOracle(GfCatalog::RStirling2, n, k, r) ==
                 rStirling2(n, k, r);
      if (!ok) {
        out.fail("r-catalog mismatch at n=" + std::to_string(n) +
                 " k=" + std::to_string(k));
        break;
      }
    }
  return out;
}

// --- criterion 6: MC intrinsic volumes, 10^6 samples ------------------------
Outcome criterion6() {
  Outcome out;
  std::vector<ConeSpec> specs;
  for (unsigned n = 1; n <= 6; ++n) {
    specs.push_back(ConeSpec::chamber(Chamber::A, n));
    specs.push_back(ConeSpec::chamber(Chamber::B, n));
  }
  specs.push_back(ConeSpec::parse("A2xB2"));
  std::uint64_t salt = 6000;
  for (const ConeSpec& spec : specs) {
    const auto ests = estimateIntrinsicVolumes(spec, 1000000, baseSeed() + ++salt, 0);
    for (unsigned k = 0; k < ests.size(); ++k) {
      const double z = zScore(ests[k], coneSpecIntrinsic(spec, k).toDouble());
      if (!(std::fabs(z) <= kSigma))
        out.fail(spec.toString() + " k=" + std::to_string(k) +
                 " |z|=" + std::to_string(std::fabs(z)));
    }
  }
  return out;
}

// --- criterion 7: MC expected faces, walks and bridges ----------------------
Outcome criterion7() {
  Outcome out;
  std::vector<std::vector<unsigned>> configs{{2}, {3}, {4}, {5}, {1, 1}, {2, 2}};
  std::uint64_t salt = 7000;
  for (const auto& ns : configs)
    for (unsigned j = 0; j <= 1; ++j)
      for (WalkKind kind : {WalkKind::Walk, WalkKind::Bridge}) {
        const WalkEnsemble ens{2, ns, kind};
        const auto est = estimateExpectedFaces(ens, j, 10000, baseSeed() + ++salt, 0);
        const double z = zScore(est, expectedFaces(ens, j).toDouble());
        if (!(std::fabs(z) <= kSigma)) {
          std::ostringstream msg;
          msg << (kind == WalkKind::Walk ? "walk" : "bridge") << " ns=(";
          for (unsigned v : ns) msg << v << ",";
          msg << ") j=" << j << " |z|=" << std::fabs(z);
          out.fail(msg.str());
        }
      }
  return out;
}

// --- criterion 8: MC recovery over the full grid ----------------------------
// Cells with j = n draw the polytope itself as the face; its tangent cone is
// a linear subspace, the displayed proposition formula degenerates to 0
// there, and the true probability is 1 (k = n makes the kernel trivial or
// transversal). Those cells assert the simulator's exact 1 and are excluded
// from the |z| comparison; see the decisions ledger.
Outcome criterion8() {
  Outcome out;
  std::uint64_t salt = 8000;
  unsigned degenerateCells = 0;
  for (Source fam : {Source::WB, Source::WA, Source::KB, Source::KA})
    for (unsigned n = 1; n <= 4; ++n)
      for (unsigned j = (fam == Source::WA ? 1u : 0u); j <= n; ++j)
        for (unsigned k = j; k <= n; ++k) {
          const auto res =
              estimateRecoveryProbability(fam, n, j, k, 10000, baseSeed() + ++salt, 0);
          if (res.inconclusive != 0)
            out.fail(sourceName(fam) + " inconclusive trials at n=" + std::to_string(n));
          if (j == n) {
            ++degenerateCells;
            if (res.estimate.mean != 1.0)
              out.fail(sourceName(fam) + " degenerate cell j=n=" + std::to_string(n) +
                       " expected exact 1");
            continue;
          }
          const double exact = recoveryProbability(fam, n, j, k).toDouble();
          if (j == 0 && k == n) {
            if (res.estimate.mean != 1.0 || exact != 1.0)
              out.fail(sourceName(fam) + " invertible cell n=" + std::to_string(n) +
                       " not exactly 1");
            continue;
          }
          const double z = zScore(res.estimate, exact);
          if (!(std::fabs(z) <= kSigma))
            out.fail(sourceName(fam) + " n=" + std::to_string(n) +
                     " j=" + std::to_string(j) + " k=" + std::to_string(k) +
                     " |z|=" + std::to_string(std::fabs(z)));
        }
  if (out.pass)
    out.detail = std::to_string(degenerateCells) +
                 " j=n cells checked as exact 1 (formula-degenerate, see ledger)";
  return out;
}

// --- criterion 9: internal x external reconstruction ------------------------
Outcome criterion9() {
  Outcome out;
  std::vector<ConeSpec> specs{ConeSpec::chamber(Chamber::B, 3)};
  std::set<ConeSpec> seen;
  for (unsigned j = 0; j <= 3; ++j)
    for (const auto& [spec, mult] : enumerateTangentCones(Source::KB, 3, j).items)
      if (seen.insert(spec).second) specs.push_back(spec);
  specs.push_back(ConeSpec::parse("A2xB2"));

  std::uint64_t salt = 90000;
  for (const ConeSpec& spec : specs) {
    const unsigned dim = spec.ambientDim();
    for (unsigned k = 0; k <= dim; ++k) {
      double total = 0.0, variance = 0.0;
      for (const FaceSpec& face : enumerateFaces(spec, k)) {
        const double weight = externalAngleExact(face).toDouble();
        const MCEstimate est =
            estimateFaceInternalAngle(face, 1000000, baseSeed() + ++salt, 0);
        total += weight * est.mean;
        variance += weight * weight * est.stdErr * est.stdErr;
      }
      const double exact = coneSpecIntrinsic(spec, k).toDouble();
      const double se = std::sqrt(variance);
      const bool ok = se > 0.0 ? std::fabs(total - exact) <= kSigma * se
                               : total == exact;
      if (!ok)
        out.fail(spec.toString() + " k=" + std::to_string(k) + " total=" +
                 std::to_string(total) + " exact=" + std::to_string(exact));
    }
  }
  return out;
}

// --- criterion 10: PAVA vs face-enumeration projection oracle ---------------
Outcome criterion10() {
  Outcome out;
  int idx = 0;
  for (unsigned n = 1; n <= 6; ++n)
    for (int rep = 0; rep < 167 && out.pass; ++rep, ++idx) {
      RngStream s(baseSeed(), 100000 + idx);
      std::vector<double> x(n);
      for (auto& v : x) v = s.nextGaussian();
      for (Chamber fam : {Chamber::A, Chamber::B}) {
        const auto fast = projectChamber(fam, x);
        const auto slow = projectChamberByFaceEnumeration(fam, x);
        for (unsigned i = 0; i < n; ++i)
          if (std::fabs(fast[i] - slow[i]) > 1e-10) {
            out.fail("deviation above 1e-10 at n=" + std::to_string(n));
            break;
          }
      }
    }
  return out;
}

// --- criterion 11: Sparre Andersen walk probabilities, i <= 8 ---------------
Outcome criterion11() {
  Outcome out;
  for (unsigned i = 1; i <= 8; ++i) {
    const auto est = estimateSparreAndersen(i, 1000000, baseSeed() + 11000 + i, 0);
    const double z = zScore(est, sparreAndersenWalkAngle(i).toDouble());
    if (!(std::fabs(z) <= kSigma))
      out.fail("i=" + std::to_string(i) + " |z|=" + std::to_string(std::fabs(z)));
  }
  return out;
}

struct Criterion {
  int number;
  const char* title;
  std::function<Outcome()> run;
};

const std::vector<Criterion> kCriteria{
    {1, "exact Stirling sum and alternating identities (n <= 15, 2b <= 6)", criterion1},
    {2, "theorem cross-validation against tangent-cone enumeration (n <= 8)", criterion2},
    {3, "series coefficients match closed forms; aggregated sums (b <= 3)", criterion3},
    {4, "face-count checksums (n <= 15)", criterion4},
    {5, "generating-function oracles to order 12 at five r values", criterion5},
    {6, "MC intrinsic volumes within 4 sigma at 10^6 samples", criterion6},
    {7, "MC expected faces for walks and bridges within 4 sigma", criterion7},
    {8, "MC recovery probabilities on the n <= 4 grid within 4 sigma", criterion8},
    {9, "internal x external angle reconstruction within 4 sigma", criterion9},
    {10, "PAVA projection equals face-enumeration oracle to 1e-10", criterion10},
    {11, "Sparre Andersen walk probabilities within 4 sigma (i <= 8)", criterion11},
};

} // namespace

int main(int argc, char** argv) {
  std::set<int> wanted;
  for (int i = 1; i < argc; ++i) wanted.insert(std::atoi(argv[i]));

  int failures = 0;
  for (const auto& crit : kCriteria) {
    if (!wanted.empty() && !wanted.count(crit.number)) continue;
    const auto t0 = std::chrono::steady_clock::now();
    Outcome out;
    try {
      out = crit.run();
    } catch (const std::exception& e) {
      out.pass = false;
      out.detail = std::string("exception: ") + e.what();
    }
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::cout << (out.pass ? "[PASS]" : "[FAIL]") << " criterion " << crit.number
              << ": " << crit.title;
    if (!out.detail.empty()) std::cout << " -- " << out.detail;
    std::cout << " (" << seconds << "s)" << std::endl;
    if (!out.pass) ++failures;
  }
  return failures;
}
