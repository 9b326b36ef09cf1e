// Command-line front end: exact tables, Monte Carlo experiments, and a
// self-verification report. Outputs are JSON-lines by default (one object
// per line) with an optional CSV projection; exact rationals are always
// emitted as "p/q" strings.

#include <chrono>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "conesum/angle_sums.hpp"
#include "conesum/expected_faces.hpp"
#include "conesum/face_spec.hpp"
#include "conesum/isotonic.hpp"
#include "conesum/mc.hpp"
#include "conesum/series.hpp"
#include "conesum/stirling.hpp"

using json = nlohmann::ordered_json;
using namespace conesum;

namespace {

constexpr std::uint64_t kDefaultSeed = 1729;

std::uint64_t seedFromEnv(std::uint64_t fallback) {
  if (const char* env = std::getenv("CONESUM_SEED")) {
    try {
      return std::stoull(env);
    } catch (const std::exception&) {
      std::cerr << "warning: ignoring malformed CONESUM_SEED='" << env << "'\n";
    }
  }
  return fallback;
}

std::string csvEscape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

// Streams rows as JSON lines or as CSV with a header derived from the first
// row's keys.
class RowWriter {
public:
  RowWriter(std::ostream& os, std::string format)
      : os_(os), format_(std::move(format)) {}

  void row(const json& obj) {
    if (format_ == "csv") {
      if (!headerDone_) {
        bool first = true;
        for (const auto& [key, value] : obj.items()) {
          (void)value;
          if (!first) os_ << ',';
          os_ << csvEscape(key);
          first = false;
        }
        os_ << '\n';
        headerDone_ = true;
      }
      bool first = true;
      for (const auto& [key, value] : obj.items()) {
        (void)key;
        if (!first) os_ << ',';
        first = false;
        if (value.is_string())
          os_ << csvEscape(value.get<std::string>());
        else
          os_ << csvEscape(value.dump());
      }
      os_ << '\n';
    } else {
      os_ << obj.dump() << '\n';
    }
  }

private:
  std::ostream& os_;
  std::string format_;
  bool headerDone_ = false;
};

json finiteOrString(double v) {
  if (std::isfinite(v)) return v;
  return v > 0 ? "inf" : "-inf";
}

struct CommonOpts {
  std::uint64_t seed = kDefaultSeed;
  std::uint64_t samples = 10000;
  int threads = 0;
  double sigma = 4.0;
  std::string format = "json";
  std::string outPath;
};

void addCommon(CLI::App* cmd, CommonOpts& o) {
  cmd->add_option("--seed", o.seed, "RNG seed (env CONESUM_SEED overrides the default)");
  cmd->add_option("--samples", o.samples, "Monte Carlo sample count");
  cmd->add_option("--threads", o.threads, "worker threads (0 = all cores)");
  cmd->add_option("--sigma", o.sigma, "acceptance multiplier for |z|");
  cmd->add_option("--format", o.format, "output format")
      ->check(CLI::IsMember({"json", "csv"}));
  cmd->add_option("--out", o.outPath, "write rows to this file instead of stdout");
}

struct OutStream {
  explicit OutStream(const std::string& path) {
    if (!path.empty()) {
      file.open(path);
      if (!file) throw std::runtime_error("cannot open output file: " + path);
    }
  }
  std::ostream& get() { return file.is_open() ? file : std::cout; }
  std::ofstream file;
};

// ---------------------------------------------------------------- tables --

int runTables(const std::string& family, unsigned nmax, const std::string& rText,
              unsigned dParam, const CommonOpts& opts) {
  OutStream out(opts.outPath);
  RowWriter writer(out.get(), opts.format);
  const Rational r = rText.empty() ? Rational(0) : Rational(rText);

  auto stirlingRow = [&](unsigned n, unsigned k, const Rational& v) {
    json row{{"family", family}, {"n", n}, {"k", k}};
    if (!rText.empty()) row["r"] = r.toString();
    row["value"] = v.toString();
    writer.row(row);
  };
  auto theoremRow = [&](unsigned n, unsigned j, unsigned k, const Rational& v) {
    writer.row(json{
        {"family", family}, {"n", n}, {"j", j}, {"k", k}, {"value", v.toString()}});
  };

  if (family == "stirling1" || family == "stirling2" || family == "stirling1b" ||
      family == "stirling2b" || family == "rstirling1" || family == "rstirling2") {
    for (unsigned n = 0; n <= nmax; ++n)
      for (unsigned k = 0; k <= n; ++k) {
        Rational v(0);
        if (family == "stirling1") v = stirling1(n, k);
        else if (family == "stirling2") v = stirling2(n, k);
        else if (family == "stirling1b") v = stirling1B(n, k);
        else if (family == "stirling2b") v = stirling2B(n, k);
        else if (family == "rstirling1") v = rStirling1(n, k, r);
        else v = rStirling2(n, k, r);
        stirlingRow(n, k, v);
      }
    return 0;
  }
  if (family == "orthoscheme" || family == "weyl-a" || family == "weyl-b") {
    for (unsigned n = 0; n <= nmax; ++n)
      for (unsigned j = 0; j <= n; ++j)
        for (unsigned k = 0; k <= n; ++k) {
          Rational v(0);
          if (family == "orthoscheme") v = theoremOrthoscheme(n, j, k);
          else if (family == "weyl-a") v = theoremWeyl(Chamber::A, n, j, k);
          else v = theoremWeyl(Chamber::B, n, j, k);
          theoremRow(n, j, k, v);
        }
    return 0;
  }
  if (family.rfind("recovery-", 0) == 0) {
    const Source src = parseSource(family.substr(9));
    for (unsigned n = 1; n <= nmax; ++n)
      for (unsigned j = (src == Source::WA ? 1u : 0u); j <= n; ++j)
        for (unsigned k = j; k <= n; ++k)
          theoremRow(n, j, k, recoveryProbability(src, n, j, k));
    return 0;
  }
  if (family == "expected-faces") {
    if (dParam < 1) throw std::invalid_argument("--d must be >= 1");
    for (unsigned n = dParam; n <= nmax; ++n)
      for (unsigned j = 0; j < dParam; ++j)
        writer.row(json{{"family", family},
                        {"d", dParam},
                        {"n", n},
                        {"j", j},
                        {"value", expectedFacesSingleClosedForm(dParam, n, j).toString()}});
    return 0;
  }
  throw std::invalid_argument("unknown --family '" + family + "'");
}

// -------------------------------------------------------------------- mc --

json estimateFields(const MCEstimate& est, std::optional<Rational> exact) {
  json row;
  row["estimate"] = est.mean;
  row["stderr"] = est.stdErr;
  row["samples"] = est.samples;
  row["seed"] = est.seed;
  if (exact) {
    row["exact"] = exact->toString();
    row["exact_float"] = exact->toDouble();
    row["z"] = finiteOrString(zScore(est, exact->toDouble()));
  }
  return row;
}

int runMcFaces(unsigned d, const std::vector<unsigned>& ns, unsigned j,
               const std::string& kind, const CommonOpts& opts) {
  OutStream out(opts.outPath);
  RowWriter writer(out.get(), opts.format);
  const WalkKind wk = (kind == "bridge") ? WalkKind::Bridge : WalkKind::Walk;
  const WalkEnsemble ens{d, ns, wk};
  const MCEstimate est = estimateExpectedFaces(ens, j, opts.samples, opts.seed, opts.threads);
  json row{{"cmd", "mc-faces"}, {"d", d}, {"ns", ns}, {"j", j}, {"kind", kind}};
  row.update(estimateFields(est, expectedFaces(ens, j)));
  writer.row(row);
  return 0;
}

int runMcVolumes(const std::string& specText, const CommonOpts& opts) {
  OutStream out(opts.outPath);
  RowWriter writer(out.get(), opts.format);
  const ConeSpec spec = ConeSpec::parse(specText);
  const auto ests = estimateIntrinsicVolumes(spec, opts.samples, opts.seed, opts.threads);
  for (unsigned k = 0; k < ests.size(); ++k) {
    json row{{"cmd", "mc-volumes"}, {"spec", spec.toString()}, {"k", k}};
    row.update(estimateFields(ests[k], coneSpecIntrinsic(spec, k)));
    writer.row(row);
  }
  return 0;
}

int runMcRecovery(const std::string& familyText, unsigned n, unsigned j, unsigned k,
                  const std::vector<double>& weights, const CommonOpts& opts) {
  OutStream out(opts.outPath);
  RowWriter writer(out.get(), opts.format);
  const Source family = parseSource(familyText);
  const RecoveryEstimate res = estimateRecoveryProbability(
      family, n, j, k, opts.samples, opts.seed, opts.threads, weights);
  json row{{"cmd", "mc-recovery"}, {"family", sourceName(family)},
           {"n", n},               {"j", j},
           {"k", k}};
  row.update(estimateFields(res.estimate, recoveryProbability(family, n, j, k)));
  row["inconclusive"] = res.inconclusive;
  writer.row(row);
  return 0;
}

int runMcAngles(const std::vector<unsigned>& lengths, bool bounded,
                std::optional<unsigned> walkSteps, const CommonOpts& opts) {
  OutStream out(opts.outPath);
  RowWriter writer(out.get(), opts.format);
  if (walkSteps) {
    const MCEstimate est =
        estimateSparreAndersen(*walkSteps, opts.samples, opts.seed, opts.threads);
    json row{{"cmd", "mc-angles"}, {"walk", *walkSteps}};
    row.update(estimateFields(est, sparreAndersenWalkAngle(*walkSteps)));
    writer.row(row);
    return 0;
  }
  if (lengths.empty())
    throw std::invalid_argument("mc angles: give --lengths or --walk");
  const MCEstimate est =
      estimateInternalAngle(lengths, bounded, opts.samples, opts.seed, opts.threads);
  json row{{"cmd", "mc-angles"}, {"lengths", lengths}, {"bounded", bounded}};
  row.update(estimateFields(est, std::nullopt));
  writer.row(row);
  return 0;
}

// ---------------------------------------------------------------- verify --

struct CheckResult {
  bool pass = true;
  double worstZ = 0.0;
  std::string detail;
};

struct Check {
  std::string id;
  std::function<CheckResult()> run;
};

CheckResult exactCheck(bool ok, const std::string& failDetail) {
  CheckResult r;
  r.pass = ok;
  if (!ok) r.detail = failDetail;
  return r;
}

int runVerify(const CommonOpts& opts, const std::string& injectFault,
              std::uint64_t mcSamples) {
  const double sigma = opts.sigma;
  const int threads = opts.threads;
  const std::uint64_t seed = opts.seed;
  std::vector<Check> checks;

  auto fault = [&injectFault](const std::string& id) { return injectFault == id; };

  checks.push_back({"exact-identity/stirling-sums", [&] {
    for (unsigned twoB = 0; twoB <= 6; ++twoB) {
      const Rational b = Rational(twoB) / Rational(2);
      for (unsigned n = 1; n <= 12; ++n)
        for (unsigned j = 0; j <= n; ++j) {
          Rational sum(0), alt(0);
          for (unsigned k = 0; k <= n; ++k) {
            const Rational term = rStirling1(n, k, b) * rStirling2(k, j, b);
            sum += term;
            alt += (k % 2 == 0) ? term : -term;
          }
          const Rational expect = Rational::factorial(n) / Rational::factorial(j) *
                                  Rational::binomial(n + twoB - 1, n - j);
          if (sum != expect)
            return exactCheck(false, "sum identity fails at n=" + std::to_string(n));
          if (j < n && alt != Rational(0))
            return exactCheck(false,
                              "alternating identity fails at n=" + std::to_string(n));
        }
    }
    return exactCheck(true, "");
  }});

  auto gfCheck = [&](const std::string& id, GfCatalog cat,
                     std::function<Rational(unsigned, unsigned, const Rational&)> table) {
    checks.push_back({id, [&fault, id, cat, table] {
      const std::vector<Rational> rs =
          (cat == GfCatalog::RStirling1 || cat == GfCatalog::RStirling2)
              ? std::vector<Rational>{Rational(0), Rational(1, 2), Rational(1),
                                      Rational(3, 2), Rational(2)}
              : std::vector<Rational>{Rational(0)};
      for (const Rational& r : rs)
        for (unsigned n = 0; n <= 10; ++n)
          for (unsigned k = 0; k <= n; ++k) {
            Rational expected = table(n, k, r);
            if (fault(id) && n == 4 && k == 2) expected += Rational(1);
            if (seriesCoefficientOracle(cat, n, k, r) != expected)
              return exactCheck(false, "coefficient mismatch at n=" + std::to_string(n) +
                                           ", k=" + std::to_string(k));
          }
      return exactCheck(true, "");
    }});
  };
  gfCheck("gf-oracle/stirling1", GfCatalog::Stirling1,
          [](unsigned n, unsigned k, const Rational&) { return stirling1(n, k); });
  gfCheck("gf-oracle/stirling2", GfCatalog::Stirling2,
          [](unsigned n, unsigned k, const Rational&) { return stirling2(n, k); });
  gfCheck("gf-oracle/stirling1b", GfCatalog::Stirling1B,
          [](unsigned n, unsigned k, const Rational&) { return stirling1B(n, k); });
  gfCheck("gf-oracle/stirling2b", GfCatalog::Stirling2B,
          [](unsigned n, unsigned k, const Rational&) { return stirling2B(n, k); });
  gfCheck("gf-oracle/rstirling1", GfCatalog::RStirling1,
          [](unsigned n, unsigned k, const Rational& r) { return rStirling1(n, k, r); });
  gfCheck("gf-oracle/rstirling2", GfCatalog::RStirling2,
          [](unsigned n, unsigned k, const Rational& r) { return rStirling2(n, k, r); });

  checks.push_back({"oracle-equivalence/brute-stirling", [&] {
    for (unsigned n = 0; n <= 8; ++n)
      for (unsigned k = 0; k <= n; ++k)
        for (unsigned r = 0; r <= k; ++r) {
          if (bruteStirling(BruteKind::First, n, k, r) !=
              rStirling1(n - r, k - r, Rational(r)))
            return exactCheck(false, "first kind mismatch at n=" + std::to_string(n));
          if (bruteStirling(BruteKind::Second, n, k, r) !=
              rStirling2(n - r, k - r, Rational(r)))
            return exactCheck(false, "second kind mismatch at n=" + std::to_string(n));
        }
    return exactCheck(true, "");
  }});

  checks.push_back({"theorem/tangent-cone-enumeration", [&] {
    for (Source src : {Source::KB, Source::KA, Source::WB, Source::WA})
      for (unsigned n = 1; n <= 6; ++n)
        for (unsigned j = 0; j <= n; ++j)
          for (unsigned k = 0; k <= n; ++k)
            if (tangentConeSumClosedForm(src, n, j, k) !=
                tangentConeSumEnumerated(src, n, j, k))
              return exactCheck(false,
                                sourceName(src) + " mismatch at n=" + std::to_string(n));
    return exactCheck(true, "");
  }});

  checks.push_back({"series/r-vs-closed-forms", [&] {
    for (unsigned n = 0; n <= 10; ++n)
      for (unsigned j = 0; j <= n; ++j)
        for (unsigned k = 0; k <= n; ++k) {
          if (seriesR(Rational(1), k, j, {n}) != theoremOrthoscheme(n, j, k))
            return exactCheck(false, "R_1 mismatch at n=" + std::to_string(n));
          if (seriesR(Rational(1, 2), k, j, {n}) != theoremWeyl(Chamber::B, n, j, k))
            return exactCheck(false, "R_1/2 mismatch at n=" + std::to_string(n));
          if (seriesR(Rational(0), k, j, {n}) != theoremWeyl(Chamber::A, n, j, k))
            return exactCheck(false, "R_0 mismatch at n=" + std::to_string(n));
        }
    return exactCheck(true, "");
  }});

  checks.push_back({"series/aggregated-sums", [&] {
    for (unsigned b = 1; b <= 3; ++b)
      for (unsigned n = 1; n <= 6; ++n)
        for (unsigned j = 0; j <= n; ++j)
          for (unsigned k = 0; k <= n; ++k)
            if (aggregatedProductSum(b, n, j, k) !=
                aggregatedProductSumEnumerated(b, n, j, k))
              return exactCheck(false, "mismatch at b=" + std::to_string(b));
    return exactCheck(true, "");
  }});

  checks.push_back({"face-count/checksum", [&] {
    for (Source src : {Source::KB, Source::KA, Source::WB, Source::WA})
      for (unsigned n = 1; n <= 12; ++n)
        for (unsigned j = (src == Source::WA ? 1u : 0u); j <= n; ++j) {
          Rational sum(0);
          for (unsigned k = 0; k <= n; ++k)
            sum += tangentConeSumClosedForm(src, n, j, k);
          if (sum != faceCount(src, n, j))
            return exactCheck(false,
                              sourceName(src) + " checksum at n=" + std::to_string(n));
        }
    return exactCheck(true, "");
  }});

  checks.push_back({"projection/pava-oracle", [&] {
    int idx = 0;
    for (unsigned n = 1; n <= 6; ++n)
      for (int rep = 0; rep < 50; ++rep, ++idx) {
        RngStream s(seed, 700000 + idx);
        std::vector<double> x(n);
        for (auto& v : x) v = s.nextGaussian();
        for (Chamber fam : {Chamber::A, Chamber::B}) {
          const auto fast = projectChamber(fam, x);
          const auto slow = projectChamberByFaceEnumeration(fam, x);
          for (unsigned i = 0; i < n; ++i)
            if (std::fabs(fast[i] - slow[i]) > 1e-10)
              return exactCheck(false, "deviation above 1e-10 at n=" + std::to_string(n));
        }
      }
    return exactCheck(true, "");
  }});

  auto mcZ = [sigma](CheckResult& res, const MCEstimate& est, const Rational& exact) {
    const double z = zScore(est, exact.toDouble());
    if (std::fabs(z) > std::fabs(res.worstZ)) res.worstZ = z;
    if (!(std::fabs(z) <= sigma)) {
      res.pass = false;
      if (res.detail.empty())
        res.detail = "|z| = " + std::to_string(std::fabs(z)) + " above sigma";
    }
  };

  checks.push_back({"mc-vs-exact/intrinsic-volumes", [&, mcZ] {
    CheckResult res;
    unsigned salt = 0;
    for (const char* name : {"A3", "B3", "A2xB2"}) {
      const ConeSpec spec = ConeSpec::parse(name);
      const auto ests = estimateIntrinsicVolumes(spec, mcSamples, seed + ++salt, threads);
      for (unsigned k = 0; k < ests.size(); ++k)
        mcZ(res, ests[k], coneSpecIntrinsic(spec, k));
    }
    return res;
  }});

  checks.push_back({"mc-vs-exact/expected-faces", [&, mcZ] {
    CheckResult res;
    unsigned salt = 100;
    for (WalkKind kind : {WalkKind::Walk, WalkKind::Bridge}) {
      const WalkEnsemble ens{2, {3}, kind};
      const auto est = estimateExpectedFaces(
          ens, 0, std::min<std::uint64_t>(mcSamples, 20000), seed + ++salt, threads);
      mcZ(res, est, expectedFaces(ens, 0));
    }
    return res;
  }});

  checks.push_back({"mc-vs-exact/recovery", [&, mcZ] {
    CheckResult res;
    const auto wb = estimateRecoveryProbability(
        Source::WB, 2, 1, 1, std::min<std::uint64_t>(mcSamples, 20000), seed + 201,
        threads);
    mcZ(res, wb.estimate, recoveryProbability(Source::WB, 2, 1, 1));
    const auto kb = estimateRecoveryProbability(
        Source::KB, 3, 1, 2, std::min<std::uint64_t>(mcSamples, 20000), seed + 202,
        threads);
    mcZ(res, kb.estimate, recoveryProbability(Source::KB, 3, 1, 2));
    return res;
  }});

  checks.push_back({"mc-vs-exact/sparre-andersen", [&, mcZ] {
    CheckResult res;
    for (unsigned i = 1; i <= 6; ++i) {
      const auto est = estimateSparreAndersen(i, mcSamples, seed + 300 + i, threads);
      mcZ(res, est, sparreAndersenWalkAngle(i));
    }
    return res;
  }});

  OutStream out(opts.outPath);
  json report;
  report["suite"] = "conesum-verify";
  report["seed"] = seed;
  report["sigma"] = sigma;
  report["mc_samples"] = mcSamples;
  report["checks"] = json::array();
  unsigned passed = 0, failed = 0;
  for (const auto& check : checks) {
    const auto t0 = std::chrono::steady_clock::now();
    CheckResult res;
    try {
      res = check.run();
    } catch (const std::exception& e) {
      res.pass = false;
      res.detail = std::string("exception: ") + e.what();
    }
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    json c{{"id", check.id},
           {"status", res.pass ? "pass" : "fail"},
           {"z", finiteOrString(res.worstZ)},
           {"seconds", seconds}};
    if (!res.detail.empty()) c["detail"] = res.detail;
    report["checks"].push_back(c);
    (res.pass ? passed : failed) += 1;
    std::cout << (res.pass ? "ok   " : "FAIL ") << check.id;
    if (!res.pass && !res.detail.empty()) std::cout << ": " << res.detail;
    std::cout << " (" << seconds << "s)\n";
  }
  report["passed"] = passed;
  report["failed"] = failed;
  if (!opts.outPath.empty())
    out.get() << report.dump(2) << '\n';
  else
    std::cout << report.dump() << '\n';
  return failed == 0 ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact angle-sum formulas for orthoschemes and Weyl chambers, "
               "with Monte Carlo verification"};
  app.require_subcommand(1);

  // tables
  auto* tables = app.add_subcommand("tables", "emit exact value grids");
  std::string family;
  unsigned nmax = 8, dParam = 2;
  std::string rText;
  CommonOpts tablesOpts;
  tables->add_option("--family", family, "value family")->required();
  tables->add_option("--nmax,--n", nmax, "largest n in the grid");
  tables->add_option("--r", rText, "r parameter for rstirling families, e.g. 1/2");
  tables->add_option("--d", dParam, "ambient dimension for expected-faces");
  addCommon(tables, tablesOpts);

  // mc
  auto* mc = app.add_subcommand("mc", "Monte Carlo experiments");
  mc->require_subcommand(1);

  auto* mcFaces = mc->add_subcommand("faces", "expected face counts of Minkowski sums");
  unsigned fD = 2, fJ = 0;
  std::vector<unsigned> fNs{3};
  std::string fKind = "walk";
  CommonOpts facesOpts;
  mcFaces->add_option("--d", fD, "ambient dimension (2 or 3)");
  mcFaces->add_option("--ns", fNs, "steps per walk, e.g. --ns 2 2")->expected(-1);
  mcFaces->add_option("--j", fJ, "face dimension");
  mcFaces->add_option("--kind", fKind, "walk or bridge")
      ->check(CLI::IsMember({"walk", "bridge"}));
  addCommon(mcFaces, facesOpts);

  auto* mcVolumes = mc->add_subcommand("volumes", "conic intrinsic volume estimates");
  std::string vSpec = "A2xB2";
  CommonOpts volumesOpts;
  mcVolumes->add_option("--spec", vSpec, "chamber product, e.g. A2xB2");
  addCommon(mcVolumes, volumesOpts);

  auto* mcRecovery = mc->add_subcommand("recovery", "unique-recovery probability");
  std::string rFamily = "WB";
  unsigned rN = 2, rJ = 0, rK = 2;
  std::vector<double> rWeights;
  CommonOpts recoveryOpts;
  mcRecovery->add_option("--family", rFamily, "WB, WA, KB or KA");
  mcRecovery->add_option("--n", rN, "ambient parameter n");
  mcRecovery->add_option("--j", rJ, "face dimension");
  mcRecovery->add_option("--k", rK, "number of measurements");
  mcRecovery->add_option("--weights", rWeights, "a-weights of the signal")->expected(-1);
  addCommon(mcRecovery, recoveryOpts);

  auto* mcAngles = mc->add_subcommand("angles", "ordered-Gaussian angle estimates");
  std::vector<unsigned> aLengths;
  bool aBounded = false;
  unsigned aWalk = 0;
  CommonOpts anglesOpts;
  mcAngles->add_option("--lengths", aLengths, "block lengths, e.g. --lengths 1 2 1")
      ->expected(-1);
  mcAngles->add_flag("--bounded", aBounded, "append the trailing >= 0 condition");
  auto* walkOpt =
      mcAngles->add_option("--walk", aWalk, "estimate the non-positive walk probability");
  addCommon(mcAngles, anglesOpts);

  // verify
  auto* verify = app.add_subcommand("verify", "cross-check every formula family");
  CommonOpts verifyOpts;
  verifyOpts.samples = 200000;
  std::string injectFault;
  addCommon(verify, verifyOpts);
  verify->add_option("--inject-fault", injectFault,
                     "perturb the named check's reference table (testing hook)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (tables->parsed()) {
      tablesOpts.seed = seedFromEnv(tablesOpts.seed);
      return runTables(family, nmax, rText, dParam, tablesOpts);
    }
    if (mcFaces->parsed()) {
      facesOpts.seed = seedFromEnv(facesOpts.seed);
      return runMcFaces(fD, fNs, fJ, fKind, facesOpts);
    }
    if (mcVolumes->parsed()) {
      volumesOpts.seed = seedFromEnv(volumesOpts.seed);
      return runMcVolumes(vSpec, volumesOpts);
    }
    if (mcRecovery->parsed()) {
      recoveryOpts.seed = seedFromEnv(recoveryOpts.seed);
      return runMcRecovery(rFamily, rN, rJ, rK, rWeights, recoveryOpts);
    }
    if (mcAngles->parsed()) {
      anglesOpts.seed = seedFromEnv(anglesOpts.seed);
      return runMcAngles(aLengths, aBounded,
                         walkOpt->count() > 0 ? std::optional<unsigned>(aWalk)
                                              : std::nullopt,
                         anglesOpts);
    }
    if (verify->parsed()) {
      verifyOpts.seed = seedFromEnv(verifyOpts.seed);
      return runVerify(verifyOpts, injectFault, verifyOpts.samples);
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
