#include "conesum/expected_faces.hpp"

#include <numeric>
#include <stdexcept>

#include "conesum/angle_sums.hpp"
#include "conesum/series.hpp"
#include "conesum/stirling.hpp"

namespace conesum {

unsigned WalkEnsemble::totalSteps() const {
  unsigned n = 0;
  for (unsigned v : ns) n += v;
  return n;
}

Rational expectedFaces(const WalkEnsemble& ens, unsigned j) {
  const unsigned n = ens.totalSteps();
  if (ens.b() == 0 || ens.d == 0 || j >= ens.d || ens.d > n)
    throw std::invalid_argument("expectedFaces: requires 0 <= j < d <= sum(ns)");
  Rational sum(0);
  for (unsigned l = 1; ens.d + 1 >= 2 * l; ++l) {
    const unsigned k = ens.d - 2 * l + 1;
    sum += seriesR(Rational(1), k, j, ens.ns);
  }
  return Rational(2) * sum;
}

Rational expectedFacesSingleClosedForm(unsigned d, unsigned n, unsigned j) {
  if (d == 0 || j >= d || d > n)
    throw std::invalid_argument(
        "expectedFacesSingleClosedForm: requires 0 <= j < d <= n");
  Rational sum(0);
  for (unsigned l = 0; d >= 2 * l; ++l) {
    const unsigned m = d - 2 * l;
    sum += stirling1(n + 1, m) * stirling2(m, j + 1);
    if (m == 0) break;
  }
  return Rational(2) * Rational::factorial(j) / Rational::factorial(n) * sum;
}

Rational grassmannAngle(const ConeSpec& spec, unsigned k) {
  if (spec.isSubspace())
    throw std::domain_error(
        "grassmannAngle: relation invalid for linear subspaces");
  const TPoly gen = coneSpecGenPoly(spec);
  Rational sum(0);
  for (unsigned i = 1; k + i <= spec.ambientDim(); i += 2)
    sum += gen.coeff(k + i);
  return Rational(2) * sum;
}

namespace {

void checkRecoveryArgs(Source family, unsigned n, unsigned j, unsigned k) {
  if (!(j <= k && k <= n))
    throw std::invalid_argument("recovery: requires j <= k <= n");
  if (family == Source::WA && j == 0)
    throw std::invalid_argument("recovery: WA requires j >= 1");
}

} // namespace

Rational recoveryProbability(Source family, unsigned n, unsigned j, unsigned k) {
  checkRecoveryArgs(family, n, j, k);
  Rational sum(0);
  switch (family) {
    case Source::WB: {
      for (unsigned i = 1; i <= k; i += 2)
        sum += stirling1B(n, k - i) * stirling2B(k - i, j);
      return Rational(2).pow(j + 1) * Rational::factorial(j) /
             (Rational(2).pow(n) * Rational::factorial(n) * Rational::binomial(n, j)) *
             sum;
    }
    case Source::WA: {
      for (unsigned i = 1; i <= k; i += 2)
        sum += stirling1(n, k - i) * stirling2(k - i, j);
      return Rational(2) * Rational::factorial(j) /
             (Rational::factorial(n) *
              Rational::binomial(static_cast<std::int64_t>(n) - 1,
                                 static_cast<std::int64_t>(j) - 1)) *
             sum;
    }
    case Source::KB:
    case Source::KA: {
      for (unsigned i = 0; i <= k; i += 2)
        sum += stirling1(n + 1, k - i) * stirling2(k - i, j + 1);
      return Rational(2) * Rational::factorial(j) /
             (Rational::factorial(n) *
              Rational::binomial(static_cast<std::int64_t>(n) + 1,
                                 static_cast<std::int64_t>(j) + 1)) *
             sum;
    }
  }
  return Rational(0);
}

Rational recoveryProbabilityViaAngles(Source family, unsigned n, unsigned j,
                                      unsigned k) {
  checkRecoveryArgs(family, n, j, k);
  const TangentConeMultiset cones = enumerateTangentCones(family, n, j);
  Rational sum(0);
  for (const auto& [spec, mult] : cones.items)
    sum += Rational(static_cast<std::int64_t>(mult)) *
           (Rational(1) - grassmannAngle(spec, k + cones.linealityShift));
  return sum / faceCount(family, n, j);
}

Rational expectedFacesViaEnumeration(const WalkEnsemble& ens, unsigned j) {
  const unsigned n = ens.totalSteps();
  if (ens.b() == 0 || ens.d == 0 || j >= ens.d || ens.d > n)
    throw std::invalid_argument(
        "expectedFacesViaEnumeration: requires 0 <= j < d <= sum(ns)");
  const Source source = (ens.kind == WalkKind::Walk) ? Source::KB : Source::KA;
  const TangentConeMultiset cones = productTangentCones(source, ens.ns, j);
  Rational sum(0);
  for (const auto& [spec, mult] : cones.items) {
    const TPoly gen = coneSpecGenPoly(spec);
    for (unsigned l = 1; ens.d + 1 >= 2 * l; ++l)
      sum += Rational(static_cast<std::int64_t>(mult)) *
             gen.coeff(ens.d - 2 * l + 1 + cones.linealityShift);
  }
  return Rational(2) * sum;
}

} // namespace conesum
