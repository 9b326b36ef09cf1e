#include "conesum/angle_sums.hpp"

#include <stdexcept>

#include "conesum/series.hpp"
#include "conesum/stirling.hpp"

namespace conesum {

Rational theoremOrthoscheme(unsigned n, unsigned j, unsigned k) {
  return Rational::factorial(j) / Rational::factorial(n) * stirling1(n + 1, k + 1) *
         stirling2(k + 1, j + 1);
}

Rational theoremWeyl(Chamber family, unsigned n, unsigned j, unsigned k) {
  const Rational jOverN = Rational::factorial(j) / Rational::factorial(n);
  if (family == Chamber::A) return jOverN * stirling1(n, k) * stirling2(k, j);
  return Rational(2).pow(j) / Rational(2).pow(n) * jOverN * stirling1B(n, k) *
         stirling2B(k, j);
}

Rational compositionSum(unsigned j, unsigned b, unsigned n, unsigned k) {
  if (j == 0 && b == 0)
    throw std::invalid_argument("compositionSum: (j,b) = (0,0) rejected");
  const Rational half(1, 2);
  const Rational r = Rational(static_cast<std::int64_t>(b)) * half;
  return Rational::factorial(j) / Rational::factorial(n) * rStirling1(n, k, r) *
         rStirling2(k, j, r);
}

namespace {

template <class Fn>
void forEachMixedComposition(unsigned total, unsigned positiveParts,
                             unsigned freeParts, Fn&& fn) {
  const unsigned parts = positiveParts + freeParts;
  std::vector<unsigned> comp(parts);
  auto rec = [&](auto&& self, unsigned idx, unsigned remaining) -> void {
    if (idx == parts) {
      if (remaining == 0) fn(comp);
      return;
    }
    const unsigned lo = (idx < positiveParts) ? 1 : 0;
    unsigned minTail = 0;
    for (unsigned t = idx + 1; t < parts; ++t) minTail += (t < positiveParts) ? 1 : 0;
    if (remaining < lo + minTail) return;
    for (unsigned v = lo; v + minTail <= remaining; ++v) {
      comp[idx] = v;
      self(self, idx + 1, remaining - v);
    }
  };
  rec(rec, 0, total);
}

} // namespace

Rational compositionSumEnumerated(unsigned j, unsigned b, unsigned n, unsigned k) {
  if (j == 0 && b == 0)
    throw std::invalid_argument("compositionSumEnumerated: (j,b) = (0,0) rejected");
  Rational sum(0);
  forEachMixedComposition(n, j, b, [&](const std::vector<unsigned>& parts) {
    std::vector<ConeFactor> fs;
    for (unsigned i = 0; i < j; ++i) fs.push_back({Chamber::A, parts[i]});
    for (unsigned i = j; i < j + b; ++i) fs.push_back({Chamber::B, parts[i]});
    sum += coneSpecIntrinsic(ConeSpec(std::move(fs)), k);
  });
  return sum;
}

Rational productTheorem(Source source, const std::vector<unsigned>& ns,
                        unsigned j, unsigned k) {
  Rational d(0);
  switch (source) {
    case Source::KB:
    case Source::KA: d = Rational(1); break;
    case Source::WB: d = Rational(1, 2); break;
    case Source::WA: d = Rational(0); break;
  }
  return seriesR(d, k, j, ns);
}

Rational aggregatedProductSum(unsigned b, unsigned n, unsigned j, unsigned k) {
  const Rational r(static_cast<std::int64_t>(b));
  return Rational::factorial(j) / Rational::factorial(n) *
         Rational::binomial(static_cast<std::int64_t>(j) + b - 1,
                            static_cast<std::int64_t>(b) - 1) *
         rStirling1(n, k, r) * rStirling2(k, j, r);
}

Rational aggregatedProductSumEnumerated(unsigned b, unsigned n, unsigned j,
                                        unsigned k) {
  if (b == 0)
    throw std::invalid_argument("aggregatedProductSumEnumerated: b must be >= 1");
  Rational sum(0);
  forEachMixedComposition(n, 0, b, [&](const std::vector<unsigned>& ns) {
    sum += productTheorem(Source::KB, ns, j, k);
  });
  return sum;
}

Rational tangentConeSumClosedForm(Source source, unsigned n, unsigned j,
                                  unsigned k) {
  switch (source) {
    case Source::KB:
    case Source::KA: return theoremOrthoscheme(n, j, k);
    case Source::WB: return theoremWeyl(Chamber::B, n, j, k);
    case Source::WA: return theoremWeyl(Chamber::A, n, j, k);
  }
  return Rational(0);
}

Rational internalAngleSum(Source source, unsigned n, unsigned j) {
  return tangentConeSumClosedForm(source, n, j, n);
}

Rational externalAngleSum(Source source, unsigned n, unsigned j) {
  return tangentConeSumClosedForm(source, n, j, j);
}

Rational tangentConeSumEnumerated(const TangentConeMultiset& cones, unsigned k) {
  Rational sum(0);
  for (const auto& [spec, mult] : cones.items)
    sum += Rational(static_cast<std::int64_t>(mult)) *
           coneSpecIntrinsic(spec, k + cones.linealityShift);
  return sum;
}

Rational tangentConeSumEnumerated(Source source, unsigned n, unsigned j,
                                  unsigned k) {
  return tangentConeSumEnumerated(enumerateTangentCones(source, n, j), k);
}

bool enumerationContainsSubspace(const TangentConeMultiset& cones) {
  for (const auto& [spec, mult] : cones.items)
    if (spec.isSubspace()) return true;
  return false;
}

} // namespace conesum
