#include "conesum/series.hpp"

#include <map>
#include <mutex>
#include <stdexcept>
#include <tuple>
#include <utility>

#include "conesum/stirling.hpp"

namespace conesum {

TruncSeries::TruncSeries(unsigned order, std::vector<TPoly> coeffs)
    : coeffs_(std::move(coeffs)) {
  coeffs_.resize(order + 1);
}

TruncSeries& TruncSeries::operator+=(const TruncSeries& o) {
  if (o.order() < order()) coeffs_.resize(o.order() + 1);
  for (unsigned l = 0; l <= order(); ++l) coeffs_[l] += o.coeffs_[l];
  return *this;
}

TruncSeries& TruncSeries::operator*=(const TruncSeries& o) {
  const unsigned n = std::min(order(), o.order());
  std::vector<TPoly> out(n + 1);
  for (unsigned i = 0; i <= n; ++i) {
    if (coeffs_[i].isZero()) continue;
    for (unsigned j = 0; i + j <= n; ++j) {
      if (o.coeffs_[j].isZero()) continue;
      out[i + j] += coeffs_[i] * o.coeffs_[j];
    }
  }
  coeffs_ = std::move(out);
  return *this;
}

TruncSeries TruncSeries::pow(unsigned e) const {
  TruncSeries acc(order());
  acc.coeff(0) = TPoly(Rational(1));
  for (unsigned i = 0; i < e; ++i) acc *= *this;
  return acc;
}

TruncSeries binomSeries(const TPoly& exponentPoly, unsigned order) {
  TruncSeries s(order);
  TPoly rising(Rational(1));
  TPoly term(exponentPoly);
  Rational fact(1);
  s.coeff(0) = TPoly(Rational(1));
  for (unsigned l = 1; l <= order; ++l) {
    rising *= term;
    term += TPoly(Rational(1));
    fact *= Rational(static_cast<std::int64_t>(l));
    s.coeff(l) = rising;
    s.coeff(l) /= fact;
  }
  return s;
}

TruncSeries gSeries(unsigned order) {
  TruncSeries s = binomSeries(TPoly::variable(), order);
  s.coeff(0) = TPoly();
  return s;
}

TPoly coefBlock(const Rational& d, unsigned jPart, unsigned n) {
  if (jPart > n) return TPoly(); // the g-factor has no constant term
  TPoly exponent = TPoly::variable() + TPoly(Rational(1));
  exponent *= d;
  TruncSeries series = binomSeries(exponent, n);
  if (jPart > 0) series *= gSeries(n).pow(jPart);
  return series.coeff(n);
}

namespace {

// Calls fn(parts) for every weak composition of total into `parts.size()` parts.
template <class Fn>
void forEachWeakComposition(unsigned total, unsigned b, Fn&& fn) {
  std::vector<unsigned> parts(b, 0);
  // fix parts[0..b-2] by recursion on remaining total
  auto rec = [&](auto&& self, unsigned idx, unsigned remaining) -> void {
    if (idx + 1 == b) {
      parts[idx] = remaining;
      fn(parts);
      return;
    }
    for (unsigned v = 0; v <= remaining; ++v) {
      parts[idx] = v;
      self(self, idx + 1, remaining - v);
    }
  };
  rec(rec, 0, total);
}

} // namespace

namespace {

// coefBlock values get reused heavily across seriesR calls; memoize them
// behind a mutex keyed by (d, jPart, n)
const TPoly& cachedBlock(const Rational& d, unsigned jPart, unsigned n) {
  using Key = std::tuple<Rational, unsigned, unsigned>;
  static std::map<Key, TPoly> cache;
  static std::mutex mu;
  std::scoped_lock lock(mu);
  const Key key{d, jPart, n};
  auto it = cache.find(key);
  if (it == cache.end()) it = cache.emplace(key, coefBlock(d, jPart, n)).first;
  return it->second;
}

} // namespace

Rational seriesR(const Rational& d, unsigned k, unsigned j,
                 const std::vector<unsigned>& ns) {
  const unsigned b = static_cast<unsigned>(ns.size());
  if (b == 0) throw std::invalid_argument("seriesR: b must be >= 1");
  auto block = [&](unsigned jPart, unsigned n) -> const TPoly& {
    return cachedBlock(d, jPart, n);
  };
  TPoly total;
  forEachWeakComposition(j, b, [&](const std::vector<unsigned>& js) {
    TPoly prod(Rational(1));
    for (unsigned i = 0; i < b && !prod.isZero(); ++i) prod *= block(js[i], ns[i]);
    total += prod;
  });
  return total.coeff(k);
}

namespace {

// -log(1-t) = sum_{l>=1} t^l / l
TruncSeries logSeries(unsigned order) {
  TruncSeries s(order);
  for (unsigned l = 1; l <= order; ++l)
    s.coeff(l) = TPoly(Rational(1, static_cast<std::int64_t>(l)));
  return s;
}

// e^(ct) - 1 = sum_{l>=1} (ct)^l / l!
TruncSeries expM1Series(const Rational& c, unsigned order) {
  TruncSeries s(order);
  Rational fact(1);
  Rational cl(1);
  for (unsigned l = 1; l <= order; ++l) {
    fact *= Rational(static_cast<std::int64_t>(l));
    cl *= c;
    s.coeff(l) = TPoly(cl / fact);
  }
  return s;
}

// exp of a series with zero constant term: sum_{m=0..order} S^m / m!
TruncSeries expSeries(const TruncSeries& arg, unsigned order) {
  TruncSeries acc(order);
  acc.coeff(0) = TPoly(Rational(1));
  TruncSeries power(order);
  power.coeff(0) = TPoly(Rational(1));
  Rational fact(1);
  for (unsigned m = 1; m <= order; ++m) {
    power *= arg;
    fact *= Rational(static_cast<std::int64_t>(m));
    TruncSeries term = power;
    for (unsigned l = 0; l <= order; ++l) term.coeff(l) /= fact;
    acc += term;
  }
  return acc;
}

} // namespace

Rational seriesCoefficientOracle(GfCatalog id, unsigned n, unsigned k,
                                 const Rational& r) {
  const unsigned order = n;
  const Rational nFact = Rational::factorial(n);
  switch (id) {
    case GfCatalog::Stirling1: {
      TruncSeries s = logSeries(order).pow(k);
      return s.coeff(n).coeff(0) * nFact / Rational::factorial(k);
    }
    case GfCatalog::Stirling2: {
      TruncSeries s = expM1Series(Rational(1), order).pow(k);
      return s.coeff(n).coeff(0) * nFact / Rational::factorial(k);
    }
    case GfCatalog::Stirling1B: {
      // (1-2t)^(-(y+1)/2): coefficient of t^l is ((y+1)/2)^(rising l) 2^l / l!
      TPoly exponent = (TPoly::variable() + TPoly(Rational(1))) * Rational(1, 2);
      TruncSeries s = binomSeries(exponent, order);
      Rational pow2(1);
      for (unsigned l = 0; l <= order; ++l) {
        s.coeff(l) *= pow2;
        pow2 *= Rational(2);
      }
      return s.coeff(n).coeff(k) * nFact;
    }
    case GfCatalog::Stirling2B: {
      TruncSeries inner = expM1Series(Rational(2), order);
      TPoly halfY = TPoly({Rational(0), Rational(1, 2)});
      for (unsigned l = 0; l <= order; ++l) inner.coeff(l) *= halfY;
      TruncSeries s = expSeries(inner, order);
      TruncSeries expT = expM1Series(Rational(1), order);
      expT.coeff(0) = TPoly(Rational(1));
      s *= expT;
      return s.coeff(n).coeff(k) * nFact;
    }
    case GfCatalog::RStirling1: {
      TruncSeries s = binomSeries(TPoly(r), order);
      s *= logSeries(order).pow(k);
      return s.coeff(n).coeff(0) * nFact / Rational::factorial(k);
    }
    case GfCatalog::RStirling2: {
      TruncSeries s = expM1Series(Rational(1), order).pow(k);
      TruncSeries expRt = expM1Series(r, order);
      expRt.coeff(0) = TPoly(Rational(1));
      s *= expRt;
      return s.coeff(n).coeff(0) * nFact / Rational::factorial(k);
    }
  }
  throw std::invalid_argument("seriesCoefficientOracle: unknown catalog id");
}

} // namespace conesum
