#ifndef CONESUM_SERIES_HPP
#define CONESUM_SERIES_HPP

#include <vector>

#include "conesum/tpoly.hpp"

namespace conesum {

// Formal power series in x, truncated at x^order, with TPoly coefficients.
// All arithmetic is exact modulo x^(order+1). Mixing series of different
// orders truncates to the shorter one.
class TruncSeries {
public:
  explicit TruncSeries(unsigned order) : coeffs_(order + 1) {}
  TruncSeries(unsigned order, std::vector<TPoly> coeffs);

  unsigned order() const { return static_cast<unsigned>(coeffs_.size()) - 1; }
  const TPoly& coeff(unsigned l) const { return coeffs_.at(l); }
  TPoly& coeff(unsigned l) { return coeffs_.at(l); }

  TruncSeries& operator+=(const TruncSeries& o);
  TruncSeries& operator*=(const TruncSeries& o);
  friend TruncSeries operator+(TruncSeries a, const TruncSeries& b) { return a += b; }
  friend TruncSeries operator*(TruncSeries a, const TruncSeries& b) { return a *= b; }

  TruncSeries pow(unsigned e) const;

private:
  std::vector<TPoly> coeffs_;
};

// sum_{l=0..order} s(s+1)...(s+l-1)/l! x^l, i.e. the expansion of (1-x)^(-s)
// for a polynomial exponent s.
TruncSeries binomSeries(const TPoly& exponentPoly, unsigned order);

// (1-x)^(-t) - 1 = sum_{l>=1} t(t+1)...(t+l-1)/l! x^l, truncated.
TruncSeries gSeries(unsigned order);

// [x^n] of (1-x)^(-d(t+1)) ((1-x)^(-t) - 1)^jPart, as a polynomial in t.
TPoly coefBlock(const Rational& d, unsigned jPart, unsigned n);

// The Taylor coefficient R_d(k, j, b, (n_1..n_b)) of the product generating
// function, computed by enumerating the weak compositions (j_1..j_b) of j
// that the geometric u-expansion produces:
//   R = [t^k] sum_{j_1+...+j_b=j} prod_i coefBlock(d, j_i, n_i).
// Requires b >= 1 (throws std::invalid_argument), k <= sum(ns), j <= sum(ns).
// The meaningful values of d are 0 (A-chamber products), 1/2 (B-chamber
// products) and 1 (orthoscheme products); other rationals are accepted as
// formal extrapolation of the same series.
Rational seriesR(const Rational& d, unsigned k, unsigned j,
                 const std::vector<unsigned>& ns);

// Generating-function catalog for the classical identity checks. Each entry
// extracts the coefficient of t^n/n! (times y^k where a second variable is
// involved), which equals the corresponding Stirling number:
//   Stirling1   : (1/k!) (-log(1-t))^k
//   Stirling2   : (1/k!) (e^t - 1)^k
//   Stirling1B  : [y^k] (1-2t)^(-(y+1)/2)
//   Stirling2B  : [y^k] e^((y/2)(e^(2t)-1)) e^t
//   RStirling1  : (1/k!) (1-t)^(-r) (-log(1-t))^k
//   RStirling2  : (1/k!) e^(rt) (e^t - 1)^k
enum class GfCatalog {
  Stirling1,
  Stirling2,
  Stirling1B,
  Stirling2B,
  RStirling1,
  RStirling2,
};

Rational seriesCoefficientOracle(GfCatalog id, unsigned n, unsigned k,
                                 const Rational& r = Rational(0));

} // namespace conesum

#endif
