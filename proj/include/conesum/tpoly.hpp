#ifndef CONESUM_TPOLY_HPP
#define CONESUM_TPOLY_HPP

#include <initializer_list>
#include <iosfwd>
#include <vector>

#include "conesum/rational.hpp"

namespace conesum {

// Dense polynomial in one formal variable over Rational. Trailing zero
// coefficients are trimmed, so degree() is canonical; the zero polynomial
// has degree -1.
class TPoly {
public:
  TPoly() = default;
  TPoly(Rational constant); // NOLINT: implicit by design
  TPoly(std::initializer_list<Rational> coeffs);
  explicit TPoly(std::vector<Rational> coeffs);

  // The variable itself (coefficient 1 at power 1).
  static TPoly variable();

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool isZero() const { return coeffs_.empty(); }
  // Coefficient at t^k; zero beyond the degree.
  const Rational& coeff(unsigned k) const;

  TPoly& operator+=(const TPoly& o);
  TPoly& operator-=(const TPoly& o);
  TPoly& operator*=(const TPoly& o);
  TPoly& operator*=(const Rational& s);
  TPoly& operator/=(const Rational& s);

  friend TPoly operator+(TPoly a, const TPoly& b) { return a += b; }
  friend TPoly operator-(TPoly a, const TPoly& b) { return a -= b; }
  friend TPoly operator*(TPoly a, const TPoly& b) { return a *= b; }
  friend TPoly operator*(TPoly a, const Rational& s) { return a *= s; }
  friend TPoly operator*(const Rational& s, TPoly a) { return a *= s; }
  friend TPoly operator-(const TPoly& a) { return TPoly(0) - a; }

  friend bool operator==(const TPoly& a, const TPoly& b) {
    return a.coeffs_ == b.coeffs_;
  }
  friend bool operator!=(const TPoly& a, const TPoly& b) { return !(a == b); }

  Rational evaluate(const Rational& x) const;

  // s(s+1)...(s+m-1) as polynomials; m = 0 gives 1.
  static TPoly risingFactorial(const TPoly& s, unsigned m);

private:
  void trim();
  std::vector<Rational> coeffs_;
};

std::ostream& operator<<(std::ostream& os, const TPoly& p);

} // namespace conesum

#endif
