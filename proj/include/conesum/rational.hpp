#ifndef CONESUM_RATIONAL_HPP
#define CONESUM_RATIONAL_HPP

#include <gmp.h>

#include <cstdint>
#include <iosfwd>
#include <string>

namespace conesum {

// Arbitrary-precision rational, always kept canonical: gcd(|num|, den) = 1
// and den > 0. Backed by GMP's mpq_t.
class Rational {
public:
  Rational() { mpq_init(q_); }
  Rational(const Rational& o) {
    mpq_init(q_);
    mpq_set(q_, o.q_);
  }
  Rational(Rational&& o) noexcept {
    mpq_init(q_);
    mpq_swap(q_, o.q_);
  }
  Rational(std::int64_t n) { // NOLINT: implicit by design
    mpq_init(q_);
    mpq_set_si(q_, n, 1);
  }
  Rational(std::int64_t num, std::int64_t den);
  // Parses "p/q" or "p". Throws std::invalid_argument on malformed input.
  explicit Rational(const std::string& s);
  ~Rational() { mpq_clear(q_); }

  Rational& operator=(const Rational& o) {
    if (this != &o) mpq_set(q_, o.q_);
    return *this;
  }
  Rational& operator=(Rational&& o) noexcept {
    mpq_swap(q_, o.q_);
    return *this;
  }

  Rational& operator+=(const Rational& o) {
    mpq_add(q_, q_, o.q_);
    return *this;
  }
  Rational& operator-=(const Rational& o) {
    mpq_sub(q_, q_, o.q_);
    return *this;
  }
  Rational& operator*=(const Rational& o) {
    mpq_mul(q_, q_, o.q_);
    return *this;
  }
  Rational& operator/=(const Rational& o); // throws on division by zero

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  friend Rational operator-(const Rational& a) {
    Rational r;
    mpq_neg(r.q_, a.q_);
    return r;
  }

  friend bool operator==(const Rational& a, const Rational& b) {
    return mpq_equal(a.q_, b.q_) != 0;
  }
  friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
  friend bool operator<(const Rational& a, const Rational& b) {
    return mpq_cmp(a.q_, b.q_) < 0;
  }
  friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
  friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
  friend bool operator>=(const Rational& a, const Rational& b) { return !(a < b); }

  bool isZero() const { return mpq_sgn(q_) == 0; }
  bool isInteger() const { return mpz_cmp_ui(mpq_denref(q_), 1) == 0; }
  int sign() const { return mpq_sgn(q_); }

  double toDouble() const { return mpq_get_d(q_); }
  // "p/q", or just "p" when the denominator is 1.
  std::string toString() const;
  std::string numeratorString() const;
  std::string denominatorString() const;

  Rational pow(unsigned e) const;

  // Exact conversion; every finite double is a dyadic rational.
  static Rational fromDouble(double d);
  static Rational factorial(unsigned n);
  static Rational binomial(std::int64_t n, std::int64_t k);
  // r(r+1)...(r+m-1), empty product = 1.
  static Rational risingFactorial(const Rational& r, unsigned m);

private:
  mpq_t q_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

} // namespace conesum

#endif
